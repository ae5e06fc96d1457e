#pragma once

#include "constkit/constellation.hpp"
#include "constkit/metrics.hpp"
#include "constkit/rng.hpp"
#include "constkit/schemes.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace constkit {

std::string channel_id(Channel ch);
Channel channel_from_id(const std::string& id);

// One Monte Carlo SER estimate with its 95% Wald interval and provenance.
struct SerPoint {
    double snr_db = 0.0;
    std::int64_t symbols_sent = 0;
    std::int64_t symbol_errors = 0;
    double ser = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
};

/// i.i.d. symbol indices drawn by inverse CDF over the stored point order.
std::vector<std::int32_t> sample_symbols(const Constellation& c, std::int64_t n, RngStream& s);

struct ChannelOutput {
    Eigen::ArrayXcd y;
    Eigen::ArrayXcd h;
};

/// y_k = h_k s_k + n_k with complex Gaussian noise of total variance N0.
/// AWGN sets h=1 and consumes one Box-Muller pair per symbol; Rayleigh draws
/// h first, then noise, so each symbol consumes exactly two pairs.
ChannelOutput apply_channel(const std::vector<std::int32_t>& indices, const Constellation& c,
                            Channel model, SnrSpec snr, RngStream& s);

/// arg min_k |y - h s_k|^2; ties broken toward the smallest index.
/// Throws SingularChannel when |h| = 0.
std::int32_t ml_detect(cplx y, cplx h, const Constellation& c);

/// 95% Wald interval clamped to [0, 1].
std::pair<double, double> confidence_interval(double p_hat, std::int64_t n);

/// Chunked Monte Carlo SER; deterministic for fixed (seed, n, chunk_size)
/// regardless of worker count. Chunk c draws from the substream keyed by
/// (seed, scheme label, channel, snr bits, c).
SerPoint estimate_ser(const Constellation& c, Channel model, SnrSpec snr, std::int64_t n,
                      std::uint64_t master_seed, std::int64_t chunk_size = 10000,
                      int workers = 1);

struct SweepConfig {
    std::vector<SchemeSpec> schemes;       // default_sweep_set() when empty
    std::vector<Channel> channels = {Channel::Awgn, Channel::RayleighFlat};
    double snr_start_db = -5.0;
    double snr_stop_db = 50.0;
    double snr_step_db = 1.0;
    std::int64_t symbols_per_point = 1000000;
    std::uint64_t master_seed = 1;
    std::int64_t chunk_size = 10000;
    int workers = 1;

    std::vector<double> snr_grid() const;
};

struct SweepRow {
    std::string scheme;
    Channel channel;
    SerPoint point;
    std::int64_t chunk_size = 0;
    bool ok = true;
    std::string status = "ok"; // "error: ..." for failed generators
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool any_failure = false;
};

/// Full (scheme, channel, snr) grid. A scheme whose generator throws gets a
/// single error row per channel and the sweep continues.
SweepResult run_sweep(const SweepConfig& cfg);

/// 100 * (ser_rayleigh - ser_awgn) / ser_awgn, in percent.
/// Throws UndefinedPenalty when ser_awgn = 0.
double rayleigh_penalty(double ser_awgn, double ser_rayleigh);

} // namespace constkit
