#pragma once

#include "constkit/constellation.hpp"
#include "constkit/schemes.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace constkit {

// Per-symbol SNR; all closed forms and tables use gamma_s = Es/N0 with Es=1.
struct SnrSpec {
    double snr_db = 0.0;

    static SnrSpec from_db(double db) { return SnrSpec{db}; }
    double gamma_s() const { return std::pow(10.0, snr_db / 10.0); }
    double noise_density() const { return 1.0 / gamma_s(); } // N0 under Es=1
    double gamma_b(int order) const { return gamma_s() / std::log2(double(order)); }
};

enum class Channel { Awgn, RayleighFlat };

// Packing densities of the square and hexagonal (A2) lattices.
inline constexpr double kPackingDensitySquare = 0.78539816339744830961; // pi/4
inline constexpr double kPackingDensityHex = 0.90689968211710892530;    // pi/(2*sqrt(3))

/// Complementary error function via Cody's rational Chebyshev
/// approximations; relative error below 1e-12 over the range used here.
double erfc_cody(double x);

/// Gaussian tail Q(x) = 0.5 * erfc(x / sqrt(2)).
double q_function(double x);

double min_distance(const Constellation& c);

// Sorted pairwise distances with multiplicities; entries within 1e-9 of each
// other are merged. Multiplicities sum to M(M-1)/2.
struct DistanceSpectrum {
    std::vector<std::pair<double, std::int64_t>> entries;
};
DistanceSpectrum distance_spectrum(const Constellation& c);

double mean_pairwise_distance(const Constellation& c);

/// 10*log10(max_k |s_k|^2 / sum_k p_k |s_k|^2).
double papr_db(const Constellation& c);

/// (1/M) sum_{i != j} Q(d_ij / sqrt(2 N0)); the raw bound, not clamped to 1.
double union_bound_ser(const Constellation& c, SnrSpec snr);

/// Closed-form AWGN SER for the classical schemes; the Rayleigh value is the
/// expectation of the AWGN form over an exponential(1) fading power, computed
/// by adaptive quadrature to relative error 1e-6. SquareQam uses the exact
/// two-sided form P = 1 - (1-p)^2; Mpsk uses the moderate-to-high SNR
/// approximation 2Q(sqrt(2 gamma) sin(pi/M)).
double analytic_ser(Scheme scheme, int order, SnrSpec snr, Channel channel);

struct MiEstimate {
    double bits;
    double std_error; // batch-means estimate over 10 batches
};

/// Monte Carlo mutual information of the constellation input over the complex
/// AWGN channel, deterministic per (seed, n_samples). Requires n >= 1e4.
MiEstimate mutual_information(const Constellation& c, SnrSpec snr, std::int64_t n_samples,
                              std::uint64_t seed);

} // namespace constkit
