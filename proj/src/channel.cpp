#include "constkit/channel.hpp"

#include "constkit/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

namespace constkit {

std::string channel_id(Channel ch) {
    return ch == Channel::Awgn ? "awgn" : "rayleigh";
}

Channel channel_from_id(const std::string& id) {
    if (id == "awgn") return Channel::Awgn;
    if (id == "rayleigh") return Channel::RayleighFlat;
    throw InvalidInput("unknown channel id: " + id);
}

std::vector<std::int32_t> sample_symbols(const Constellation& c, std::int64_t n, RngStream& s) {
    if (n < 1) throw InvalidInput("sample_symbols requires n >= 1");
    std::vector<double> cdf(std::size_t(c.size()));
    double acc = 0.0;
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        acc += c.probs[k];
        cdf[std::size_t(k)] = acc;
    }
    cdf.back() = 1.0;

    std::vector<std::int32_t> idx(std::size_t(n));
    for (auto& i : idx) {
        const double u = s.uniform();
        i = std::int32_t(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    }
    return idx;
}

ChannelOutput apply_channel(const std::vector<std::int32_t>& indices, const Constellation& c,
                            Channel model, SnrSpec snr, RngStream& s) {
    const double sigma = std::sqrt(snr.noise_density() / 2.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    ChannelOutput out;
    out.y.resize(Eigen::Index(indices.size()));
    out.h.resize(Eigen::Index(indices.size()));

    for (std::size_t k = 0; k < indices.size(); ++k) {
        cplx h(1.0, 0.0);
        if (model == Channel::RayleighFlat) {
            double z0, z1;
            s.normal_pair(z0, z1);
            h = cplx(z0 * inv_sqrt2, z1 * inv_sqrt2);
        }
        double n0, n1;
        s.normal_pair(n0, n1);
        out.h[Eigen::Index(k)] = h;
        out.y[Eigen::Index(k)] = h * c.points[indices[k]] + cplx(sigma * n0, sigma * n1);
    }
    return out;
}

std::int32_t ml_detect(cplx y, cplx h, const Constellation& c) {
    if (std::norm(h) == 0.0) throw SingularChannel("ml_detect: |h| = 0");
    std::int32_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        const double d = std::norm(y - h * cplx(c.points[k]));
        if (d < best_d) {
            best_d = d;
            best = std::int32_t(k);
        }
    }
    return best;
}

std::pair<double, double> confidence_interval(double p_hat, std::int64_t n) {
    if (n < 1 || p_hat < 0.0 || p_hat > 1.0)
        throw InvalidInput("confidence_interval requires n >= 1 and p in [0,1]");
    const double half = 1.96 * std::sqrt(p_hat * (1.0 - p_hat) / double(n));
    return {std::max(0.0, p_hat - half), std::min(1.0, p_hat + half)};
}

namespace {

std::int64_t run_chunk(const Constellation& c, Channel model, SnrSpec snr, std::int64_t n,
                       RngStream stream) {
    const auto idx = sample_symbols(c, n, stream);
    const auto out = apply_channel(idx, c, model, snr, stream);
    std::int64_t errors = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (ml_detect(out.y[Eigen::Index(k)], out.h[Eigen::Index(k)], c) != idx[k]) ++errors;
    }
    return errors;
}

std::uint64_t snr_label(SnrSpec snr) { return std::bit_cast<std::uint64_t>(snr.snr_db); }

} // namespace

SerPoint estimate_ser(const Constellation& c, Channel model, SnrSpec snr, std::int64_t n,
                      std::uint64_t master_seed, std::int64_t chunk_size, int workers) {
    if (n < 1000) throw InvalidInput("estimate_ser requires n >= 1e3");
    if (chunk_size < 1) throw InvalidInput("estimate_ser requires chunk_size >= 1");

    const std::int64_t n_chunks = (n + chunk_size - 1) / chunk_size;
    const std::uint64_t scheme_lab = fnv1a64(c.label);
    const std::uint64_t chan_lab = std::uint64_t(model);
    const std::uint64_t snr_lab = snr_label(snr);

    std::vector<std::int64_t> chunk_errors(std::size_t(n_chunks), 0);
    const auto work = [&](std::int64_t chunk) {
        const std::int64_t lo = chunk * chunk_size;
        const std::int64_t len = std::min(chunk_size, n - lo);
        RngStream stream =
            derive_stream(master_seed, {scheme_lab, chan_lab, snr_lab, std::uint64_t(chunk)});
        chunk_errors[std::size_t(chunk)] = run_chunk(c, model, snr, len, std::move(stream));
    };

    if (workers <= 1 || n_chunks == 1) {
        for (std::int64_t ch = 0; ch < n_chunks; ++ch) work(ch);
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        const int count = int(std::min<std::int64_t>(workers, n_chunks));
        pool.reserve(std::size_t(count));
        for (int w = 0; w < count; ++w) {
            pool.emplace_back([&] {
                for (std::int64_t ch = next.fetch_add(1); ch < n_chunks; ch = next.fetch_add(1))
                    work(ch);
            });
        }
        for (auto& t : pool) t.join();
    }

    // order-independent integer accumulation
    std::int64_t errors = 0;
    for (std::int64_t e : chunk_errors) errors += e;

    SerPoint pt;
    pt.snr_db = snr.snr_db;
    pt.symbols_sent = n;
    pt.symbol_errors = errors;
    pt.ser = double(errors) / double(n);
    std::tie(pt.ci_low, pt.ci_high) = confidence_interval(pt.ser, n);
    pt.seed = master_seed;
    return pt;
}

std::vector<double> SweepConfig::snr_grid() const {
    if (snr_step_db <= 0.0) throw InvalidInput("snr step must be positive");
    std::vector<double> grid;
    for (double v = snr_start_db; v <= snr_stop_db + 1e-9; v += snr_step_db) grid.push_back(v);
    return grid;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    const std::vector<SchemeSpec> schemes =
        cfg.schemes.empty() ? default_sweep_set() : cfg.schemes;
    if (cfg.symbols_per_point < 1000) throw InvalidInput("sweep requires >= 1e3 symbols per point");
    const std::vector<double> grid = cfg.snr_grid();

    SweepResult result;
    for (const SchemeSpec& spec : schemes) {
        Constellation c;
        std::string error;
        try {
            c = generate(spec);
        } catch (const std::exception& e) {
            error = e.what();
        }
        for (Channel ch : cfg.channels) {
            if (!error.empty()) {
                SweepRow row;
                row.scheme = scheme_id(spec.scheme) + "-" + std::to_string(spec.order);
                row.channel = ch;
                row.point.snr_db = grid.front();
                row.point.seed = cfg.master_seed;
                row.chunk_size = cfg.chunk_size;
                row.ok = false;
                row.status = "error: " + error;
                result.rows.push_back(std::move(row));
                result.any_failure = true;
                continue;
            }
            for (double snr_db : grid) {
                SweepRow row;
                row.scheme = c.label;
                row.channel = ch;
                row.point = estimate_ser(c, ch, SnrSpec::from_db(snr_db), cfg.symbols_per_point,
                                         cfg.master_seed, cfg.chunk_size, cfg.workers);
                row.chunk_size = cfg.chunk_size;
                result.rows.push_back(std::move(row));
            }
        }
    }
    return result;
}

double rayleigh_penalty(double ser_awgn, double ser_rayleigh) {
    if (ser_awgn <= 0.0) throw UndefinedPenalty("rayleigh penalty undefined for zero AWGN SER");
    return 100.0 * (ser_rayleigh - ser_awgn) / ser_awgn;
}

} // namespace constkit
