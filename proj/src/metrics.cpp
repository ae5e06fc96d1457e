#include "constkit/metrics.hpp"

#include "constkit/errors.hpp"
#include "constkit/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace constkit {

namespace {

// Coefficients from W. J. Cody, "Rational Chebyshev approximation for the
// error function", Math. Comp. 23 (1969); the same tables as netlib CALERF.
constexpr double kErfA[5] = {3.16112374387056560e0, 1.13864154151050156e2,
                             3.77485237685302021e2, 3.20937758913846947e3,
                             1.85777706184603153e-1};
constexpr double kErfB[4] = {2.36012909523441209e1, 2.44024637934444173e2,
                             1.28261652607737228e3, 2.84423683343917062e3};
constexpr double kErfC[9] = {5.64188496988670089e-1, 8.88314979438837594e0,
                             6.61191906371416295e1,  2.98635138197400131e2,
                             8.81952221241769090e2,  1.71204761263407058e3,
                             2.05107837782607147e3,  1.23033935479799725e3,
                             2.15311535474403846e-8};
constexpr double kErfD[8] = {1.57449261107098347e1, 1.17693950891312499e2,
                             5.37181101862009858e2, 1.62138957456669019e3,
                             3.29079923573345963e3, 4.36261909014324716e3,
                             3.43936767414372164e3, 1.23033935480374942e3};
constexpr double kErfP[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                             1.25781726111229246e-1, 1.60837851487422766e-2,
                             6.58749161529837803e-4, 1.63153871373020978e-2};
constexpr double kErfQ[5] = {2.56852019228982242e0, 1.87295284992346047e0,
                             5.27905102951428412e-1, 6.05183413124413191e-2,
                             2.33520497626869185e-3};
constexpr double kInvSqrtPi = 5.6418958354775628695e-1;

double exp_nx2(double y) {
    // exp(-y^2) split to preserve accuracy for large y
    const double ysq = std::floor(y * 16.0) / 16.0;
    return std::exp(-ysq * ysq) * std::exp(-(y - ysq) * (y + ysq));
}

// Adaptive Simpson with absolute tolerance, classic recursive halving.
template <typename F>
double adaptive_simpson_step(const F& f, double a, double b, double fa, double fm, double fb,
                             double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

double awgn_ser_form(Scheme scheme, int order, double gamma) {
    switch (scheme) {
    case Scheme::Bpsk:
        return q_function(std::sqrt(2.0 * gamma));
    case Scheme::Qpsk: {
        const double q = q_function(std::sqrt(gamma));
        return 2.0 * q - q * q;
    }
    case Scheme::Mpsk:
        return 2.0 * q_function(std::sqrt(2.0 * gamma) * std::sin(std::numbers::pi / order));
    case Scheme::SquareQam: {
        const double rm = std::sqrt(double(order));
        const double p = 2.0 * (1.0 - 1.0 / rm) * q_function(std::sqrt(3.0 * gamma / (order - 1)));
        return 1.0 - (1.0 - p) * (1.0 - p);
    }
    default:
        throw UnsupportedScheme("analytic_ser supports bpsk, qpsk, mpsk, square-qam");
    }
}

} // namespace

double erfc_cody(double x) {
    const double y = std::abs(x);
    double r;
    if (y <= 0.46875) {
        const double z = y > 1.11e-16 ? y * y : 0.0;
        double num = kErfA[4] * z, den = z;
        for (int i = 0; i < 3; ++i) {
            num = (num + kErfA[i]) * z;
            den = (den + kErfB[i]) * z;
        }
        return 1.0 - x * (num + kErfA[3]) / (den + kErfB[3]);
    }
    if (y <= 4.0) {
        double num = kErfC[8] * y, den = y;
        for (int i = 0; i < 7; ++i) {
            num = (num + kErfC[i]) * y;
            den = (den + kErfD[i]) * y;
        }
        r = exp_nx2(y) * (num + kErfC[7]) / (den + kErfD[7]);
    } else {
        const double z = 1.0 / (y * y);
        double num = kErfP[5] * z, den = z;
        for (int i = 0; i < 4; ++i) {
            num = (num + kErfP[i]) * z;
            den = (den + kErfQ[i]) * z;
        }
        const double poly = z * (num + kErfP[4]) / (den + kErfQ[4]);
        r = exp_nx2(y) * (kInvSqrtPi - poly) / y;
    }
    return x < 0.0 ? 2.0 - r : r;
}

double q_function(double x) { return 0.5 * erfc_cody(x / std::numbers::sqrt2); }

double min_distance(const Constellation& c) { return closest_pair(c.points).distance; }

DistanceSpectrum distance_spectrum(const Constellation& c) {
    const Eigen::Index m = c.size();
    std::vector<double> dists;
    dists.reserve(std::size_t(m * (m - 1) / 2));
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i + 1; j < m; ++j) dists.push_back(std::abs(c.points[i] - c.points[j]));
    std::sort(dists.begin(), dists.end());

    DistanceSpectrum spec;
    for (double d : dists) {
        if (!spec.entries.empty() && d - spec.entries.back().first < kDuplicateTol)
            ++spec.entries.back().second;
        else
            spec.entries.push_back({d, 1});
    }
    return spec;
}

double mean_pairwise_distance(const Constellation& c) {
    const Eigen::Index m = c.size();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i + 1; j < m; ++j) sum += std::abs(c.points[i] - c.points[j]);
    return sum / (double(m) * double(m - 1) / 2.0);
}

double papr_db(const Constellation& c) {
    double peak = 0.0;
    for (Eigen::Index k = 0; k < c.size(); ++k) peak = std::max(peak, std::norm(c.points[k]));
    return 10.0 * std::log10(peak / c.average_energy());
}

double union_bound_ser(const Constellation& c, SnrSpec snr) {
    const double n0 = snr.noise_density();
    const Eigen::Index m = c.size();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) {
            const double d2 = std::norm(c.points[i] - c.points[j]);
            sum += 2.0 * q_function(std::sqrt(d2 / (2.0 * n0)));
        }
    }
    return sum / double(m);
}

double analytic_ser(Scheme scheme, int order, SnrSpec snr, Channel channel) {
    const double gamma = snr.gamma_s();
    if (channel == Channel::Awgn) return awgn_ser_form(scheme, order, gamma);

    // E_g[P_awgn(gamma * g)], g ~ Exp(1), truncated where e^-g < 1e-20.
    const auto integrand = [&](double g) {
        return awgn_ser_form(scheme, order, gamma * g) * std::exp(-g);
    };
    const double coarse = adaptive_simpson(integrand, 0.0, 46.0, 1e-9);
    return adaptive_simpson(integrand, 0.0, 46.0, std::max(1e-6 * coarse / 2.0, 1e-16));
}

MiEstimate mutual_information(const Constellation& c, SnrSpec snr, std::int64_t n_samples,
                              std::uint64_t seed) {
    if (n_samples < 10000) throw InvalidInput("mutual_information requires n_samples >= 1e4");

    const Eigen::Index m = c.size();
    const double n0 = snr.noise_density();
    const double sigma = std::sqrt(n0 / 2.0);

    // inverse-CDF table over the stored symbol order
    std::vector<double> cdf(std::size_t(m));
    double acc = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) {
        acc += c.probs[k];
        cdf[std::size_t(k)] = acc;
    }
    cdf.back() = 1.0;

    RngStream stream = derive_stream(seed, {fnv1a64("mutual-information"), fnv1a64(c.label),
                                            std::uint64_t(n_samples)});

    constexpr int kBatches = 10;
    const std::int64_t per_batch = n_samples / kBatches;
    double batch_mean[kBatches];

    std::vector<double> logp(std::size_t(m));
    for (Eigen::Index k = 0; k < m; ++k) logp[std::size_t(k)] = std::log(c.probs[k]);

    for (int b = 0; b < kBatches; ++b) {
        double sum_bits = 0.0;
        for (std::int64_t t = 0; t < per_batch; ++t) {
            const double u = stream.uniform();
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            const Eigen::Index k = Eigen::Index(it - cdf.begin());
            double z0, z1;
            stream.normal_pair(z0, z1);
            const cplx y = c.points[k] + cplx(sigma * z0, sigma * z1);

            // log p(y|x_k) - log p(y), with the Gaussian normalizer canceling
            double max_e = -std::numeric_limits<double>::infinity();
            for (Eigen::Index j = 0; j < m; ++j)
                max_e = std::max(max_e, logp[std::size_t(j)] - std::norm(y - c.points[j]) / n0);
            double mix = 0.0;
            for (Eigen::Index j = 0; j < m; ++j)
                mix += std::exp(logp[std::size_t(j)] - std::norm(y - c.points[j]) / n0 - max_e);
            const double log_py = max_e + std::log(mix);
            const double log_cond = -std::norm(y - c.points[k]) / n0;
            sum_bits += (log_cond - log_py) / std::numbers::ln2;
        }
        batch_mean[b] = sum_bits / double(per_batch);
    }

    double mean = 0.0;
    for (double v : batch_mean) mean += v;
    mean /= kBatches;
    double var = 0.0;
    for (double v : batch_mean) var += (v - mean) * (v - mean);
    var /= (kBatches - 1);
    return {mean, std::sqrt(var / kBatches)};
}

} // namespace constkit
