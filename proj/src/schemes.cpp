#include "constkit/schemes.hpp"

#include "constkit/csv.hpp"
#include "constkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>

namespace constkit {

namespace {

using std::numbers::pi;

bool is_power_of_two(int m) { return m >= 2 && (m & (m - 1)) == 0; }

bool is_even_square(int m) {
    const int l = int(std::lround(std::sqrt(double(m))));
    return l * l == m && l % 2 == 0;
}

double get_param(const SchemeSpec& spec, const std::string& key, double fallback) {
    const auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw UnsupportedScheme(msg);
}

// Square grid {±1, ±3, ..., ±(L-1)}^2 in row-major order, bottom row first.
Eigen::ArrayXcd square_grid(int order) {
    const int l = int(std::lround(std::sqrt(double(order))));
    Eigen::ArrayXcd pts(order);
    Eigen::Index n = 0;
    for (int q = -(l - 1); q <= l - 1; q += 2)
        for (int i = -(l - 1); i <= l - 1; i += 2) pts[n++] = cplx(double(i), double(q));
    return pts;
}

Eigen::ArrayXcd psk_ring(int order) {
    Eigen::ArrayXcd pts(order);
    for (int k = 0; k < order; ++k) {
        const double a = 2.0 * pi * double(k) / double(order);
        pts[k] = cplx(std::cos(a), std::sin(a));
    }
    return pts;
}

// A2 truncation for M=16: origin, the 6 nearest neighbors, the 6
// second-shell points, and 3 of the 6 third-shell points (smallest angle
// first, alternating indices 0, 2, 4).
Eigen::ArrayXcd hex_lattice_16() {
    Eigen::ArrayXcd pts(16);
    Eigen::Index n = 0;
    pts[n++] = cplx(0.0, 0.0);
    for (int k = 0; k < 6; ++k) {
        const double a = pi / 3.0 * double(k);
        pts[n++] = cplx(std::cos(a), std::sin(a));
    }
    const double r2 = std::sqrt(3.0);
    for (int k = 0; k < 6; ++k) {
        const double a = pi / 6.0 + pi / 3.0 * double(k);
        pts[n++] = cplx(r2 * std::cos(a), r2 * std::sin(a));
    }
    for (int k : {0, 2, 4}) {
        const double a = pi / 3.0 * double(k);
        pts[n++] = cplx(2.0 * std::cos(a), 2.0 * std::sin(a));
    }
    return pts;
}

Eigen::ArrayXcd apsk_rings(const std::vector<int>& counts, const std::vector<double>& radii,
                           const std::vector<double>& offsets) {
    Eigen::Index total = 0;
    for (int k : counts) total += k;
    Eigen::ArrayXcd pts(total);
    Eigen::Index n = 0;
    for (std::size_t r = 0; r < counts.size(); ++r) {
        const double off = r < offsets.size() ? offsets[r] : 0.0;
        for (int k = 0; k < counts[r]; ++k) {
            const double a = 2.0 * pi * double(k) / double(counts[r]) + off;
            pts[n++] = cplx(radii[r] * std::cos(a), radii[r] * std::sin(a));
        }
    }
    return pts;
}

// Square grid minus the 4 corners, plus 4 points on the axes at L+1.
Eigen::ArrayXcd cross_grid(int order) {
    const int l = int(std::lround(std::sqrt(double(order))));
    const double c = double(l - 1);
    const Eigen::ArrayXcd grid = square_grid(order);
    Eigen::ArrayXcd pts(order);
    Eigen::Index n = 0;
    for (Eigen::Index k = 0; k < grid.size(); ++k) {
        if (std::abs(grid[k].real()) == c && std::abs(grid[k].imag()) == c) continue;
        pts[n++] = grid[k];
    }
    const double a = double(l + 1);
    pts[n++] = cplx(a, 0.0);
    pts[n++] = cplx(-a, 0.0);
    pts[n++] = cplx(0.0, a);
    pts[n++] = cplx(0.0, -a);
    return pts;
}

// Rows of a triangular grid filling an upright triangle, row r holding r+1
// points; the first M points are taken row by row, left to right, and the
// set is recentred on its centroid.
Eigen::ArrayXcd triangular_grid(int order) {
    Eigen::ArrayXcd pts(order);
    Eigen::Index n = 0;
    for (int row = 0; n < order; ++row) {
        for (int i = 0; i <= row && n < order; ++i) {
            pts[n++] = cplx(double(i) - double(row) / 2.0,
                            -double(row) * std::sqrt(3.0) / 2.0);
        }
    }
    cplx centroid(0.0, 0.0);
    for (Eigen::Index k = 0; k < pts.size(); ++k) centroid += pts[k];
    centroid /= double(order);
    for (Eigen::Index k = 0; k < pts.size(); ++k) pts[k] -= centroid;
    return pts;
}

Eigen::ArrayXcd gam_spiral(int order, const Eigen::ArrayXd& radii) {
    const double theta = golden_angle();
    Eigen::ArrayXcd pts(order);
    for (int k = 1; k <= order; ++k) {
        const double a = double(k) * theta;
        pts[k - 1] = cplx(radii[k - 1] * std::cos(a), radii[k - 1] * std::sin(a));
    }
    return pts;
}

Eigen::ArrayXd maxwell_boltzmann_probs(const Eigen::ArrayXcd& pts, double lambda) {
    Eigen::ArrayXd w(pts.size());
    double z = 0.0;
    for (Eigen::Index k = 0; k < pts.size(); ++k) {
        w[k] = std::exp(-lambda * std::norm(pts[k]));
        z += w[k];
    }
    for (Eigen::Index k = 0; k < w.size(); ++k) w[k] /= z;
    return w;
}

} // namespace

double golden_angle() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return 2.0 * pi * (1.0 - 1.0 / phi);
}

const std::vector<SchemeInfo>& scheme_catalog() {
    static const std::vector<SchemeInfo> catalog = {
        {Scheme::Bpsk, "bpsk", "M=2", false},
        {Scheme::Qpsk, "qpsk", "M=4", true},
        {Scheme::Mpsk, "mpsk", "M power of 2", true},
        {Scheme::SquareQam, "square-qam", "M even square (4, 16, 64, ...)", true},
        {Scheme::HexLattice, "hex-lattice", "M=16 (A2 truncation)", true},
        {Scheme::Apsk, "apsk", "rings=K1,K2,..; radii=r1,r2,..; offsets=o1,o2,.. (default 4+12 at M=16)", true},
        {Scheme::CrossShaped, "cross", "M even square >= 16", true},
        {Scheme::Elliptical, "elliptical", "M even square; alpha, beta axis scales", true},
        {Scheme::CircularAsymmetric, "circular-asymmetric", "M divisible by 4; r_in, r_out", true},
        {Scheme::StarShaped, "star", "M even; r_in, r_out alternating spokes", true},
        {Scheme::Triangular, "triangular", "M >= 3", true},
        {Scheme::HexRing, "hex-ring", "M=16 (1+6+9 rings); r1, r2", true},
        {Scheme::ProbShapedQam, "prob-qam", "M even square; lambda (Maxwell-Boltzmann)", true},
        {Scheme::DiscGam, "disc-gam", "M >= 2", true},
        {Scheme::BellGam, "bell-gam", "M >= 2; lambda (default: unit pre-norm energy)", true},
        {Scheme::FromFile, "from-file", "file=path.csv (index,re,im[,prob])", false},
    };
    return catalog;
}

std::string scheme_id(Scheme s) {
    for (const auto& info : scheme_catalog())
        if (info.scheme == s) return info.id;
    throw UnsupportedScheme("unknown scheme enum value");
}

Scheme scheme_from_id(const std::string& id) {
    for (const auto& info : scheme_catalog())
        if (info.id == id) return info.scheme;
    throw UnsupportedScheme("unknown scheme id: " + id);
}

std::vector<SchemeSpec> default_sweep_set() {
    std::vector<SchemeSpec> set;
    set.push_back({Scheme::Qpsk, 4, {}, {}, {}, {}, ""});
    for (Scheme s : {Scheme::Mpsk, Scheme::SquareQam, Scheme::HexLattice, Scheme::Apsk,
                     Scheme::CrossShaped, Scheme::Elliptical, Scheme::CircularAsymmetric,
                     Scheme::StarShaped, Scheme::Triangular, Scheme::HexRing,
                     Scheme::ProbShapedQam, Scheme::DiscGam, Scheme::BellGam}) {
        set.push_back({s, 16, {}, {}, {}, {}, ""});
    }
    return set;
}

Constellation generate(const SchemeSpec& spec) {
    const int m = spec.order;
    const std::string label = scheme_id(spec.scheme) + "-" + std::to_string(m);

    switch (spec.scheme) {
    case Scheme::Bpsk: {
        require(m == 2, "bpsk requires M=2");
        Eigen::ArrayXcd pts(2);
        pts[0] = cplx(1.0, 0.0);
        pts[1] = cplx(-1.0, 0.0);
        return normalize_energy(make_constellation(pts, {}, label));
    }
    case Scheme::Qpsk: {
        require(m == 4, "qpsk requires M=4");
        const double s = 1.0 / std::sqrt(2.0);
        Eigen::ArrayXcd pts(4);
        pts[0] = cplx(s, s);
        pts[1] = cplx(-s, s);
        pts[2] = cplx(-s, -s);
        pts[3] = cplx(s, -s);
        return normalize_energy(make_constellation(pts, {}, label));
    }
    case Scheme::Mpsk: {
        require(is_power_of_two(m), "mpsk requires M a power of 2");
        return normalize_energy(make_constellation(psk_ring(m), {}, label));
    }
    case Scheme::SquareQam: {
        require(is_even_square(m), "square-qam requires M an even perfect square");
        return normalize_energy(make_constellation(square_grid(m), {}, label));
    }
    case Scheme::HexLattice: {
        require(m == 16, "hex-lattice is defined for M=16");
        return normalize_energy(make_constellation(hex_lattice_16(), {}, label));
    }
    case Scheme::Apsk: {
        std::vector<int> counts = spec.ring_counts;
        std::vector<double> radii = spec.ring_radii;
        std::vector<double> offsets = spec.ring_offsets;
        if (counts.empty()) {
            require(m == 16, "apsk requires ring parameters for M != 16");
            counts = {4, 12};
            radii = {1.0, 2.57};
            offsets = {pi / 4.0, 0.0};
        }
        require(counts.size() == radii.size(), "apsk needs one radius per ring");
        int total = 0;
        for (int k : counts) {
            require(k >= 1, "apsk ring counts must be positive");
            total += k;
        }
        require(total == m, "apsk ring counts must sum to M");
        for (double r : radii) require(r > 0.0, "apsk radii must be positive");
        return normalize_energy(make_constellation(apsk_rings(counts, radii, offsets), {}, label));
    }
    case Scheme::CrossShaped: {
        require(is_even_square(m) && m >= 16, "cross requires M an even square >= 16");
        return normalize_energy(make_constellation(cross_grid(m), {}, label));
    }
    case Scheme::Elliptical: {
        require(is_even_square(m), "elliptical requires M an even perfect square");
        const double alpha = get_param(spec, "alpha", 1.0);
        const double beta = get_param(spec, "beta", 0.5);
        require(alpha > 0.0 && beta > 0.0, "elliptical requires alpha, beta > 0");
        Eigen::ArrayXcd pts = square_grid(m);
        for (Eigen::Index k = 0; k < pts.size(); ++k)
            pts[k] = cplx(alpha * pts[k].real(), beta * pts[k].imag());
        return normalize_energy(make_constellation(pts, {}, label));
    }
    case Scheme::CircularAsymmetric: {
        require(m % 4 == 0 && m >= 8, "circular-asymmetric requires M divisible by 4, M >= 8");
        const double r_in = get_param(spec, "r_in", 0.5);
        const double r_out = get_param(spec, "r_out", 1.0);
        require(r_in > 0.0 && r_out > 0.0, "ring radii must be positive");
        const int inner = m / 4;
        const int outer = m - inner;
        // half-step phase offset between the two rings
        return normalize_energy(make_constellation(
            apsk_rings({inner, outer}, {r_in, r_out}, {0.0, pi / double(outer)}), {}, label));
    }
    case Scheme::StarShaped: {
        require(m % 2 == 0 && m >= 4, "star requires even M >= 4");
        const double r_in = get_param(spec, "r_in", 0.5);
        const double r_out = get_param(spec, "r_out", 1.0);
        require(r_in > 0.0 && r_out > 0.0, "spoke radii must be positive");
        Eigen::ArrayXcd pts(m);
        for (int k = 0; k < m; ++k) {
            const double a = 2.0 * pi * double(k) / double(m);
            const double r = (k % 2 == 0) ? r_out : r_in;
            pts[k] = cplx(r * std::cos(a), r * std::sin(a));
        }
        return normalize_energy(make_constellation(pts, {}, label));
    }
    case Scheme::Triangular: {
        require(m >= 3, "triangular requires M >= 3");
        return normalize_energy(make_constellation(triangular_grid(m), {}, label));
    }
    case Scheme::HexRing: {
        require(m == 16, "hex-ring is defined for M=16 (1+6+9 rings)");
        const double r1 = get_param(spec, "r1", 1.0);
        const double r2 = get_param(spec, "r2", 2.0);
        require(r1 > 0.0 && r2 > 0.0, "ring radii must be positive");
        Eigen::ArrayXcd pts(16);
        Eigen::Index n = 0;
        pts[n++] = cplx(0.0, 0.0);
        for (int k = 0; k < 6; ++k) {
            const double a = pi / 3.0 * double(k);
            pts[n++] = cplx(r1 * std::cos(a), r1 * std::sin(a));
        }
        for (int k = 0; k < 9; ++k) {
            const double a = 2.0 * pi * double(k) / 9.0;
            pts[n++] = cplx(r2 * std::cos(a), r2 * std::sin(a));
        }
        return normalize_energy(make_constellation(pts, {}, label));
    }
    case Scheme::ProbShapedQam: {
        require(is_even_square(m), "prob-qam requires M an even perfect square");
        const double lambda = get_param(spec, "lambda", 0.02);
        require(lambda >= 0.0, "prob-qam requires lambda >= 0");
        const Eigen::ArrayXcd pts = square_grid(m);
        const Eigen::ArrayXd probs = maxwell_boltzmann_probs(pts, lambda);
        return normalize_energy(make_constellation(pts, probs, label));
    }
    case Scheme::DiscGam: {
        require(m >= 2, "disc-gam requires M >= 2");
        Eigen::ArrayXd radii(m);
        for (int k = 1; k <= m; ++k) radii[k - 1] = std::sqrt(double(k) / double(m));
        return normalize_energy(make_constellation(gam_spiral(m, radii), {}, label));
    }
    case Scheme::BellGam: {
        require(m >= 2, "bell-gam requires M >= 2");
        // r_k = sqrt(-ln(1 - k/(M+1)) / lambda); the shifted index keeps the
        // k = M radius finite. Default lambda makes the pre-normalization
        // energy exactly 1.
        double lambda = get_param(spec, "lambda", 0.0);
        if (lambda <= 0.0) {
            double s = 0.0;
            for (int k = 1; k <= m; ++k) s += -std::log(1.0 - double(k) / double(m + 1));
            lambda = s / double(m);
        }
        Eigen::ArrayXd radii(m);
        for (int k = 1; k <= m; ++k)
            radii[k - 1] = std::sqrt(-std::log(1.0 - double(k) / double(m + 1)) / lambda);
        return normalize_energy(make_constellation(gam_spiral(m, radii), {}, label));
    }
    case Scheme::FromFile: {
        require(!spec.file.empty(), "from-file requires a csv path");
        Constellation c = read_constellation_csv(spec.file);
        c.label = std::filesystem::path(spec.file).stem().string();
        return normalize_energy(c);
    }
    }
    throw UnsupportedScheme("unknown scheme enum value");
}

} // namespace constkit
