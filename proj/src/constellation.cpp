#include "constkit/constellation.hpp"

#include "constkit/errors.hpp"

#include <cmath>
#include <limits>

namespace constkit {

double Constellation::average_energy() const {
    // Sequential sum: normalization must be bit-reproducible, so no
    // vectorized reduction here.
    double e = 0.0;
    for (Eigen::Index k = 0; k < points.size(); ++k)
        e += probs[k] * std::norm(points[k]);
    return e;
}

ClosestPair closest_pair(const Eigen::ArrayXcd& points) {
    ClosestPair best{0, 1, std::numeric_limits<double>::infinity()};
    for (Eigen::Index i = 0; i < points.size(); ++i) {
        for (Eigen::Index j = i + 1; j < points.size(); ++j) {
            const double d = std::abs(points[i] - points[j]);
            if (d < best.distance) best = {i, j, d};
        }
    }
    return best;
}

Constellation make_constellation(const Eigen::ArrayXcd& points,
                                 const Eigen::ArrayXd& probs,
                                 std::string label) {
    const Eigen::Index m = points.size();
    if (m < 2) throw InvalidInput("constellation needs at least 2 points");

    for (Eigen::Index k = 0; k < m; ++k) {
        if (!std::isfinite(points[k].real()) || !std::isfinite(points[k].imag()))
            throw InvalidInput("constellation point is not finite");
    }

    const ClosestPair cp = closest_pair(points);
    if (cp.distance < kDuplicateTol)
        throw DegenerateConstellation("points " + std::to_string(cp.i) + " and " +
                                      std::to_string(cp.j) + " coincide");

    Constellation c;
    c.label = std::move(label);
    c.points = points;
    if (probs.size() == 0) {
        c.probs = Eigen::ArrayXd::Constant(m, 1.0 / double(m));
    } else {
        if (probs.size() != m)
            throw InvalidDistribution("probability vector length != point count");
        double sum = 0.0;
        for (Eigen::Index k = 0; k < m; ++k) {
            if (!std::isfinite(probs[k]) || probs[k] < 0.0)
                throw InvalidDistribution("probabilities must be finite and nonnegative");
            sum += probs[k];
        }
        if (std::abs(sum - 1.0) > kProbSumTol)
            throw InvalidDistribution("probabilities sum to " + std::to_string(sum) +
                                      ", expected 1");
        c.probs = probs;
    }
    return c;
}

Constellation normalize_energy(const Constellation& c) {
    const double energy = c.average_energy();
    if (!(energy > 0.0))
        throw DegenerateConstellation("constellation has zero weighted energy");
    Constellation out = c;
    const double scale = 1.0 / std::sqrt(energy);
    for (Eigen::Index k = 0; k < out.points.size(); ++k) out.points[k] *= scale;
    return out;
}

} // namespace constkit
