#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>

namespace constkit {

using cplx = std::complex<double>;

// Tolerances used by the constellation invariants (normalized units).
inline constexpr double kDuplicateTol = 1e-9;
inline constexpr double kEnergyTol = 1e-9;
inline constexpr double kProbSumTol = 1e-12;

// Labeled set of complex symbols with per-symbol transmit probabilities.
// Library entry points hand out unit-average-energy constellations; raw
// builders return un-normalized point sets for the caller to normalize.
struct Constellation {
    std::string label;
    Eigen::ArrayXcd points;
    Eigen::ArrayXd probs;

    Eigen::Index size() const { return points.size(); }

    /// Probability-weighted average symbol energy, summed in index order.
    double average_energy() const;
};

/// Builds an UN-normalized constellation. Probabilities default to uniform.
/// Throws DegenerateConstellation on coincident points (within 1e-9) and
/// InvalidDistribution on a malformed probability vector.
Constellation make_constellation(const Eigen::ArrayXcd& points,
                                 const Eigen::ArrayXd& probs = {},
                                 std::string label = {});

/// Scales points so the probability-weighted energy is 1; probabilities and
/// ordering are preserved. Throws DegenerateConstellation on zero energy.
Constellation normalize_energy(const Constellation& c);

/// Index pair of the closest two points (i < j), and their distance.
struct ClosestPair {
    Eigen::Index i, j;
    double distance;
};
ClosestPair closest_pair(const Eigen::ArrayXcd& points);

} // namespace constkit
