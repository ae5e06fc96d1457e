#pragma once

#include "constkit/constellation.hpp"

#include <map>
#include <string>
#include <vector>

namespace constkit {

enum class Scheme {
    Bpsk,
    Qpsk,
    Mpsk,
    SquareQam,
    HexLattice,
    Apsk,
    CrossShaped,
    Elliptical,
    CircularAsymmetric,
    StarShaped,
    Triangular,
    HexRing,
    ProbShapedQam,
    DiscGam,
    BellGam,
    FromFile,
};

// Parametric recipe that deterministically produces a constellation.
struct SchemeSpec {
    Scheme scheme = Scheme::SquareQam;
    int order = 16;
    std::map<std::string, double> params; // lambda, alpha, beta, r_in, r_out, r1, r2
    std::vector<int> ring_counts;         // APSK: points per ring, sums to order
    std::vector<double> ring_radii;       // APSK: ring radii
    std::vector<double> ring_offsets;     // APSK: phase offset per ring (radians)
    std::string file;                     // FromFile: CSV path
};

struct SchemeInfo {
    Scheme scheme;
    std::string id;        // stable CLI identifier
    std::string signature; // parameter signature for the catalog listing
    bool in_default_set;   // member of the default 14-scheme simulation set
};

const std::vector<SchemeInfo>& scheme_catalog();
std::string scheme_id(Scheme s);
Scheme scheme_from_id(const std::string& id);

/// The 14 schemes simulated by default: the thirteen order-16 families
/// plus QPSK as the classical low-order baseline.
std::vector<SchemeSpec> default_sweep_set();

/// Golden angle 2*pi*(1 - 1/phi), the GAM spiral increment.
double golden_angle();

/// Deterministically generates the energy-normalized constellation for a
/// spec. Throws UnsupportedScheme on an invalid (scheme, order, params)
/// combination.
Constellation generate(const SchemeSpec& spec);

} // namespace constkit
