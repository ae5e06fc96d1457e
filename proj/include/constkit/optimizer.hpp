#pragma once

#include "constkit/constellation.hpp"
#include "constkit/metrics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace constkit {

// Weights for the composite search objective
//   -gamma * d_min + alpha * sum max(0, tau - d_ij)^2
//                  + beta * max(0, PAPR_dB - papr_cap)^2
// evaluated on the unit-energy copy of the point set. Point sets whose d_min
// falls below barrier_threshold score barrier_cost outright.
struct FitnessWeights {
    double tau = 0.3;
    double alpha = 1.0;
    double papr_cap_db = 3.0;
    double beta = 0.05;
    double gamma = 1.0;
    double barrier_threshold = 1e-4;
    double barrier_cost = 1e9;
    std::optional<double> lambda_papr; // energy-aware variant
    std::optional<double> snr_db;      // energy-aware variant
};

struct PsoConfig {
    int particles = 100;
    int iterations = 1000;
    double inertia_start = 0.9;
    double inertia_end = 0.4; // linear decay
    double c1 = 1.6;
    double c2 = 1.6;
    double pos_min = -2.0;
    double pos_max = 2.0;
    double vel_init = 0.2; // initial velocity uniform in [-vel_init, vel_init]
    std::uint64_t seed = 1;
};

struct GaConfig {
    int population = 100;
    int generations = 1000;
    double elite_fraction = 0.1;     // top elites copied unchanged
    double mutation_sigma = 0.08;    // Gaussian per-gene
    double mutation_prob = 0.5;
    double jitter = 0.15;            // uniform +/- jitter per gene
    double jitter_prob = 0.2;
    double gene_min = -2.0;
    double gene_max = 2.0;
    std::uint64_t seed = 1;
};

struct OptimizerTrace {
    std::vector<double> best_cost;   // per iteration, nonincreasing
    Eigen::ArrayXcd final_raw;       // best point set in search coordinates
    Constellation final_constellation;
    std::uint64_t seed = 0;
    std::string config_echo;
};

double fitness(const Eigen::ArrayXcd& points, const FitnessWeights& w);

/// Union-bound SER of the normalized point set plus lambda_papr times the
/// linear PAPR; same degeneracy barrier as fitness().
double energy_aware_fitness(const Eigen::ArrayXcd& points, const FitnessWeights& base,
                            double lambda_papr, SnrSpec snr);

OptimizerTrace pso_optimize(int order, const PsoConfig& cfg, const FitnessWeights& w);
OptimizerTrace ga_optimize(int order, const GaConfig& cfg, const FitnessWeights& w);

} // namespace constkit
