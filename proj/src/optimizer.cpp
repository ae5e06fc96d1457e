#include "constkit/optimizer.hpp"

#include "constkit/errors.hpp"
#include "constkit/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace constkit {

namespace {

// Genome layout: 2M genes, interleaved (re0, im0, re1, im1, ...).
Eigen::ArrayXcd genes_to_points(const Eigen::ArrayXd& g) {
    Eigen::ArrayXcd pts(g.size() / 2);
    for (Eigen::Index k = 0; k < pts.size(); ++k) pts[k] = cplx(g[2 * k], g[2 * k + 1]);
    return pts;
}

struct NormalizedSet {
    Eigen::ArrayXcd points;
    double d_min;
    double papr_db;
    bool degenerate;
};

NormalizedSet normalize_points(const Eigen::ArrayXcd& raw, double barrier_threshold) {
    NormalizedSet out{raw, 0.0, 0.0, true};
    double energy = 0.0;
    for (Eigen::Index k = 0; k < raw.size(); ++k) energy += std::norm(raw[k]);
    energy /= double(raw.size());
    if (!(energy > 0.0)) return out;

    const double scale = 1.0 / std::sqrt(energy);
    double peak = 0.0;
    for (Eigen::Index k = 0; k < out.points.size(); ++k) {
        out.points[k] *= scale;
        peak = std::max(peak, std::norm(out.points[k]));
    }
    out.d_min = closest_pair(out.points).distance;
    if (out.d_min < barrier_threshold) return out;
    out.papr_db = 10.0 * std::log10(peak); // unit mean energy
    out.degenerate = false;
    return out;
}

double spacing_penalty(const Eigen::ArrayXcd& pts, double tau) {
    double pen = 0.0;
    for (Eigen::Index i = 0; i < pts.size(); ++i) {
        for (Eigen::Index j = i + 1; j < pts.size(); ++j) {
            const double gap = tau - std::abs(pts[i] - pts[j]);
            if (gap > 0.0) pen += gap * gap;
        }
    }
    return pen;
}

std::string echo_pso(const PsoConfig& c) {
    std::ostringstream os;
    os << "pso particles=" << c.particles << " iterations=" << c.iterations << " inertia="
       << c.inertia_start << "->" << c.inertia_end << " c1=" << c.c1 << " c2=" << c.c2
       << " pos=[" << c.pos_min << "," << c.pos_max << "] vel_init=" << c.vel_init
       << " seed=" << c.seed;
    return os.str();
}

std::string echo_ga(const GaConfig& c) {
    std::ostringstream os;
    os << "ga population=" << c.population << " generations=" << c.generations
       << " elite=" << c.elite_fraction << " mutation_sigma=" << c.mutation_sigma
       << " mutation_prob=" << c.mutation_prob << " jitter=" << c.jitter
       << " jitter_prob=" << c.jitter_prob << " genes=[" << c.gene_min << "," << c.gene_max
       << "] seed=" << c.seed;
    return os.str();
}

OptimizerTrace finish_trace(std::vector<double> best_costs, const Eigen::ArrayXd& best_genes,
                            std::uint64_t seed, std::string echo, const std::string& label) {
    OptimizerTrace t;
    t.best_cost = std::move(best_costs);
    t.final_raw = genes_to_points(best_genes);
    t.final_constellation = normalize_energy(make_constellation(t.final_raw, {}, label));
    t.seed = seed;
    t.config_echo = std::move(echo);
    return t;
}

} // namespace

double fitness(const Eigen::ArrayXcd& points, const FitnessWeights& w) {
    if (points.size() < 2) throw InvalidInput("fitness requires at least 2 points");
    const NormalizedSet set = normalize_points(points, w.barrier_threshold);
    if (set.degenerate) return w.barrier_cost;

    double cost = -w.gamma * set.d_min;
    if (w.alpha != 0.0) cost += w.alpha * spacing_penalty(set.points, w.tau);
    const double papr_excess = set.papr_db - w.papr_cap_db;
    if (w.beta != 0.0 && papr_excess > 0.0) cost += w.beta * papr_excess * papr_excess;
    return cost;
}

double energy_aware_fitness(const Eigen::ArrayXcd& points, const FitnessWeights& base,
                            double lambda_papr, SnrSpec snr) {
    if (points.size() < 2) throw InvalidInput("fitness requires at least 2 points");
    const NormalizedSet set = normalize_points(points, base.barrier_threshold);
    if (set.degenerate) return base.barrier_cost;

    const Constellation c = {
        "candidate", set.points,
        Eigen::ArrayXd::Constant(set.points.size(), 1.0 / double(set.points.size()))};
    const double papr_linear = std::pow(10.0, set.papr_db / 10.0);
    return union_bound_ser(c, snr) + lambda_papr * papr_linear;
}

OptimizerTrace pso_optimize(int order, const PsoConfig& cfg, const FitnessWeights& w) {
    if (order < 2) throw InvalidInput("pso_optimize requires M >= 2");
    if (cfg.particles < 1 || cfg.iterations < 1) throw InvalidInput("pso counts must be >= 1");

    const int dim = 2 * order;
    RngStream rng = derive_stream(cfg.seed, {fnv1a64("pso"), std::uint64_t(order)});

    std::vector<Eigen::ArrayXd> pos(std::size_t(cfg.particles));
    std::vector<Eigen::ArrayXd> vel(std::size_t(cfg.particles));
    for (auto& p : pos) {
        p.resize(dim);
        for (int d = 0; d < dim; ++d) p[d] = rng.uniform(cfg.pos_min, cfg.pos_max);
    }
    for (auto& v : vel) {
        v.resize(dim);
        for (int d = 0; d < dim; ++d) v[d] = rng.uniform(-cfg.vel_init, cfg.vel_init);
    }

    std::vector<Eigen::ArrayXd> pbest = pos;
    std::vector<double> pbest_cost(std::size_t(cfg.particles));
    for (int i = 0; i < cfg.particles; ++i)
        pbest_cost[std::size_t(i)] = fitness(genes_to_points(pos[std::size_t(i)]), w);

    int gi = int(std::min_element(pbest_cost.begin(), pbest_cost.end()) - pbest_cost.begin());
    Eigen::ArrayXd gbest = pbest[std::size_t(gi)];
    double gbest_cost = pbest_cost[std::size_t(gi)];

    std::vector<double> trace;
    trace.reserve(std::size_t(cfg.iterations));

    for (int t = 0; t < cfg.iterations; ++t) {
        const double frac = cfg.iterations > 1 ? double(t) / double(cfg.iterations - 1) : 0.0;
        const double inertia = cfg.inertia_start + (cfg.inertia_end - cfg.inertia_start) * frac;

        for (int i = 0; i < cfg.particles; ++i) {
            auto& x = pos[std::size_t(i)];
            auto& v = vel[std::size_t(i)];
            const auto& p = pbest[std::size_t(i)];
            for (int d = 0; d < dim; ++d) {
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                v[d] = inertia * v[d] + cfg.c1 * r1 * (p[d] - x[d]) + cfg.c2 * r2 * (gbest[d] - x[d]);
                x[d] = std::clamp(x[d] + v[d], cfg.pos_min, cfg.pos_max);
            }
        }
        for (int i = 0; i < cfg.particles; ++i) {
            const double cost = fitness(genes_to_points(pos[std::size_t(i)]), w);
            if (cost < pbest_cost[std::size_t(i)]) {
                pbest_cost[std::size_t(i)] = cost;
                pbest[std::size_t(i)] = pos[std::size_t(i)];
            }
        }
        for (int i = 0; i < cfg.particles; ++i) {
            if (pbest_cost[std::size_t(i)] < gbest_cost) {
                gbest_cost = pbest_cost[std::size_t(i)];
                gbest = pbest[std::size_t(i)];
            }
        }
        trace.push_back(gbest_cost);
    }

    return finish_trace(std::move(trace), gbest, cfg.seed, echo_pso(cfg),
                        "pso-" + std::to_string(order) + "-seed" + std::to_string(cfg.seed));
}

OptimizerTrace ga_optimize(int order, const GaConfig& cfg, const FitnessWeights& w) {
    if (order < 2) throw InvalidInput("ga_optimize requires M >= 2");
    if (cfg.population < 2 || cfg.generations < 1) throw InvalidInput("ga counts must be >= 1");
    if (cfg.elite_fraction <= 0.0 || cfg.elite_fraction >= 1.0)
        throw InvalidInput("ga elite fraction must lie in (0,1)");

    const int dim = 2 * order;
    const int pop_n = cfg.population;
    const int elites = std::max(1, int(double(pop_n) * cfg.elite_fraction));
    RngStream rng = derive_stream(cfg.seed, {fnv1a64("ga"), std::uint64_t(order)});

    std::vector<Eigen::ArrayXd> pop(std::size_t(pop_n));
    for (auto& g : pop) {
        g.resize(dim);
        for (int d = 0; d < dim; ++d) g[d] = rng.uniform(cfg.gene_min, cfg.gene_max);
    }
    std::vector<double> cost(std::size_t(pop_n));
    for (int i = 0; i < pop_n; ++i) cost[std::size_t(i)] = fitness(genes_to_points(pop[std::size_t(i)]), w);

    // linear rank weights: rank r of P gets weight P - r + 1
    std::vector<double> rank_cdf(std::size_t(pop_n));
    {
        const double total = double(pop_n) * double(pop_n + 1) / 2.0;
        double acc = 0.0;
        for (int r = 0; r < pop_n; ++r) {
            acc += double(pop_n - r) / total;
            rank_cdf[std::size_t(r)] = acc;
        }
        rank_cdf.back() = 1.0;
    }
    const auto pick_parent = [&]() {
        const double u = rng.uniform();
        return int(std::upper_bound(rank_cdf.begin(), rank_cdf.end(), u) - rank_cdf.begin());
    };

    std::vector<double> trace;
    trace.reserve(std::size_t(cfg.generations));
    Eigen::ArrayXd best_genes;
    double best_cost = std::numeric_limits<double>::infinity();

    std::vector<int> order_idx(std::size_t(pop_n));
    for (int gen = 0; gen < cfg.generations; ++gen) {
        std::iota(order_idx.begin(), order_idx.end(), 0);
        std::stable_sort(order_idx.begin(), order_idx.end(),
                         [&](int a, int b) { return cost[std::size_t(a)] < cost[std::size_t(b)]; });

        if (cost[std::size_t(order_idx[0])] < best_cost) {
            best_cost = cost[std::size_t(order_idx[0])];
            best_genes = pop[std::size_t(order_idx[0])];
        }
        trace.push_back(best_cost);

        std::vector<Eigen::ArrayXd> next(std::size_t(pop_n));
        std::vector<double> next_cost(std::size_t(pop_n));
        for (int e = 0; e < elites; ++e) {
            next[std::size_t(e)] = pop[std::size_t(order_idx[std::size_t(e)])];
            next_cost[std::size_t(e)] = cost[std::size_t(order_idx[std::size_t(e)])];
        }
        for (int i = elites; i < pop_n; ++i) {
            const int pa = order_idx[std::size_t(pick_parent())];
            const int pb = order_idx[std::size_t(pick_parent())];
            const int cut = 1 + int(rng.uniform_index(std::uint64_t(dim - 1))); // one-point
            Eigen::ArrayXd child(dim);
            for (int d = 0; d < dim; ++d)
                child[d] = d < cut ? pop[std::size_t(pa)][d] : pop[std::size_t(pb)][d];
            for (int d = 0; d < dim; ++d) {
                if (rng.uniform() < cfg.mutation_prob) child[d] += cfg.mutation_sigma * rng.normal();
                if (rng.uniform() < cfg.jitter_prob) child[d] += rng.uniform(-cfg.jitter, cfg.jitter);
                child[d] = std::clamp(child[d], cfg.gene_min, cfg.gene_max);
            }
            next_cost[std::size_t(i)] = fitness(genes_to_points(child), w);
            next[std::size_t(i)] = std::move(child);
        }
        pop = std::move(next);
        cost = std::move(next_cost);
    }

    // final population may contain a fresh improvement
    for (int i = 0; i < pop_n; ++i) {
        if (cost[std::size_t(i)] < best_cost) {
            best_cost = cost[std::size_t(i)];
            best_genes = pop[std::size_t(i)];
        }
    }
    if (!trace.empty()) trace.back() = std::min(trace.back(), best_cost);

    return finish_trace(std::move(trace), best_genes, cfg.seed, echo_ga(cfg),
                        "ga-" + std::to_string(order) + "-seed" + std::to_string(cfg.seed));
}

} // namespace constkit
