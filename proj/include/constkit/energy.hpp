#pragma once

#include <string>
#include <vector>

namespace constkit {

// Power-amplifier model: efficiency decays exponentially with back-off, and
// the back-off is proportional to constellation PAPR. Defaults are artifact
// choices, documented and overridable.
struct PaModel {
    double eta_max = 0.6;      // peak PA efficiency
    double obo_slope = 1.0;    // OBO_dB = obo_slope * PAPR_dB
    double p_static = 0.5;     // W
    double p_avg = 1.0;        // W
    double symbol_rate = 1e6;  // symbols/s
};

struct EnergyReport {
    double papr_db = 0.0;
    double eta = 0.0;
    double p_cons = 0.0;         // W
    double e_succ = 0.0;         // J per successfully delivered symbol
    double power_eff_score = 0.0;
    double composite = 0.0;
};

struct ScoreWeights {
    double w_dmin = 0.35;
    double w_power = 0.25;
    double w_ser = 0.40;
    double d_ref = 0.667; // reference minimum distance; ratio clamped at 1
};

/// eta_max * 10^(-obo_slope * papr_db / 10).
double pa_efficiency(double papr_db, const PaModel& pa);

/// p_avg / pa_efficiency + p_static.
double consumed_power(const PaModel& pa, double papr_db);

/// p_cons / (symbol_rate * (1 - ser)); throws UndefinedEnergy at ser = 1.
double energy_per_success(double p_cons, double symbol_rate, double ser);

/// 10^(-papr_db/10): 1 at 0 dB, strictly decreasing.
double power_efficiency_score(double papr_db);

/// w_dmin * min(d_min/d_ref, 1) + w_power * power_eff(papr) + w_ser * (1 - ser).
double composite_score(double d_min, double papr_db, double ser_10db, const ScoreWeights& w);

EnergyReport energy_report(double d_min, double papr_db, double ser_10db, const PaModel& pa,
                           const ScoreWeights& w);

struct DesignEntry {
    std::string label;
    double d_min = 0.0;
    double papr_db = 0.0;
    double ser_10db = 0.0;
};

struct RankedDesign {
    int rank = 0;
    DesignEntry entry;
    double power_eff = 0.0;
    double composite = 0.0;
};

/// Descending composite score; ties broken by label lexicographic order.
std::vector<RankedDesign> rank_designs(std::vector<DesignEntry> entries, const ScoreWeights& w);

} // namespace constkit
