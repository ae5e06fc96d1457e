#include "constkit/energy.hpp"

#include "constkit/errors.hpp"

#include <algorithm>
#include <cmath>

namespace constkit {

double pa_efficiency(double papr_db, const PaModel& pa) {
    if (papr_db < 0.0) throw InvalidInput("pa_efficiency requires papr_db >= 0");
    return pa.eta_max * std::pow(10.0, -pa.obo_slope * papr_db / 10.0);
}

double consumed_power(const PaModel& pa, double papr_db) {
    return pa.p_avg / pa_efficiency(papr_db, pa) + pa.p_static;
}

double energy_per_success(double p_cons, double symbol_rate, double ser) {
    if (ser < 0.0 || ser >= 1.0) throw UndefinedEnergy("energy undefined unless 0 <= ser < 1");
    return p_cons / (symbol_rate * (1.0 - ser));
}

double power_efficiency_score(double papr_db) {
    if (papr_db < 0.0) throw InvalidInput("power_efficiency_score requires papr_db >= 0");
    return std::pow(10.0, -papr_db / 10.0);
}

double composite_score(double d_min, double papr_db, double ser_10db, const ScoreWeights& w) {
    if (w.d_ref <= 0.0) throw InvalidInput("composite_score requires d_ref > 0");
    const double d_ratio = std::min(d_min / w.d_ref, 1.0);
    return w.w_dmin * d_ratio + w.w_power * power_efficiency_score(papr_db) +
           w.w_ser * (1.0 - ser_10db);
}

EnergyReport energy_report(double d_min, double papr_db, double ser_10db, const PaModel& pa,
                           const ScoreWeights& w) {
    EnergyReport r;
    r.papr_db = papr_db;
    r.eta = pa_efficiency(papr_db, pa);
    r.p_cons = consumed_power(pa, papr_db);
    r.e_succ = energy_per_success(r.p_cons, pa.symbol_rate, ser_10db);
    r.power_eff_score = power_efficiency_score(papr_db);
    r.composite = composite_score(d_min, papr_db, ser_10db, w);
    return r;
}

std::vector<RankedDesign> rank_designs(std::vector<DesignEntry> entries, const ScoreWeights& w) {
    std::vector<RankedDesign> out;
    out.reserve(entries.size());
    for (auto& e : entries) {
        RankedDesign r;
        r.entry = std::move(e);
        r.power_eff = power_efficiency_score(r.entry.papr_db);
        r.composite = composite_score(r.entry.d_min, r.entry.papr_db, r.entry.ser_10db, w);
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const RankedDesign& a, const RankedDesign& b) {
        if (a.composite != b.composite) return a.composite > b.composite;
        return a.entry.label < b.entry.label;
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = int(i) + 1;
    return out;
}

} // namespace constkit
