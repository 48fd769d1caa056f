#include "freight/scenario.hpp"

#include "freight/errors.hpp"
#include "freight/regress.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace freight {

std::string_view to_string(GrowthMode m) {
    return m == GrowthMode::simple ? "simple" : "compound";
}

GrowthMode parse_growth_mode(std::string_view s) {
    if (s == "simple")
        return GrowthMode::simple;
    if (s == "compound")
        return GrowthMode::compound;
    throw InputError("unknown growth mode '" + std::string(s) + "' (expected simple or compound)");
}

VolumePath volume_path(double v0, double g, int horizon, GrowthMode mode) {
    if (!(v0 > 0.0) || !std::isfinite(v0))
        throw DomainError("base volume must be positive");
    if (horizon < 1)
        throw DomainError("horizon must be at least one year");
    if (!std::isfinite(g))
        throw DomainError("growth rate must be finite");
    VolumePath path{{}, mode};
    path.volumes.reserve(static_cast<std::size_t>(horizon));
    for (int t = 1; t <= horizon; ++t) {
        const double v = mode == GrowthMode::simple ? v0 * (1.0 + g * t) : v0 * std::pow(1.0 + g, t);
        if (!(v > 0.0))
            throw DomainError("growth rate " + std::to_string(g) + " drives the volume non-positive in year " +
                              std::to_string(t));
        path.volumes.push_back(v);
    }
    return path;
}

double effect_pv_reduced(double g, double a, double b) {
    return a + b * g;
}

namespace {

EvaParams eva_params(const StructuralSetup& s, double cost0, double asset_base) {
    return {s.tariff, cost0, s.cost_adjustment, asset_base, s.discount, s.cost_basis, s.v0};
}

double pv_millions(double g, const StructuralSetup& s, const EvaParams& p) {
    const auto path = volume_path(s.v0, g, s.horizon, s.mode);
    return npv(eva_stream(p, path.volumes, s.horizon), s.discount) / 1e6;
}

// PV of the operating-cost stream at cost0 = 1 USD, in million USD.
double unit_cost_pv_millions(double g, const StructuralSetup& s) {
    const auto path = volume_path(s.v0, g, s.horizon, s.mode);
    std::vector<double> cost;
    cost.reserve(path.volumes.size());
    for (int t = 1; t <= s.horizon; ++t) {
        double c = std::pow(1.0 - s.cost_adjustment, t);
        if (s.cost_basis == CostBasis::volume_scaled)
            c *= path.volumes[static_cast<std::size_t>(t - 1)] / s.v0;
        cost.push_back(c);
    }
    return npv(cost, s.discount) / 1e6;
}

} // namespace

double effect_pv_structural(double g, const StructuralSetup& setup, double cost0, double asset_base) {
    const auto p = eva_params(setup, cost0, asset_base);
    validate(p);
    return pv_millions(g, setup, p);
}

double share_of_gdp(double effect_pv, double gdp_pv) {
    if (!(gdp_pv > 0.0))
        throw DomainError("GDP present value must be positive");
    return effect_pv / gdp_pv;
}

CalibrationResult calibrate_reduced(std::span<const GrowthObservation> rows) {
    std::set<double> distinct;
    std::vector<double> x;
    std::vector<double> y;
    for (const auto& r : rows) {
        distinct.insert(r.growth);
        x.push_back(r.growth);
        y.push_back(r.effect_pv);
    }
    if (distinct.size() < 2)
        throw CalibrationError("degenerate design: reduced-form calibration needs at least two distinct growth rates");

    const auto fit = ols_fit(x, y);
    CalibrationResult out;
    out.reduced_a = fit.intercept;
    out.reduced_b = fit.slope;
    out.fit_r2 = fit.r2;
    for (double r : fit.residuals)
        out.residual_max = std::max(out.residual_max, std::abs(r));
    out.rows_checked = rows.size();
    return out;
}

CalibrationResult calibrate_structural(std::span<const GrowthObservation> anchors, const StructuralSetup& setup,
                                       std::span<const GrowthObservation> check_rows) {
    std::set<double> distinct;
    for (const auto& a : anchors)
        distinct.insert(a.growth);
    if (distinct.size() < 2)
        throw CalibrationError("structural calibration needs at least two anchors with distinct growth rates");
    if (!(setup.tariff > 0.0))
        throw CalibrationError("structural calibration needs a positive tariff");

    // PV(g) = income(g) - cost0 * unit_cost(g) - asset_base * charge, all in million USD.
    const auto income_only = eva_params(setup, 0.0, 0.0);
    const double charge = setup.discount * [&] {
        double s = 0.0;
        for (double d : discount_factors(setup.discount, setup.horizon))
            s += d;
        return s;
    }() / 1e6;
    if (!(std::abs(charge) > 0.0))
        throw CalibrationError("singular design: a zero discount rate leaves the asset base unidentified");

    std::vector<double> cost_pv;
    std::vector<double> gap; // income - target = cost0 * unit_cost + asset_base * charge
    for (const auto& a : anchors) {
        const double income = pv_millions(a.growth, setup, income_only);
        cost_pv.push_back(unit_cost_pv_millions(a.growth, setup));
        gap.push_back(income - a.effect_pv);
    }

    const auto [lo, hi] = std::minmax_element(cost_pv.begin(), cost_pv.end());
    if (*hi - *lo <= 1e-12 * std::max(std::abs(*hi), std::abs(*lo)))
        throw CalibrationError("singular design: the operating-cost term does not vary across the anchors, so cost0 "
                               "and asset_base cannot be separated (use cost_basis = volume_scaled)");

    const auto fit = ols_fit(cost_pv, gap);
    const double cost0 = fit.slope;
    const double asset_base = fit.intercept / charge;
    if (cost0 < 0.0 || asset_base < 0.0)
        throw CalibrationError("calibrated parameters are infeasible: cost0 = " + std::to_string(cost0) +
                               ", asset_base = " + std::to_string(asset_base));

    CalibrationResult out;
    out.implied_discount = setup.discount;
    out.cost0 = cost0;
    out.asset_base = asset_base;
    const auto params = eva_params(setup, cost0, asset_base);
    auto check = [&](const GrowthObservation& r) {
        out.residual_max = std::max(out.residual_max, std::abs(pv_millions(r.growth, setup, params) - r.effect_pv));
        ++out.rows_checked;
    };
    for (const auto& a : anchors)
        check(a);
    for (const auto& r : check_rows) {
        const bool is_anchor = std::any_of(anchors.begin(), anchors.end(), [&](const GrowthObservation& a) {
            return a.growth == r.growth && a.effect_pv == r.effect_pv;
        });
        if (!is_anchor)
            check(r);
    }
    return out;
}

void validate(const ScenarioConfig& cfg) {
    if (!(cfg.v0 > 0.0))
        throw DomainError("base volume v0 must be positive");
    if (cfg.growth_grid.empty())
        throw DomainError("growth grid is empty");
    for (double g : cfg.growth_grid)
        if (!(g > -1.0) || !std::isfinite(g))
            throw DomainError("every growth rate must exceed -1");
    if (cfg.horizon < 1)
        throw DomainError("horizon must be at least one year");
    if (!(cfg.cost_adjustment >= 0.0 && cfg.cost_adjustment < 1.0))
        throw DomainError("cost adjustment must lie in [0, 1)");
    validate(cfg.gdp);
}

std::vector<ScenarioRow> build_matrix(const ScenarioConfig& cfg) {
    validate(cfg);
    auto grid = cfg.growth_grid;
    std::sort(grid.begin(), grid.end());

    const double gdp = gdp_pv(cfg.gdp);
    const StructuralSetup setup{0.0, cfg.gdp.discount, cfg.cost_adjustment, cfg.v0, cfg.horizon, cfg.mode,
                                CostBasis::fixed};

    std::vector<ScenarioRow> rows;
    rows.reserve(grid.size());
    for (double g : grid) {
        ScenarioRow row;
        row.g = g;
        row.volume_h = volume_path(cfg.v0, g, cfg.horizon, cfg.mode).final_volume();
        row.cost_adjustment = cfg.cost_adjustment;
        row.gdp_pv = gdp;
        row.effect_pv = std::visit(
            [&](const auto& engine) {
                using T = std::decay_t<decltype(engine)>;
                if constexpr (std::is_same_v<T, ReducedForm>) {
                    return effect_pv_reduced(g, engine.a, engine.b);
                } else {
                    auto s = setup;
                    s.tariff = engine.tariff;
                    s.cost_basis = engine.cost_basis;
                    return effect_pv_structural(g, s, engine.cost0, engine.asset_base);
                }
            },
            cfg.engine);
        row.share = share_of_gdp(row.effect_pv, row.gdp_pv);
        rows.push_back(row);
    }
    return rows;
}

} // namespace freight
