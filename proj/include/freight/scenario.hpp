#pragma once

#include "freight/valuation.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace freight {

enum class GrowthMode {
    simple,   // v0 * (1 + g * t)
    compound, // v0 * (1 + g)^t
};

std::string_view to_string(GrowthMode m);
GrowthMode parse_growth_mode(std::string_view s);

struct VolumePath {
    std::vector<double> volumes; // million tons, t = 1..horizon
    GrowthMode mode = GrowthMode::simple;

    double final_volume() const { return volumes.back(); }
};

/// Throws DomainError unless v0 > 0, horizon >= 1 and every volume is positive.
VolumePath volume_path(double v0, double g, int horizon, GrowthMode mode);

/// Effect PV (million USD) as an affine function of the growth rate.
struct ReducedForm {
    double a = 0.0; // effect at g = 0
    double b = 0.0; // per unit growth rate
};

/// Effect PV built from tonnage income, decaying operating cost and a capital charge.
struct StructuralForm {
    double tariff = 0.0;     // USD per ton
    double cost0 = 0.0;      // USD
    double asset_base = 0.0; // USD
    CostBasis cost_basis = CostBasis::volume_scaled;
};

using EffectEngine = std::variant<ReducedForm, StructuralForm>;

struct ScenarioConfig {
    double v0 = 0.0;                  // base-year volume, million tons
    std::vector<double> growth_grid;  // annual growth rates
    int horizon = 16;
    GrowthMode mode = GrowthMode::simple;
    double cost_adjustment = 0.0;
    GdpProjection gdp;                // gdp.discount also discounts the EVA stream
    EffectEngine engine;
};

void validate(const ScenarioConfig& cfg);

struct ScenarioRow {
    double g = 0.0;
    double volume_h = 0.0;        // million tons after the horizon
    double cost_adjustment = 0.0;
    double gdp_pv = 0.0;          // million GEL
    double effect_pv = 0.0;       // million USD
    double share = 0.0;           // effect_pv / gdp_pv
};

double effect_pv_reduced(double g, double a, double b);

struct StructuralSetup {
    double tariff = 0.0;
    double discount = 0.0;
    double cost_adjustment = 0.0;
    double v0 = 0.0;
    int horizon = 16;
    GrowthMode mode = GrowthMode::simple;
    CostBasis cost_basis = CostBasis::volume_scaled;
};

/// npv(eva_stream(...), discount) in million USD for one growth rate.
double effect_pv_structural(double g, const StructuralSetup& setup, double cost0, double asset_base);

/// effect_pv / gdp_pv. Throws DomainError when gdp_pv <= 0.
double share_of_gdp(double effect_pv, double gdp_pv);

struct GrowthObservation {
    double growth = 0.0;
    double effect_pv = 0.0; // million USD
};

struct CalibrationResult {
    std::optional<double> reduced_a;
    std::optional<double> reduced_b;
    std::optional<double> fit_r2;
    std::optional<double> implied_discount;
    std::optional<double> cost0;      // USD
    std::optional<double> asset_base; // USD
    double residual_max = 0.0;        // million USD, worst |model - target|
    std::size_t rows_checked = 0;
};

/// OLS line of effect PV on growth rate. Throws CalibrationError when fewer
/// than two distinct growth rates are supplied.
CalibrationResult calibrate_reduced(std::span<const GrowthObservation> rows);

/// Solves for (cost0, asset_base) in least squares against the anchors.
/// The effect PV is affine in both unknowns, so this is a linear solve:
/// cost0 is the slope of (income PV - target) against the unit-cost PV, and
/// the capital charge absorbs the intercept. residual_max covers the anchors
/// and every row in check_rows. Throws CalibrationError for singular designs
/// (identical growth rates, tonnage-independent costs, zero discount) and for
/// solutions with negative cost or assets.
CalibrationResult calibrate_structural(std::span<const GrowthObservation> anchors, const StructuralSetup& setup,
                                       std::span<const GrowthObservation> check_rows = {});

/// One row per grid rate in ascending order.
std::vector<ScenarioRow> build_matrix(const ScenarioConfig& cfg);

} // namespace freight
