#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freight {

// Discounting convention throughout: end-of-period, cash flow t = 1..horizon
// is divided by (1 + rate)^t; the base period t = 0 is excluded.

struct CapmParams {
    double risk_free = 0.0;
    double beta = 1.0;
    double market_premium = 0.0;
};

/// risk_free + beta * market_premium. Throws DomainError if risk_free <= -1
/// or the resulting rate is <= -1.
double capm_rate(const CapmParams& p);

/// Per-period cash flows for periods 1..horizon, tagged with a currency unit.
class CashflowStream {
public:
    explicit CashflowStream(std::vector<double> values, std::string currency = "USD");

    std::span<const double> values() const { return values_; }
    int horizon() const { return static_cast<int>(values_.size()); }
    const std::string& currency() const { return currency_; }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
    std::string currency_;
};

/// (1 + rate)^-t for t = 1..horizon.
std::vector<double> discount_factors(double rate, int horizon);

/// Sum of s[t] / (1 + rate)^t. Throws DomainError when rate <= -1.
double npv(std::span<const double> flows, double rate);
double npv(const CashflowStream& s, double rate);

struct GdpProjection {
    double gdp0 = 0.0;    // base-year GDP, million GEL
    double growth = 0.0;  // annual nominal growth
    int horizon = 1;      // years
    double discount = 0.0;
};

void validate(const GdpProjection& g);

/// gdp0 * (1 + growth)^t for t = 1..horizon, in million GEL.
CashflowStream projected_gdp(const GdpProjection& g);

/// npv(projected_gdp(g), g.discount).
double gdp_pv(const GdpProjection& g);

struct RateBracket {
    double low = 0.0;
    double high = 0.0;
};

/// Discount rate at which gdp_pv equals target_pv, found by bisection over
/// `bracket` (default [growth - 0.5, growth + 1.0], clipped above -1).
/// gdp_pv is strictly decreasing in the rate, so the root is unique.
/// Throws CalibrationError naming the achievable interval when target_pv is
/// out of reach.
double implied_discount(double gdp0, double growth, int horizon, double target_pv,
                        std::optional<RateBracket> bracket = std::nullopt);

enum class CostBasis {
    fixed,         // operating cost independent of tonnage
    volume_scaled, // operating cost proportional to volume / base_volume
};

std::string_view to_string(CostBasis b);
CostBasis parse_cost_basis(std::string_view s);

struct EvaParams {
    double tariff = 0.0;          // USD per ton shipped
    double cost0 = 0.0;           // base-period operating cost, USD
    double cost_adjustment = 0.0; // per-period fractional cost reduction
    double asset_base = 0.0;      // capital employed, USD
    double discount = 0.0;        // capital charge rate
    CostBasis cost_basis = CostBasis::fixed;
    double base_volume = 0.0;     // million tons; required for volume_scaled
};

void validate(const EvaParams& p);

/// EVA_t = income_t - cost_t - asset_base * discount for t = 1..horizon, in USD, with
///   income_t = tariff * volumes[t] * 1e6            (volumes in million tons)
///   cost_t   = cost0 * (1 - cost_adjustment)^t       (fixed)
///   cost_t   = cost0 * volumes[t] / base_volume * (1 - cost_adjustment)^t   (volume_scaled)
/// Throws DomainError on a length mismatch or invalid parameters.
CashflowStream eva_stream(const EvaParams& p, std::span<const double> volumes, int horizon);

} // namespace freight
