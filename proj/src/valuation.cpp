#include "freight/valuation.hpp"

#include "freight/errors.hpp"
#include "freight/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace freight {

double capm_rate(const CapmParams& p) {
    if (!(p.risk_free > -1.0))
        throw DomainError("CAPM risk-free rate must exceed -1");
    if (!std::isfinite(p.beta) || !std::isfinite(p.market_premium))
        throw DomainError("CAPM beta and market premium must be finite");
    const double rate = p.risk_free + p.beta * p.market_premium;
    if (!(rate > -1.0))
        throw DomainError("CAPM discount rate must exceed -1");
    return rate;
}

CashflowStream::CashflowStream(std::vector<double> values, std::string currency)
    : values_(std::move(values)), currency_(std::move(currency)) {
    if (values_.empty())
        throw DomainError("cash flow stream needs a horizon of at least one period");
}

std::vector<double> discount_factors(double rate, int horizon) {
    if (!(rate > -1.0) || !std::isfinite(rate))
        throw DomainError("discount rate must exceed -1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(horizon, 0)));
    for (int t = 1; t <= horizon; ++t)
        out.push_back(std::pow(1.0 + rate, -t));
    return out;
}

double npv(std::span<const double> flows, double rate) {
    const auto df = discount_factors(rate, static_cast<int>(flows.size()));
    double pv = 0.0;
    for (std::size_t t = 0; t < flows.size(); ++t)
        pv += flows[t] * df[t];
    return pv;
}

double npv(const CashflowStream& s, double rate) {
    return npv(s.values(), rate);
}

void validate(const GdpProjection& g) {
    if (!(g.gdp0 > 0.0))
        throw DomainError("base GDP must be positive");
    if (g.horizon < 1)
        throw DomainError("GDP projection horizon must be at least one year");
    if (!(g.growth > -1.0))
        throw DomainError("GDP growth must exceed -1");
    if (!(g.discount > -1.0))
        throw DomainError("discount rate must exceed -1");
}

CashflowStream projected_gdp(const GdpProjection& g) {
    validate(g);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(g.horizon));
    for (int t = 1; t <= g.horizon; ++t)
        values.push_back(g.gdp0 * std::pow(1.0 + g.growth, t));
    return CashflowStream(std::move(values), "GEL");
}

double gdp_pv(const GdpProjection& g) {
    return npv(projected_gdp(g), g.discount);
}

double implied_discount(double gdp0, double growth, int horizon, double target_pv, std::optional<RateBracket> bracket) {
    GdpProjection proj{gdp0, growth, horizon, growth};
    validate(proj);
    if (!(target_pv > 0.0))
        throw CalibrationError("target present value must be positive");

    RateBracket b = bracket.value_or(RateBracket{growth - 0.5, growth + 1.0});
    b.low = std::max(b.low, -1.0 + 1e-9);
    if (!(b.high > b.low))
        throw CalibrationError("empty discount-rate bracket");

    auto pv_at = [&](double rate) {
        proj.discount = rate;
        return gdp_pv(proj);
    };

    const double pv_low_rate = pv_at(b.low);   // largest achievable PV
    const double pv_high_rate = pv_at(b.high); // smallest achievable PV
    if (target_pv > pv_low_rate || target_pv < pv_high_rate)
        throw CalibrationError("target PV " + fmtx::compact(target_pv, 6) + " outside achievable interval [" +
                               fmtx::compact(pv_high_rate, 6) + ", " + fmtx::compact(pv_low_rate, 6) +
                               "] for discount rates in [" + fmtx::compact(b.low, 6) + ", " +
                               fmtx::compact(b.high, 6) + "]");

    double lo = b.low;
    double hi = b.high;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (pv_at(mid) > target_pv)
            lo = mid;
        else
            hi = mid;
    }
    const double rate = std::abs(pv_at(lo) - target_pv) <= std::abs(pv_at(hi) - target_pv) ? lo : hi;
    if (std::abs(pv_at(rate) - target_pv) / target_pv >= 1e-10)
        throw CalibrationError("bisection did not reach the target present value");
    return rate;
}

std::string_view to_string(CostBasis b) {
    return b == CostBasis::fixed ? "fixed" : "volume_scaled";
}

CostBasis parse_cost_basis(std::string_view s) {
    if (s == "fixed")
        return CostBasis::fixed;
    if (s == "volume_scaled")
        return CostBasis::volume_scaled;
    throw InputError("unknown cost basis '" + std::string(s) + "' (expected fixed or volume_scaled)");
}

void validate(const EvaParams& p) {
    if (!(p.tariff > 0.0))
        throw DomainError("tariff must be positive");
    if (!(p.cost_adjustment >= 0.0 && p.cost_adjustment < 1.0))
        throw DomainError("cost adjustment must lie in [0, 1)");
    if (!(p.cost0 >= 0.0))
        throw DomainError("base operating cost must be non-negative");
    if (!(p.asset_base >= 0.0))
        throw DomainError("asset base must be non-negative");
    if (!(p.discount > -1.0))
        throw DomainError("discount rate must exceed -1");
    if (p.cost_basis == CostBasis::volume_scaled && !(p.base_volume > 0.0))
        throw DomainError("volume-scaled costs need a positive base volume");
}

CashflowStream eva_stream(const EvaParams& p, std::span<const double> volumes, int horizon) {
    if (horizon < 1)
        throw DomainError("EVA horizon must be at least one period");
    if (volumes.size() != static_cast<std::size_t>(horizon))
        throw DomainError("EVA needs one volume per period: got " + std::to_string(volumes.size()) + " for horizon " +
                          std::to_string(horizon));
    // A zero tariff is allowed here so that the all-zero stream is expressible;
    // scenario runs go through validate().
    if (p.tariff != 0.0 || p.cost0 != 0.0 || p.asset_base != 0.0)
        validate(p);

    const double capital_charge = p.asset_base * p.discount;
    std::vector<double> values;
    values.reserve(volumes.size());
    for (int t = 1; t <= horizon; ++t) {
        const double v = volumes[static_cast<std::size_t>(t - 1)];
        const double income = p.tariff * v * 1e6;
        double cost = p.cost0 * std::pow(1.0 - p.cost_adjustment, t);
        if (p.cost_basis == CostBasis::volume_scaled && cost != 0.0)
            cost *= v / p.base_volume;
        values.push_back(income - cost - capital_charge);
    }
    return CashflowStream(std::move(values), "USD");
}

} // namespace freight
