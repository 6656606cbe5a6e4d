#pragma once

#include "vwm/trade.hpp"

namespace vwm {

/*!
    Per-trade means and dispersions of cost and volume in one window.

    cost_mean = (1/N) sum C_i, cost_sq_mean = (1/N) sum C_i^2, likewise for
    volume. Dispersions use the uncentered identity sigma^2 = mean(x^2) -
    mean(x)^2; residue in (-1e-12 * max(mean(x^2), 1), 0) is clamped to 0.
    Companions phi^2 = mean(x^2) + mean(x)^2.
*/
struct TradeDispersionStats
{
    std::size_t n_trades = 0;
    double cost_mean = 0.0;
    double cost_sq_mean = 0.0;
    double volume_mean = 0.0;
    double volume_sq_mean = 0.0;
    double sigma_c2 = 0.0;
    double sigma_v2 = 0.0;
    double phi_c2 = 0.0;
    double phi_v2 = 0.0;
};

struct PriceVolatilityReport
{
    WindowSpec window;
    std::size_t n_trades = 0;
    double sigma_p2_direct = 0.0;
    double sigma_p2_closed = 0.0;
    TradeDispersionStats stats;
    bool negative_flag = false;
};

/// Relative floor applied when clamping rounding residue out of sigma^2.
inline constexpr double kDispersionClampScale = 1e-12;

/// sigma^2 from uncentered means, clamped per kDispersionClampScale.
double uncentered_dispersion(double mean, double sq_mean) noexcept;

/// Throws EmptyWindow.
TradeDispersionStats dispersion_stats(WindowView const& view);

/// p(2;t) - p(1;t)^2. Signed: the V- and V^2-weighted moments can give a negative value.
double price_volatility_direct(WindowView const& view);

/// 2 (phi_V^2 sigma_C^2 - phi_C^2 sigma_V^2) / (phi_V^4 - sigma_V^4).
/// Throws DegenerateDenominator if the denominator is not positive.
double price_volatility_closed(TradeDispersionStats const& stats);

/// Both forms plus the stats they came from. Throws EmptyWindow.
PriceVolatilityReport price_volatility_report(WindowView const& view);

/// max(|a - b| / max(1, |a|)); the identity checks pass when this is <= 1e-10.
double scaled_deviation(double reference, double other) noexcept;

} // namespace vwm
