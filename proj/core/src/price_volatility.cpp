#include "vwm/price_volatility.hpp"

#include "vwm/errors.hpp"
#include "vwm/price_moments.hpp"
#include "vwm/summation.hpp"

#include <algorithm>
#include <cmath>

namespace vwm {

double uncentered_dispersion(double mean, double sq_mean) noexcept
{
    double const d = sq_mean - mean * mean;
    if (d < 0.0 && d > -kDispersionClampScale * std::max(sq_mean, 1.0))
        return 0.0;
    return d;
}

TradeDispersionStats dispersion_stats(WindowView const& view)
{
    if (view.empty())
        throw EmptyWindow();

    CompensatedSum c1, c2, v1, v2;
    for (auto const& trade : view.trades()) {
        c1 += trade.cost;
        c2 += trade.cost * trade.cost;
        v1 += trade.volume;
        v2 += trade.volume * trade.volume;
    }
    double const n = static_cast<double>(view.size());

    TradeDispersionStats s;
    s.n_trades = view.size();
    s.cost_mean = c1.value() / n;
    s.cost_sq_mean = c2.value() / n;
    s.volume_mean = v1.value() / n;
    s.volume_sq_mean = v2.value() / n;
    s.sigma_c2 = uncentered_dispersion(s.cost_mean, s.cost_sq_mean);
    s.sigma_v2 = uncentered_dispersion(s.volume_mean, s.volume_sq_mean);
    s.phi_c2 = s.cost_sq_mean + s.cost_mean * s.cost_mean;
    s.phi_v2 = s.volume_sq_mean + s.volume_mean * s.volume_mean;
    return s;
}

double price_volatility_direct(WindowView const& view)
{
    double const p1 = price_moment(view, 1);
    double const p2 = price_moment(view, 2);
    return p2 - p1 * p1;
}

double price_volatility_closed(TradeDispersionStats const& stats)
{
    // phi^4 - sigma^4 factored as (phi^2 - sigma^2)(phi^2 + sigma^2)
    double const denominator = (stats.phi_v2 - stats.sigma_v2) * (stats.phi_v2 + stats.sigma_v2);
    if (!(denominator > 0.0))
        throw DegenerateDenominator("phi_V^4 - sigma_V^4 must be positive");
    return 2.0 * (stats.phi_v2 * stats.sigma_c2 - stats.phi_c2 * stats.sigma_v2) / denominator;
}

PriceVolatilityReport price_volatility_report(WindowView const& view)
{
    PriceVolatilityReport r;
    r.window = view.spec();
    r.n_trades = view.size();
    r.stats = dispersion_stats(view);
    r.sigma_p2_direct = price_volatility_direct(view);
    r.sigma_p2_closed = price_volatility_closed(r.stats);
    r.negative_flag = r.sigma_p2_direct < 0.0;
    return r;
}

double scaled_deviation(double reference, double other) noexcept
{
    return std::fabs(reference - other) / std::max(1.0, std::fabs(reference));
}

} // namespace vwm
