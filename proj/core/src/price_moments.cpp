#include "vwm/price_moments.hpp"

#include "vwm/errors.hpp"
#include "vwm/summation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vwm {

void check_degree(int degree, int cap)
{
    if (cap < 1 || cap > kMaxDegreeCap)
        throw DegreeOutOfRange("degree cap " + std::to_string(cap) + " outside [1, " +
                               std::to_string(kMaxDegreeCap) + "]");
    if (degree < 1 || degree > cap)
        throw DegreeOutOfRange("degree " + std::to_string(degree) + " outside [1, " + std::to_string(cap) + "]");
}

std::optional<MomentEntry> PriceMoments::entry(int degree) const
{
    for (auto const& e : entries)
        if (e.degree == degree)
            return e;
    return std::nullopt;
}

DegreeAggregate aggregate_degree(WindowView const& view, int degree, int cap)
{
    check_degree(degree, cap);
    if (view.empty())
        throw EmptyWindow();

    CompensatedSum cost;
    CompensatedSum volume;
    for (auto const& trade : view.trades()) {
        cost += ipow(trade.cost, degree);
        volume += ipow(trade.volume, degree);
    }
    return {degree, cost.value(), volume.value()};
}

double price_moment(WindowView const& view, int degree, int cap)
{
    auto const agg = aggregate_degree(view, degree, cap);
    return agg.cost_sum / agg.volume_sum;
}

double vwap(WindowView const& view) { return price_moment(view, 1); }

double simple_average_price(WindowView const& view)
{
    if (view.empty())
        throw EmptyWindow();
    CompensatedSum sum;
    for (auto const& trade : view.trades())
        sum += price_of(trade);
    return sum.value() / static_cast<double>(view.size());
}

PriceMoments window_moments(WindowView const& view, std::span<int const> degrees, int cap)
{
    PriceMoments out;
    out.window = view.spec();
    out.trade_count = view.size();
    for (int n : degrees)
        check_degree(n, cap);
    if (view.empty())
        return out;
    out.entries.reserve(degrees.size());
    for (int n : degrees) {
        auto const agg = aggregate_degree(view, n, cap);
        out.entries.push_back({n, agg.cost_sum, agg.volume_sum, agg.cost_sum / agg.volume_sum});
    }
    return out;
}

std::vector<double> rolling_centers(TradeSeries const& series, double width, double stride)
{
    if (!std::isfinite(width) || !(width > 0.0))
        throw std::invalid_argument("window width must be positive");
    if (!std::isfinite(stride) || !(stride > 0.0))
        throw std::invalid_argument("stride must be positive");

    std::vector<double> centers;
    if (series.empty())
        return centers;
    double const origin = series.trades().front().timestamp + 0.5 * width;
    double const last = series.trades().back().timestamp;
    for (std::size_t k = 0;; ++k) {
        double const center = origin + static_cast<double>(k) * stride;
        if (WindowSpec{center, width}.lower() > last)
            break;
        centers.push_back(center);
    }
    return centers;
}

std::vector<PriceMoments> rolling_moments(TradeSeries const& series, double width, double stride,
                                          std::span<int const> degrees, int cap)
{
    std::vector<PriceMoments> out;
    for (double center : rolling_centers(series, width, stride))
        out.push_back(window_moments(select_window(series, {center, width}), degrees, cap));
    return out;
}

} // namespace vwm
