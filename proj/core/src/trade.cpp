#include "vwm/trade.hpp"

#include "vwm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vwm {

namespace {

void check_row(std::size_t row, double timestamp, double cost, double volume)
{
    if (!std::isfinite(timestamp))
        throw ValidationError(row, "timestamp must be finite");
    if (!std::isfinite(cost))
        throw ValidationError(row, "cost must be finite");
    if (!std::isfinite(volume))
        throw ValidationError(row, "volume must be finite");
    if (!(cost > 0.0))
        throw ValidationError(row, "cost must be positive");
    if (!(volume > 0.0))
        throw ValidationError(row, "volume must be positive");
}

} // namespace

TradeSeries::TradeSeries(std::vector<Trade> trades) : trades_(std::move(trades))
{
    for (std::size_t i = 0; i < trades_.size(); ++i) {
        auto const& t = trades_[i];
        check_row(i, t.timestamp, t.cost, t.volume);
        if (t.index != i)
            throw ValidationError(i, "trade index must equal its position");
        if (i > 0 && t.timestamp < trades_[i - 1].timestamp)
            throw ValidationError(i, "timestamps must be non-decreasing");
    }
}

TradeSeries TradeSeries::slice(std::size_t first, std::size_t count) const
{
    if (first > trades_.size() || count > trades_.size() - first)
        throw std::out_of_range("TradeSeries::slice: range exceeds series");
    std::vector<Trade> out(trades_.begin() + static_cast<std::ptrdiff_t>(first),
                           trades_.begin() + static_cast<std::ptrdiff_t>(first + count));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].index = i;
    return TradeSeries(std::move(out));
}

TradeSeries validate_series(std::span<RawTrade const> rows)
{
    for (std::size_t row = 0; row < rows.size(); ++row)
        check_row(row, rows[row].timestamp, rows[row].cost, rows[row].volume);

    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rows[a].timestamp < rows[b].timestamp;
    });

    std::vector<Trade> trades;
    trades.reserve(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto const& r = rows[order[i]];
        trades.push_back(Trade{i, r.timestamp, r.cost, r.volume});
    }
    return TradeSeries(std::move(trades));
}

std::vector<std::size_t> WindowView::member_indices() const
{
    std::vector<std::size_t> out(count_);
    std::iota(out.begin(), out.end(), first_);
    return out;
}

WindowView select_window(TradeSeries const& series, WindowSpec spec)
{
    if (!std::isfinite(spec.center))
        throw std::invalid_argument("window center must be finite");
    if (!std::isfinite(spec.width) || !(spec.width > 0.0))
        throw std::invalid_argument("window width must be positive");

    auto const trades = series.trades();
    double const lo = spec.lower();
    double const hi = spec.upper();
    auto const begin = std::lower_bound(trades.begin(), trades.end(), lo,
                                        [](Trade const& t, double v) { return t.timestamp < v; });
    auto const end = std::upper_bound(begin, trades.end(), hi,
                                      [](double v, Trade const& t) { return v < t.timestamp; });
    return WindowView(series, spec, static_cast<std::size_t>(begin - trades.begin()),
                      static_cast<std::size_t>(end - begin));
}

} // namespace vwm
