#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vwm {

/// One market transaction. Price is derived, never stored: p = cost / volume.
struct Trade
{
    std::size_t index = 0;
    double timestamp = 0.0; ///< seconds
    double cost = 0.0;      ///< currency units
    double volume = 0.0;    ///< asset units
};

/// An unvalidated input row.
struct RawTrade
{
    double timestamp = 0.0;
    double cost = 0.0;
    double volume = 0.0;
};

inline double price_of(Trade const& trade) noexcept { return trade.cost / trade.volume; }

/*!
    Immutable, time-ordered sequence of trades.

    Invariants: timestamps are non-decreasing, `trades()[i].index == i`, every
    trade has finite timestamp and strictly positive finite cost and volume.
    Build one with validate_series(); the constructor re-checks the invariants
    and throws ValidationError if a caller hands it anything else.
*/
class TradeSeries
{
public:
    TradeSeries() = default;
    explicit TradeSeries(std::vector<Trade> trades);

    std::span<Trade const> trades() const noexcept { return trades_; }
    std::size_t size() const noexcept { return trades_.size(); }
    bool empty() const noexcept { return trades_.empty(); }
    Trade const& operator[](std::size_t i) const { return trades_[i]; }

    /// Copy of the given contiguous run, re-indexed from 0.
    TradeSeries slice(std::size_t first, std::size_t count) const;

private:
    std::vector<Trade> trades_;
};

/// Stable-sorts rows by timestamp, assigns indices, rejects invalid rows.
TradeSeries validate_series(std::span<RawTrade const> rows);

/// Averaging window [center - width/2, center + width/2], both ends inclusive.
struct WindowSpec
{
    double center = 0.0;
    double width = 1.0;

    double lower() const noexcept { return center - 0.5 * width; }
    double upper() const noexcept { return center + 0.5 * width; }
};

/*!
    Trades of a parent series that fall inside a window.

    Because the parent is time-ordered the members are a contiguous index run
    [first, first + count). The view borrows the parent; it must not outlive it.
*/
class WindowView
{
public:
    WindowView(TradeSeries const& series, WindowSpec spec, std::size_t first, std::size_t count) noexcept
        : series_(&series), spec_(spec), first_(first), count_(count)
    {
    }

    WindowSpec spec() const noexcept { return spec_; }
    std::size_t first() const noexcept { return first_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }
    std::span<Trade const> trades() const noexcept { return series_->trades().subspan(first_, count_); }
    TradeSeries const& series() const noexcept { return *series_; }

    std::vector<std::size_t> member_indices() const;

private:
    TradeSeries const* series_;
    WindowSpec spec_;
    std::size_t first_;
    std::size_t count_;
};

/// Throws std::invalid_argument unless width is finite and positive.
WindowView select_window(TradeSeries const& series, WindowSpec spec);

/// N(t): the number of trades in the window.
inline std::size_t trade_count(WindowView const& view) noexcept { return view.size(); }

} // namespace vwm
