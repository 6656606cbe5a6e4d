#pragma once

#include "vwm/trade.hpp"

#include <optional>
#include <span>
#include <vector>

namespace vwm {

/// Default highest moment degree; callers may raise it up to kMaxDegreeCap.
inline constexpr int kDefaultDegreeCap = 8;
/// Hard limit: C^n leaves double range for ordinary prices well before n = 17.
inline constexpr int kMaxDegreeCap = 16;

/// Throws DegreeOutOfRange unless 1 <= degree <= cap <= kMaxDegreeCap.
void check_degree(int degree, int cap = kDefaultDegreeCap);

/// C(n;t) = sum C_i^n and V(n;t) = sum V_i^n over one window.
struct DegreeAggregate
{
    int degree = 1;
    double cost_sum = 0.0;
    double volume_sum = 0.0;
};

/// One degree of a PriceMoments record; moment = cost_sum / volume_sum.
struct MomentEntry
{
    int degree = 1;
    double cost_sum = 0.0;
    double volume_sum = 0.0;
    double moment = 0.0;
};

/// Per-window aggregates. `entries` is empty when trade_count == 0.
struct PriceMoments
{
    WindowSpec window;
    std::size_t trade_count = 0;
    std::vector<MomentEntry> entries;

    bool empty() const noexcept { return trade_count == 0; }
    std::optional<MomentEntry> entry(int degree) const;
};

/// Compensated sums of C_i^n and V_i^n in ascending index order.
/// Throws EmptyWindow, DegreeOutOfRange.
DegreeAggregate aggregate_degree(WindowView const& view, int degree, int cap = kDefaultDegreeCap);

/// p(n;t) = C(n;t) / V(n;t).
double price_moment(WindowView const& view, int degree, int cap = kDefaultDegreeCap);

/// Volume weighted average price. Identical to price_moment(view, 1).
double vwap(WindowView const& view);

/// Unweighted mean of the per-trade prices C_i / V_i.
double simple_average_price(WindowView const& view);

/// All requested degrees for one window.
PriceMoments window_moments(WindowView const& view, std::span<int const> degrees, int cap = kDefaultDegreeCap);

/*!
    Window centers used by every rolling computation.

    The first center sits at the first trade plus width/2 and subsequent
    centers advance by `stride`; generation stops once a window would start
    after the last trade. Centers are computed as origin + k * stride, never
    by repeated addition. An empty series yields no centers.
*/
std::vector<double> rolling_centers(TradeSeries const& series, double width, double stride);

/// PriceMoments at every rolling center; empty windows yield records with no entries.
std::vector<PriceMoments> rolling_moments(TradeSeries const& series, double width, double stride,
                                          std::span<int const> degrees, int cap = kDefaultDegreeCap);

} // namespace vwm
