#pragma once

#include "vwm/price_moments.hpp"
#include "vwm/returns.hpp"
#include "vwm/trade.hpp"

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace vwm {

/// A cost-like value `a` and a volume-like value `b` observed at `timestamp`.
struct PairPoint
{
    double timestamp = 0.0;
    double a = 1.0;
    double b = 1.0;
};

/*!
    Time-ordered (timestamp, a, b) samples with a, b > 0.

    Trades give (C_i, V_i); returns records give (q_C, q_V). Multi-time moments
    treat both identically.
*/
class PairSeries
{
public:
    PairSeries() = default;
    /// Throws ValidationError on non-positive values or decreasing timestamps.
    explicit PairSeries(std::vector<PairPoint> points);

    static PairSeries from_trades(TradeSeries const& series);
    static PairSeries from_returns(std::span<ReturnsRecord const> records);

    std::span<PairPoint const> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

    /// Points with timestamp in the inclusive window.
    std::span<PairPoint const> window(WindowSpec spec) const;

private:
    std::vector<PairPoint> points_;
};

struct MultiTimeMoment
{
    std::vector<double> times;
    double width = 0.0;
    std::size_t combo_count = 0; ///< N(n, width; t_1..t_n)
    double a_sum = 0.0;
    double b_sum = 0.0;
    double moment = 0.0; ///< a_sum / b_sum
};

/*!
    n-th degree multi-time moment, n = times.size().

    Equal times share one window and contribute the diagonal sum of a_i^k over
    it, k being the multiplicity. Distinct times must have pairwise disjoint
    windows (|t_j - t_k| > width); each contributes a factor and the factors
    multiply, i.e. the sum runs over the Cartesian product of member sets.
    All-equal times reduce to the single-window moment; all-distinct times to
    the product of per-window sums.

    Throws UnsupportedWindowOverlap for distinct times whose windows touch or
    overlap, EmptyWindow if any window is empty, DegreeOutOfRange for n outside
    [1, cap].
*/
MultiTimeMoment multi_time_moment(PairSeries const& series, std::span<double const> times, double width,
                                  int cap = kDefaultDegreeCap);

/// Uniform grid start + k * step, k in [0, count).
struct TimeGrid
{
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 1;

    double at(std::size_t k) const noexcept { return start + static_cast<double>(k) * step; }
};

/// Returns p(n; times) for a tuple of grid times.
using MomentFunction = std::function<double(std::span<double const>)>;

struct CharFunResult
{
    TimeGrid grid;
    int n_max = 1;
    std::complex<double> value{1.0, 0.0};
    /// terms[n] is the order-n contribution; terms[0] = 1.
    std::vector<std::complex<double>> terms;
    /// partial_sums[n] = sum of terms[0..n]; partial_sums.back() == value.
    std::vector<std::complex<double>> partial_sums;
};

/*!
    Truncated characteristic functional on a uniform grid:

        1 + sum_{n=1}^{n_max} (i^n / n!) sum_{g_1..g_n} p(n; t_g1..t_gn) x_g1 ... x_gn step^n

    Left-point Riemann rule. The n-fold sum is evaluated over multisets of grid
    indices weighted by n! / prod(multiplicity!), since p(n; ...) is symmetric
    in its arguments. Throws TruncationOrderOutOfRange unless 1 <= n_max <= cap.
*/
CharFunResult charfun_truncated(MomentFunction const& moment, TimeGrid grid, std::span<double const> x, int n_max,
                                int cap = kDefaultDegreeCap);

/// Overload over a PairSeries. Checks up front that distinct grid points have
/// disjoint windows (step > width when count > 1); throws UnsupportedWindowOverlap otherwise.
CharFunResult charfun_truncated(PairSeries const& series, double width, TimeGrid grid, std::span<double const> x,
                                int n_max, int cap = kDefaultDegreeCap);

/*!
    Centered difference [F(eps d_t) - F(-eps d_t)] / (2 eps step) on the
    one-point grid {t}. Approximates i p(1; t); the error is O(eps^2) once
    n_max >= 3 and vanishes for n_max < 3.
*/
std::complex<double> charfun_derivative_check(PairSeries const& series, double width, double t, double eps,
                                              double step, int n_max = 4, int cap = kDefaultDegreeCap);

} // namespace vwm
