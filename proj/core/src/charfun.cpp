#include "vwm/charfun.hpp"

#include "vwm/errors.hpp"
#include "vwm/summation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vwm {

PairSeries::PairSeries(std::vector<PairPoint> points) : points_(std::move(points))
{
    for (std::size_t i = 0; i < points_.size(); ++i) {
        auto const& p = points_[i];
        if (!std::isfinite(p.timestamp))
            throw ValidationError(i, "timestamp must be finite");
        if (!(p.a > 0.0) || !std::isfinite(p.a) || !(p.b > 0.0) || !std::isfinite(p.b))
            throw ValidationError(i, "pair values must be positive and finite");
        if (i > 0 && p.timestamp < points_[i - 1].timestamp)
            throw ValidationError(i, "timestamps must be non-decreasing");
    }
}

PairSeries PairSeries::from_trades(TradeSeries const& series)
{
    std::vector<PairPoint> pts;
    pts.reserve(series.size());
    for (auto const& t : series.trades())
        pts.push_back({t.timestamp, t.cost, t.volume});
    return PairSeries(std::move(pts));
}

PairSeries PairSeries::from_returns(std::span<ReturnsRecord const> records)
{
    std::vector<PairPoint> pts;
    pts.reserve(records.size());
    for (auto const& r : records)
        pts.push_back({r.timestamp, r.q_c, r.q_v});
    return PairSeries(std::move(pts));
}

std::span<PairPoint const> PairSeries::window(WindowSpec spec) const
{
    double const lo = spec.lower();
    double const hi = spec.upper();
    auto const begin = std::lower_bound(points_.begin(), points_.end(), lo,
                                        [](PairPoint const& p, double v) { return p.timestamp < v; });
    auto const end = std::upper_bound(begin, points_.end(), hi,
                                      [](double v, PairPoint const& p) { return v < p.timestamp; });
    return std::span<PairPoint const>(points_).subspan(static_cast<std::size_t>(begin - points_.begin()),
                                                       static_cast<std::size_t>(end - begin));
}

MultiTimeMoment multi_time_moment(PairSeries const& series, std::span<double const> times, double width, int cap)
{
    check_degree(static_cast<int>(times.size()), cap);
    if (!std::isfinite(width) || !(width > 0.0))
        throw std::invalid_argument("window width must be positive");

    std::vector<double> sorted(times.begin(), times.end());
    std::sort(sorted.begin(), sorted.end());

    MultiTimeMoment out;
    out.times.assign(times.begin(), times.end());
    out.width = width;
    out.combo_count = 1;
    out.a_sum = 1.0;
    out.b_sum = 1.0;

    for (std::size_t j = 0; j < sorted.size();) {
        std::size_t k = j;
        while (k < sorted.size() && sorted[k] == sorted[j])
            ++k;
        if (k < sorted.size() && !(sorted[k] - sorted[j] > width))
            throw UnsupportedWindowOverlap("windows at t=" + std::to_string(sorted[j]) + " and t=" +
                                           std::to_string(sorted[k]) + " overlap for width " +
                                           std::to_string(width) +
                                           "; only identical or disjoint window centers are defined");

        auto const members = series.window({sorted[j], width});
        if (members.empty())
            throw EmptyWindow("no samples in window at t=" + std::to_string(sorted[j]));
        int const multiplicity = static_cast<int>(k - j);
        CompensatedSum a;
        CompensatedSum b;
        for (auto const& p : members) {
            a += ipow(p.a, multiplicity);
            b += ipow(p.b, multiplicity);
        }
        out.a_sum *= a.value();
        out.b_sum *= b.value();
        out.combo_count *= members.size();
        j = k;
    }
    out.moment = out.a_sum / out.b_sum;
    return out;
}

namespace {

std::complex<double> i_power(int n, double magnitude) noexcept
{
    switch (n % 4) {
    case 0: return {magnitude, 0.0};
    case 1: return {0.0, magnitude};
    case 2: return {-magnitude, 0.0};
    default: return {0.0, -magnitude};
    }
}

// Visits every nondecreasing index tuple of length `order` over [0, count).
class MultisetSum
{
public:
    MultisetSum(MomentFunction const& moment, TimeGrid grid, std::span<double const> x, int order)
        : moment_(moment), grid_(grid), x_(x), indices_(static_cast<std::size_t>(order)),
          times_(static_cast<std::size_t>(order))
    {
    }

    double run()
    {
        recurse(0, 0);
        return sum_.value();
    }

private:
    void recurse(std::size_t depth, std::size_t lowest)
    {
        if (depth == indices_.size()) {
            accumulate();
            return;
        }
        for (std::size_t g = lowest; g < grid_.count; ++g) {
            indices_[depth] = g;
            recurse(depth + 1, g);
        }
    }

    void accumulate()
    {
        // weight 1 / prod(multiplicity!) ; the n! lives in the caller's i^n / n!
        double inv_multiplicity = 1.0;
        double x_product = 1.0;
        std::size_t run = 0;
        for (std::size_t d = 0; d < indices_.size(); ++d) {
            run = (d > 0 && indices_[d] == indices_[d - 1]) ? run + 1 : 1;
            inv_multiplicity /= static_cast<double>(run);
            x_product *= x_[indices_[d]];
            times_[d] = grid_.at(indices_[d]);
        }
        sum_ += inv_multiplicity * moment_(times_) * x_product;
    }

    MomentFunction const& moment_;
    TimeGrid grid_;
    std::span<double const> x_;
    std::vector<std::size_t> indices_;
    std::vector<double> times_;
    CompensatedSum sum_;
};

} // namespace

CharFunResult charfun_truncated(MomentFunction const& moment, TimeGrid grid, std::span<double const> x, int n_max,
                                int cap)
{
    if (cap < 1 || cap > kMaxDegreeCap || n_max < 1 || n_max > cap)
        throw TruncationOrderOutOfRange("truncation order " + std::to_string(n_max) + " outside [1, " +
                                        std::to_string(std::min(std::max(cap, 1), kMaxDegreeCap)) + "]");
    if (grid.count == 0)
        throw std::invalid_argument("grid must have at least one point");
    if (!std::isfinite(grid.step) || !(grid.step > 0.0))
        throw std::invalid_argument("grid step must be positive");
    if (x.size() != grid.count)
        throw std::invalid_argument("test function has " + std::to_string(x.size()) + " values for " +
                                    std::to_string(grid.count) + " grid points");

    CharFunResult out;
    out.grid = grid;
    out.n_max = n_max;
    out.terms.push_back({1.0, 0.0});
    out.partial_sums.push_back({1.0, 0.0});

    double step_power = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        step_power *= grid.step;
        // sum over ordered tuples = n! * (multiset sum); cancels the 1/n!
        double const s = MultisetSum(moment, grid, x, n).run();
        auto const term = i_power(n, s * step_power);
        out.terms.push_back(term);
        out.partial_sums.push_back(out.partial_sums.back() + term);
    }
    out.value = out.partial_sums.back();
    return out;
}

CharFunResult charfun_truncated(PairSeries const& series, double width, TimeGrid grid, std::span<double const> x,
                                int n_max, int cap)
{
    if (grid.count > 1 && !(grid.step > width))
        throw UnsupportedWindowOverlap("grid step " + std::to_string(grid.step) + " must exceed window width " +
                                       std::to_string(width) + " so distinct grid windows are disjoint");
    MomentFunction moment = [&series, width, cap](std::span<double const> times) {
        return multi_time_moment(series, times, width, cap).moment;
    };
    return charfun_truncated(moment, grid, x, n_max, cap);
}

std::complex<double> charfun_derivative_check(PairSeries const& series, double width, double t, double eps,
                                              double step, int n_max, int cap)
{
    if (!(eps > 0.0))
        throw std::invalid_argument("eps must be positive");
    TimeGrid const grid{t, step, 1};
    double const plus[] = {eps};
    double const minus[] = {-eps};
    auto const f_plus = charfun_truncated(series, width, grid, plus, n_max, cap).value;
    auto const f_minus = charfun_truncated(series, width, grid, minus, n_max, cap).value;
    return (f_plus - f_minus) / (2.0 * eps * step);
}

} // namespace vwm
