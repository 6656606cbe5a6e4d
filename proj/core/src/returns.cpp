#include "vwm/returns.hpp"

#include "vwm/errors.hpp"
#include "vwm/price_volatility.hpp"
#include "vwm/summation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vwm {

std::vector<ReturnsRecord> build_returns(TradeSeries const& series, int lag)
{
    if (lag < 1)
        throw std::invalid_argument("lag must be >= 1");
    auto const m = static_cast<std::size_t>(lag);
    if (m >= series.size())
        throw LagTooLarge("lag " + std::to_string(lag) + " needs more than " + std::to_string(series.size()) +
                          " trades");

    auto const trades = series.trades();
    std::vector<ReturnsRecord> out;
    out.reserve(trades.size() - m);
    for (std::size_t i = m; i < trades.size(); ++i) {
        auto const& now = trades[i];
        auto const& then = trades[i - m];
        ReturnsRecord rec;
        rec.index = i;
        rec.lag = lag;
        rec.timestamp = now.timestamp;
        rec.q_p = price_of(now) / price_of(then);
        rec.r = rec.q_p - 1.0;
        rec.log_r = std::log(rec.q_p);
        rec.q_c = now.cost / then.cost;
        rec.q_v = now.volume / then.volume;
        out.push_back(rec);
    }
    return out;
}

std::span<ReturnsRecord const> select_records(std::span<ReturnsRecord const> records, WindowSpec spec)
{
    if (!std::isfinite(spec.width) || !(spec.width > 0.0))
        throw std::invalid_argument("window width must be positive");
    double const lo = spec.lower();
    double const hi = spec.upper();
    auto const begin = std::lower_bound(records.begin(), records.end(), lo,
                                        [](ReturnsRecord const& r, double v) { return r.timestamp < v; });
    auto const end = std::upper_bound(begin, records.end(), hi,
                                      [](double v, ReturnsRecord const& r) { return v < r.timestamp; });
    return records.subspan(static_cast<std::size_t>(begin - records.begin()), static_cast<std::size_t>(end - begin));
}

DegreeAggregate returns_aggregate(std::span<ReturnsRecord const> records, int degree, int cap)
{
    check_degree(degree, cap);
    if (records.empty())
        throw EmptyWindow("window contains no returns records");
    CompensatedSum qc;
    CompensatedSum qv;
    for (auto const& rec : records) {
        qc += ipow(rec.q_c, degree);
        qv += ipow(rec.q_v, degree);
    }
    return {degree, qc.value(), qv.value()};
}

double returns_moment(std::span<ReturnsRecord const> records, int degree, int cap)
{
    auto const agg = returns_aggregate(records, degree, cap);
    return agg.cost_sum / agg.volume_sum;
}

double returns_volatility_direct(std::span<ReturnsRecord const> records)
{
    double const q1 = returns_moment(records, 1);
    double const q2 = returns_moment(records, 2);
    return q2 - q1 * q1;
}

SimpleReturnTerms simple_return_terms(std::span<ReturnsRecord const> records)
{
    if (records.empty())
        throw EmptyWindow("window contains no returns records");
    CompensatedSum qv1, qv2, rqv, rqv2, r2qv2;
    for (auto const& rec : records) {
        double const qv_sq = rec.q_v * rec.q_v;
        qv1 += rec.q_v;
        qv2 += qv_sq;
        rqv += rec.r * rec.q_v;
        rqv2 += rec.r * qv_sq;
        r2qv2 += rec.r * rec.r * qv_sq;
    }
    return {rqv.value() / qv1.value(), rqv2.value() / qv2.value(), r2qv2.value() / qv2.value()};
}

double returns_volatility_rform(SimpleReturnTerms const& t) noexcept
{
    return t.r22 - t.r11 * t.r11 + 2.0 * (t.r21 - t.r11);
}

double returns_volatility_rform(std::span<ReturnsRecord const> records)
{
    return returns_volatility_rform(simple_return_terms(records));
}

ReturnsDispersionStats returns_dispersion_stats(std::span<ReturnsRecord const> records)
{
    if (records.empty())
        throw EmptyWindow("window contains no returns records");
    CompensatedSum c1, c2, v1, v2;
    for (auto const& rec : records) {
        c1 += rec.q_c;
        c2 += rec.q_c * rec.q_c;
        v1 += rec.q_v;
        v2 += rec.q_v * rec.q_v;
    }
    double const n = static_cast<double>(records.size());

    ReturnsDispersionStats s;
    s.n_records = records.size();
    s.qc_mean = c1.value() / n;
    s.qc_sq_mean = c2.value() / n;
    s.qv_mean = v1.value() / n;
    s.qv_sq_mean = v2.value() / n;
    s.omega_c2 = uncentered_dispersion(s.qc_mean, s.qc_sq_mean);
    s.omega_v2 = uncentered_dispersion(s.qv_mean, s.qv_sq_mean);
    s.phi_c2 = s.qc_sq_mean + s.qc_mean * s.qc_mean;
    s.phi_v2 = s.qv_sq_mean + s.qv_mean * s.qv_mean;
    return s;
}

double returns_volatility_closed(ReturnsDispersionStats const& s)
{
    double const denominator = (s.phi_v2 - s.omega_v2) * (s.phi_v2 + s.omega_v2);
    if (!(denominator > 0.0))
        throw DegenerateDenominator("Phi_v^4 - Omega_v^4 must be positive");
    return 2.0 * (s.phi_v2 * s.omega_c2 - s.phi_c2 * s.omega_v2) / denominator;
}

ReturnsMoments returns_moments(std::span<ReturnsRecord const> records, WindowSpec window, int lag,
                               std::span<int const> degrees, int cap)
{
    for (int n : degrees)
        check_degree(n, cap);
    ReturnsMoments out;
    out.window = window;
    out.lag = lag;
    out.n_records = records.size();
    if (records.empty())
        return out;
    for (int n : degrees) {
        auto const agg = returns_aggregate(records, n, cap);
        out.entries.push_back({n, agg.cost_sum, agg.volume_sum, agg.cost_sum / agg.volume_sum});
    }
    out.terms = simple_return_terms(records);
    return out;
}

ReturnsVolatilityReport returns_volatility_report(std::span<ReturnsRecord const> records, WindowSpec window,
                                                  int lag)
{
    ReturnsVolatilityReport r;
    r.window = window;
    r.lag = lag;
    r.n_records = records.size();
    r.mean_return = returns_moment(records, 1) - 1.0;
    r.sigma_q2_direct = returns_volatility_direct(records);
    r.terms = simple_return_terms(records);
    r.sigma_q2_rform = returns_volatility_rform(r.terms);
    r.stats = returns_dispersion_stats(records);
    r.sigma_q2_closed = returns_volatility_closed(r.stats);
    r.negative_flag = r.sigma_q2_direct < 0.0;
    return r;
}

} // namespace vwm
