#pragma once

#include "vwm/price_moments.hpp"
#include "vwm/trade.hpp"

#include <span>
#include <vector>

namespace vwm {

/*!
    Lag-m ratios between trade `index` and trade `index - lag`.

    Pairing is by series index, not by clock offset. q_c = q_p * q_v holds to
    rounding; r = q_p - 1 and log_r = ln q_p.
*/
struct ReturnsRecord
{
    std::size_t index = 0;
    int lag = 1;
    double timestamp = 0.0; ///< timestamp of the later trade
    double q_p = 1.0;
    double r = 0.0;
    double log_r = 0.0;
    double q_c = 1.0;
    double q_v = 1.0;
};

/// One record per index i >= lag. Throws LagTooLarge if lag >= series.size(),
/// std::invalid_argument if lag < 1.
std::vector<ReturnsRecord> build_returns(TradeSeries const& series, int lag);

inline double log_return(ReturnsRecord const& record) noexcept { return record.log_r; }

/// Records whose later-trade timestamp lies in the window (ends inclusive).
/// `records` must be ordered by timestamp, as build_returns produces them.
std::span<ReturnsRecord const> select_records(std::span<ReturnsRecord const> records, WindowSpec spec);

/// Q_C(n) = sum q_c^n, Q_V(n) = sum q_v^n. Throws EmptyWindow, DegreeOutOfRange.
DegreeAggregate returns_aggregate(std::span<ReturnsRecord const> records, int degree, int cap = kDefaultDegreeCap);

/// q_p(n) = Q_C(n) / Q_V(n). Degree 1 is the volume-returns weighted average,
/// degree 2 the squared-volume-returns weighted average.
double returns_moment(std::span<ReturnsRecord const> records, int degree, int cap = kDefaultDegreeCap);

/// q_p(2) - q_p(1)^2.
double returns_volatility_direct(std::span<ReturnsRecord const> records);

/// Weighted simple-return averages.
struct SimpleReturnTerms
{
    double r11 = 0.0; ///< sum r q_v / Q_V(1)
    double r21 = 0.0; ///< sum r q_v^2 / Q_V(2)
    double r22 = 0.0; ///< sum r^2 q_v^2 / Q_V(2)
};

SimpleReturnTerms simple_return_terms(std::span<ReturnsRecord const> records);

/// r22 - r11^2 + 2 (r21 - r11).
double returns_volatility_rform(SimpleReturnTerms const& terms) noexcept;
double returns_volatility_rform(std::span<ReturnsRecord const> records);

/// Per-record means (sum / N) of q_c, q_c^2, q_v, q_v^2 and the derived
/// Omega^2 = mean(x^2) - mean(x)^2, Phi^2 = mean(x^2) + mean(x)^2.
struct ReturnsDispersionStats
{
    std::size_t n_records = 0;
    double qc_mean = 0.0;
    double qc_sq_mean = 0.0;
    double qv_mean = 0.0;
    double qv_sq_mean = 0.0;
    double omega_c2 = 0.0;
    double omega_v2 = 0.0;
    double phi_c2 = 0.0;
    double phi_v2 = 0.0;
};

ReturnsDispersionStats returns_dispersion_stats(std::span<ReturnsRecord const> records);

/// 2 (Phi_v^2 Omega_c^2 - Phi_c^2 Omega_v^2) / (Phi_v^4 - Omega_v^4). Throws DegenerateDenominator.
double returns_volatility_closed(ReturnsDispersionStats const& stats);

struct ReturnsMoments
{
    WindowSpec window;
    int lag = 1;
    std::size_t n_records = 0;
    std::vector<MomentEntry> entries; ///< cost_sum = Q_C(n), volume_sum = Q_V(n), moment = q_p(n)
    SimpleReturnTerms terms;
};

ReturnsMoments returns_moments(std::span<ReturnsRecord const> records, WindowSpec window, int lag,
                               std::span<int const> degrees, int cap = kDefaultDegreeCap);

struct ReturnsVolatilityReport
{
    WindowSpec window;
    int lag = 1;
    std::size_t n_records = 0;
    double mean_return = 0.0; ///< q_p(1) - 1
    double sigma_q2_direct = 0.0;
    double sigma_q2_rform = 0.0;
    double sigma_q2_closed = 0.0;
    SimpleReturnTerms terms;
    ReturnsDispersionStats stats;
    bool negative_flag = false;
};

/// All three forms for one window. Throws EmptyWindow.
ReturnsVolatilityReport returns_volatility_report(std::span<ReturnsRecord const> records, WindowSpec window,
                                                  int lag);

} // namespace vwm
