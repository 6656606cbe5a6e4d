#pragma once

// Naive reference implementations used as test oracles. They deliberately
// share no code with the library: plain vectors, a full scan for window
// membership, std::pow, and long double accumulation.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace ref {

struct Tick
{
    double t;
    double c;
    double v;
};

inline bool in_window(double t, double center, double width)
{
    return center - width / 2 <= t && t <= center + width / 2;
}

inline std::vector<Tick> members(std::vector<Tick> const& all, double center, double width)
{
    std::vector<Tick> out;
    for (auto const& x : all)
        if (in_window(x.t, center, width))
            out.push_back(x);
    return out;
}

inline long double sum_pow(std::vector<Tick> const& w, int n, bool cost)
{
    long double s = 0;
    for (auto const& x : w)
        s += std::pow(static_cast<long double>(cost ? x.c : x.v), n);
    return s;
}

inline double price_moment(std::vector<Tick> const& w, int n)
{
    return static_cast<double>(sum_pow(w, n, true) / sum_pow(w, n, false));
}

inline double simple_average(std::vector<Tick> const& w)
{
    long double s = 0;
    for (auto const& x : w)
        s += static_cast<long double>(x.c) / x.v;
    return static_cast<double>(s / w.size());
}

inline double price_volatility(std::vector<Tick> const& w)
{
    long double const p1 = sum_pow(w, 1, true) / sum_pow(w, 1, false);
    long double const p2 = sum_pow(w, 2, true) / sum_pow(w, 2, false);
    return static_cast<double>(p2 - p1 * p1);
}

/// Two-pass centered dispersions, for checking the uncentered route.
struct Dispersions
{
    double c1, c2, v1, v2, sigma_c2, sigma_v2;
};

inline Dispersions dispersions(std::vector<Tick> const& w)
{
    long double const n = w.size();
    long double c1 = 0, v1 = 0, c2 = 0, v2 = 0;
    for (auto const& x : w) {
        c1 += x.c;
        v1 += x.v;
        c2 += static_cast<long double>(x.c) * x.c;
        v2 += static_cast<long double>(x.v) * x.v;
    }
    c1 /= n;
    v1 /= n;
    long double sc = 0, sv = 0;
    for (auto const& x : w) {
        sc += (x.c - c1) * (x.c - c1);
        sv += (x.v - v1) * (x.v - v1);
    }
    return {double(c1), double(c2 / n), double(v1), double(v2 / n), double(sc / n), double(sv / n)};
}

/// Lag-m returns as (t_i, q_c, q_v, r) rows, paired by position.
struct ReturnRow
{
    double t, qc, qv, r;
};

inline std::vector<ReturnRow> returns(std::vector<Tick> const& sorted, int m)
{
    std::vector<ReturnRow> out;
    for (std::size_t i = m; i < sorted.size(); ++i) {
        auto const& a = sorted[i];
        auto const& b = sorted[i - m];
        double const qc = a.c / b.c;
        double const qv = a.v / b.v;
        double const qp = (a.c / a.v) / (b.c / b.v);
        out.push_back({a.t, qc, qv, qp - 1.0});
    }
    return out;
}

inline std::vector<ReturnRow> returns_in(std::vector<ReturnRow> const& all, double center, double width)
{
    std::vector<ReturnRow> out;
    for (auto const& r : all)
        if (in_window(r.t, center, width))
            out.push_back(r);
    return out;
}

inline double returns_moment(std::vector<ReturnRow> const& w, int n)
{
    long double qc = 0, qv = 0;
    for (auto const& r : w) {
        qc += std::pow(static_cast<long double>(r.qc), n);
        qv += std::pow(static_cast<long double>(r.qv), n);
    }
    return static_cast<double>(qc / qv);
}

inline double returns_volatility(std::vector<ReturnRow> const& w)
{
    long double qc1 = 0, qv1 = 0, qc2 = 0, qv2 = 0;
    for (auto const& r : w) {
        qc1 += r.qc;
        qv1 += r.qv;
        qc2 += static_cast<long double>(r.qc) * r.qc;
        qv2 += static_cast<long double>(r.qv) * r.qv;
    }
    long double const q1 = qc1 / qv1;
    return static_cast<double>(qc2 / qv2 - q1 * q1);
}

/// Multi-time moment by explicit enumeration of ordered member tuples.
/// Equal times draw the same member in every slot (diagonal); distinct
/// times range independently over their own windows.
inline double multi_time_moment(std::vector<Tick> const& all, std::vector<double> const& times, double width)
{
    std::vector<std::vector<Tick>> slots;
    for (double t : times)
        slots.push_back(members(all, t, width));

    // slot j is tied to the first slot k <= j with the same time
    std::vector<std::size_t> owner(times.size());
    for (std::size_t j = 0; j < times.size(); ++j) {
        owner[j] = j;
        for (std::size_t k = 0; k < j; ++k)
            if (times[k] == times[j]) {
                owner[j] = k;
                break;
            }
    }

    long double a = 0, b = 0;
    std::vector<std::size_t> pick(times.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == times.size()) {
            long double pa = 1, pb = 1;
            for (std::size_t s = 0; s < times.size(); ++s) {
                auto const& x = slots[s][pick[owner[s]]];
                pa *= x.c;
                pb *= x.v;
            }
            a += pa;
            b += pb;
            return;
        }
        if (owner[j] != j) {
            rec(j + 1);
            return;
        }
        for (std::size_t i = 0; i < slots[j].size(); ++i) {
            pick[j] = i;
            rec(j + 1);
        }
    };
    rec(0);
    return static_cast<double>(a / b);
}

/// Truncated characteristic functional by the literal ordered nested loops.
inline std::complex<double> charfun(std::function<double(std::vector<double> const&)> const& moment,
                                    double start, double step, std::vector<double> const& x, int n_max)
{
    std::complex<long double> total(1, 0);
    std::complex<long double> ipow(1, 0);
    long double factorial = 1;
    std::size_t const g = x.size();
    for (int n = 1; n <= n_max; ++n) {
        ipow *= std::complex<long double>(0, 1);
        factorial *= n;
        long double s = 0;
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            std::vector<double> times(n);
            long double w = 1;
            for (int d = 0; d < n; ++d) {
                times[d] = start + static_cast<double>(idx[d]) * step;
                w *= x[idx[d]];
            }
            s += w * moment(times);
            int d = n - 1;
            while (d >= 0 && ++idx[d] == g) {
                idx[d] = 0;
                --d;
            }
            if (d < 0)
                break;
        }
        total += ipow * (s * std::pow(static_cast<long double>(step), n) / factorial);
    }
    return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

inline double rel_err(double expected, double actual)
{
    double const scale = std::fabs(expected);
    return scale == 0.0 ? std::fabs(actual) : std::fabs(expected - actual) / scale;
}

/// |a - b| / max(1, |a|): the relative-with-absolute-floor metric.
inline double scaled_err(double expected, double actual)
{
    return std::fabs(expected - actual) / std::fmax(1.0, std::fabs(expected));
}

} // namespace ref
