#pragma once

#include <cmath>

namespace vwm {

/*!
    Compensated accumulator (Neumaier's variant of Kahan summation).

    Unlike the plain Kahan loop it stays accurate when an addend is larger in
    magnitude than the running sum, which happens routinely for sums of
    n-th powers of trade costs.
*/
class CompensatedSum
{
public:
    constexpr CompensatedSum() = default;

    constexpr CompensatedSum& operator+=(double value) noexcept
    {
        double const t = sum_ + value;
        if (std::fabs(sum_) >= std::fabs(value))
            compensation_ += (sum_ - t) + value;
        else
            compensation_ += (value - t) + sum_;
        sum_ = t;
        return *this;
    }

    constexpr double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// x^n by repeated squaring; n >= 0.
constexpr double ipow(double x, int n) noexcept
{
    double result = 1.0;
    while (n > 0) {
        if (n & 1)
            result *= x;
        x *= x;
        n >>= 1;
    }
    return result;
}

} // namespace vwm
