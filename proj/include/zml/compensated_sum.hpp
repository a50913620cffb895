#ifndef ZML_COMPENSATED_SUM_HPP
#define ZML_COMPENSATED_SUM_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace zml {

// Neumaier's variant of Kahan summation. Works for double and for
// std::complex<double> (componentwise).
template <typename T>
class compensated_sum;

template <>
class compensated_sum<double> {
public:
    constexpr compensated_sum() = default;
    constexpr explicit compensated_sum(double init) : sum_(init) {}

    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    compensated_sum& operator+=(double x) noexcept
    {
        add(x);
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

template <>
class compensated_sum<std::complex<double>> {
public:
    constexpr compensated_sum() = default;

    void add(std::complex<double> z) noexcept
    {
        re_.add(z.real());
        im_.add(z.imag());
    }

    compensated_sum& operator+=(std::complex<double> z) noexcept
    {
        add(z);
        return *this;
    }

    std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    compensated_sum<double> re_;
    compensated_sum<double> im_;
};

template <typename Range>
double kahan_total(const Range& values)
{
    compensated_sum<double> acc;
    for (double v : values) {
        acc.add(v);
    }
    return acc.value();
}

// Pairwise sum with a fixed split pattern: the result depends only on the
// input order, never on how the values were produced.
inline double tree_sum(std::span<const double> values)
{
    const std::size_t n = values.size();
    if (n == 0) {
        return 0.0;
    }
    if (n <= 8) {
        compensated_sum<double> acc;
        for (double v : values) {
            acc.add(v);
        }
        return acc.value();
    }
    const std::size_t half = n / 2;
    return tree_sum(values.first(half)) + tree_sum(values.subspan(half));
}

} // namespace zml

#endif // ZML_COMPENSATED_SUM_HPP
