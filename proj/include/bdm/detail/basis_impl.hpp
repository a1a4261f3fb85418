#pragma once

#include "bdm/errors.hpp"

#include <cmath>
#include <limits>

namespace bdm
{

namespace detail
{

// m * 2^e, renormalised after every product so that (1+x)^{-n} and the
// terms that follow never underflow before they are read.
struct ScaledTerm {
    double m = 1.0;
    long e = 0;

    static ScaledTerm from_log(double log_value)
    {
        const double ln2 = 0.69314718055994530942;
        ScaledTerm t;
        t.e = static_cast<long>(std::floor(log_value / ln2));
        t.m = std::exp(log_value - static_cast<double>(t.e) * ln2);
        t.normalize();
        return t;
    }

    void mul(double f)
    {
        m *= f;
        normalize();
    }

    void normalize()
    {
        if (m == 0.0) return;
        int ex = 0;
        m = std::frexp(m, &ex);
        e += ex;
    }

    double value() const
    {
        if (e < std::numeric_limits<int>::min() / 2) return 0.0;
        if (e > std::numeric_limits<int>::max() / 2) return std::numeric_limits<double>::infinity();
        return std::ldexp(m, static_cast<int>(e));
    }
};

} // namespace detail

template <typename Growth, typename Weight>
long truncation_index_weighted(int n, double x, double tol, Growth growth, Weight weight)
{
    if (n < 1) throw DomainError("truncation_index: n must be >= 1");
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("truncation_index: x must be positive and finite");
    if (!(tol > 0.0)) throw DomainError("truncation_index: tol must be positive");

    const double r = x / (1.0 + x);
    const double q = 0.5 * (1.0 + r);
    detail::ScaledTerm term = detail::ScaledTerm::from_log(-static_cast<double>(n) * std::log1p(x));
    term.mul(weight(0));
    constexpr long k_limit = 100'000'000;
    for (long k = 0; k < k_limit; ++k) {
        const double rho = (static_cast<double>(n + k) / static_cast<double>(k + 1)) * r * growth(k);
        // ratios are non-increasing from here on, so the tail is dominated
        // by a geometric series with ratio q
        if (rho <= q && term.value() * q / (1.0 - q) <= tol) return k;
        term.mul(rho);
    }
    throw DomainError("truncation_index: no truncation index found below the iteration limit");
}

} // namespace bdm
