#pragma once

#include "bdm/errors.hpp"

#include <type_traits>

namespace bdm
{

namespace detail
{

template <typename T>
T from_rat(const BigRat &q)
{
    if constexpr (std::is_same_v<T, BigRat>)
        return q;
    else
        return static_cast<T>(q.get_d());
}

} // namespace detail

/// Weight decomposition of a Durrmeyer-type operator at (n, x) as terms
/// coef * p_{n+offset, k-shift}(x). Works for T = double and T = BigRat.
template <typename T>
std::vector<WeightTerm<T>> weight_terms(const OperatorKind &kind, long n, const T &x)
{
    using detail::from_rat;
    const T one(1);
    switch (kind.tag) {
    case OperatorTag::Baskakov:
    case OperatorTag::BaskakovDurrmeyer:
        return {{one, 0, 0}};
    case OperatorTag::Mod1:
    case OperatorTag::SplitA:
    case OperatorTag::SplitB: {
        const auto &s = kind.sequences();
        const T a0 = from_rat<T>(s.a0(n));
        const T a1 = from_rat<T>(s.a1(n));
        if (kind.tag == OperatorTag::Mod1) {
            // a(x,n) = a0 + a1 x, b(x,n) = a0 - a1 (1+x)
            return {{T(a0 + a1 * x), 1, 0}, {T(a0 - a1 * (one + x)), 1, 1}};
        }
        if (kind.tag == OperatorTag::SplitA) return {{T(-a1 * x), 1, 0}, {a1, 1, 1}};
        return {{T(-a0), 1, 0}, {T(a1 * x - a0), 1, 1}};
    }
    case OperatorTag::Mod2:
        break;
    }
    // a(x,n) = a + b x + c x^2, d(x,n) = d x (1+x), a'(x,n) = a - b (1+x) + c (1+x)^2
    const SecondOrderSequences seq = SecondOrderSequences::boosted();
    const T a = from_rat<T>(seq.a);
    const T b = from_rat<T>(seq.b(n));
    const T c = from_rat<T>(seq.c(n));
    const T d = from_rat<T>(seq.d(n));
    const T xp = one + x;
    return {{T(a + b * x + c * x * x), 2, 0}, {T(d * x * xp), 2, 1}, {T(a - b * xp + c * xp * xp), 2, 2}};
}

/// Second-order weight terms for arbitrary sequences (used for the classical collapse).
template <typename T>
std::vector<WeightTerm<T>> second_order_terms(const SecondOrderSequences &seq, long n, const T &x)
{
    using detail::from_rat;
    const T one(1);
    const T a = from_rat<T>(seq.a);
    const T b = from_rat<T>(seq.b(n));
    const T c = from_rat<T>(seq.c(n));
    const T d = from_rat<T>(seq.d(n));
    const T xp = one + x;
    return {{T(a + b * x + c * x * x), 2, 0}, {T(d * x * xp), 2, 1}, {T(a - b * xp + c * xp * xp), 2, 2}};
}

} // namespace bdm
