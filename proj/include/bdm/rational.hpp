#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bdm
{

/// Exact arbitrary-precision rational, always kept in canonical (reduced) form.
using BigRat = mpq_class;

BigRat make_rat(long num, long den = 1);

/// Exact binary value of a finite double.
BigRat rat_from_double(double v);

double to_double(const BigRat &q);

/// Canonical `p/q` text (`p` alone when q == 1).
std::string to_string(const BigRat &q);

/// Parses `INT`, `INT/INT` or a decimal literal (`0.25`, `-1.5e-3`) exactly.
BigRat parse_rational(std::string_view text);

/// Restricted rational function (p0 + p1 n) / (q0 + q1 n) of the operator degree n.
struct RationalFn {
    BigRat p0{0}, p1{0}, q0{1}, q1{0};

    static RationalFn constant(BigRat c);

    bool is_constant() const;

    /// Throws DomainError when the denominator vanishes at n.
    BigRat operator()(long n) const;

    /// lim_{n->inf}; throws DomainError if the function is unbounded.
    BigRat limit() const;

    /// True when q0 + q1 n != 0 for every integer n >= n_min.
    bool denominator_nonzero_from(long n_min) const;

    std::string to_string() const;
};

} // namespace bdm
