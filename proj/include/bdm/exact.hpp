#pragma once

#include "bdm/kinds.hpp"
#include "bdm/rational.hpp"

#include <span>
#include <vector>

namespace bdm
{

/// Sum over k of p_{m, k-r}(x) k^s.
struct PowerSumQuery {
    long m = 1;  ///< basis degree
    int r = 0;   ///< index shift, 0..2
    int s = 0;   ///< power of k, 0..8
    BigRat x{0}; ///< evaluation point, >= 0
};

constexpr int max_power = 8;
constexpr int max_moment_degree = 6;

/// Stirling number of the second kind S(s, i), s, i <= 8.
long stirling2(int s, int i);

/// sum_k p_{m,k}(x) k(k-1)...(k-s+1) = m(m+1)...(m+s-1) x^s.
BigRat falling_factorial_sum(long m, int s, const BigRat &x);

/// sum_k p_{m,k-r}(x) k^s, via (j+r)^s -> Stirling -> falling factorial sums.
BigRat power_sum(const PowerSumQuery &q);

/// M_j(k, n) = (n-1) int_0^inf p_{n,k}(t) t^j dt
///           = prod_{i=1..j} (k+i) / prod_{i=2..j+1} (n-i).
/// Throws DivergentMoment when n <= j+1.
BigRat moment_kernel(long n, long k, int j);

/// Coefficients c_s of prod_{i=1..j} (k+i) = sum_s c_s k^s.
std::vector<long> kernel_numerator_coeffs(int j);

/// Exact Operator(t^j; x). Baskakov uses f(k/n) sampling; every other kind
/// uses the Durrmeyer kernel, which requires n > j+1.
BigRat exact_moment(const OperatorKind &kind, long n, const BigRat &x, int j);

/// Exact Operator((t-x)^order; x) by binomial expansion of exact moments.
BigRat exact_central_moment(const OperatorKind &kind, long n, const BigRat &x, int order);

/// Exact Operator(sum c_j t^j; x) by linearity.
BigRat exact_polynomial(const OperatorKind &kind, long n, const BigRat &x, std::span<const BigRat> coeffs);

} // namespace bdm
