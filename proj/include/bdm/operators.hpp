#pragma once

#include "bdm/functions.hpp"
#include "bdm/kinds.hpp"

#include <span>
#include <utility>
#include <vector>

namespace bdm
{

/// a(x,n) p_{n+1,k}(x) + b(x,n) p_{n+1,k-1}(x).
double mod1_weight(const SequenceSpec &spec, long n, long k, double x);

/// Boosted second-order weight: a(x,n) p_{n+2,k} + d(x,n) p_{n+2,k-1} + a'(x,n) p_{n+2,k-2}
/// with a = 3/2, b = 2-n, c = -n, d = 2n.
double mod2_weight(long n, long k, double x);

/// Second-order weight for arbitrary sequences.
double second_order_weight(const SecondOrderSequences &seq, long n, long k, double x);

/// Weights (wA, wB) of the split operators; -wA - wB equals mod1_weight.
std::pair<double, double> split_weights(const SequenceSpec &spec, long n, long k, double x);

/// Weight of `kind` at index k (Baskakov and Durrmeyer: p_{n,k}(x)).
double operator_weight(const OperatorKind &kind, long n, long k, double x);

/// Operator value at x.
///
/// Baskakov samples f(k/n); every Durrmeyer-type kind contracts its weights
/// against I_{n,k}(f) = (n-1) int p_{n,k} f. Polynomials use the exact moment
/// kernel (degree must be <= n-2), bounded functions use cached adaptive
/// quadrature. The truncation tail is bounded by tol/2.
double apply(const OperatorKind &kind, long n, const TestFunction &f, double x, double tol = 1e-10);

/// apply() over a grid of points; points are evaluated concurrently and
/// returned in input order.
std::vector<double> apply_grid(const OperatorKind &kind, long n, const TestFunction &f, std::span<const double> xs,
                               double tol = 1e-10);

/// Drops every cached Durrmeyer coefficient.
void clear_coefficient_cache();
std::size_t coefficient_cache_size();

struct PositivityResult {
    double min_weight = 0.0;
    long argmin_k = 0;
    double argmin_x = 0.0;
};

/// Minimum of mod1_weight over x_grid x {0..k_max}; first minimiser in
/// (x, k) order wins ties.
PositivityResult empirical_positivity(const SequenceSpec &spec, long n, std::span<const double> x_grid, long k_max);

} // namespace bdm
