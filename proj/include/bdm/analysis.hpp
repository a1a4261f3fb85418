#pragma once

#include "bdm/functions.hpp"
#include "bdm/kinds.hpp"
#include "bdm/rational.hpp"

#include <vector>

namespace bdm
{

struct Interval {
    double a = 0.0;
    double b = 2.0;
};

/// Uniform grid of `points` nodes on [a, b] (points >= 2).
std::vector<double> uniform_grid(const Interval &iv, int points);

/// max over the grid of |Operator(f; x) - f(x)|.
double sup_error(const OperatorKind &kind, long n, const TestFunction &f, const Interval &iv, int grid_points,
                 double tol = 1e-10);

struct OrderFit {
    double slope = 0.0;
    double r_squared = 0.0;
};

/// Least squares of ln(error) against ln(n). Throws ZeroError on any error <= 0.
OrderFit fit_order(const std::vector<long> &n_list, const std::vector<double> &errors);

struct ConvergenceReport {
    OperatorKind kind;
    std::string function_id;
    Interval interval;
    int grid_points = 0;
    std::vector<long> n_list;
    std::vector<double> sup_errors;
    double slope = 0.0;
    double r_squared = 0.0;
};

ConvergenceReport convergence_study(const OperatorKind &kind, const TestFunction &f, const Interval &iv,
                                    int grid_points, const std::vector<long> &n_list, double tol = 1e-10);

/// Published first-order limit of n (V_{n,1} f - f)(x) for lim a0 = l, lim a1 = m.
double voronovskaja_limit_mod1(double l, double m, const TestFunction &f, double x);

/// lim n^2 mu_j(n, x), j = 2, 3, 4, for the boosted second-order operator,
/// extrapolated from exact central moments at n = 1e3, 1e4, 1e5.
struct Mod2LimitCoefficients {
    BigRat c2, c3, c4;
    /// largest |single-step - two-step| Richardson difference (confirmation gap)
    double richardson_gap = 0.0;
};
Mod2LimitCoefficients mod2_limit_coefficients(const BigRat &x);

/// Exact two-step Richardson extrapolation of values sampled at n, 10n, 100n
/// under v(n) = c + c1/n + c2/n^2 + ...
BigRat richardson_limit(const BigRat &v1, const BigRat &v10, const BigRat &v100);

/// lim n^2 (V_{n,2} f - f)(x) = c2 f''/2 + c3 f'''/6 + c4 f''''/24 with oracle-derived c_j.
double voronovskaja_limit_mod2_derived(const TestFunction &f, double x);

struct VoronovskajaReport {
    double x = 0.0;
    int order = 1;
    std::vector<long> n_list;
    std::vector<double> scaled_residuals;
    double limit_value = 0.0;
    std::vector<double> abs_gaps;
};

/// n^order (Operator(f; x) - f(x)) against the limit for order 1 (Mod1) or 2 (Mod2).
VoronovskajaReport voronovskaja_residuals(int order, const OperatorKind &kind, const TestFunction &f, double x,
                                          const std::vector<long> &n_list, double tol = 1e-12);

/// Power p with mu_order = O(n^-p): ceil(order/2), but at least 2 for Mod2.
int central_scaling_exponent(const OperatorKind &kind, int order);

/// n^p mu_order(n, x) from the exact oracle, p = central_scaling_exponent.
std::vector<BigRat> central_moment_scaling(const OperatorKind &kind, const BigRat &x, int order,
                                           const std::vector<long> &n_list);

} // namespace bdm
