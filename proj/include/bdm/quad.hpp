#pragma once

#include <functional>
#include <span>

namespace bdm
{

struct TestFunction;

struct QuadConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_depth = 40; ///< bisection limit per panel

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature of g over [0, 1].
///
/// Panels are refined worst-first; the final value is accumulated in panel
/// order (ascending left endpoint) with compensated summation, so the result
/// does not depend on the refinement history. `breakpoints` (interior points
/// of (0, 1), ascending) seed the initial partition.
QuadResult integrate_unit_interval(const std::function<double(double)> &g, const QuadConfig &cfg = {},
                                   std::span<const double> breakpoints = {});

/// (n-1) int_0^inf p_{n,k}(t) f(t) dt via u = t/(1+t), where the weight
/// becomes the Beta(k+1, n-1) density on [0, 1].
///
/// Requires n >= 3 and a bounded f. Non-convergence is reported through
/// QuadResult::converged, not thrown.
QuadResult durrmeyer_coefficient(int n, long k, const TestFunction &f, const QuadConfig &cfg = {});

/// Same integral for an arbitrary integrand, with no boundedness check.
/// Used to push polynomials through quadrature when cross-checking the
/// exact kernel (requires deg f <= n-2 to be finite).
QuadResult durrmeyer_coefficient_raw(int n, long k, const std::function<double(double)> &f,
                                     const QuadConfig &cfg = {});

} // namespace bdm
