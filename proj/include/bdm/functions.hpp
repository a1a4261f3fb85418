#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bdm
{

using RealFn = std::function<double(double)>;

/// A registered target function on [0, inf).
///
/// `derivatives[i]` holds the analytic derivative of order i+1 when known.
/// Polynomials carry their coefficients (lowest degree first) so operators
/// can route them through the exact moment kernels instead of quadrature.
struct TestFunction {
    std::string id;
    RealFn eval;
    bool bounded = false;
    std::optional<double> sup_abs;
    std::array<RealFn, 4> derivatives{};
    std::optional<double> limit_at_infinity;
    std::optional<std::vector<double>> polynomial;

    double operator()(double t) const { return eval(t); }

    bool has_derivatives(int order) const;

    /// Derivative of the given order (0 returns f itself).
    /// Throws MissingDerivatives when not registered.
    double derivative(int order, double t) const;

    int polynomial_degree() const;
};

TestFunction make_constant(double c);

/// c * t^degree, with derivatives.
TestFunction make_monomial(int degree, double c = 1.0);

/// Polynomial sum c_j t^j.
TestFunction make_polynomial(std::string id, std::vector<double> coeffs);

/// alpha f + beta g. Boundedness, derivatives and polynomial data combine.
TestFunction linear_combination(double alpha, const TestFunction &f, double beta, const TestFunction &g);

/// e^{-t}
TestFunction exp_neg();
/// 1/(1+t)
TestFunction inv1p();
/// t/(1+t)
TestFunction t_over_1p();
/// e^{-t} sin t
TestFunction damped_sin();

/// Default corpus: the four bounded smooth functions above followed by t^0..t^4.
std::vector<TestFunction> default_corpus();

/// Registry lookup by name: exp_neg, inv1p, t_over_1p, damped_sin, one, t0..t4.
std::optional<TestFunction> find_function(const std::string &name);

std::vector<std::string> function_names();

} // namespace bdm
