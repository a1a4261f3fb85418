#include "bdm/analysis.hpp"

#include "bdm/errors.hpp"
#include "bdm/exact.hpp"
#include "bdm/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bdm
{

std::vector<double> uniform_grid(const Interval &iv, int points)
{
    if (points < 2) throw DomainError("uniform_grid: need at least 2 points");
    if (!(iv.a >= 0.0) || !(iv.b > iv.a)) throw DomainError("uniform_grid: interval must satisfy 0 <= a < b");
    std::vector<double> xs(static_cast<std::size_t>(points));
    const double h = (iv.b - iv.a) / (points - 1);
    for (int i = 0; i < points; ++i) xs[static_cast<std::size_t>(i)] = iv.a + h * i;
    xs.back() = iv.b;
    return xs;
}

double sup_error(const OperatorKind &kind, long n, const TestFunction &f, const Interval &iv, int grid_points,
                 double tol)
{
    const auto xs = uniform_grid(iv, grid_points);
    const auto values = apply_grid(kind, n, f, xs, tol);
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(values[i] - f(xs[i])));
    return worst;
}

OrderFit fit_order(const std::vector<long> &n_list, const std::vector<double> &errors)
{
    if (n_list.size() != errors.size()) throw DomainError("fit_order: length mismatch");
    if (n_list.size() < 3) throw DomainError("fit_order: need at least 3 points");
    for (double e : errors)
        if (!(e > 0.0)) throw ZeroError("fit_order: errors must be strictly positive");

    const double m = static_cast<double>(n_list.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        sx += std::log(static_cast<double>(n_list[i]));
        sy += std::log(errors[i]);
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const double dx = std::log(static_cast<double>(n_list[i])) - mx;
        const double dy = std::log(errors[i]) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw DomainError("fit_order: n values must not all coincide");
    OrderFit fit;
    fit.slope = sxy / sxx;
    fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
    return fit;
}

ConvergenceReport convergence_study(const OperatorKind &kind, const TestFunction &f, const Interval &iv,
                                    int grid_points, const std::vector<long> &n_list, double tol)
{
    if (n_list.size() < 3) throw DomainError("convergence_study: need at least 3 values of n");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1]) throw DomainError("convergence_study: n list must be strictly increasing");

    ConvergenceReport rep{kind, f.id, iv, grid_points, n_list, {}, 0.0, 0.0};
    for (long n : n_list) rep.sup_errors.push_back(sup_error(kind, n, f, iv, grid_points, tol));
    const auto fit = fit_order(n_list, rep.sup_errors);
    rep.slope = fit.slope;
    rep.r_squared = fit.r_squared;
    return rep;
}

double voronovskaja_limit_mod1(double l, double m, const TestFunction &f, double x)
{
    if (!f.has_derivatives(2))
        throw MissingDerivatives("voronovskaja_limit_mod1: '" + f.id + "' needs derivatives up to order 2");
    return (1 + 2 * x) * (3 * l - 2 * m) * f.derivative(1, x) +
           f.derivative(2, x) / 2.0 * (l * (3 + 16 * x + 16 * x * x) + m * (-2 - 10 * x - 10 * x * x));
}

BigRat richardson_limit(const BigRat &v1, const BigRat &v10, const BigRat &v100)
{
    const BigRat r1 = (10 * v10 - v1) / 9;
    const BigRat r2 = (10 * v100 - v10) / 9;
    BigRat r = (100 * r2 - r1) / 99;
    r.canonicalize();
    return r;
}

Mod2LimitCoefficients mod2_limit_coefficients(const BigRat &x)
{
    const auto kind = OperatorKind::mod2();
    const std::vector<long> ns{1000, 10000, 100000};
    Mod2LimitCoefficients out;
    BigRat *targets[] = {&out.c2, &out.c3, &out.c4};
    for (int j = 2; j <= 4; ++j) {
        std::vector<BigRat> v;
        for (long n : ns) v.push_back(BigRat(n) * n * exact_central_moment(kind, n, x, j));
        *targets[j - 2] = richardson_limit(v[0], v[1], v[2]);
        const BigRat one_step = (10 * v[2] - v[1]) / 9;
        const double gap = std::abs(to_double(one_step - *targets[j - 2]));
        out.richardson_gap = std::max(out.richardson_gap, gap);
    }
    return out;
}

double voronovskaja_limit_mod2_derived(const TestFunction &f, double x)
{
    if (!f.has_derivatives(4))
        throw MissingDerivatives("voronovskaja_limit_mod2_derived: '" + f.id + "' needs derivatives up to order 4");
    const auto c = mod2_limit_coefficients(rat_from_double(x));
    return to_double(c.c2) * f.derivative(2, x) / 2.0 + to_double(c.c3) * f.derivative(3, x) / 6.0 +
           to_double(c.c4) * f.derivative(4, x) / 24.0;
}

VoronovskajaReport voronovskaja_residuals(int order, const OperatorKind &kind, const TestFunction &f, double x,
                                          const std::vector<long> &n_list, double tol)
{
    VoronovskajaReport rep;
    rep.x = x;
    rep.order = order;
    rep.n_list = n_list;
    if (order == 1) {
        if (kind.tag != OperatorTag::Mod1 && kind.tag != OperatorTag::BaskakovDurrmeyer)
            throw DomainError("voronovskaja_residuals: order 1 applies to mod1/durrmeyer");
        const SequenceSpec spec = kind.tag == OperatorTag::Mod1 ? kind.sequences() : SequenceSpec::classical();
        rep.limit_value =
            voronovskaja_limit_mod1(to_double(spec.a0.limit()), to_double(spec.a1.limit()), f, x);
    } else if (order == 2) {
        if (kind.tag != OperatorTag::Mod2) throw DomainError("voronovskaja_residuals: order 2 applies to mod2");
        rep.limit_value = voronovskaja_limit_mod2_derived(f, x);
    } else {
        throw DomainError("voronovskaja_residuals: order must be 1 or 2");
    }

    const double fx = f(x);
    for (long n : n_list) {
        const double scaled = std::pow(static_cast<double>(n), order) * (apply(kind, n, f, x, tol) - fx);
        rep.scaled_residuals.push_back(scaled);
        rep.abs_gaps.push_back(std::abs(scaled - rep.limit_value));
    }
    return rep;
}

int central_scaling_exponent(const OperatorKind &kind, int order)
{
    if (order < 1) throw DomainError("central_scaling_exponent: order must be >= 1");
    const int half = (order + 1) / 2;
    if (kind.tag == OperatorTag::Mod2) return std::max(2, half);
    return half;
}

std::vector<BigRat> central_moment_scaling(const OperatorKind &kind, const BigRat &x, int order,
                                           const std::vector<long> &n_list)
{
    const int limit = kind.tag == OperatorTag::Mod2 ? 6 : 4;
    if (order < 1 || order > limit)
        throw DomainError("central_moment_scaling: order must lie in 1.." + std::to_string(limit));
    const int p = central_scaling_exponent(kind, order);
    std::vector<BigRat> out;
    for (long n : n_list) {
        BigRat scale(1);
        for (int i = 0; i < p; ++i) scale *= n;
        BigRat v = scale * exact_central_moment(kind, n, x, order);
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

} // namespace bdm
