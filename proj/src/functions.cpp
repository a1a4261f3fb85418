#include "bdm/functions.hpp"

#include "bdm/errors.hpp"
#include "bdm/format.hpp"

#include <cmath>

namespace bdm
{

bool TestFunction::has_derivatives(int order) const
{
    for (int i = 0; i < order && i < 4; ++i)
        if (!derivatives[static_cast<std::size_t>(i)]) return false;
    return order <= 4;
}

double TestFunction::derivative(int order, double t) const
{
    if (order == 0) return eval(t);
    if (order < 0 || order > 4 || !derivatives[static_cast<std::size_t>(order - 1)])
        throw MissingDerivatives("function '" + id + "' has no registered derivative of order " +
                                 std::to_string(order));
    return derivatives[static_cast<std::size_t>(order - 1)](t);
}

int TestFunction::polynomial_degree() const
{
    if (!polynomial) return -1;
    int deg = static_cast<int>(polynomial->size()) - 1;
    while (deg > 0 && (*polynomial)[static_cast<std::size_t>(deg)] == 0.0) --deg;
    return deg;
}

namespace
{

double horner(const std::vector<double> &c, double t)
{
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
}

std::vector<double> differentiate(const std::vector<double> &c)
{
    if (c.size() <= 1) return {0.0};
    std::vector<double> d(c.size() - 1);
    for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = static_cast<double>(j) * c[j];
    return d;
}

} // namespace

TestFunction make_polynomial(std::string id, std::vector<double> coeffs)
{
    if (coeffs.empty()) coeffs = {0.0};
    TestFunction f;
    f.id = std::move(id);
    f.eval = [coeffs](double t) { return horner(coeffs, t); };
    f.polynomial = coeffs;
    std::vector<double> d = coeffs;
    for (std::size_t i = 0; i < 4; ++i) {
        d = differentiate(d);
        f.derivatives[i] = [d](double t) { return horner(d, t); };
    }
    f.bounded = f.polynomial_degree() <= 0;
    if (f.bounded) {
        f.sup_abs = std::abs(coeffs[0]);
        f.limit_at_infinity = coeffs[0];
    }
    return f;
}

TestFunction make_constant(double c) { return make_polynomial(c == 1.0 ? "one" : "const", {c}); }

TestFunction make_monomial(int degree, double c)
{
    if (degree < 0) throw DomainError("make_monomial: negative degree");
    std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1, 0.0);
    coeffs.back() = c;
    return make_polynomial("t" + std::to_string(degree), std::move(coeffs));
}

TestFunction linear_combination(double alpha, const TestFunction &f, double beta, const TestFunction &g)
{
    TestFunction h;
    h.id = format_double(alpha) + "*" + f.id + "+" + format_double(beta) + "*" + g.id;
    h.eval = [alpha, beta, fe = f.eval, ge = g.eval](double t) { return alpha * fe(t) + beta * ge(t); };
    h.bounded = f.bounded && g.bounded;
    if (f.sup_abs && g.sup_abs) h.sup_abs = std::abs(alpha) * *f.sup_abs + std::abs(beta) * *g.sup_abs;
    for (std::size_t i = 0; i < 4; ++i)
        if (f.derivatives[i] && g.derivatives[i])
            h.derivatives[i] = [alpha, beta, fd = f.derivatives[i], gd = g.derivatives[i]](double t) {
                return alpha * fd(t) + beta * gd(t);
            };
    if (f.limit_at_infinity && g.limit_at_infinity)
        h.limit_at_infinity = alpha * *f.limit_at_infinity + beta * *g.limit_at_infinity;
    if (f.polynomial && g.polynomial) {
        std::vector<double> c(std::max(f.polynomial->size(), g.polynomial->size()), 0.0);
        for (std::size_t j = 0; j < f.polynomial->size(); ++j) c[j] += alpha * (*f.polynomial)[j];
        for (std::size_t j = 0; j < g.polynomial->size(); ++j) c[j] += beta * (*g.polynomial)[j];
        h.polynomial = std::move(c);
    }
    return h;
}

TestFunction exp_neg()
{
    TestFunction f;
    f.id = "exp_neg";
    f.eval = [](double t) { return std::exp(-t); };
    f.bounded = true;
    f.sup_abs = 1.0;
    f.limit_at_infinity = 0.0;
    f.derivatives = {[](double t) { return -std::exp(-t); }, [](double t) { return std::exp(-t); },
                     [](double t) { return -std::exp(-t); }, [](double t) { return std::exp(-t); }};
    return f;
}

TestFunction inv1p()
{
    TestFunction f;
    f.id = "inv1p";
    f.eval = [](double t) { return 1.0 / (1.0 + t); };
    f.bounded = true;
    f.sup_abs = 1.0;
    f.limit_at_infinity = 0.0;
    // f^(j) = (-1)^j j! / (1+t)^(j+1)
    f.derivatives = {[](double t) { return -1.0 / std::pow(1.0 + t, 2); },
                     [](double t) { return 2.0 / std::pow(1.0 + t, 3); },
                     [](double t) { return -6.0 / std::pow(1.0 + t, 4); },
                     [](double t) { return 24.0 / std::pow(1.0 + t, 5); }};
    return f;
}

TestFunction t_over_1p()
{
    TestFunction f;
    f.id = "t_over_1p";
    f.eval = [](double t) { return t / (1.0 + t); };
    f.bounded = true;
    f.sup_abs = 1.0;
    f.limit_at_infinity = 1.0;
    f.derivatives = {[](double t) { return 1.0 / std::pow(1.0 + t, 2); },
                     [](double t) { return -2.0 / std::pow(1.0 + t, 3); },
                     [](double t) { return 6.0 / std::pow(1.0 + t, 4); },
                     [](double t) { return -24.0 / std::pow(1.0 + t, 5); }};
    return f;
}

TestFunction damped_sin()
{
    TestFunction f;
    f.id = "damped_sin";
    f.eval = [](double t) { return std::exp(-t) * std::sin(t); };
    f.bounded = true;
    f.sup_abs = 1.0;
    f.limit_at_infinity = 0.0;
    f.derivatives = {[](double t) { return std::exp(-t) * (std::cos(t) - std::sin(t)); },
                     [](double t) { return -2.0 * std::exp(-t) * std::cos(t); },
                     [](double t) { return 2.0 * std::exp(-t) * (std::cos(t) + std::sin(t)); },
                     [](double t) { return -4.0 * std::exp(-t) * std::sin(t); }};
    return f;
}

std::vector<TestFunction> default_corpus()
{
    std::vector<TestFunction> corpus{exp_neg(), inv1p(), t_over_1p(), damped_sin()};
    for (int j = 0; j <= 4; ++j) corpus.push_back(make_monomial(j));
    return corpus;
}

std::optional<TestFunction> find_function(const std::string &name)
{
    if (name == "one") return make_constant(1.0);
    for (auto &f : default_corpus())
        if (f.id == name) return f;
    return std::nullopt;
}

std::vector<std::string> function_names()
{
    std::vector<std::string> names;
    for (const auto &f : default_corpus()) names.push_back(f.id);
    names.push_back("one");
    return names;
}

} // namespace bdm
