#include "bdm/basis.hpp"
#include "bdm/errors.hpp"
#include "bdm/exact.hpp"
#include "bdm/moments_paper.hpp"
#include "bdm/operators.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace bdm;

namespace
{

const std::vector<double> grid11 = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0, 1.2, 1.4, 1.6, 1.8, 2.0};

std::vector<double> grid_step(double a, double b, double h)
{
    std::vector<double> g;
    for (int i = 0; a + i * h <= b + 1e-12; ++i)
        g.push_back(a + i * h);
    return g;
}

} // namespace

TEST_CASE("mod1 weight examples")
{
    const auto classical = SequenceSpec::classical();
    // a0 = a1 = 1 collapses to p_{n,k}
    for (long n : {5L, 20L})
        for (long k : {0L, 1L, 6L})
            for (double x : {0.0, 0.3, 1.0, 2.5})
                CHECK(mod1_weight(classical, n, k, x) == doctest::Approx(eval_basis(n, k, x)).epsilon(1e-13));

    // a0 = 1/2, a1 = 0 is the plain average of neighbouring higher-degree weights
    const auto avg = SequenceSpec::constants(make_rat(1, 2), BigRat(0));
    const double expect = 0.5 * (eval_basis(11, 3, 0.4) + eval_basis(11, 2, 0.4));
    CHECK(mod1_weight(avg, 10, 3, 0.4) == doctest::Approx(expect).epsilon(1e-14));

    // Case 5 exemplar (a0 = 0, a1 = -1): weight at x = 0, k = 1 is a0 - a1 = 1; at k = 0 it is a0 = 0
    const auto c5 = case_exemplar(PositivityCase::Case5);
    CHECK(mod1_weight(c5, 10, 0, 0.0) == 0.0);
}

TEST_CASE("mod2 weight sums to one")
{
    for (long n : {5L, 10L, 50L}) {
        CHECK(mod2_weight(n, 0, 0.0) == doctest::Approx(1.5));
        for (double x : {0.0, 0.5, 1.0, 2.0}) {
            double s = 0.0;
            const long K = truncation_index(n + 2, std::max(x, 1e-300), 1e-16) + 2;
            for (long k = 0; k <= K; ++k)
                s += mod2_weight(n, k, x);
            CHECK(std::abs(s - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("second-order weight with classical sequences collapses to p_{n,k}")
{
    const auto seq = SecondOrderSequences::classical();
    for (long n : {4L, 10L, 40L})
        for (long k : {0L, 1L, 2L, 9L})
            for (double x : {0.0, 0.25, 1.0, 3.0}) {
                const double e = eval_basis(n, k, x);
                CHECK(std::abs(second_order_weight(seq, n, k, x) - e) <= 1e-12 * std::max(e, 1e-300));
            }
}

TEST_CASE("split weights add up to minus the mod1 weight")
{
    for (auto c : {PositivityCase::Case1, PositivityCase::Case4, PositivityCase::Case6}) {
        const auto s = case_exemplar(c);
        for (long k : {0L, 1L, 5L, 30L})
            for (double x : {0.0, 0.7, 2.0}) {
                const auto [wa, wb] = split_weights(s, 20, k, x);
                CHECK(std::abs(wa + wb + mod1_weight(s, 20, k, x)) <= 1e-15);
            }
    }
}

TEST_CASE("apply reference values")
{
    CHECK(apply(OperatorKind::mod2(), 10, make_monomial(1), 0.7) == doctest::Approx(0.7).epsilon(1e-13));
    CHECK(apply(OperatorKind::mod1(SequenceSpec::classical()), 10, make_monomial(1), 1.0) ==
          doctest::Approx(1.375).epsilon(1e-13));
    CHECK(std::abs(apply(OperatorKind::durrmeyer(), 10, make_constant(1.0), 2.0) - 1.0) <= 1e-10);
    // Baskakov on t^2 at n = 4, x = 1: x^2 + x(1+x)/n
    CHECK(std::abs(apply(OperatorKind::baskakov(), 4, make_monomial(2), 1.0) - 1.5) <= 1e-10);
}

TEST_CASE("apply agrees with the exact oracle on monomials")
{
    const auto s = SequenceSpec::constants(make_rat(3, 4), make_rat(1, 2));
    const std::vector<OperatorKind> kinds = {OperatorKind::durrmeyer(), OperatorKind::mod1(s), OperatorKind::mod2(),
                                             OperatorKind::split_a(s), OperatorKind::split_b(s)};
    for (const auto &kind : kinds)
        for (int j = 0; j <= 4; ++j)
            for (double x : {0.5, 1.0, 2.0}) {
                const double e = to_double(exact_moment(kind, 10, rat_from_double(x), j));
                const double v = apply(kind, 10, make_monomial(j), x);
                // relative, with an absolute floor for moments that vanish exactly
                CHECK(std::abs(v - e) <= 1e-9 * std::max(std::abs(e), 1.0));
            }
}

TEST_CASE("bounded functions: constants are reproduced through quadrature")
{
    TestFunction one = make_constant(1.0);
    one.polynomial.reset(); // force the quadrature path
    for (const auto &kind : {OperatorKind::durrmeyer(), OperatorKind::mod1(SequenceSpec::classical()),
                             OperatorKind::mod2()})
        for (double x : {0.0, 0.5, 2.0})
            CHECK(std::abs(apply(kind, 20, one, x) - 1.0) <= 1e-10);
}

TEST_CASE("apply is linear")
{
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> coef(-3.0, 3.0), xs(0.0, 2.0);
    const auto f = exp_neg(), g = inv1p();
    const auto kind = OperatorKind::mod2();
    for (int trial = 0; trial < 8; ++trial) {
        const double a = coef(rng), b = coef(rng), x = xs(rng);
        const double lhs = apply(kind, 24, linear_combination(a, f, b, g), x);
        const double rhs = a * apply(kind, 24, f, x) + b * apply(kind, 24, g, x);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (std::abs(a) + std::abs(b)));
    }
}

TEST_CASE("Mod1 with a0 = a1 = 1 coincides with Baskakov-Durrmeyer on bounded functions")
{
    for (const auto &f : {exp_neg(), damped_sin()})
        for (double x : grid11)
            CHECK(std::abs(apply(OperatorKind::mod1(SequenceSpec::classical()), 20, f, x) -
                           apply(OperatorKind::durrmeyer(), 20, f, x)) <= 1e-10);
}

TEST_CASE("Mod1 + SplitA + SplitB vanishes pointwise")
{
    const auto s = case_exemplar(PositivityCase::Case4);
    for (const auto &f : {exp_neg(), t_over_1p()})
        for (double x : grid11) {
            const double sum = apply(OperatorKind::mod1(s), 20, f, x) + apply(OperatorKind::split_a(s), 20, f, x) +
                               apply(OperatorKind::split_b(s), 20, f, x);
            CHECK(std::abs(sum) <= 1e-10);
        }
}

TEST_CASE("positive cases map non-negative functions to non-negative values")
{
    // Case 3 is excluded: its k = 1 weight is negative near x = 0.
    for (auto c : {PositivityCase::Case1, PositivityCase::Case2, PositivityCase::Case4}) {
        const auto kind = OperatorKind::mod1(case_exemplar(c));
        for (const auto &f : {exp_neg(), inv1p(), t_over_1p()})
            for (double x : grid11)
                CHECK(apply(kind, 10, f, x) >= -1e-12);
    }
}

TEST_CASE("empirical positivity of the case exemplars")
{
    const auto g = grid_step(0.0, 2.0, 0.1);
    for (auto c : {PositivityCase::Case1, PositivityCase::Case2, PositivityCase::Case4})
        CHECK(empirical_positivity(case_exemplar(c), 10, g, 120).min_weight >= -1e-12);
    for (auto c : {PositivityCase::Case5, PositivityCase::Case6})
        CHECK(empirical_positivity(case_exemplar(c), 10, g, 120).min_weight < 0.0);

    // Case 3 (a0 = 3/2, a1 = 2): b(0, n) = a0 - a1 = -1/2 multiplies p_{n+1,0}(0) = 1
    const auto r3 = empirical_positivity(case_exemplar(PositivityCase::Case3), 10, g, 120);
    CHECK(r3.min_weight == doctest::Approx(-0.5));
    CHECK(r3.argmin_k == 1);
    CHECK(r3.argmin_x == 0.0);
}

TEST_CASE("apply_grid matches pointwise apply and is deterministic")
{
    clear_coefficient_cache();
    const auto f = damped_sin();
    const auto kind = OperatorKind::mod2();
    const auto a = apply_grid(kind, 30, f, grid11);
    clear_coefficient_cache();
    const auto b = apply_grid(kind, 30, f, grid11);
    REQUIRE(a.size() == grid11.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i] == apply(kind, 30, f, grid11[i]));
    }
    CHECK(coefficient_cache_size() > 0);
}

TEST_CASE("apply input validation")
{
    CHECK_THROWS_AS(apply(OperatorKind::durrmeyer(), 10, exp_neg(), -0.5), DomainError);
    CHECK_THROWS_AS(apply(OperatorKind::durrmeyer(), 10, exp_neg(), 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(apply(OperatorKind::durrmeyer(), 4, make_monomial(3), 1.0), DivergentMoment);
    TestFunction unbounded;
    unbounded.id = "exp";
    unbounded.eval = [](double t) { return std::exp(t); };
    CHECK_THROWS_AS(apply(OperatorKind::durrmeyer(), 10, unbounded, 1.0), UnboundedFunction);
}
