#include "bdm/basis.hpp"
#include "bdm/errors.hpp"
#include "bdm/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bdm;

namespace
{

// C(n+k-1, k) x^k / (1+x)^{n+k} in exact arithmetic.
BigRat basis_exact(long n, long k, const BigRat &x)
{
    BigRat c(1);
    for (long i = 1; i <= k; ++i)
        c = c * BigRat(n + i - 1) / BigRat(i);
    BigRat xk(1), den(1);
    for (long i = 0; i < k; ++i)
        xk *= x;
    for (long i = 0; i < n + k; ++i)
        den *= (1 + x);
    return c * xk / den;
}

} // namespace

TEST_CASE("eval_basis reference values")
{
    CHECK(eval_basis(3, 0, 1.0) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(eval_basis(1, 1, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
    const double expect = to_double(basis_exact(4, 2, make_rat(1, 2)));
    CHECK(expect == doctest::Approx(0.21947873799725653).epsilon(1e-15));
    CHECK(eval_basis(4, 2, 0.5) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("eval_basis edge cases")
{
    CHECK_THROWS_AS(eval_basis(5, -1, 0.7), DomainError);
    CHECK(eval_basis(5, 0, 0.0) == 1.0);
    CHECK(eval_basis(5, 3, 0.0) == 0.0);
    // large n stays finite and non-negative
    const double v = eval_basis(5000, 5000, 1.0);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
}

TEST_CASE("eval_basis matches the exact oracle on random dyadic points")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> nd(1, 60), kd(0, 80), xd(1, 64);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = nd(rng);
        const long k = kd(rng);
        const BigRat x = make_rat(xd(rng), 16);
        const double e = to_double(basis_exact(n, k, x));
        const double v = eval_basis(n, k, to_double(x));
        if (e < 1e-290) continue;
        CHECK(std::abs(v - e) <= 1e-13 * e);
    }
}

TEST_CASE("basis_row at x = 0 is the unit row")
{
    const BasisRow row = basis_row(10, 0.0, 1e-12);
    REQUIRE(row.values.size() == 1);
    CHECK(row.values[0] == 1.0);
    CHECK(row.tail_bound == 0.0);
}

TEST_CASE("basis_row agrees with eval_basis and sums to one")
{
    for (int n : {1, 3, 10, 100, 1000}) {
        for (double x : {1e-6, 0.1, 0.5, 1.0, 2.0, 5.0}) {
            const BasisRow row = basis_row(n, x, 1e-13);
            for (std::size_t k = 0; k < row.values.size(); k += 1 + row.values.size() / 50) {
                const double e = eval_basis(n, static_cast<long>(k), x);
                if (e < 1e-250) continue;
                CHECK(std::abs(row.values[k] - e) <= 1e-11 * e);
            }
            CHECK(std::abs(row.sum() - 1.0) <= 1e-12);
            CHECK(row.tail_bound <= 1e-13);
        }
    }
}

TEST_CASE("truncation_index sizes")
{
    CHECK(truncation_index(10, 1e-8, 1e-14) <= 3);
    CHECK(truncation_index(100, 1.0, 1e-14) >= 100);
}

TEST_CASE("certified tail is an upper bound for the omitted mass")
{
    for (int n : {2, 10, 100}) {
        for (double x : {0.05, 0.5, 1.0, 2.0}) {
            for (double tol : {1e-6, 1e-10, 1e-14}) {
                const long K = truncation_index(n, x, tol);
                // oversummation oracle: sum the next 10 sqrt(K) + 200 terms directly
                const long extra = static_cast<long>(10.0 * std::sqrt(static_cast<double>(K + 1))) + 200;
                double tail = 0.0;
                for (long k = K + 1; k <= K + extra; ++k)
                    tail += eval_basis(n, k, x);
                CHECK(tail <= tol);
            }
        }
    }
}
