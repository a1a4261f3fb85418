#include "bdm/exact.hpp"

#include "bdm/errors.hpp"

#include <array>
#include <string>

namespace bdm
{

namespace
{

using StirlingTable = std::array<std::array<long, max_power + 1>, max_power + 1>;

constexpr StirlingTable make_stirling_table()
{
    StirlingTable t{};
    t[0][0] = 1;
    for (int s = 1; s <= max_power; ++s)
        for (int i = 1; i <= s; ++i) t[s][i] = i * t[s - 1][i] + t[s - 1][i - 1];
    return t;
}

constexpr StirlingTable stirling_table = make_stirling_table();

BigRat pow_rat(const BigRat &x, int e)
{
    BigRat r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

mpz_class binomial(int n, int k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

void check_x(const BigRat &x)
{
    if (x < 0) throw DomainError("exact: x must be >= 0, got " + to_string(x));
}

} // namespace

long stirling2(int s, int i)
{
    if (s < 0 || i < 0 || s > max_power || i > max_power)
        throw DomainError("stirling2: arguments must lie in 0.." + std::to_string(max_power));
    return stirling_table[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
}

BigRat falling_factorial_sum(long m, int s, const BigRat &x)
{
    if (m < 1) throw DomainError("falling_factorial_sum: m must be >= 1");
    if (s < 0 || s > max_power) throw DomainError("falling_factorial_sum: s must lie in 0..8");
    check_x(x);
    BigRat rising(1);
    for (int i = 0; i < s; ++i) rising *= m + i;
    return rising * pow_rat(x, s);
}

BigRat power_sum(const PowerSumQuery &q)
{
    if (q.r < 0 || q.r > 2) throw DomainError("power_sum: shift r must lie in 0..2");
    if (q.s < 0 || q.s > max_power) throw DomainError("power_sum: s must lie in 0..8");
    // sum_j p_{m,j} (j+r)^s = sum_i C(s,i) r^(s-i) sum_l S(i,l) falling_sum(m, l)
    std::array<BigRat, max_power + 1> falling;
    for (int l = 0; l <= q.s; ++l) falling[static_cast<std::size_t>(l)] = falling_factorial_sum(q.m, l, q.x);

    BigRat total(0);
    for (int i = 0; i <= q.s; ++i) {
        BigRat plain(0);
        for (int l = 0; l <= i; ++l) plain += stirling2(i, l) * falling[static_cast<std::size_t>(l)];
        mpz_class r_pow;
        mpz_ui_pow_ui(r_pow.get_mpz_t(), static_cast<unsigned long>(q.r), static_cast<unsigned long>(q.s - i));
        total += BigRat(binomial(q.s, i) * r_pow) * plain;
    }
    total.canonicalize();
    return total;
}

std::vector<long> kernel_numerator_coeffs(int j)
{
    if (j < 0) throw DomainError("kernel_numerator_coeffs: negative degree");
    std::vector<long> c{1};
    for (int i = 1; i <= j; ++i) {
        // multiply by (k + i)
        std::vector<long> next(c.size() + 1, 0);
        for (std::size_t s = 0; s < c.size(); ++s) {
            next[s] += i * c[s];
            next[s + 1] += c[s];
        }
        c = std::move(next);
    }
    return c;
}

namespace
{

BigRat kernel_denominator(long n, int j)
{
    if (n <= j + 1)
        throw DivergentMoment("moment of degree " + std::to_string(j) + " diverges for n = " + std::to_string(n) +
                              " (needs n > j+1)");
    BigRat den(1);
    for (int i = 2; i <= j + 1; ++i) den *= n - i;
    return den;
}

} // namespace

BigRat moment_kernel(long n, long k, int j)
{
    if (k < 0) throw DomainError("moment_kernel: k must be >= 0");
    if (j < 0) throw DomainError("moment_kernel: j must be >= 0");
    const BigRat den = kernel_denominator(n, j);
    BigRat num(1);
    for (int i = 1; i <= j; ++i) num *= k + i;
    BigRat v = num / den;
    v.canonicalize();
    return v;
}

BigRat exact_moment(const OperatorKind &kind, long n, const BigRat &x, int j)
{
    check_x(x);
    if (j < 0 || j > max_moment_degree) throw DomainError("exact_moment: j must lie in 0..6");
    if (n < 1) throw DomainError("exact_moment: n must be >= 1");

    if (kind.tag == OperatorTag::Baskakov) {
        BigRat v = power_sum({n, 0, j, x}) / pow_rat(BigRat(n), j);
        v.canonicalize();
        return v;
    }

    const BigRat den = kernel_denominator(n, j);
    const auto coeffs = kernel_numerator_coeffs(j);
    BigRat total(0);
    for (const auto &term : weight_terms<BigRat>(kind, n, x)) {
        BigRat contracted(0);
        for (std::size_t s = 0; s < coeffs.size(); ++s)
            contracted += coeffs[s] * power_sum({n + term.degree_offset, term.shift, static_cast<int>(s), x});
        total += term.coef * contracted;
    }
    total /= den;
    total.canonicalize();
    return total;
}

BigRat exact_central_moment(const OperatorKind &kind, long n, const BigRat &x, int order)
{
    if (order < 0 || order > max_moment_degree) throw DomainError("exact_central_moment: order must lie in 0..6");
    BigRat total(0);
    for (int i = 0; i <= order; ++i) {
        BigRat term = BigRat(binomial(order, i)) * pow_rat(-x, order - i) * exact_moment(kind, n, x, i);
        total += term;
    }
    total.canonicalize();
    return total;
}

BigRat exact_polynomial(const OperatorKind &kind, long n, const BigRat &x, std::span<const BigRat> coeffs)
{
    BigRat total(0);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != 0) total += coeffs[j] * exact_moment(kind, n, x, static_cast<int>(j));
    total.canonicalize();
    return total;
}

} // namespace bdm
