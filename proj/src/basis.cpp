#include "bdm/basis.hpp"

#include "bdm/errors.hpp"

#include <cmath>
#include <string>

namespace bdm
{

namespace
{

void check_point(int n, double x, const char *who)
{
    if (n < 1) throw DomainError(std::string(who) + ": n must be >= 1, got " + std::to_string(n));
    if (!(x >= 0.0) || !std::isfinite(x))
        throw DomainError(std::string(who) + ": x must be finite and >= 0");
}

} // namespace

double BasisRow::sum() const
{
    // Neumaier summation, ascending k
    double s = 0.0, c = 0.0;
    for (double v : values) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    return s + c;
}

double eval_basis(int n, long k, double x)
{
    check_point(n, x, "eval_basis");
    if (k < 0) throw DomainError("eval_basis: k must be >= 0");
    if (x == 0.0) return k == 0 ? 1.0 : 0.0;
    // extended precision keeps the lgamma cancellation error well below double epsilon
    const long double nd = n, kd = static_cast<long double>(k), xd = x;
    if (k == 0) return static_cast<double>(std::exp(-nd * std::log1p(xd)));
    const long double log_binom = std::lgamma(nd + kd) - std::lgamma(kd + 1.0L) - std::lgamma(nd);
    return static_cast<double>(std::exp(log_binom + kd * std::log(xd) - (nd + kd) * std::log1p(xd)));
}

long truncation_index(int n, double x, double tol)
{
    return truncation_index_weighted(
        n, x, tol, [](long) { return 1.0; }, [](long) { return 1.0; });
}

BasisRow basis_row(int n, double x, double tol)
{
    check_point(n, x, "basis_row");
    if (!(tol > 0.0 && tol < 1.0)) throw DomainError("basis_row: tol must lie in (0, 1)");

    BasisRow row;
    row.n = n;
    row.x = x;
    if (x == 0.0) {
        row.values = {1.0};
        return row;
    }

    const long K = truncation_index(n, x, tol);
    const double r = x / (1.0 + x);
    const double q = 0.5 * (1.0 + r);
    row.values.resize(static_cast<std::size_t>(K) + 1);
    auto p = detail::ScaledTerm::from_log(-static_cast<double>(n) * std::log1p(x));
    for (long k = 0; k <= K; ++k) {
        row.values[static_cast<std::size_t>(k)] = p.value();
        p.mul((static_cast<double>(n + k) / static_cast<double>(k + 1)) * r);
    }
    row.tail_bound = row.values.back() * q / (1.0 - q);
    return row;
}

} // namespace bdm
