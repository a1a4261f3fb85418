#pragma once

#include <cstddef>
#include <vector>

namespace bdm
{

/// Truncated row of Baskakov basis values p_{n,k}(x), k = 0..K.
///
/// The sum of the omitted tail, sum_{k>K} p_{n,k}(x), is at most `tail_bound`.
struct BasisRow {
    int n = 1;
    double x = 0.0;
    std::vector<double> values;
    double tail_bound = 0.0;

    std::size_t K() const { return values.empty() ? 0 : values.size() - 1; }

    /// Entry p_{n,k}(x) for k <= K, and 0 for negative k.
    double at(long k) const { return k < 0 ? 0.0 : values.at(static_cast<std::size_t>(k)); }

    /// Compensated ascending-k sum of the stored values.
    double sum() const;
};

/// p_{n,k}(x) = C(n+k-1, k) x^k / (1+x)^{n+k}, evaluated in log space.
double eval_basis(int n, long k, double x);

/// Row of basis values from the ratio recurrence, truncated so that the
/// certified geometric tail bound is <= tol.
BasisRow basis_row(int n, double x, double tol);

/// Smallest K from the certified geometric-tail procedure. Requires x > 0.
long truncation_index(int n, double x, double tol);

/// Same procedure with the basis weighted by a factor g(k) whose growth
/// ratio g(k+1)/g(k) is non-increasing in k (polynomial growth, e.g. the
/// moment kernel). Guarantees sum_{k>K} p_{n,k}(x) g(k) <= tol.
/// `growth(k)` returns g(k+1)/g(k); `weight(k)` returns g(k).
template <typename Growth, typename Weight>
long truncation_index_weighted(int n, double x, double tol, Growth growth, Weight weight);

} // namespace bdm

#include "bdm/detail/basis_impl.hpp"
