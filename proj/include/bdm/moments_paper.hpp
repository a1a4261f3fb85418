#pragma once

#include "bdm/kinds.hpp"
#include "bdm/rational.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace bdm
{

/// Closed-form moment formulas as published, transcribed one term per
/// displayed monomial and evaluated exactly. These are the objects under
/// test; the exact oracle in exact.hpp is the reference.

/// V_{n,1}(t^j; x), j = 0..4, requires n >= 6.
BigRat mod1_moment_paper(const SequenceSpec &spec, long n, const BigRat &x, int j);

/// V_{n,1}((t-x)^order; x) for order in {1, 2, 4}; order 3 is not published.
BigRat mod1_central_paper(const SequenceSpec &spec, long n, const BigRat &x, int order);

/// Limits of n * central moments of orders 1, 2, 4 for lim a0 = l, lim a1 = m.
struct CorollaryLimits {
    BigRat lim1, lim2, lim4;
};
CorollaryLimits corollary_limits(const BigRat &l, const BigRat &m, const BigRat &x);
std::tuple<double, double, double> corollary_limits(double l, double m, double x);

/// Boosted second-order operator: moments j = 0..6 and central moments 1..6, n >= 8.
/// The published order-6 central denominator has a missing factor, read as (n-5).
BigRat mod2_moment_paper(long n, const BigRat &x, int j);
BigRat mod2_central_paper(long n, const BigRat &x, int order);

enum class SplitPart { A, B };

/// A_{n,1}(t^j; x) or B_{n,1}(t^j; x), j = 0..2, n >= 4.
BigRat split_moments_paper(const SequenceSpec &spec, long n, const BigRat &x, int j, SplitPart which);

enum class PositivityCase { Case1, Case2, Case3, Case4, Case5, Case6, Case7, Violates };

/// Which of the seven sequence cases (a0(n), a1(n)) falls into at this n.
PositivityCase classify_case(const SequenceSpec &spec, long n);

/// Published positivity claim: true for Cases 1-4, false for 5-6, none for Case 7.
std::optional<bool> claimed_positive(PositivityCase c);

std::string to_string(PositivityCase c);

/// Exemplar constant sequences for each case (a0, a1).
SequenceSpec case_exemplar(PositivityCase c);

struct MomentComparison {
    OperatorKind kind;
    long n = 0;
    BigRat x;
    int degree = 0;
    bool central = false;
    std::optional<BigRat> paper_value; ///< empty when no published formula exists
    BigRat oracle_value;
    bool match = false;
    BigRat discrepancy; ///< paper - oracle
    std::string note;
};

/// Compare one published moment against the exact oracle. Supported kinds:
/// durrmeyer (as Mod1 with a0 = a1 = 1), mod1, mod2, splitA, splitB.
MomentComparison compare_moment(const OperatorKind &kind, long n, const BigRat &x, int degree, bool central);

/// Rows for degrees 0..max_degree (central: 1..max_degree).
std::vector<MomentComparison> moment_report(const OperatorKind &kind, long n, const BigRat &x, int max_degree,
                                            bool central);

} // namespace bdm

namespace bdm
{

/// Published right-hand side of sum_k p_{n+1,k-r}(x) k^s for r in {0, 1}, s in 1..4.
BigRat proof_power_sum_paper(long n, const BigRat &x, int r, int s);

/// Published sum_k p_{n+2,k-r}(x) k^s for r in 0..2, s in 0..2 (second-order section).
BigRat second_order_power_sum_paper(long n, const BigRat &x, int r, int s);

} // namespace bdm
