#pragma once

#include "bdm/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bdm
{

/// Coefficient sequences a0(n), a1(n) of the first-order modification.
struct SequenceSpec {
    RationalFn a0;
    RationalFn a1;

    /// Validating constructor: denominators must not vanish for n >= 4 and,
    /// unless `allow_unnormalized`, 2 a0(n) - a1(n) = 1 must hold identically in n.
    static SequenceSpec make(RationalFn a0, RationalFn a1, bool allow_unnormalized = false);
    static SequenceSpec constants(BigRat a0, BigRat a1, bool allow_unnormalized = false);

    /// Classical choice a0 = a1 = 1.
    static SequenceSpec classical();

    /// 2 a0(n) - a1(n) == 1 as an identity of rational functions.
    bool reproduces_constants() const;

    std::string to_string() const;
};

/// Second-order sequences a(n), b(n), c(n), d(n). The default members are the
/// values that make the operator reproduce 1 and t: 3/2, 2-n, -n, 2n.
struct SecondOrderSequences {
    BigRat a{3, 2};
    RationalFn b{2, -1, 1, 0};
    RationalFn c{0, -1, 1, 0};
    RationalFn d{0, 2, 1, 0};

    static SecondOrderSequences boosted() { return {}; }
    /// a = c = 1, b = 2, d = -2 collapses to the Baskakov-Durrmeyer weights.
    static SecondOrderSequences classical();
};

enum class OperatorTag { Baskakov, BaskakovDurrmeyer, Mod1, Mod2, SplitA, SplitB };

struct OperatorKind {
    OperatorTag tag = OperatorTag::BaskakovDurrmeyer;
    std::optional<SequenceSpec> seq;

    static OperatorKind baskakov() { return {OperatorTag::Baskakov, std::nullopt}; }
    static OperatorKind durrmeyer() { return {OperatorTag::BaskakovDurrmeyer, std::nullopt}; }
    static OperatorKind mod1(SequenceSpec s) { return {OperatorTag::Mod1, std::move(s)}; }
    static OperatorKind mod2() { return {OperatorTag::Mod2, std::nullopt}; }
    static OperatorKind split_a(SequenceSpec s) { return {OperatorTag::SplitA, std::move(s)}; }
    static OperatorKind split_b(SequenceSpec s) { return {OperatorTag::SplitB, std::move(s)}; }

    /// Uses integral coefficients (n-1) int p_{n,k} f rather than f(k/n).
    bool durrmeyer_type() const { return tag != OperatorTag::Baskakov; }
    const SequenceSpec &sequences() const;
    std::string name() const;
};

/// One term coef * p_{n+degree_offset, k-shift}(x) of an operator weight.
template <typename T>
struct WeightTerm {
    T coef;
    int degree_offset;
    int shift;
};

} // namespace bdm

#include "bdm/detail/weights_impl.hpp"
