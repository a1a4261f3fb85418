#include "bdm/kinds.hpp"

#include "bdm/errors.hpp"

namespace bdm
{

namespace
{

// Coefficients of (u0 + u1 n)(v0 + v1 n) in powers of n.
std::array<BigRat, 3> product(const BigRat &u0, const BigRat &u1, const BigRat &v0, const BigRat &v1)
{
    return {u0 * v0, u0 * v1 + u1 * v0, u1 * v1};
}

} // namespace

SequenceSpec SequenceSpec::make(RationalFn a0, RationalFn a1, bool allow_unnormalized)
{
    if (!a0.denominator_nonzero_from(4) || !a1.denominator_nonzero_from(4))
        throw DomainError("sequence denominator vanishes for some n >= 4");
    SequenceSpec s{std::move(a0), std::move(a1)};
    if (!allow_unnormalized && !s.reproduces_constants())
        throw DomainError("sequences a0 = " + s.a0.to_string() + ", a1 = " + s.a1.to_string() +
                          " violate 2 a0(n) - a1(n) = 1");
    return s;
}

SequenceSpec SequenceSpec::constants(BigRat a0, BigRat a1, bool allow_unnormalized)
{
    return make(RationalFn::constant(std::move(a0)), RationalFn::constant(std::move(a1)), allow_unnormalized);
}

SequenceSpec SequenceSpec::classical() { return constants(1, 1); }

bool SequenceSpec::reproduces_constants() const
{
    // 2 P Sd - R Q - Q Sd == 0 identically, with a0 = P/Q and a1 = R/Sd
    const auto t1 = product(a0.p0, a0.p1, a1.q0, a1.q1);
    const auto t2 = product(a1.p0, a1.p1, a0.q0, a0.q1);
    const auto t3 = product(a0.q0, a0.q1, a1.q0, a1.q1);
    for (std::size_t i = 0; i < 3; ++i)
        if (2 * t1[i] - t2[i] - t3[i] != 0) return false;
    return true;
}

std::string SequenceSpec::to_string() const { return "a0=" + a0.to_string() + ";a1=" + a1.to_string(); }

SecondOrderSequences SecondOrderSequences::classical()
{
    SecondOrderSequences s;
    s.a = 1;
    s.b = RationalFn::constant(2);
    s.c = RationalFn::constant(1);
    s.d = RationalFn::constant(-2);
    return s;
}

const SequenceSpec &OperatorKind::sequences() const
{
    if (!seq) throw DomainError("operator " + name() + " carries no sequence spec");
    return *seq;
}

std::string OperatorKind::name() const
{
    switch (tag) {
    case OperatorTag::Baskakov: return "baskakov";
    case OperatorTag::BaskakovDurrmeyer: return "durrmeyer";
    case OperatorTag::Mod1: return "mod1";
    case OperatorTag::Mod2: return "mod2";
    case OperatorTag::SplitA: return "splitA";
    case OperatorTag::SplitB: return "splitB";
    }
    return "unknown";
}

} // namespace bdm
