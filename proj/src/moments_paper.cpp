#include "bdm/moments_paper.hpp"

#include "bdm/errors.hpp"
#include "bdm/exact.hpp"

#include <string>

namespace bdm
{

namespace
{

using Coeffs = std::vector<long>;

BigRat poly(const Coeffs &c, const BigRat &x)
{
    BigRat v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

BigRat power(const BigRat &x, int e)
{
    BigRat r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

/// prod_{i=2..order+1} (n - i)
BigRat falling_denominator(long n, int order)
{
    BigRat d(1);
    for (int i = 2; i <= order + 1; ++i) d *= n - i;
    return d;
}

// First-order lines: [leading (2a0-a1) x^j] + sum_p n^p (a0 P_p(x) + a1 Q_p(x)) / den.
// Inner vectors are ascending powers of x; outer index is the power of n.
struct Mod1Line {
    int den_order;
    bool leading;
    std::vector<Coeffs> a0;
    std::vector<Coeffs> a1;
};

const std::vector<Mod1Line> &mod1_moment_lines()
{
    static const std::vector<Mod1Line> lines = {
        {0, true, {}, {}},
        {1, true, {{3, 6}}, {{-2, -4}}},
        {2, true, {{8, 10, -8}, {0, 10, 16}}, {{-6, -10, 2}, {0, -6, -10}}},
        {3,
         true,
         {{30, 54, 42, 60}, {0, 54, 63, -30}, {0, 0, 21, 30}},
         {{-24, -54, -42, -36}, {0, -36, -54, 6}, {0, 0, -12, -18}}},
        {4,
         true,
         {{144, 336, 382, 216, -192}, {0, 336, 573, 396, 408}, {0, 0, 191, 216, -72}, {0, 0, 0, 36, 48}},
         {{-120, -336, -382, -214, 72}, {0, -240, -501, -361, -248}, {0, 0, -119, -167, 12}, {0, 0, 0, -20, -28}}},
    };
    return lines;
}

const Mod1Line &mod1_central_line(int order)
{
    static const Mod1Line first{1, false, {{3, 6}}, {{-2, -4}}};
    static const Mod1Line second{2, false, {{-1, -8, -8}, {3, 16, 16}}, {{0, 2, 2}, {-2, -10, -10}}};
    static const Mod1Line fourth{4,
                                 false,
                                 {{144, 936, 2422, 2976, 1488}, {0, 216, 1005, 1584, 792}, {0, 0, 23, 48, 24}},
                                 {{-120, -816, -2182, -2734, -1368}, {0, -144, -681, -1077, -540}, {0, 0, -11, -23, -12}}};
    switch (order) {
    case 1: return first;
    case 2: return second;
    case 4: return fourth;
    default: throw DomainError("mod1_central_paper: published orders are 1, 2 and 4, got " + std::to_string(order));
    }
}

BigRat eval_mod1(const Mod1Line &line, const BigRat &a0, const BigRat &a1, long n, const BigRat &x, int j)
{
    BigRat bracket(0);
    BigRat n_pow(1);
    for (std::size_t p = 0; p < line.a0.size(); ++p) {
        bracket += n_pow * (a0 * poly(line.a0[p], x) + a1 * poly(line.a1[p], x));
        n_pow *= n;
    }
    BigRat v = bracket / falling_denominator(n, line.den_order);
    if (line.leading) v += (2 * a0 - a1) * power(x, j);
    v.canonicalize();
    return v;
}

// Second-order lines: [leading x^j] + sum_i x^i R_i(n) / den, R_i ascending in n.
struct Mod2Line {
    int den_order;
    bool leading;
    std::vector<Coeffs> by_x;
};

const std::vector<Mod2Line> &mod2_moment_lines()
{
    static const std::vector<Mod2Line> lines = {
        {0, true, {}},
        {0, true, {}},
        {2, true, {{-3}, {-16}, {-16}}},
        {3, false, {{-21}, {-114, -21}, {-132, -84}, {-48, -46, -9, 1}}},
        {4, false, {{-144}, {-864, -240}, {-1428, -1014, -78}, {-1008, -1032, -264}, {-264, -334, -133, -14, 1}}},
        {5,
         false,
         {{-1080},
          {-7200, -2400},
          {-15300, -11550, -1350},
          {-15840, -16860, -4890, -210},
          {-8160, -10640, -4560, -640},
          {-1680, -2516, -1360, -305, -20, 1}}},
        {6,
         false,
         {{-9000},
          {-66240, -24480},
          {-171000, -134100, -18900},
          {-231840, -252960, -78840, -5160},
          {-176760, -235050, -105375, -16950, -465},
          {-72000, -109680, -61320, -14880, -1320},
          {-12240, -20628, -13436, -4185, -605, -27, 1}}},
    };
    return lines;
}

const std::vector<Mod2Line> &mod2_central_lines()
{
    static const std::vector<Mod2Line> lines = {
        {0, false, {}},
        {0, false, {}},
        {2, false, {{-3}, {-16}, {-16}}},
        {3, false, {{-21}, {-150, -12}, {-324, -36}, {-216, -24}}},
        {4, false, {{-144}, {-1284, -156}, {-4068, -816, -12}, {-5568, -1320, -24}, {-2784, -660, -12}}},
        {5,
         false,
         {{-1080},
          {-11520, -1680},
          {-47520, -12120, -360},
          {-96480, -31680, -1440},
          {-97200, -35400, -1800},
          {-38880, -14160, -720}}},
        {6,
         false,
         {{-9000},
          {-111600, -18000},
          {-564120, -163620, -6660},
          {-1506960, -584040, -39960, -240},
          {-2258280, -1024020, -86580, -720},
          {-1805760, -878400, -79920, -720},
          {-601920, -292800, -26640, -240}}},
    };
    return lines;
}

BigRat eval_mod2(const Mod2Line &line, long n, const BigRat &x, int j)
{
    BigRat sum(0);
    BigRat x_pow(1);
    for (const auto &coeffs : line.by_x) {
        BigRat in_n(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) in_n = in_n * n + *it;
        sum += in_n * x_pow;
        x_pow *= x;
    }
    BigRat v = sum / falling_denominator(n, line.den_order);
    if (line.leading) v += power(x, j);
    v.canonicalize();
    return v;
}

void require_n(long n, long n_min, const char *who)
{
    if (n < n_min) throw DomainError(std::string(who) + ": n must be >= " + std::to_string(n_min));
}

} // namespace

BigRat mod1_moment_paper(const SequenceSpec &spec, long n, const BigRat &x, int j)
{
    require_n(n, 6, "mod1_moment_paper");
    if (j < 0 || j > 4) throw DomainError("mod1_moment_paper: published degrees are 0..4");
    return eval_mod1(mod1_moment_lines()[static_cast<std::size_t>(j)], spec.a0(n), spec.a1(n), n, x, j);
}

BigRat mod1_central_paper(const SequenceSpec &spec, long n, const BigRat &x, int order)
{
    require_n(n, 6, "mod1_central_paper");
    return eval_mod1(mod1_central_line(order), spec.a0(n), spec.a1(n), n, x, order);
}

CorollaryLimits corollary_limits(const BigRat &l, const BigRat &m, const BigRat &x)
{
    const BigRat x2 = x * x;
    CorollaryLimits c;
    c.lim1 = (1 + 2 * x) * (3 * l - 2 * m);
    c.lim2 = l * (3 + 16 * x + 16 * x2) - m * (2 + 10 * x + 10 * x2);
    c.lim4 = l * x2 * (23 + 48 * x + 24 * x2) - m * x2 * (11 + 23 * x + 12 * x2);
    c.lim1.canonicalize();
    c.lim2.canonicalize();
    c.lim4.canonicalize();
    return c;
}

std::tuple<double, double, double> corollary_limits(double l, double m, double x)
{
    const double x2 = x * x;
    return {(1 + 2 * x) * (3 * l - 2 * m), l * (3 + 16 * x + 16 * x2) - m * (2 + 10 * x + 10 * x2),
            l * x2 * (23 + 48 * x + 24 * x2) - m * x2 * (11 + 23 * x + 12 * x2)};
}

BigRat mod2_moment_paper(long n, const BigRat &x, int j)
{
    require_n(n, 8, "mod2_moment_paper");
    if (j < 0 || j > 6) throw DomainError("mod2_moment_paper: published degrees are 0..6");
    return eval_mod2(mod2_moment_lines()[static_cast<std::size_t>(j)], n, x, j);
}

BigRat mod2_central_paper(long n, const BigRat &x, int order)
{
    require_n(n, 8, "mod2_central_paper");
    if (order < 1 || order > 6) throw DomainError("mod2_central_paper: published orders are 1..6");
    return eval_mod2(mod2_central_lines()[static_cast<std::size_t>(order)], n, x, order);
}

BigRat split_moments_paper(const SequenceSpec &spec, long n, const BigRat &x, int j, SplitPart which)
{
    require_n(n, 4, "split_moments_paper");
    if (j < 0 || j > 2) throw DomainError("split_moments_paper: published degrees are 0..2");
    const BigRat a0 = spec.a0(n), a1 = spec.a1(n);
    const BigRat d1(n - 2), d2 = BigRat(n - 2) * (n - 3);
    const BigRat x2 = x * x;
    BigRat v;
    if (which == SplitPart::A) {
        const BigRat base = a1 * (1 - x);
        switch (j) {
        case 0: v = base; break;
        case 1: v = base * (x + (3 * x + 1) / d1) + a1 / d1; break;
        default:
            v = base * (x2 + (8 * n * x2 - 4 * x2 + 4 * (n + 1) * x) / d2 + (2 * a1 * n + 6 * a1) / d2);
            break;
        }
    } else {
        const BigRat base = a1 * x - 2 * a0;
        switch (j) {
        case 0: v = base; break;
        case 1: v = base * (x + 3 * x / d1) + (2 * a1 * x - 3 * a0) / d1; break;
        default:
            v = base * (x2 + (8 * n * x2 - 4 * x2) / d2) +
                (n * x * (6 * a1 - 10 * a0) + 9 * a1 - 10 * a0 * x + 3 * a1 - 8 * a0) / d2;
            break;
        }
    }
    v.canonicalize();
    return v;
}

PositivityCase classify_case(const SequenceSpec &spec, long n)
{
    const BigRat a0 = spec.a0(n), a1 = spec.a1(n);
    if (2 * a0 - a1 != 1) return PositivityCase::Violates;
    if (a0 == 1) return PositivityCase::Case1;
    if (a1 == 0) return PositivityCase::Case2;
    if (a1 == -1) return PositivityCase::Case5;
    if (a1 > 1) return PositivityCase::Case3;
    if (a1 > 0) return PositivityCase::Case4;
    if (a1 < -1) return PositivityCase::Case6;
    return PositivityCase::Case7;
}

std::optional<bool> claimed_positive(PositivityCase c)
{
    switch (c) {
    case PositivityCase::Case1:
    case PositivityCase::Case2:
    case PositivityCase::Case3:
    case PositivityCase::Case4: return true;
    case PositivityCase::Case5:
    case PositivityCase::Case6: return false;
    default: return std::nullopt;
    }
}

std::string to_string(PositivityCase c)
{
    switch (c) {
    case PositivityCase::Case1: return "Case1";
    case PositivityCase::Case2: return "Case2";
    case PositivityCase::Case3: return "Case3";
    case PositivityCase::Case4: return "Case4";
    case PositivityCase::Case5: return "Case5";
    case PositivityCase::Case6: return "Case6";
    case PositivityCase::Case7: return "Case7";
    case PositivityCase::Violates: return "Violates(2a0-a1=1)";
    }
    return "?";
}

SequenceSpec case_exemplar(PositivityCase c)
{
    switch (c) {
    case PositivityCase::Case1: return SequenceSpec::constants(1, 1);
    case PositivityCase::Case2: return SequenceSpec::constants(make_rat(1, 2), 0);
    case PositivityCase::Case3: return SequenceSpec::constants(make_rat(3, 2), 2);
    case PositivityCase::Case4: return SequenceSpec::constants(make_rat(3, 4), make_rat(1, 2));
    case PositivityCase::Case5: return SequenceSpec::constants(0, -1);
    case PositivityCase::Case6: return SequenceSpec::constants(-1, -3);
    case PositivityCase::Case7: return SequenceSpec::constants(make_rat(1, 4), make_rat(-1, 2));
    case PositivityCase::Violates: return SequenceSpec::constants(1, 0, true);
    }
    throw DomainError("case_exemplar: unknown case");
}

MomentComparison compare_moment(const OperatorKind &kind, long n, const BigRat &x, int degree, bool central)
{
    MomentComparison row{kind, n, x, degree, central, std::nullopt, BigRat(0), false, BigRat(0), {}};
    row.oracle_value = central ? exact_central_moment(kind, n, x, degree) : exact_moment(kind, n, x, degree);

    switch (kind.tag) {
    case OperatorTag::BaskakovDurrmeyer:
    case OperatorTag::Mod1: {
        const SequenceSpec spec = kind.tag == OperatorTag::Mod1 ? kind.sequences() : SequenceSpec::classical();
        if (!central)
            row.paper_value = mod1_moment_paper(spec, n, x, degree);
        else if (degree == 1 || degree == 2 || degree == 4)
            row.paper_value = mod1_central_paper(spec, n, x, degree);
        else
            row.note = "no published formula";
        break;
    }
    case OperatorTag::Mod2:
        row.paper_value = central ? mod2_central_paper(n, x, degree) : mod2_moment_paper(n, x, degree);
        if (central && degree == 6) row.note = "denominator factor (n-) read as (n-5)";
        break;
    case OperatorTag::SplitA:
    case OperatorTag::SplitB:
        if (central)
            row.note = "no published formula";
        else
            row.paper_value = split_moments_paper(kind.sequences(), n, x, degree,
                                                  kind.tag == OperatorTag::SplitA ? SplitPart::A : SplitPart::B);
        break;
    case OperatorTag::Baskakov:
        throw DomainError("compare_moment: no published moment formulas for the Baskakov operator");
    }

    if (row.paper_value) {
        row.discrepancy = *row.paper_value - row.oracle_value;
        row.discrepancy.canonicalize();
        row.match = row.discrepancy == 0;
    }
    return row;
}

std::vector<MomentComparison> moment_report(const OperatorKind &kind, long n, const BigRat &x, int max_degree,
                                            bool central)
{
    std::vector<MomentComparison> rows;
    for (int j = central ? 1 : 0; j <= max_degree; ++j) rows.push_back(compare_moment(kind, n, x, j, central));
    return rows;
}

} // namespace bdm

namespace bdm
{

BigRat proof_power_sum_paper(long n, const BigRat &x, int r, int s)
{
    if (r < 0 || r > 1 || s < 1 || s > 4) throw DomainError("proof_power_sum_paper: r in {0,1}, s in 1..4");
    const BigRat N1(n + 1), N2(n + 2), N3(n + 3), N4(n + 4);
    const BigRat f1 = N1 * x;
    const BigRat f2 = N1 * N2 * x * x;
    const BigRat f3 = N1 * N2 * N3 * x * x * x;
    const BigRat f4 = N1 * N2 * N3 * N4 * x * x * x * x;
    BigRat v;
    if (r == 0) {
        switch (s) {
        case 1: v = f1; break;
        case 2: v = f2 + f1; break;
        case 3: v = f3 + 3 * f2 + f1; break;
        default: v = f4 + 6 * f3 + 7 * f2 + f1; break;
        }
    } else {
        switch (s) {
        case 1: v = f1 + 1; break;
        case 2: v = f2 + 3 * f1 + 1; break;
        case 3: v = f3 + 6 * f2 + 7 * f1 + 1; break;
        default: v = f4 + 10 * f3 + 24 * f2 + 15 * f1 + 1; break;
        }
    }
    v.canonicalize();
    return v;
}

BigRat second_order_power_sum_paper(long n, const BigRat &x, int r, int s)
{
    if (r < 0 || r > 2 || s < 0 || s > 2) throw DomainError("second_order_power_sum_paper: r in 0..2, s in 0..2");
    const BigRat N2(n + 2), N3(n + 3);
    if (s == 0) return 1;
    if (s == 1) {
        BigRat v = N2 * x + r;
        v.canonicalize();
        return v;
    }
    static const long linear[] = {1, 3, 5};
    static const long constant[] = {0, 1, 4};
    BigRat v = N3 * N2 * x * x + linear[r] * N2 * x + constant[r];
    v.canonicalize();
    return v;
}

} // namespace bdm
