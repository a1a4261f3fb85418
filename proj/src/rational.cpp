#include "bdm/rational.hpp"

#include "bdm/errors.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace bdm
{

BigRat make_rat(long num, long den)
{
    if (den == 0) throw DomainError("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BigRat rat_from_double(double v)
{
    if (!std::isfinite(v)) throw DomainError("rat_from_double: non-finite value");
    BigRat q(v); // mpq_set_d is exact
    q.canonicalize();
    return q;
}

double to_double(const BigRat &q) { return q.get_d(); }

std::string to_string(const BigRat &q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    std::string text(s);
    if (!text.empty() && text[0] == '+') text.erase(0, 1);
    return mpz_class(text, 10);
}

// [sign] digits [. digits] [e|E [sign] digits]
BigRat parse_decimal(std::string_view s)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
    std::string digits;
    long frac_len = 0;
    bool seen_dot = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw ParseError("malformed number: " + std::string(s));
            seen_dot = true;
            continue;
        }
        digits.push_back(s[i]);
        if (seen_dot) ++frac_len;
    }
    if (digits.empty()) throw ParseError("malformed number: " + std::string(s));
    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        auto rest = s.substr(i + 1);
        if (!is_integer_literal(rest)) throw ParseError("malformed exponent: " + std::string(s));
        exponent = std::stol(std::string(rest));
        i = s.size();
    }
    if (i != s.size()) throw ParseError("malformed number: " + std::string(s));

    BigRat q(mpz_class(digits, 10));
    long shift = exponent - frac_len;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        q *= ten_pow;
    else
        q /= ten_pow;
    q.canonicalize();
    return negative ? BigRat(-q) : q;
}

} // namespace

BigRat parse_rational(std::string_view text)
{
    if (text.empty()) throw ParseError("empty number");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_integer_literal(num)) throw ParseError("bad numerator '" + std::string(num) + "'");
        if (!is_integer_literal(den)) throw ParseError("bad denominator '" + std::string(den) + "'");
        mpz_class d = parse_integer(den);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        BigRat q(parse_integer(num), d);
        q.canonicalize();
        return q;
    }
    if (is_integer_literal(text)) return BigRat(parse_integer(text));
    return parse_decimal(text);
}

RationalFn RationalFn::constant(BigRat c) { return RationalFn{std::move(c), 0, 1, 0}; }

bool RationalFn::is_constant() const
{
    // (p0 + p1 n)/(q0 + q1 n) is constant iff p0 q1 == p1 q0
    return p0 * q1 == p1 * q0;
}

BigRat RationalFn::operator()(long n) const
{
    BigRat den = q0 + q1 * n;
    if (den == 0) throw DomainError("sequence denominator vanishes at n = " + std::to_string(n));
    BigRat v = (p0 + p1 * n) / den;
    v.canonicalize();
    return v;
}

BigRat RationalFn::limit() const
{
    if (q1 != 0) {
        BigRat v = p1 / q1;
        v.canonicalize();
        return v;
    }
    if (p1 != 0) throw DomainError("sequence " + to_string() + " has no finite limit");
    BigRat v = p0 / q0;
    v.canonicalize();
    return v;
}

bool RationalFn::denominator_nonzero_from(long n_min) const
{
    if (q1 == 0) return q0 != 0;
    BigRat root = -q0 / q1;
    root.canonicalize();
    if (root.get_den() != 1) return true;
    return root < n_min;
}

std::string RationalFn::to_string() const
{
    if (p1 == 0 && q1 == 0) {
        BigRat c = p0 / q0;
        c.canonicalize();
        return bdm::to_string(c);
    }
    return "(" + bdm::to_string(p0) + "+" + bdm::to_string(p1) + "n)/(" + bdm::to_string(q0) + "+" +
           bdm::to_string(q1) + "n)";
}

} // namespace bdm
