#include "bdm/cli.hpp"

#include "bdm/errors.hpp"
#include "bdm/exact.hpp"
#include "bdm/format.hpp"
#include "bdm/moments_paper.hpp"
#include "bdm/operators.hpp"
#include "bdm/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace bdm::cli
{

namespace
{

constexpr const char *version = "0.1.0";

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

BigRat parse_integer_token(std::string_view tok)
{
    BigRat v = parse_rational(tok);
    if (v.get_den() != 1 || tok.find_first_of("./eE") != std::string_view::npos)
        throw ParseError("expected an integer, got '" + std::string(tok) + "'");
    return v;
}

double parse_real(std::string_view text, const char *flag)
{
    try {
        return to_double(parse_rational(text));
    } catch (const ParseError &e) {
        throw ParseError(std::string(flag) + ": " + e.what());
    }
}

struct Options {
    std::string op;
    std::string a0, a1;
    std::optional<long> n;
    std::string n_list;
    std::string f;
    std::string x;
    std::optional<std::string> x_min, x_max;
    int points = 0;
    std::string interval = "0:2";
    double tol = 1e-10;
    std::string out;
    std::optional<int> max_degree;
    long k_max = 120;
    bool allow_unnormalized = false;
};

SequenceSpec sequences_from(const Options &o)
{
    if (o.a0.empty() || o.a1.empty()) throw ParseError("--a0 and --a1 are required for mod1");
    return SequenceSpec::make(parse_sequence(o.a0), parse_sequence(o.a1), o.allow_unnormalized);
}

OperatorKind kind_from(const Options &o)
{
    if (o.op == "baskakov") return OperatorKind::baskakov();
    if (o.op == "durrmeyer") return OperatorKind::durrmeyer();
    if (o.op == "mod2") return OperatorKind::mod2();
    if (o.op == "mod1") return OperatorKind::mod1(sequences_from(o));
    throw ParseError("--op must be one of baskakov, durrmeyer, mod1, mod2; got '" + o.op + "'");
}

TestFunction function_from(const Options &o)
{
    if (o.f.empty()) throw ParseError("--f is required");
    auto f = find_function(o.f);
    if (!f) {
        std::string names;
        for (const auto &name : function_names()) names += (names.empty() ? "" : ", ") + name;
        throw ParseError("unknown function '" + o.f + "' (known: " + names + ")");
    }
    return *f;
}

long require_n(const Options &o)
{
    if (!o.n) throw ParseError("--n is required");
    if (*o.n < 1) throw ParseError("--n must be positive");
    return *o.n;
}

std::vector<long> n_list_or(const Options &o, std::string_view fallback)
{
    if (!o.n_list.empty()) return parse_n_list(o.n_list);
    if (o.n) return {*o.n};
    return parse_n_list(fallback);
}

void write_meta(std::ostream &os, const std::string &command, const Options &o)
{
    os << "# command=" << command << "\n";
    if (!o.op.empty()) os << "# op=" << o.op << "\n";
    if (o.op == "mod1") os << "# a0=" << o.a0 << "\n# a1=" << o.a1 << "\n";
    if (!o.f.empty()) os << "# f=" << o.f << "\n";
    os << "# tol=" << format_double(o.tol) << "\n";
    os << "# version=" << version << "\n";
}

std::vector<double> x_points(const Options &o)
{
    if (!o.x.empty()) {
        if (o.x_min || o.x_max) throw ParseError("use either --x or --x-min/--x-max, not both");
        return {parse_real(o.x, "--x")};
    }
    if (!o.x_min || !o.x_max) throw ParseError("need --x or both --x-min and --x-max");
    const double lo = parse_real(*o.x_min, "--x-min"), hi = parse_real(*o.x_max, "--x-max");
    const int points = o.points == 0 ? 2 : o.points;
    if (points < 1) throw ParseError("--points must be positive");
    if (points == 1) return {lo};
    if (!(hi > lo)) throw ParseError("--x-max must exceed --x-min");
    return uniform_grid({lo, hi}, points);
}

void cmd_eval(const Options &o, std::ostream &os)
{
    const auto kind = kind_from(o);
    const long n = require_n(o);
    const auto f = function_from(o);
    const auto xs = x_points(o);
    const auto values = apply_grid(kind, n, f, xs, o.tol);
    write_meta(os, "eval", o);
    os << "# n=" << n << "\n";
    os << "x,value\n";
    for (std::size_t i = 0; i < xs.size(); ++i) os << format_double(xs[i]) << "," << format_double(values[i]) << "\n";
}

void cmd_moments(const Options &o, std::ostream &os, bool central)
{
    if (o.op != "mod1" && o.op != "mod2" && o.op != "durrmeyer")
        throw ParseError("--op must be durrmeyer, mod1 or mod2 (published formulas exist only for these)");
    const auto kind = kind_from(o);
    const long n = require_n(o);
    if (o.x.empty()) throw ParseError("--x is required");
    const BigRat x = parse_rational(o.x);
    if (x < 0) throw ParseError("--x must be >= 0");
    const int top = o.op == "mod2" ? 6 : 4;
    const int max_degree = o.max_degree.value_or(top);
    if (max_degree < (central ? 1 : 0) || max_degree > top)
        throw ParseError("--max-degree must lie in " + std::to_string(central ? 1 : 0) + ".." + std::to_string(top));
    const long n_min = o.op == "mod2" ? 8 : 6;
    if (n < n_min) throw ParseError("published formulas need --n >= " + std::to_string(n_min));

    const auto rows = moment_report(kind, n, x, max_degree, central);
    write_meta(os, central ? "central-moments" : "moments", o);
    os << "# n=" << n << "\n# x=" << to_string(x) << "\n";
    os << "j,paper_value,oracle_value,match\n";
    for (const auto &r : rows) {
        os << r.degree << "," << (r.paper_value ? to_string(*r.paper_value) : "") << ","
           << to_string(r.oracle_value) << "," << (r.paper_value ? (r.match ? "true" : "false") : "na") << "\n";
    }
    for (const auto &r : rows) {
        if (r.paper_value && !r.match)
            os << "# mismatch j=" << r.degree << " discrepancy=" << to_string(r.discrepancy) << "\n";
        if (!r.note.empty()) os << "# note j=" << r.degree << ": " << r.note << "\n";
    }
}

void cmd_converge(const Options &o, std::ostream &os)
{
    const auto kind = kind_from(o);
    const auto f = function_from(o);
    const auto ns = n_list_or(o, "16,32,64,128,256");
    const Interval iv = parse_interval(o.interval);
    const int points = o.points == 0 ? 41 : o.points;

    std::vector<double> errors;
    for (long n : ns) errors.push_back(sup_error(kind, n, f, iv, points, o.tol));
    write_meta(os, "converge", o);
    os << "# interval=" << format_double(iv.a) << ":" << format_double(iv.b) << "\n# points=" << points << "\n";
    os << "n,sup_error\n";
    for (std::size_t i = 0; i < ns.size(); ++i) os << ns[i] << "," << format_double(errors[i]) << "\n";
    std::string slope = "nan", r2 = "nan";
    if (ns.size() >= 3) {
        try {
            const auto fit = fit_order(ns, errors);
            slope = format_double(fit.slope);
            r2 = format_double(fit.r_squared);
        } catch (const ZeroError &) {
        }
    }
    os << "# slope=" << slope << "\n# r2=" << r2 << "\n";
}

void cmd_voronovskaja(const Options &o, std::ostream &os)
{
    const auto kind = kind_from(o);
    int order = 0;
    if (o.op == "mod1" || o.op == "durrmeyer")
        order = 1;
    else if (o.op == "mod2")
        order = 2;
    else
        throw ParseError("voronovskaja supports --op durrmeyer, mod1 or mod2");
    const auto f = function_from(o);
    const double x = o.x.empty() ? 1.0 : parse_real(o.x, "--x");
    if (x < 0) throw ParseError("--x must be >= 0");
    const auto ns = n_list_or(o, "100,200,400,800");

    const auto rep = voronovskaja_residuals(order, kind, f, x, ns, o.tol);
    write_meta(os, "voronovskaja", o);
    os << "# x=" << format_double(x) << "\n# order=" << order << "\n";
    os << "# limit_source=" << (order == 1 ? "published" : "derived-from-exact-central-moments") << "\n";
    os << "n,scaled_residual,limit,abs_gap\n";
    for (std::size_t i = 0; i < ns.size(); ++i)
        os << ns[i] << "," << format_double(rep.scaled_residuals[i]) << "," << format_double(rep.limit_value) << ","
           << format_double(rep.abs_gaps[i]) << "\n";
}

void cmd_positivity(const Options &o, std::ostream &os)
{
    const auto spec = sequences_from(o);
    const long n = o.n.value_or(10);
    if (n < 4) throw ParseError("--n must be >= 4");
    Options grid = o;
    if (!grid.x_min) grid.x_min = "0";
    if (!grid.x_max) grid.x_max = "2";
    if (grid.points == 0) grid.points = 21;
    const auto xs = x_points(grid);
    if (o.k_max < 0) throw ParseError("--k-max must be >= 0");

    const auto res = empirical_positivity(spec, n, xs, o.k_max);
    const auto c = classify_case(spec, n);
    const auto claim = claimed_positive(c);
    os << "# command=positivity\n# a0=" << o.a0 << "\n# a1=" << o.a1 << "\n# n=" << n << "\n";
    os << "# k_max=" << o.k_max << "\n# claimed_positive=" << (claim ? (*claim ? "yes" : "no") : "undetermined")
       << "\n# version=" << version << "\n";
    os << "case,min_weight,argmin_k,argmin_x\n";
    os << to_string(c) << "," << format_double(res.min_weight) << "," << res.argmin_k << ","
       << format_double(res.argmin_x) << "\n";
}

int cmd_selftest(std::ostream &os, std::ostream &err)
{
    const auto results = run_selftest();
    std::size_t failed = 0;
    for (const auto &r : results) {
        if (r.passed) continue;
        ++failed;
        err << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
    if (failed == 0) {
        os << "PASS " << results.size() << " checks\n";
        return Ok;
    }
    os << "FAIL " << failed << " of " << results.size() << " checks\n";
    return SelftestFailure;
}

void add_common(CLI::App *sub, Options &o, bool with_op = true)
{
    if (with_op) sub->add_option("--op", o.op, "baskakov | durrmeyer | mod1 | mod2");
    sub->add_option("--a0", o.a0, "a0(n): INT, INT/INT or ratfn:p0,p1/q0,q1");
    sub->add_option("--a1", o.a1, "a1(n): INT, INT/INT or ratfn:p0,p1/q0,q1");
    sub->add_flag("--allow-unnormalized", o.allow_unnormalized, "accept sequences with 2a0 - a1 != 1");
    sub->add_option("--n", o.n, "operator degree");
    sub->add_option("--out", o.out, "output CSV path (default: stdout)");
    sub->add_option("--tol", o.tol, "absolute tolerance");
}

} // namespace

RationalFn parse_sequence(std::string_view expr)
{
    constexpr std::string_view prefix = "ratfn:";
    if (expr.substr(0, prefix.size()) == prefix) {
        const auto body = expr.substr(prefix.size());
        const auto halves = split(body, '/');
        if (halves.size() != 2) throw ParseError("ratfn needs exactly one '/': '" + std::string(expr) + "'");
        const auto num = split(halves[0], ','), den = split(halves[1], ',');
        if (num.size() != 2 || den.size() != 2)
            throw ParseError("ratfn needs p0,p1/q0,q1: '" + std::string(expr) + "'");
        RationalFn fn{parse_integer_token(num[0]), parse_integer_token(num[1]), parse_integer_token(den[0]),
                      parse_integer_token(den[1])};
        if (fn.q0 == 0 && fn.q1 == 0) throw ParseError("ratfn denominator is identically zero");
        return fn;
    }
    const auto parts = split(expr, '/');
    if (parts.size() > 2) throw ParseError("too many '/' in '" + std::string(expr) + "'");
    for (auto p : parts) parse_integer_token(p);
    return RationalFn::constant(parse_rational(expr));
}

std::vector<long> parse_n_list(std::string_view text)
{
    std::vector<long> ns;
    for (auto tok : split(text, ',')) {
        const BigRat v = parse_integer_token(tok);
        if (v <= 0 || !v.get_num().fits_slong_p()) throw ParseError("n must be a positive integer: '" + std::string(tok) + "'");
        ns.push_back(v.get_num().get_si());
        if (ns.size() > 1 && ns.back() <= ns[ns.size() - 2]) throw ParseError("n list must be strictly increasing");
    }
    return ns;
}

Interval parse_interval(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw ParseError("interval must look like a:b, got '" + std::string(text) + "'");
    Interval iv{to_double(parse_rational(parts[0])), to_double(parse_rational(parts[1]))};
    if (!(iv.a >= 0.0) || !(iv.b > iv.a)) throw ParseError("interval must satisfy 0 <= a < b");
    return iv;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Baskakov-Durrmeyer operators and their boosted modifications"};
    app.require_subcommand(1);
    Options o;

    auto *eval = app.add_subcommand("eval", "evaluate an operator on a grid");
    add_common(eval, o);
    eval->add_option("--f", o.f, "function name");
    eval->add_option("--x", o.x, "single point");
    eval->add_option("--x-min", o.x_min, "grid start");
    eval->add_option("--x-max", o.x_max, "grid end");
    eval->add_option("--points", o.points, "grid size");

    auto *moments = app.add_subcommand("moments", "published moments against the exact oracle");
    auto *central = app.add_subcommand("central-moments", "published central moments against the exact oracle");
    for (auto *sub : {moments, central}) {
        add_common(sub, o);
        sub->add_option("--x", o.x, "exact point (INT, INT/INT or decimal)");
    }
    moments->add_option("--max-degree", o.max_degree, "largest moment degree");
    central->add_option("--max-order,--max-degree", o.max_degree, "largest central order");

    auto *converge = app.add_subcommand("converge", "sup-error convergence study with log-log slope");
    add_common(converge, o);
    converge->add_option("--f", o.f, "function name");
    converge->add_option("--n-list", o.n_list, "comma-separated n values");
    converge->add_option("--interval", o.interval, "a:b");
    converge->add_option("--points", o.points, "grid size");

    auto *voronovskaja = app.add_subcommand("voronovskaja", "scaled residuals against the asymptotic limit");
    add_common(voronovskaja, o);
    voronovskaja->add_option("--f", o.f, "function name");
    voronovskaja->add_option("--x", o.x, "evaluation point");
    voronovskaja->add_option("--n-list", o.n_list, "comma-separated n values");

    auto *positivity = app.add_subcommand("positivity", "minimum first-order weight over a grid");
    add_common(positivity, o, false);
    positivity->add_option("--x-min", o.x_min, "grid start");
    positivity->add_option("--x-max", o.x_max, "grid end");
    positivity->add_option("--points", o.points, "grid size");
    positivity->add_option("--k-max", o.k_max, "largest basis index");

    auto *selftest = app.add_subcommand("selftest", "run the built-in invariant checks");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return ValidationError;
    }

    if (*voronovskaja && !voronovskaja->count("--tol")) o.tol = 1e-12;

    try {
        if (*selftest) return cmd_selftest(out, err);
        std::ostringstream buffer;
        if (*eval) cmd_eval(o, buffer);
        if (*moments) cmd_moments(o, buffer, false);
        if (*central) cmd_moments(o, buffer, true);
        if (*converge) cmd_converge(o, buffer);
        if (*voronovskaja) cmd_voronovskaja(o, buffer);
        if (*positivity) cmd_positivity(o, buffer);
        if (o.out.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(o.out, std::ios::binary);
            if (!file) throw ParseError("cannot open --out path '" + o.out + "'");
            file << buffer.str();
        }
        return Ok;
    } catch (const NonConvergence &e) {
        err << "numerical failure: " << e.what() << "\n";
        return NumericalFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return ValidationError;
    }
}

int run(int argc, char **argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

} // namespace bdm::cli
