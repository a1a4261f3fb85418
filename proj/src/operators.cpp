#include "bdm/operators.hpp"

#include "bdm/basis.hpp"
#include "bdm/errors.hpp"
#include "bdm/quad.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <tuple>

namespace bdm
{

namespace
{

void check_args(long n, long k, double x)
{
    if (n < 1) throw DomainError("weight: n must be >= 1");
    if (k < 0) throw DomainError("weight: k must be >= 0");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("weight: x must be finite and >= 0");
}

class Neumaier
{
public:
    void add(double v)
    {
        const double t = sum_ + v;
        comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0, comp_ = 0.0;
};

double basis_or_zero(long m, long k, double x) { return k < 0 ? 0.0 : eval_basis(static_cast<int>(m), k, x); }

double contract_terms(const std::vector<WeightTerm<double>> &terms, long n, long k, double x)
{
    Neumaier acc;
    for (const auto &t : terms) acc.add(t.coef * basis_or_zero(n + t.degree_offset, k - t.shift, x));
    return acc.value();
}

// I_{n,k}(f) for bounded f, cached per (n, function id, quadrature tolerance).
class CoefficientCache
{
public:
    std::vector<double> get(int n, const TestFunction &f, long K, const QuadConfig &cfg)
    {
        const Key key{n, f.id, cfg.abs_tol};
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end() && static_cast<long>(it->second.size()) > K)
                return {it->second.begin(), it->second.begin() + K + 1};
        }
        std::size_t have = 0;
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) have = it->second.size();
        }
        // compute outside the lock; values are deterministic so racing inserts agree
        std::vector<double> fresh;
        for (long k = static_cast<long>(have); k <= K; ++k) {
            QuadResult r = durrmeyer_coefficient(n, k, f, cfg);
            if (!r.converged)
                throw NonConvergence("quadrature for I_{" + std::to_string(n) + "," + std::to_string(k) + "}(" +
                                     f.id + ") did not converge (error estimate " +
                                     std::to_string(r.error_estimate) + ")");
            fresh.push_back(r.value);
        }
        std::unique_lock lock(mutex_);
        auto &row = table_[key];
        for (std::size_t i = row.size() - have; i < fresh.size(); ++i) row.push_back(fresh[i]);
        return {row.begin(), row.begin() + K + 1};
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        std::size_t total = 0;
        for (const auto &[key, row] : table_) total += row.size();
        return total;
    }

private:
    using Key = std::tuple<int, std::string, double>;
    mutable std::shared_mutex mutex_;
    std::map<Key, std::vector<double>> table_;
};

CoefficientCache &cache()
{
    static CoefficientCache instance;
    return instance;
}

QuadConfig coefficient_config(long n, double tol)
{
    QuadConfig cfg;
    cfg.abs_tol = std::max(tol / (16.0 * static_cast<double>(n)), 1e-14);
    cfg.rel_tol = cfg.abs_tol;
    return cfg;
}

// Polynomial growth factor g(k) bounding |I_{n,k}(f)| (or |f(k/n)| for Baskakov).
struct Growth {
    double scale = 1.0; // g(k) = scale * (k + offset)^degree
    double offset = 1.0;
    int degree = 0;

    double weight(long k) const { return scale * std::pow(static_cast<double>(k) + offset, degree); }
    double ratio(long k) const
    {
        const double kd = static_cast<double>(k);
        return std::pow((kd + 1.0 + offset) / (kd + offset), degree);
    }
};

Growth growth_for(const OperatorKind &kind, long n, const TestFunction &f)
{
    if (!f.polynomial || f.polynomial_degree() <= 0) {
        if (f.polynomial) return {std::abs(f.polynomial->front()), 1.0, 0};
        return {f.sup_abs.value_or(1.0), 1.0, 0};
    }
    const int deg = f.polynomial_degree();
    double coeff_sum = 0.0;
    for (double c : *f.polynomial) coeff_sum += std::abs(c);
    if (kind.tag == OperatorTag::Baskakov) {
        // |f(k/n)| <= sum|c| (1 + k/n)^deg
        return {coeff_sum / std::pow(static_cast<double>(n), deg), static_cast<double>(n), deg};
    }
    // M_j(k,n) <= (k+deg)^deg / prod_{i=2..j+1}(n-i), maximised over j <= deg
    double max_inv_den = 1.0, den = 1.0;
    for (int j = 1; j <= deg; ++j) {
        den *= static_cast<double>(n - j - 1);
        max_inv_den = std::max(max_inv_den, 1.0 / den);
    }
    return {coeff_sum * max_inv_den, static_cast<double>(std::max(deg, 1)), deg};
}

long truncation_for(const std::vector<WeightTerm<double>> &terms, long n, double x, double budget, const Growth &g)
{
    long K = 0;
    const double per_term = budget / static_cast<double>(terms.size());
    for (const auto &t : terms) {
        if (t.coef == 0.0) continue;
        const double scale = std::abs(t.coef) * g.weight(0);
        if (scale == 0.0) continue;
        // tail of p_{m,j}(x) g(j+shift) over j > K_t
        Growth shifted = g;
        shifted.offset += t.shift;
        const long Kt = truncation_index_weighted(
            static_cast<int>(n + t.degree_offset), x, per_term, [&](long k) { return shifted.ratio(k); },
            [&](long k) { return std::abs(t.coef) * shifted.weight(k); });
        K = std::max(K, Kt + t.shift);
    }
    return K;
}

std::vector<double> polynomial_coefficients_durrmeyer(long n, const std::vector<double> &poly, long K)
{
    std::vector<double> I(static_cast<std::size_t>(K) + 1, 0.0);
    for (long k = 0; k <= K; ++k) {
        Neumaier acc;
        for (std::size_t j = 0; j < poly.size(); ++j) {
            if (poly[j] == 0.0) continue;
            double m = 1.0;
            for (std::size_t i = 1; i <= j; ++i)
                m *= static_cast<double>(k + static_cast<long>(i)) / static_cast<double>(n - static_cast<long>(i) - 1);
            acc.add(poly[j] * m);
        }
        I[static_cast<std::size_t>(k)] = acc.value();
    }
    return I;
}

} // namespace

double mod1_weight(const SequenceSpec &spec, long n, long k, double x)
{
    check_args(n, k, x);
    return contract_terms(weight_terms<double>(OperatorKind::mod1(spec), n, x), n, k, x);
}

double mod2_weight(long n, long k, double x)
{
    check_args(n, k, x);
    if (n < 3) throw DomainError("mod2_weight: n must be >= 3");
    return contract_terms(weight_terms<double>(OperatorKind::mod2(), n, x), n, k, x);
}

double second_order_weight(const SecondOrderSequences &seq, long n, long k, double x)
{
    check_args(n, k, x);
    return contract_terms(second_order_terms<double>(seq, n, x), n, k, x);
}

std::pair<double, double> split_weights(const SequenceSpec &spec, long n, long k, double x)
{
    check_args(n, k, x);
    return {contract_terms(weight_terms<double>(OperatorKind::split_a(spec), n, x), n, k, x),
            contract_terms(weight_terms<double>(OperatorKind::split_b(spec), n, x), n, k, x)};
}

double operator_weight(const OperatorKind &kind, long n, long k, double x)
{
    check_args(n, k, x);
    return contract_terms(weight_terms<double>(kind, n, x), n, k, x);
}

double apply(const OperatorKind &kind, long n, const TestFunction &f, double x, double tol)
{
    if (!(tol > 0.0)) throw DomainError("apply: tol must be positive");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("apply: x must be finite and >= 0");
    if (n < 1) throw DomainError("apply: n must be >= 1");
    if (kind.durrmeyer_type() && n < 3) throw DomainError("apply: Durrmeyer-type operators need n >= 3");

    const bool is_poly = f.polynomial.has_value();
    if (!is_poly && !f.bounded)
        throw UnboundedFunction("apply: '" + f.id + "' is neither bounded nor a polynomial");
    if (is_poly && kind.durrmeyer_type() && f.polynomial_degree() > n - 2)
        throw DivergentMoment("apply: degree " + std::to_string(f.polynomial_degree()) +
                              " polynomial needs n >= degree + 2 for Durrmeyer-type operators");

    const auto terms = weight_terms<double>(kind, n, x);
    const Growth growth = growth_for(kind, n, f);

    long K = 0;
    if (x > 0.0) K = truncation_for(terms, n, x, 0.5 * tol, growth);
    for (const auto &t : terms) K = std::max<long>(K, t.shift);

    // basis rows for each degree offset in use, extended to K
    std::map<int, std::vector<double>> rows;
    for (const auto &t : terms) {
        if (rows.count(t.degree_offset)) continue;
        const int m = static_cast<int>(n + t.degree_offset);
        std::vector<double> row(static_cast<std::size_t>(K) + 1, 0.0);
        if (x == 0.0) {
            row[0] = 1.0;
        } else {
            const double r = x / (1.0 + x);
            auto p = detail::ScaledTerm::from_log(-static_cast<double>(m) * std::log1p(x));
            for (long k = 0; k <= K; ++k) {
                row[static_cast<std::size_t>(k)] = p.value();
                p.mul((static_cast<double>(m + k) / static_cast<double>(k + 1)) * r);
            }
        }
        rows.emplace(t.degree_offset, std::move(row));
    }

    std::vector<double> samples;
    if (kind.tag == OperatorTag::Baskakov) {
        samples.resize(static_cast<std::size_t>(K) + 1);
        for (long k = 0; k <= K; ++k)
            samples[static_cast<std::size_t>(k)] = f(static_cast<double>(k) / static_cast<double>(n));
    } else if (is_poly) {
        samples = polynomial_coefficients_durrmeyer(n, *f.polynomial, K);
    } else {
        samples = cache().get(static_cast<int>(n), f, K, coefficient_config(n, tol));
    }

    Neumaier total;
    for (long k = 0; k <= K; ++k) {
        Neumaier w;
        for (const auto &t : terms) {
            const long idx = k - t.shift;
            if (idx < 0) continue;
            w.add(t.coef * rows.at(t.degree_offset)[static_cast<std::size_t>(idx)]);
        }
        total.add(w.value() * samples[static_cast<std::size_t>(k)]);
    }
    return total.value();
}

std::vector<double> apply_grid(const OperatorKind &kind, long n, const TestFunction &f, std::span<const double> xs,
                               double tol)
{
    std::vector<double> out(xs.size());
    if (xs.empty()) return out;
    // warm the coefficient cache at the largest point so workers only read it
    const auto largest = std::max_element(xs.begin(), xs.end());
    out[static_cast<std::size_t>(largest - xs.begin())] = apply(kind, n, f, *largest, tol);

    const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < xs.size(); i += workers)
                if (i != static_cast<std::size_t>(largest - xs.begin())) out[i] = apply(kind, n, f, xs[i], tol);
        }));
    }
    for (auto &j : jobs) j.get();
    return out;
}

void clear_coefficient_cache() { cache().clear(); }

std::size_t coefficient_cache_size() { return cache().size(); }

PositivityResult empirical_positivity(const SequenceSpec &spec, long n, std::span<const double> x_grid, long k_max)
{
    if (x_grid.empty()) throw DomainError("empirical_positivity: empty grid");
    if (k_max < 0) throw DomainError("empirical_positivity: k_max must be >= 0");
    PositivityResult best{std::numeric_limits<double>::infinity(), 0, x_grid.front()};
    for (double x : x_grid)
        for (long k = 0; k <= k_max; ++k) {
            const double w = mod1_weight(spec, n, k, x);
            if (w < best.min_weight) best = {w, k, x};
        }
    return best;
}

} // namespace bdm
