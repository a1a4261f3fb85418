#include "bdm/quad.hpp"

#include "bdm/errors.hpp"
#include "bdm/functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace bdm
{

namespace
{

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for the odd-indexed Kronrod nodes (xgk[1], xgk[3], xgk[5], xgk[7])
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value, error;
    int depth;
};

Panel gk15(const std::function<double(double)> &g, double a, double b, int depth)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = g(c);
    double kron = wgk[7] * fc;
    double gauss = wg[3] * fc;
    for (std::size_t i = 0; i < 7; ++i) {
        const double f1 = g(c - h * xgk[i]);
        const double f2 = g(c + h * xgk[i]);
        kron += wgk[i] * (f1 + f2);
        if (i % 2 == 1) gauss += wg[i / 2] * (f1 + f2);
    }
    Panel p{a, b, kron * h, std::abs((kron - gauss) * h), depth};
    if (!std::isfinite(p.value)) throw DomainError("integrand is not finite on [" + std::to_string(a) + ", " +
                                                   std::to_string(b) + "]");
    return p;
}

struct Sums {
    double value, error;
};

Sums accumulate(std::vector<Panel> panels)
{
    std::sort(panels.begin(), panels.end(), [](const Panel &l, const Panel &r) { return l.a < r.a; });
    double s = 0.0, c = 0.0, err = 0.0;
    for (const auto &p : panels) {
        double t = s + p.value;
        c += std::abs(s) >= std::abs(p.value) ? (s - t) + p.value : (p.value - t) + s;
        s = t;
        err += p.error;
    }
    return {s + c, err};
}

constexpr int max_panels = 20000;

} // namespace

void QuadConfig::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("QuadConfig: tolerances must be positive");
    if (max_depth < 1) throw DomainError("QuadConfig: max_depth must be >= 1");
}

QuadResult integrate_unit_interval(const std::function<double(double)> &g, const QuadConfig &cfg,
                                   std::span<const double> breakpoints)
{
    cfg.validate();
    std::vector<double> edges{0.0};
    for (double bp : breakpoints)
        if (bp > edges.back() && bp < 1.0) edges.push_back(bp);
    edges.push_back(1.0);

    // max-heap on error; ties go to the leftmost panel so refinement order is reproducible
    auto worse = [](const Panel &l, const Panel &r) { return l.error < r.error || (l.error == r.error && l.a > r.a); };
    std::vector<Panel> heap, frozen;
    double value_est = 0.0, error_sum = 0.0;
    auto add = [&](const Panel &p) {
        value_est += p.value;
        error_sum += p.error;
        if (p.depth >= cfg.max_depth) {
            frozen.push_back(p);
        } else {
            heap.push_back(p);
            std::push_heap(heap.begin(), heap.end(), worse);
        }
    };
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) add(gk15(g, edges[i], edges[i + 1], 0));

    auto finish = [&](bool converged) {
        std::vector<Panel> all = frozen;
        all.insert(all.end(), heap.begin(), heap.end());
        auto [value, error] = accumulate(std::move(all));
        return QuadResult{value, error, static_cast<int>(heap.size() + frozen.size()), converged};
    };

    while (true) {
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value_est));
        if (error_sum <= target) {
            // confirm with the exact (order-independent) sums before stopping
            QuadResult r = finish(true);
            if (r.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value))) return r;
        }
        if (heap.empty() || static_cast<int>(heap.size() + frozen.size()) >= max_panels) return finish(false);

        std::pop_heap(heap.begin(), heap.end(), worse);
        const Panel old = heap.back();
        heap.pop_back();
        value_est -= old.value;
        error_sum -= old.error;
        const double mid = 0.5 * (old.a + old.b);
        add(gk15(g, old.a, mid, old.depth + 1));
        add(gk15(g, mid, old.b, old.depth + 1));
    }
}

QuadResult durrmeyer_coefficient_raw(int n, long k, const std::function<double(double)> &f, const QuadConfig &cfg)
{
    if (n < 3) throw DomainError("durrmeyer_coefficient: n must be >= 3, got " + std::to_string(n));
    if (k < 0) throw DomainError("durrmeyer_coefficient: k must be >= 0");

    // Beta(k+1, n-1) density: (n-1) C(n+k-1, k) u^k (1-u)^(n-2)
    const double alpha = static_cast<double>(k) + 1.0, beta = static_cast<double>(n) - 1.0;
    // extended precision: lgamma(n) is ~6e3 at n = 1000, so double would cost ~1e-12 relative
    const double log_norm = static_cast<double>(std::lgamma(static_cast<long double>(alpha + beta)) -
                                                std::lgamma(static_cast<long double>(alpha)) -
                                                std::lgamma(static_cast<long double>(beta)));
    auto integrand = [&](double u) -> double {
        if (u >= 1.0) return 0.0;
        double log_w = log_norm + (beta - 1.0) * std::log1p(-u);
        if (k > 0) {
            if (u <= 0.0) return 0.0;
            log_w += (alpha - 1.0) * std::log(u);
        }
        const double w = std::exp(log_w);
        if (w == 0.0) return 0.0;
        return w * f(u / (1.0 - u));
    };

    // seed breakpoints around the density peak so narrow peaks are never missed; the
    // far points matter for small k, where the right tail is long compared to sd
    const double s = alpha + beta;
    const double mean = alpha / s;
    const double sd = std::sqrt(alpha * beta / (s * s * (s + 1.0)));
    std::vector<double> bps;
    for (double m : {-16.0, -8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
        const double u = mean + m * sd;
        if (u > 0.0 && u < 1.0) bps.push_back(u);
    }
    return integrate_unit_interval(integrand, cfg, bps);
}

QuadResult durrmeyer_coefficient(int n, long k, const TestFunction &f, const QuadConfig &cfg)
{
    if (!f.bounded)
        throw UnboundedFunction("durrmeyer_coefficient: '" + f.id +
                                "' is not bounded; polynomials go through the exact kernel");
    return durrmeyer_coefficient_raw(n, k, f.eval, cfg);
}

} // namespace bdm
