#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

// 1-D integration against the standard normal weight and general-purpose
// helpers.  The Gauss-Hermite rule uses the probabilist normalization
// (weight e^{-x^2/2}/sqrt(2*pi), total mass 1); nodes and weights come from
// the Golub-Welsch eigenvalue construction.

namespace relucalc {

struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSqrt2Pi = 2.506628274631000502415765284811045253;

inline double phi1(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

namespace detail {

// Symmetric tridiagonal QL with implicit shifts, accumulating only the first
// row of the eigenvector matrix (all that Golub-Welsch needs).
inline void tridiag_eigen_first_row(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw std::runtime_error("tridiagonal eigensolver did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && m - l > 1) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    e.pop_back();
}

}  // namespace detail

struct QuadratureRule {
    enum class Kind { GaussHermiteProbabilist, Adaptive };

    Kind kind = Kind::GaussHermiteProbabilist;
    int order = 0;
    double tol = 1e-12;          // target absolute tolerance (adaptive kind)
    std::vector<double> nodes;   // empty for the adaptive kind
    std::vector<double> weights;

    std::string kind_name() const {
        return kind == Kind::GaussHermiteProbabilist ? "gauss-hermite-probabilist" : "adaptive";
    }
};

// Gauss-Hermite rule of the given order for the probabilist weight.
// Recurrence He_{k+1} = x He_k - k He_{k-1}: zero diagonal, off-diagonal
// sqrt(k).  Weights are the squared first eigenvector components (mass 1).
inline QuadratureRule gauss_hermite(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
    std::vector<double> d(order, 0.0), e(order - 1), z(order, 0.0);
    for (int k = 1; k < order; ++k) e[k - 1] = std::sqrt(static_cast<double>(k));
    z[0] = 1.0;
    detail::tridiag_eigen_first_row(d, e, z);

    std::vector<int> idx(order);
    for (int i = 0; i < order; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::GaussHermiteProbabilist;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        rule.nodes[i] = d[idx[i]];
        rule.weights[i] = z[idx[i]] * z[idx[i]];
    }
    // Symmetrize: the rule is even by construction, so pin paired nodes to
    // exact negatives and the middle node of an odd rule to zero.
    for (int i = 0, j = order - 1; i < j; ++i, --j) {
        const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.weights[i] = rule.weights[j] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

inline QuadratureRule adaptive_rule(double tol = 1e-12, int max_depth = 48) {
    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::Adaptive;
    rule.order = max_depth;
    rule.tol = tol;
    return rule;
}

// Adaptive Simpson on [a, b] with absolute tolerance.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48) {
    struct Impl {
        const std::remove_reference_t<F>& fn;
        int max_depth;
        double run(double lo, double hi, double flo, double fmid, double fhi, double whole, double tol,
                   int depth) const {
            const double mid = 0.5 * (lo + hi);
            const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
            const double flm = fn(lmid), frm = fn(rmid);
            const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
            const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
            const double delta = left + right - whole;
            if (depth >= max_depth || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
            return run(lo, mid, flo, flm, fmid, left, 0.5 * tol, depth + 1) +
                   run(mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth + 1);
        }
    };
    if (a == b) return 0.0;
    const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return Impl{f, max_depth}.run(a, b, fa, fm, fb, whole, tol, 0);
}

// 15-point Gauss-Legendre on [a, b].
template <class F>
double gauss_legendre_15(F&& f, double a, double b) {
    static const double xs[8] = {0.0,
                                 0.2011940939974345223006283033945962,
                                 0.3941513470775633698972073709810455,
                                 0.5709721726085388475372267372539106,
                                 0.7244177313601700474161860546139380,
                                 0.8482065834104272162006483207742169,
                                 0.9372733924007059043077589477102095,
                                 0.9879925180204854284895657185866126};
    static const double ws[8] = {0.2025782419255612728806201999675193,
                                 0.1984314853271115764561183264438393,
                                 0.1861610000155622110268005618664228,
                                 0.1662692058169939335532008604812088,
                                 0.1395706779261543144478047945110283,
                                 0.1071592204671719350118695466858693,
                                 0.0703660474881081247092674164506673,
                                 0.0307532419961172683546283935772044};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double acc = ws[0] * f(c);
    for (int i = 1; i < 8; ++i) acc += ws[i] * (f(c - h * xs[i]) + f(c + h * xs[i]));
    return acc * h;
}

// Composite GL15 over uniform panels, doubling the panel count until two
// successive estimates agree to rel_tol or the panel cap is reached.  The
// cap keeps unresolvable sub-tolerance oscillation from recursing forever;
// the returned estimate is then still bounded by the integrand's envelope.
template <class F>
double panel_refine(F&& f, double a, double b, double rel_tol = 1e-12, int base_panels = 16,
                    int max_panels = 4096) {
    if (a == b) return 0.0;
    auto composite = [&](int n) {
        const double h = (b - a) / n;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += gauss_legendre_15(f, a + i * h, a + (i + 1) * h);
        return acc;
    };
    double prev = composite(base_panels);
    for (int n = 2 * base_panels; n <= max_panels; n *= 2) {
        const double cur = composite(n);
        if (std::abs(cur - prev) <= rel_tol * std::max(1e-300, std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

// Integral of f against the 1-D standard normal, per the rule.  The adaptive
// kind integrates f*phi over the numerically supported range and refines to
// the rule's absolute tolerance.
template <class F>
double gh_integrate(F&& f, const QuadratureRule& rule) {
    if (rule.kind == QuadratureRule::Kind::GaussHermiteProbabilist) {
        double acc = 0.0;
        for (int i = 0; i < rule.order; ++i) {
            const double v = f(rule.nodes[i]);
            if (!std::isfinite(v)) throw EvalError("gh_integrate: non-finite integrand value at node");
            acc += rule.weights[i] * v;
        }
        return acc;
    }
    auto weighted = [&](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) throw EvalError("gh_integrate: non-finite integrand value");
        return v * phi1(x);
    };
    // Unit-wide panels so that localized mass cannot slip between the probe
    // points of a single top-level recursion.
    const int lim = 38;
    const double panel_tol = rule.tol / (2.0 * lim);
    double acc = 0.0;
    for (int k = -lim; k < lim; ++k)
        acc += adaptive_simpson(weighted, static_cast<double>(k), static_cast<double>(k + 1), panel_tol, rule.order);
    return acc;
}

namespace detail {

// Integration window for \int x^p e^{-sigma x^2} over [lo0, hi0]: clamps both
// ends to where the log-integrand h sits within 90 nats of its peak, so the
// quadrature never scans dead zones (which would be slow and could hide the
// bump between the probe points of a single adaptive pass).
struct LogGaussWindow {
    double lo, hi, peak_log;
};

inline LogGaussWindow log_gauss_window(double sigma, double p, double lo0, double hi0) {
    auto h = [&](double x) {
        if (x <= 0.0) return p > 0.0 ? -std::numeric_limits<double>::infinity() : 0.0;
        return (p > 0.0 ? p * std::log(x) : 0.0) - sigma * x * x;
    };
    const double xstar = p > 0.0 ? std::sqrt(p / (2.0 * sigma)) : 0.0;
    const double xpeak = std::min(std::max(xstar, lo0), hi0);
    const double m = h(xpeak);
    const double cut = m - 90.0;

    double lo = lo0;
    if (h(lo) < cut) {  // h increases on [lo, xpeak]
        double a = lo, b = xpeak;
        for (int i = 0; i < 200 && b - a > 1e-14 * (1.0 + b); ++i) {
            const double mid = 0.5 * (a + b);
            (h(mid) < cut ? a : b) = mid;
        }
        lo = a;
    }
    double hi = hi0;
    if (h(hi) < cut) {  // h decreases on [xpeak, hi]
        double a = xpeak, b = hi;
        for (int i = 0; i < 200 && b - a > 1e-14 * (1.0 + b); ++i) {
            const double mid = 0.5 * (a + b);
            (h(mid) < cut ? b : a) = mid;
        }
        hi = b;
    }
    return {lo, hi, m};
}

inline double log_gauss_integral(double sigma, double p, double lo0, double hi0) {
    const LogGaussWindow w = log_gauss_window(sigma, p, lo0, hi0);
    auto scaled = [&](double x) {
        if (x <= 0.0) return p > 0.0 ? 0.0 : std::exp(-w.peak_log);
        return std::exp((p > 0.0 ? p * std::log(x) : 0.0) - sigma * x * x - w.peak_log);
    };
    const double integral = adaptive_simpson(scaled, w.lo, w.hi, 1e-13);
    return w.peak_log + std::log(integral);
}

}  // namespace detail

// log of \int_s^\infty x^p e^{-sigma x^2} dx, evaluated in log space so that
// huge sigma*s^2 cannot underflow.  Requires sigma > 0, s >= 0, p >= 0.
inline double log_gauss_tail(double sigma, double s, double p = 0.0) {
    if (!(sigma > 0.0) || s < 0.0 || p < 0.0)
        throw std::domain_error("log_gauss_tail: need sigma > 0, s >= 0, p >= 0");
    const double xstar = p > 0.0 ? std::sqrt(p / (2.0 * sigma)) : 0.0;
    double hi = std::max(s, xstar) + std::sqrt(90.0 / sigma) + 1.0;
    return detail::log_gauss_integral(sigma, p, s, hi);
}

// log of \int_0^s x^p e^{-sigma x^2} dx, the head counterpart of
// log_gauss_tail; needed where the head is far too small for 1 - tail.
inline double log_gauss_head(double sigma, double s, double p = 0.0) {
    if (!(sigma > 0.0) || !(s > 0.0) || p < 0.0)
        throw std::domain_error("log_gauss_head: need sigma > 0, s > 0, p >= 0");
    return detail::log_gauss_integral(sigma, p, 0.0, s);
}

// log(e^a + e^b) and log(e^a - e^b) (a >= b required for the difference).
inline double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

inline double log_sub_exp(double a, double b) {
    if (b == -std::numeric_limits<double>::infinity()) return a;
    if (!(a >= b)) throw std::domain_error("log_sub_exp: requires a >= b");
    if (a == b) return -std::numeric_limits<double>::infinity();
    return a + std::log1p(-std::exp(b - a));
}

}  // namespace relucalc
