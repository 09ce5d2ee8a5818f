#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "relucalc/constructions.hpp"
#include "relucalc/measures.hpp"
#include "relucalc/network.hpp"
#include "relucalc/quadrature.hpp"
#include "relucalc/random_net.hpp"

// Numeric evaluators for the proven inequalities, packaged as a named
// catalog with machine-checkable reports.  Comparisons run in log scale
// whenever a side can exceed e^{50}; a report passes when the small side
// stays below the large side up to a relative 1e-9 slack in favor of the
// inequality, so quadrature truncation cannot produce a false failure.

namespace relucalc {

using Params = std::map<std::string, double>;

struct BoundReport {
    std::string name;
    Params params;
    double lhs = 0.0;  // small side of the inequality
    double rhs = 0.0;  // large side
    double slack = 0.0;
    bool pass = false;
    std::string scale = "linear";  // "linear" | "log"
};

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

namespace detail {

inline bool comparison_holds(double lhs, double rhs) {
    return lhs <= rhs + 1e-9 * std::max(1.0, std::abs(rhs));
}

// Folds one or more (small, large) comparisons into a single report carrying
// the binding (minimum-slack) pair; pass requires every comparison to hold.
struct ReportBuilder {
    BoundReport rep;
    bool first = true;

    ReportBuilder(std::string name, Params params, std::string scale) {
        rep.name = std::move(name);
        rep.params = std::move(params);
        rep.scale = std::move(scale);
        rep.pass = true;
    }
    void add(double lhs, double rhs) {
        const double slack = rhs - lhs;
        if (first || slack < rep.slack) {
            rep.lhs = lhs;
            rep.rhs = rhs;
            rep.slack = slack;
            first = false;
        }
        rep.pass = rep.pass && comparison_holds(lhs, rhs);
    }
    BoundReport done() const { return rep; }
};

inline double get_param(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw std::invalid_argument("check_bound: missing parameter \"" + key + "\"");
    return it->second;
}

inline int get_int_param(const Params& p, const std::string& key) {
    const double v = get_param(p, key);
    const int n = static_cast<int>(std::llround(v));
    if (std::abs(v - n) > 1e-9) throw std::invalid_argument("check_bound: parameter \"" + key + "\" must be integral");
    return n;
}

}  // namespace detail

// log Gamma on (0, infinity).
inline double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: x must be positive");
    return std::lgamma(x);
}

// log of \int_{||y|| >= s} (sigma/pi)^{d/2} ||x||^alpha e^{-sigma ||x||^2} dx
// via the 1-D radial formula 2 sigma^{d/2} / Gamma(d/2) *
// \int_s^infty e^{-sigma r^2} r^{alpha+d-1} dr.
inline double radial_gaussian_integral(int d, double sigma, double alpha, double s) {
    if (d < 1 || !(sigma > 0.0) || alpha < 0.0 || s < 0.0)
        throw std::domain_error("radial_gaussian_integral: need d >= 1, sigma > 0, alpha >= 0, s >= 0");
    return std::log(2.0) + 0.5 * d * std::log(sigma) - log_gamma(0.5 * d) +
           log_gauss_tail(sigma, s, alpha + d - 1.0);
}

// --- The named catalog ------------------------------------------------------

inline BoundReport check_bound(const std::string& name, const Params& params, std::uint64_t seed = 0);

namespace detail {

inline BoundReport check_stirling(const Params& p) {
    const int n = get_int_param(p, "n");
    if (n < 1) throw std::domain_error("stirling: n must be >= 1");
    const double log_fact = log_gamma(n + 1.0);
    const double base = 0.5 * std::log(2.0 * kPi * n) + n * (std::log(static_cast<double>(n)) - 1.0);
    ReportBuilder b("stirling", p, "log");
    b.add(base + 1.0 / (12.0 * n + 1.0), log_fact);
    b.add(log_fact, base + 1.0 / (12.0 * n));
    return b.done();
}

inline BoundReport check_gamma_stirling(const Params& p) {
    const int m = get_int_param(p, "m");
    if (m < 2) throw std::domain_error("gamma_stirling: m must be >= 2");
    const double core = (m - 1.0) * (std::log(m - 1.0) - 1.0);
    ReportBuilder b("gamma_stirling", p, "log");
    b.add(0.5 * std::log(2.0 * kPi * (m - 1.0)) + core, log_gamma(m));
    b.add(log_gamma(m), 0.5 * std::log(3.0 * kPi * (m - 1.0)) + core);
    b.add(0.5 * std::log(kPi) + core, log_gamma(m - 0.5));
    b.add(log_gamma(m - 0.5), 0.5 * std::log(2.0 * kPi) + core);
    return b.done();
}

inline BoundReport check_gauss_tail_1d(const Params& p) {
    const double sigma = get_param(p, "sigma"), s = get_param(p, "s");
    if (!(sigma > 0.0) || !(s > 0.0)) throw std::domain_error("gauss_tail_1d: need sigma > 0, s > 0");
    const double half_mass_log = std::log(0.5 * std::sqrt(kPi / sigma));
    ReportBuilder b("gauss_tail_1d", p, "log");
    b.add(log_gauss_tail(sigma, s, 0.0), half_mass_log - sigma * s * s);
    auto f = [&](double x) { return std::exp(-sigma * x * x); };
    const double head = adaptive_simpson(f, 0.0, s, 1e-14);
    const double tail_exp_term = -sigma * s * s;
    const double rhs_lower =
        tail_exp_term > -700.0 ? half_mass_log + std::log1p(-std::exp(tail_exp_term)) : half_mass_log;
    b.add(rhs_lower, std::log(head));
    return b.done();
}

inline BoundReport check_gauss_tail_dd(const Params& p) {
    const int d = get_int_param(p, "d");
    const double sigma = get_param(p, "sigma"), s = get_param(p, "s");
    if (d < 1 || !(sigma > 0.0) || !(s > 0.0)) throw std::domain_error("gauss_tail_dd: need d >= 1, sigma > 0, s > 0");
    const double full_log = 0.5 * d * std::log(kPi / sigma);
    const double tail_norm_log = radial_gaussian_integral(d, sigma, 0.0, s);  // log of tail mass fraction
    const double u_log = -sigma * s * s / d;                                  // log e^{-sigma s^2/d}
    const double log_one_minus_u = u_log > -700.0 ? std::log1p(-std::exp(u_log)) : 0.0;
    ReportBuilder b("gauss_tail_dd", p, "log");
    // ball volume >= (pi/sigma)^{d/2} (1-e^{-sigma s^2/d})^d; the ball side
    // comes from the radial head integral so tiny masses stay in log scale.
    const double ball_log = full_log + std::log(2.0) + 0.5 * d * std::log(sigma) - log_gamma(0.5 * d) +
                            log_gauss_head(sigma, s, d - 1.0);
    b.add(full_log + d * log_one_minus_u, ball_log);
    // tail volume <= (pi/sigma)^{d/2} (1 - (1-e^{-sigma s^2/d})^d); once u
    // underflows, 1-(1-u)^d collapses to its first-order term d*u.
    const double log_one_minus_pow =
        u_log > -700.0 ? std::log(-std::expm1(d * log_one_minus_u))
                       : std::log(static_cast<double>(d)) + u_log;
    b.add(full_log + tail_norm_log, full_log + log_one_minus_pow);
    return b.done();
}

inline BoundReport check_bernoulli(const Params& p) {
    const double alpha = get_param(p, "alpha"), x = get_param(p, "x");
    if (alpha > 0.0 && alpha < 1.0) throw std::domain_error("bernoulli: alpha must lie outside (0,1)");
    if (!(x > -1.0)) throw std::domain_error("bernoulli: x must be > -1");
    ReportBuilder b("bernoulli", p, "linear");
    b.add(1.0 + alpha * x, std::pow(1.0 + x, alpha));
    return b.done();
}

inline BoundReport check_tail_exp(const Params& p) {
    const int d = get_int_param(p, "d");
    const double sigma = get_param(p, "sigma"), s = get_param(p, "s");
    if (d < 1 || !(sigma > 0.0) || !(s > 0.0)) throw std::domain_error("tail_exp: need d >= 1, sigma > 0, s > 0");
    ReportBuilder b("tail_exp", p, "log");
    b.add(radial_gaussian_integral(d, sigma, 0.0, s), std::log(static_cast<double>(d)) - sigma * s * s / d);
    return b.done();
}

inline BoundReport check_segment(const Params& p) {
    const int d = get_int_param(p, "d");
    const double beta = get_param(p, "beta"), sigma = get_param(p, "sigma");
    if (d < 3 || !(beta > 0.0) || !(sigma > 0.0)) throw std::domain_error("segment: need d >= 3, beta > 0, sigma > 0");
    const double s1 = std::sqrt(d * (1.0 + beta) / (2.0 * sigma));
    const double s2 = d * std::sqrt((1.0 + beta) / (2.0 * sigma));
    const double outer = radial_gaussian_integral(d, sigma, 0.0, s1);
    const double inner = radial_gaussian_integral(d, sigma, 0.0, s2);
    const double lhs = outer > inner ? log_sub_exp(outer, inner) : kNegInf;
    ReportBuilder b("segment", p, "log");
    b.add(lhs, std::log(static_cast<double>(d)) + 0.5 * d * (std::log1p(beta) - beta));
    return b.done();
}

inline BoundReport check_weighted_tail(const Params& p) {
    const int d = get_int_param(p, "d");
    const int k = get_int_param(p, "k");
    const double beta = get_param(p, "beta"), sigma = get_param(p, "sigma");
    if (d < 3 || k < 0 || !(beta > 0.0) || !(sigma > 0.0))
        throw std::domain_error("weighted_tail: need d >= 3, k >= 0, beta > 0, sigma > 0");
    const double s = std::sqrt(d * (1.0 + beta) / (2.0 * sigma));
    const double lhs = radial_gaussian_integral(d, sigma, k, s);
    const double term1 = (1.0 + k) * std::log(static_cast<double>(d)) +
                         0.5 * k * std::log((1.0 + beta) / (2.0 * sigma)) +
                         0.5 * d * (std::log1p(beta) - beta);
    const double term2 = log_gamma(0.5 * (d + k)) - log_gamma(0.5 * d) + std::log(static_cast<double>(d + k)) -
                         0.5 * k * std::log(sigma) - d * d * (1.0 + beta) / (2.0 * (d + k));
    ReportBuilder b("weighted_tail", p, "log");
    b.add(lhs, log_add_exp(term1, term2));
    return b.done();
}

inline BoundReport check_tail_lower_klenke(const Params& p) {
    const double s = get_param(p, "s");
    if (!(s > 0.0)) throw std::domain_error("tail_lower_klenke: s must be > 0");
    ReportBuilder b("tail_lower_klenke", p, "log");
    b.add(-0.5 * s * s - std::log(s + 1.0 / s), log_gauss_tail(0.5, s, 0.0));
    return b.done();
}

inline BoundReport check_tail_lower(const Params& p) {
    const double sigma = get_param(p, "sigma"), s = get_param(p, "s");
    if (!(sigma > 0.0) || !(s > 0.0)) throw std::domain_error("tail_lower: need sigma > 0, s > 0");
    ReportBuilder b("tail_lower", p, "log");
    b.add(-sigma * s * s - std::log(1.0 / s + 2.0 * sigma * s), log_gauss_tail(sigma, s, 0.0));
    return b.done();
}

inline BoundReport check_small_facts(const Params& p) {
    const int d = get_int_param(p, "d");
    if (d < 1) throw std::domain_error("small_facts: d must be >= 1");
    const double dd = d;
    const double lhs_log = -std::log(50.0) - 2.5 * std::log(dd);
    const double rhs_log = 0.5 * std::log(2.0 * dd) + std::log(2.0 * dd + 1.0) -
                           std::log(4.0 * dd * dd * (4.0 * dd * dd + 6.0 * dd + 1.0)) +
                           0.5 * std::log(2.0 / kPi) - 1.0 - 1.0 / (4.0 * dd);
    ReportBuilder b("small_facts", p, "log");
    b.add(lhs_log, rhs_log);
    return b.done();
}

inline BoundReport check_norm_bracket(const Params& p) {
    const int d = get_int_param(p, "d");
    if (d < 1) throw std::domain_error("norm_bracket: d must be >= 1");
    const double log_c = log_normalization_const(d);
    const double dd = d;
    ReportBuilder b("norm_bracket", p, "log");
    b.add(-std::log(50.0) - 1.5 * std::log(dd) - dd, log_c);
    b.add(log_c, std::log(3.0) + 2.0 * std::log(dd) - dd);
    return b.done();
}

inline BoundReport check_apriori_realization(const Params& p, std::uint64_t seed) {
    const int inputs = p.count("inputs") ? get_int_param(p, "inputs") : 20;
    Rng rng(seed);
    const Network net = random_network(rng);
    const ArchStats st = arch_stats(net);
    const double t = std::max(1.0, inf_norm(net));
    const double coeff_log = st.depth * (std::log(static_cast<double>(st.params) * t) -
                                         std::log(2.0 * st.depth));
    ReportBuilder b("apriori_realization", p, "log");
    for (int i = 0; i < inputs; ++i) {
        Vector x(st.input);
        for (double& v : x) v = rng.normal();
        const double out = inf_norm(realize(net, x));
        const double lhs = out > 0.0 ? std::log(out) : kNegInf;
        b.add(lhs, coeff_log + std::log(two_norm(x) + st.depth));
    }
    return b.done();
}

inline BoundReport check_cs_like(const Params& p, std::uint64_t seed) {
    const int dim = p.count("dim") ? get_int_param(p, "dim") : 64;
    Rng rng(seed);
    auto unit_vec = [&]() {
        Vector v(dim);
        double norm = 0.0;
        do {
            for (double& t : v) t = rng.normal();
            norm = two_norm(v);
        } while (norm == 0.0);
        for (double& t : v) t /= norm;
        return v;
    };
    const Vector f = unit_vec(), g = unit_vec();
    double abs_dot = 0.0;
    for (int i = 0; i < dim; ++i) abs_dot += std::abs(f[i] * g[i]);
    ReportBuilder b("cs_like", p, "linear");
    for (double alpha : {-2.0, 0.0, 0.5, 1.0, 3.0}) {
        double dist = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double r = alpha * f[i] - g[i];
            dist += r * r;
        }
        b.add(1.0 - abs_dot, dist);
    }
    return b.done();
}

inline BoundReport check_realization_tail(const Params& p, std::uint64_t seed) {
    const int d = get_int_param(p, "d");
    const double beta = get_param(p, "beta"), sigma = get_param(p, "sigma");
    const long long samples = p.count("samples") ? static_cast<long long>(get_param(p, "samples")) : 1000000;
    if (d < 4 || !(beta > 0.0) || !(sigma > 0.0))
        throw std::domain_error("realization_tail: need d >= 4, beta > 0, sigma > 0");
    const Network net = target_net(d, 2, 4.0).net;
    const ArchStats st = arch_stats(net);
    const double radius = std::sqrt(d * (1.0 + beta) / (2.0 * sigma));
    const double coord_sd = 1.0 / std::sqrt(2.0 * sigma);

    // Truncated MC for the tail integral of |realize|^2 against the
    // sigma-Gaussian; the check is one-sided (estimate + 3 std errors).
    Rng rng(seed);
    double sum = 0.0, sum_sq = 0.0;
    Vector x(d);
    for (long long i = 0; i < samples; ++i) {
        double norm_sq = 0.0;
        for (int j = 0; j < d; ++j) {
            x[j] = coord_sd * rng.normal();
            norm_sq += x[j] * x[j];
        }
        double y = 0.0;
        if (norm_sq >= radius * radius) {
            const double r = realize(net, x)[0];
            y = r * r;
        }
        sum += y;
        sum_sq += y * y;
    }
    const double mean = sum / samples;
    const double var = std::max(0.0, (sum_sq - samples * mean * mean) / (samples - 1.0));
    const double upper = mean + 3.0 * std::sqrt(var / samples);

    const double t = std::max(1.0, inf_norm(net));
    const double rhs = 2.0 * std::log(static_cast<double>(st.depth)) +
                       2.0 * st.depth * (std::log(static_cast<double>(st.params) * t) - std::log(2.0 * st.depth)) +
                       (d / 3.0) * (std::log1p(beta) - beta) +
                       std::log(std::pow(static_cast<double>(d), 3) * (6.0 + 4.0 * beta + sigma) / (4.0 * sigma));
    ReportBuilder b("realization_tail", p, "log");
    b.add(upper > 0.0 ? std::log(upper) : kNegInf, rhs);
    return b.done();
}

inline BoundReport check_beta_identity(const Params& p) {
    const double x = get_param(p, "x"), y = get_param(p, "y");
    if (!(x >= 0.5) || !(y >= 0.5)) throw std::domain_error("beta_identity: need x, y >= 0.5");
    // B(x,y) via the substitution t = sin^2(theta), which removes the
    // endpoint singularities for x, y >= 1/2.
    auto f = [&](double th) {
        const double s = std::sin(th), c = std::cos(th);
        return 2.0 * std::pow(s, 2.0 * x - 1.0) * std::pow(c, 2.0 * y - 1.0);
    };
    const double quad = adaptive_simpson(f, 0.0, 0.5 * kPi, 1e-13);
    const double closed = std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
    ReportBuilder b("beta_identity", p, "linear");
    b.add(std::abs(quad - closed), 1e-8 * closed);
    return b.done();
}

}  // namespace detail

inline BoundReport check_bound(const std::string& name, const Params& params, std::uint64_t seed) {
    if (name == "stirling") return detail::check_stirling(params);
    if (name == "gamma_stirling") return detail::check_gamma_stirling(params);
    if (name == "gauss_tail_1d") return detail::check_gauss_tail_1d(params);
    if (name == "gauss_tail_dd") return detail::check_gauss_tail_dd(params);
    if (name == "bernoulli") return detail::check_bernoulli(params);
    if (name == "tail_exp") return detail::check_tail_exp(params);
    if (name == "segment") return detail::check_segment(params);
    if (name == "weighted_tail") return detail::check_weighted_tail(params);
    if (name == "tail_lower_klenke") return detail::check_tail_lower_klenke(params);
    if (name == "tail_lower") return detail::check_tail_lower(params);
    if (name == "small_facts") return detail::check_small_facts(params);
    if (name == "norm_bracket") return detail::check_norm_bracket(params);
    if (name == "apriori_realization") return detail::check_apriori_realization(params, seed);
    if (name == "cs_like") return detail::check_cs_like(params, seed);
    if (name == "realization_tail") return detail::check_realization_tail(params, seed);
    if (name == "beta_identity") return detail::check_beta_identity(params);
    throw std::invalid_argument("check_bound: unknown inequality \"" + name + "\"");
}

// --- Certificates -----------------------------------------------------------

struct CertificateInput {
    int d = 4;
    double beta = 1.0;
    double sigma = 0.5;
    double realization_l2 = 0.0;   // \int |realize(Phi)|^2 phi
    double ball_mass = 0.0;        // \int_{||y|| <= sqrt(d(1+beta))/sqrt(2 sigma)} |g_norm|^2 phi
    double approx_error_sq = 0.0;  // \int |realize(Phi) - g_norm|^2 phi
    int depth = 1;                 // L(Phi)
    long long params = 1;          // P(Phi)
    double inf_norm = 0.0;         // ||T(Phi)||_inf
};

// Depth-weighted parameter lower bound: L (P max{1,||T||}/(2L))^L must
// dominate the floor built from the network's own error integrals.  A
// nonpositive bracket makes the floor vacuous (report passes trivially).
inline BoundReport main1_certificate(const CertificateInput& in) {
    if (in.d < 4) throw std::domain_error("main1_certificate: d must be >= 4");
    if (!(in.realization_l2 > 0.0)) throw std::domain_error("main1_certificate: realization_l2 must be > 0");
    if (in.ball_mass < 0.0 || in.approx_error_sq < 0.0)
        throw std::domain_error("main1_certificate: integrals must be nonnegative");
    const double t = std::max(1.0, in.inf_norm);
    const double big_side = std::log(static_cast<double>(in.depth)) +
                            in.depth * (std::log(static_cast<double>(in.params) * t) - std::log(2.0 * in.depth));
    const double bracket = 1.0 - std::sqrt(in.ball_mass) - in.approx_error_sq;
    double floor_log = kNegInf;
    if (bracket > 0.0) {
        floor_log = (in.d / 6.0) * (in.beta - std::log1p(in.beta)) + std::log(2.0 * std::sqrt(in.sigma)) +
                    0.5 * std::log(in.realization_l2) - 1.5 * std::log(static_cast<double>(in.d)) -
                    0.5 * std::log(6.0 + 4.0 * in.beta + in.sigma) + std::log(bracket);
    }
    BoundReport rep;
    rep.name = "main1";
    rep.params = {{"d", static_cast<double>(in.d)}, {"beta", in.beta},
                  {"sigma", in.sigma},              {"L", static_cast<double>(in.depth)},
                  {"P", static_cast<double>(in.params)}};
    rep.scale = "log";
    rep.lhs = floor_log;
    rep.rhs = big_side;
    rep.slack = rep.rhs - rep.lhs;
    rep.pass = detail::comparison_holds(rep.lhs, rep.rhs);
    return rep;
}

// Certificate input for a constructed target net, with every integral from
// the 1-D separable reduction.  The normalized target vanishes on the ball
// of radius sqrt(2d) (= sqrt(d(1+beta))/sqrt(2 sigma) at beta=1, sigma=1/2),
// so the ball mass is exactly zero there.
inline CertificateInput certificate_input_for_target(const TargetNet& tn, double beta = 1.0, double sigma = 0.5) {
    const Network psi = target_component(tn.spec);
    const double scale = target_scale(tn.spec);
    const int d = tn.spec.d;
    const double a = std::sqrt(2.0 * d);
    auto psi_val = [&](double x) { return realize_scalar(psi, x); };
    const double m1 = detail::integrate_phi_split(psi_val, {a});
    const double m2 = detail::integrate_phi_split([&](double x) { const double v = psi_val(x); return v * v; }, {a});
    CertificateInput in;
    in.d = d;
    in.beta = beta;
    in.sigma = sigma;
    in.realization_l2 = scale * scale * (d * m2 + static_cast<double>(d) * (d - 1) * m1 * m1);
    const double ball_radius = std::sqrt(d * (1.0 + beta) / (2.0 * sigma));
    if (ball_radius > a)
        throw std::invalid_argument(
            "certificate_input_for_target: ball radius exceeds sqrt(2d); supply the ball mass explicitly");
    in.ball_mass = 0.0;
    in.approx_error_sq = std::pow(l2_error_separable(psi, scale, d).value, 2);
    const ArchStats st = arch_stats(tn.net);
    in.depth = st.depth;
    in.params = st.params;
    in.inf_norm = inf_norm(tn.net);
    return in;
}

// log of the floor (2/7) d^{-3/2} e^{d/(20 L)} on P(Phi) max{1, ||T(Phi)||}.
inline double cor_main_floor(int d, int L) {
    if (d < 4) throw std::domain_error("cor_main_floor: d must be >= 4");
    if (L < 1) throw std::domain_error("cor_main_floor: L must be >= 1");
    return std::log(2.0 / 7.0) - 1.5 * std::log(static_cast<double>(d)) + d / (20.0 * L);
}

// --- Deep-budget vs shallow-floor table -------------------------------------

struct ShallowDeepRow {
    double d = 0.0;
    double deep_budget_log = 0.0;    // log(c d^3)
    double shallow_floor_log = 0.0;  // d^delta log(1 + c^{-3})
};

struct ShallowDeepTable {
    std::vector<ShallowDeepRow> rows;
    bool precondition_ok = false;
    double c_threshold = 0.0;           // 100 (delta ln 1.03)^{-2}
    std::optional<double> crossover_d;  // where the shallow floor first exceeds the deep budget
};

inline ShallowDeepTable shallow_deep_table(double c, double delta, const std::vector<double>& d_values) {
    if (!(c > 1.0) || !(delta > 0.0 && delta <= 1.0))
        throw std::domain_error("shallow_deep_table: need c > 1 and delta in (0,1]");
    ShallowDeepTable tab;
    const double ln103 = std::log(1.03);
    tab.c_threshold = 100.0 / (delta * ln103 * delta * ln103);
    tab.precondition_ok =
        c >= tab.c_threshold && std::log(2.0) + (5.0 / delta) * std::log(c) <= std::sqrt(c) * ln103;

    const double growth = std::log1p(std::pow(c, -3.0));  // log(1 + c^{-3})
    for (double d : d_values) {
        ShallowDeepRow row;
        row.d = d;
        row.deep_budget_log = std::log(c) + 3.0 * std::log(d);
        row.shallow_floor_log = std::pow(d, delta) * growth;
        tab.rows.push_back(row);
    }
    // Crossover: h(t) = e^{delta t} growth - log c - 3 t with t = log d has a
    // single sign change past its minimum; bisect there.
    auto h = [&](double t) { return std::exp(delta * t) * growth - std::log(c) - 3.0 * t; };
    if (h(0.0) >= 0.0) {
        tab.crossover_d = 1.0;
    } else {
        const double t_min = std::max(0.0, std::log(3.0 / (delta * growth)) / delta);
        double lo = t_min, hi = std::max(t_min + 1.0, 1.0);
        const double t_cap = 700.0;  // past exp(700) the crossing dimension overflows a double
        while (hi < t_cap && h(hi) < 0.0) hi = std::min(t_cap, hi * 1.5 + 1.0);
        if (h(hi) >= 0.0) {
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                (h(mid) < 0.0 ? lo : hi) = mid;
            }
            tab.crossover_d = std::exp(0.5 * (lo + hi));
        }
    }
    return tab;
}

// --- Suite runner -----------------------------------------------------------

enum class Suite { Section3, Section4, Section5, All };

inline std::string format_params(const Params& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : p) {
        if (!first) os << ",";
        first = false;
        os << k << "=";
        if (v == std::floor(v) && std::abs(v) < 1e15) os << static_cast<long long>(v);
        else os << v;
    }
    return os.str();
}

namespace detail {

inline void run_section3(std::vector<BoundReport>& out) {
    const std::vector<double> betas{0.25, 0.5, 1.0, 2.0};
    const std::vector<double> sigmas{0.25, 0.5, 1.0, 2.0};
    for (int n = 1; n <= 20; ++n) out.push_back(check_bound("stirling", {{"n", 1.0 * n}}));
    for (int m = 2; m <= 20; ++m) out.push_back(check_bound("gamma_stirling", {{"m", 1.0 * m}}));
    for (double sg : sigmas)
        for (double s : {0.5, 1.0, 4.47213595499958, 20.0})
            out.push_back(check_bound("gauss_tail_1d", {{"sigma", sg}, {"s", s}}));
    for (int d = 3; d <= 20; ++d)
        for (double sg : sigmas)
            for (double s : {0.5, 1.0, std::sqrt(static_cast<double>(d)), static_cast<double>(d)}) {
                out.push_back(check_bound("gauss_tail_dd", {{"d", 1.0 * d}, {"sigma", sg}, {"s", s}}));
                out.push_back(check_bound("tail_exp", {{"d", 1.0 * d}, {"sigma", sg}, {"s", s}}));
            }
    for (double alpha : {-2.0, -0.5, 1.0, 2.0, 3.0})
        for (double x : {-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 10.0})
            out.push_back(check_bound("bernoulli", {{"alpha", alpha}, {"x", x}}));
    for (int d = 3; d <= 20; ++d)
        for (double beta : betas)
            for (double sg : sigmas) {
                out.push_back(check_bound("segment", {{"d", 1.0 * d}, {"beta", beta}, {"sigma", sg}}));
                for (int k : {0, 1, 2})
                    out.push_back(check_bound(
                        "weighted_tail", {{"d", 1.0 * d}, {"beta", beta}, {"sigma", sg}, {"k", 1.0 * k}}));
            }
    for (double x : {0.5, 1.0, 1.5, 2.5, 4.0})
        for (double y : {0.5, 1.0, 2.5})
            out.push_back(check_bound("beta_identity", {{"x", x}, {"y", y}}));
}

inline void run_section4(std::vector<BoundReport>& out, std::uint64_t seed) {
    for (int i = 0; i < 200; ++i)
        out.push_back(check_bound("apriori_realization", {{"case", 1.0 * i}}, mix64(seed) + i));
    for (int i = 0; i < 1000; ++i)
        out.push_back(check_bound("cs_like", {{"case", 1.0 * i}}, mix64(seed + 1) + i));
    for (int d : {4, 8, 12})
        for (double beta : {1.0})
            for (double sg : {0.5, 1.0})
                out.push_back(check_bound("realization_tail",
                                          {{"d", 1.0 * d}, {"beta", beta}, {"sigma", sg}, {"samples", 1e6}},
                                          mix64(seed + 2) + d));
    for (int d : {4, 5, 6})
        out.push_back(main1_certificate(certificate_input_for_target(target_net_for_eps(d, 0.25))));
}

inline void run_section5(std::vector<BoundReport>& out) {
    for (double s : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
        out.push_back(check_bound("tail_lower_klenke", {{"s", s}}));
        for (double sg : {0.25, 0.5, 1.0, 2.0})
            out.push_back(check_bound("tail_lower", {{"sigma", sg}, {"s", s}}));
    }
    for (int d = 1; d <= 30; ++d) {
        out.push_back(check_bound("small_facts", {{"d", 1.0 * d}}));
        out.push_back(check_bound("norm_bracket", {{"d", 1.0 * d}}));
    }
}

}  // namespace detail

inline std::vector<BoundReport> run_suite(Suite suite, std::uint64_t seed = 0) {
    std::vector<BoundReport> out;
    if (suite == Suite::Section3 || suite == Suite::All) detail::run_section3(out);
    if (suite == Suite::Section4 || suite == Suite::All) detail::run_section4(out, seed);
    if (suite == Suite::Section5 || suite == Suite::All) detail::run_section5(out);
    return out;
}

}  // namespace relucalc
