#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "relucalc/network.hpp"
#include "relucalc/quadrature.hpp"
#include "relucalc/rng.hpp"

// Target functions under the standard Gaussian measure, their normalization,
// and L2 error measurement.  Every e^{+-d}-scale quantity is carried as a
// logarithm; conversion to linear scale happens last.

namespace relucalc {

// Per-coordinate summand of the hinge-square target:
// u(t) = [max{|t| - sqrt(2d), 0}]^2.  The full target is f_d(x) = sum_j u(x_j).
inline double hinge(int d, double t) {
    if (d < 1) throw std::invalid_argument("hinge: d must be >= 1");
    const double r = std::abs(t) - std::sqrt(2.0 * d);
    return r > 0.0 ? r * r : 0.0;
}

namespace detail {

// J_k(a) = \int_0^\infty t^k e^{-t^2/2 - a t} dt, an O(1) factor once the
// e^{-d} scale of the hinge moments is split off.
inline double hinge_tail_factor(double a, int k) {
    const double hi = -a + std::sqrt(a * a + 260.0);
    auto f = [&](double t) { return std::pow(t, k) * std::exp(-0.5 * t * t - a * t); };
    return panel_refine(f, 0.0, hi, 1e-13, 32, 8192);
}

}  // namespace detail

// First and second 1-D moments of u against phi_1, with the e^{-d} factor
// removed: m_k = e^{-d} * scaled_k.
inline double hinge_moment1_scaled(int d) {
    const double a = std::sqrt(2.0 * d);
    return (2.0 / kSqrt2Pi) * detail::hinge_tail_factor(a, 2);
}
inline double hinge_moment2_scaled(int d) {
    const double a = std::sqrt(2.0 * d);
    return (2.0 / kSqrt2Pi) * detail::hinge_tail_factor(a, 4);
}

// log of c_d = \int |f_d|^2 phi_d.  Independence of the coordinates gives the
// exact separable identity c_d = d*m2 + d(d-1)*m1^2 with m1 = \int u dphi_1
// and m2 = \int u^2 dphi_1 (cross-checked against Monte Carlo in the tests).
inline double log_normalization_const(int d) {
    if (d < 1) throw std::invalid_argument("log_normalization_const: d must be >= 1");
    const double s1 = hinge_moment1_scaled(d);  // m1 = e^{-d} s1
    const double s2 = hinge_moment2_scaled(d);  // m2 = e^{-d} s2
    const double dd = static_cast<double>(d);
    // c_d = e^{-d} * (d*s2 + d(d-1)*e^{-d}*s1^2)
    const double inner = dd * s2 + dd * (dd - 1.0) * std::exp(-dd) * s1 * s1;
    if (!(inner > 0.0) || !std::isfinite(inner))
        throw EvalError("log_normalization_const: quadrature failure");
    return -dd + std::log(inner);
}

// Normalized target value at x: c_d^{-1/2} * sum_j u(x_j).
inline double normalized_target(int d, const Vector& x) {
    if (static_cast<int>(x.size()) != d) throw ShapeError("normalized_target: input length != d");
    double s = 0.0;
    for (double t : x) s += hinge(d, t);
    return std::exp(-0.5 * log_normalization_const(d)) * s;
}

enum class ErrorMethod { ExactReduction, Quadrature, MonteCarlo };

inline std::string method_name(ErrorMethod m) {
    switch (m) {
        case ErrorMethod::ExactReduction: return "exact-reduction";
        case ErrorMethod::Quadrature: return "quadrature";
        default: return "monte-carlo";
    }
}

struct ErrorEstimate {
    double value = 0.0;  // L2 error (not squared)
    ErrorMethod method = ErrorMethod::ExactReduction;
    std::optional<double> std_error;   // present iff method == MonteCarlo
    std::optional<long long> samples;  // present iff method == MonteCarlo
};

namespace detail {

// \int g(t) phi_1(t) dt with panel refinement split at the given interior
// breakpoints; covers kinked, piecewise-polynomial integrands.
inline double integrate_phi_split(const std::function<double(double)>& g, const std::vector<double>& breaks) {
    const double lim = 38.0;
    std::vector<double> edges{-lim, 0.0, lim};
    for (double b : breaks)
        if (std::abs(b) < lim) {
            edges.push_back(b);
            edges.push_back(-b);
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    auto weighted = [&](double t) {
        const double v = g(t);
        if (!std::isfinite(v)) throw EvalError("integrate_phi_split: non-finite integrand value");
        return v * phi1(t);
    };
    double acc = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        acc += panel_refine(weighted, edges[i], edges[i + 1], 1e-12, 16, 4096);
    return acc;
}

}  // namespace detail

// Exact separable reduction of the d-dimensional L2(phi_d) error of the
// coordinate-sum approximator x -> scale * sum_j psi(x_j) against the
// normalized target:
//   error^2 = d * \int Delta^2 dphi_1 + d(d-1) * (\int Delta dphi_1)^2
// with Delta(t) = scale * psi(t) - c_d^{-1/2} u(t).  Only 1-D integrals are
// evaluated, so any d is cheap.
inline ErrorEstimate l2_error_separable_fn(const std::function<double(double)>& psi, double scale, int d) {
    if (d < 1) throw std::invalid_argument("l2_error_separable: d must be >= 1");
    const double a = std::sqrt(2.0 * d);
    const double cinv_half = std::exp(-0.5 * log_normalization_const(d));
    auto delta = [&](double t) { return scale * psi(t) - cinv_half * hinge(d, t); };
    const double i1 = detail::integrate_phi_split(delta, {a});
    const double i2 = detail::integrate_phi_split([&](double t) { const double v = delta(t); return v * v; }, {a});
    const double dd = static_cast<double>(d);
    const double err_sq = dd * i2 + dd * (dd - 1.0) * i1 * i1;
    ErrorEstimate est;
    est.value = std::sqrt(std::max(err_sq, 0.0));
    est.method = ErrorMethod::ExactReduction;
    return est;
}

inline ErrorEstimate l2_error_separable(const Network& psi, double scale, int d) {
    if (psi.input_dim() != 1 || psi.output_dim() != 1)
        throw ShapeError("l2_error_separable: psi must map R -> R");
    return l2_error_separable_fn([&psi](double t) { return realize_scalar(psi, t); }, scale, d);
}

struct McResult {
    double mean = 0.0;
    double std_error = 0.0;
    long long samples = 0;
};

// Monte-Carlo mean of F(x) with x ~ N(0, I_d).  Samples are drawn in fixed
// shards whose substreams depend only on (seed, shard index), so the result
// is deterministic and independent of how shards would be scheduled.
inline McResult mc_integral_phi(const std::function<double(const Vector&)>& F, int d, long long samples,
                                std::uint64_t seed) {
    if (d < 1 || samples < 2) throw std::invalid_argument("mc_integral_phi: need d >= 1, samples >= 2");
    constexpr long long kShard = 65536;
    double sum = 0.0, sum_sq = 0.0;
    Vector x(static_cast<size_t>(d));
    long long done = 0;
    for (std::uint64_t shard = 0; done < samples; ++shard) {
        Rng rng = Rng::for_shard(seed, shard);
        const long long batch = std::min(kShard, samples - done);
        for (long long i = 0; i < batch; ++i) {
            for (int j = 0; j < d; ++j) x[j] = rng.normal();
            const double y = F(x);
            sum += y;
            sum_sq += y * y;
        }
        done += batch;
    }
    McResult r;
    r.samples = samples;
    r.mean = sum / static_cast<double>(samples);
    const double var = std::max(0.0, (sum_sq - static_cast<double>(samples) * r.mean * r.mean) /
                                         static_cast<double>(samples - 1));
    r.std_error = std::sqrt(var / static_cast<double>(samples));
    return r;
}

// Unbiased MC estimate of \int |realize(net,.) - f_d|^2 dphi_d, reported as
// the square root with its delta-method standard error.
inline ErrorEstimate l2_error_mc(const Network& net, int d, long long samples, std::uint64_t seed) {
    if (net.input_dim() != d || net.output_dim() != 1)
        throw ShapeError("l2_error_mc: net must map R^d -> R");
    const double cinv_half = std::exp(-0.5 * log_normalization_const(d));
    auto sq_residual = [&](const Vector& x) {
        double target = 0.0;
        for (double t : x) target += hinge(d, t);
        const double r = realize(net, x)[0] - cinv_half * target;
        return r * r;
    };
    const McResult mc = mc_integral_phi(sq_residual, d, samples, seed);
    ErrorEstimate est;
    est.method = ErrorMethod::MonteCarlo;
    est.samples = mc.samples;
    if (mc.mean > 0.0) {
        est.value = std::sqrt(mc.mean);
        est.std_error = mc.std_error / (2.0 * est.value);
    } else {
        est.value = 0.0;
        est.std_error = mc.std_error;
    }
    return est;
}

}  // namespace relucalc
