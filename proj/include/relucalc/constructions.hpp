#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "relucalc/calculus.hpp"
#include "relucalc/measures.hpp"
#include "relucalc/network.hpp"

// Explicit approximator networks: the sawtooth-based square net on [0,1],
// its rescaled variant for [ReLU(x)]^2 on [0,R], the shifted-absolute-value
// front end, the multiplier chains realizing lambda^{2n}, and the full deep
// approximator of the normalized hinge-square target.

namespace relucalc {

// --- Reference (non-network) oracles -------------------------------------

// n-fold composition of the tent map g_1 (2x on [0,1/2), 2-2x on [1/2,1],
// 0 elsewhere).  Cell boundaries use the left-closed convention.
inline double sawtooth_oracle(int n, double x) {
    if (n < 1) throw std::invalid_argument("sawtooth_oracle: n must be >= 1");
    double v = x;
    for (int i = 0; i < n; ++i) {
        if (v < 0.0 || v > 1.0) v = 0.0;
        else if (v < 0.5) v = 2.0 * v;
        else v = 2.0 - 2.0 * v;
    }
    return v;
}

// Piecewise-linear interpolant of x^2 on the dyadic grid k/2^n of [0,1]:
// f_n(x) = [(2k+1)/2^n] x - (k^2+k)/2^{2n} on the left-closed cell
// [k/2^n, (k+1)/2^n), with f_n(1) = 1.
inline double interpolant_oracle(int n, double x) {
    if (n < 0) throw std::invalid_argument("interpolant_oracle: n must be >= 0");
    if (x < 0.0 || x > 1.0) throw std::domain_error("interpolant_oracle: x must lie in [0,1]");
    if (x == 1.0) return 1.0;
    const double k = std::floor(std::ldexp(x, n));
    return (2.0 * k + 1.0) * std::ldexp(x, -n) - (k * k + k) * std::ldexp(1.0, -2 * n);
}

// --- Square net on [0,1] ---------------------------------------------------

namespace detail {

// c_k = 2^{1-2k}, exact power-of-two scaling.
inline double square_net_c(int k) { return std::ldexp(1.0, 1 - 2 * k); }

inline Matrix square_net_A(int k) {
    const double c = square_net_c(k);
    return Matrix(4, 4, {2.0, -4.0, 2.0, 0.0,
                         2.0, -4.0, 2.0, 0.0,
                         2.0, -4.0, 2.0, 0.0,
                         -c, 2.0 * c, -c, 1.0});
}

inline Matrix square_net_C(int k) {
    const double c = square_net_c(k);
    return Matrix(1, 4, {-c, 2.0 * c, -c, 1.0});
}

inline const Vector& square_net_B() {
    static const Vector b{0.0, -0.5, -1.0, 0.0};
    return b;
}

}  // namespace detail

// Network with dims (1,4,...,4,1), M hidden layers and 20M-7 parameters that
// matches the dyadic interpolant of x^2 on [0,1] (error at most 4^{-M-1})
// and equals ReLU outside [0,1].
inline Network square_net(int M) {
    if (M < 1) throw std::invalid_argument("square_net: M must be >= 1");
    std::vector<Layer> ls;
    ls.reserve(M + 1);
    ls.emplace_back(Matrix(4, 1, {1.0, 1.0, 1.0, 1.0}), detail::square_net_B());
    for (int k = 1; k < M; ++k) ls.emplace_back(detail::square_net_A(k), detail::square_net_B());
    ls.emplace_back(detail::square_net_C(M), Vector{0.0});
    return Network(std::move(ls));
}

// Rescaled square net approximating [ReLU(x)]^2 on [0,R]: conjugates the
// unit-interval net by x -> x/R and y -> R^2 y, fusing the affine maps into
// the end layers so the parameter count stays 20M-7.
inline Network scaled_square_net(int M, double R) {
    if (M < 1) throw std::invalid_argument("scaled_square_net: M must be >= 1");
    if (!(R >= 1.0)) throw std::invalid_argument("scaled_square_net: R must be >= 1");
    const Network inner = compose(square_net(M), affine_net(Matrix(1, 1, {1.0 / R}), Vector{0.0}));
    return compose(affine_net(Matrix(1, 1, {R * R}), Vector{0.0}), inner);
}

// Dims (1,2,1); realizes x -> |x| - a.
inline Network abs_shift_net(double a) {
    std::vector<Layer> ls;
    ls.emplace_back(Matrix(2, 1, {1.0, -1.0}), Vector{0.0, 0.0});
    ls.emplace_back(Matrix(1, 2, {1.0, 1.0}), Vector{-a});
    return Network(std::move(ls));
}

// Even network approximating [ReLU(|x| - a)]^2: dims (1,2,4,...,4,1) with M
// fours, M+1 hidden layers, 20M+1 parameters.  Exact zero for |x| <= a,
// error at most 4^{-M-1} R^2 on a <= |x| <= a+R, and at most
// (|x|-a)^q R^{2-q} (q > 2) beyond.
inline Network hinge_square_net(double a, int M, double R) {
    if (a < 0.0) throw std::invalid_argument("hinge_square_net: a must be >= 0");
    if (M < 2) throw std::invalid_argument("hinge_square_net: M must be >= 2");
    if (!(R >= 1.0)) throw std::invalid_argument("hinge_square_net: R must be >= 1");
    return compose(scaled_square_net(M, R), abs_shift_net(a));
}

// Multiplier chain: n copies of the two-layer block realizing y -> lambda^2 y
// composed onto f, so the whole net realizes lambda^{2n} * realize(f, .).
inline Network lambda_power_chain(double lambda, int n, const Network& f) {
    if (n < 1) throw std::invalid_argument("lambda_power_chain: n must be >= 1");
    const int m = f.output_dim();
    Matrix lam(m, m);
    for (int i = 0; i < m; ++i) lam(i, i) = lambda;
    const Network block = compose(scalar_mul(lambda, identity_net(m)), affine_net(std::move(lam), Vector(m, 0.0)));
    return compose(power(block, n), f);
}

// --- Deep approximator of the normalized hinge-square target ---------------

struct TargetNetSpec {
    int d = 0;
    int M = 0;
    double R = 1.0;
    double lambda = 1.0;    // exp(-log_c_d / (4d)), in (0, 4]
    double log_c_d = 0.0;   // log \int |f_d|^2 phi_d
};

struct TargetNet {
    Network net;
    TargetNetSpec spec;
};

// Sum of d hinge-square nets followed by a lambda^{2d} multiplier chain; the
// realization equals lambda^{2d} * sum_j psi(x_j) with psi the hinge-square
// net at a = sqrt(2d), i.e. the normalized target up to the proven error
// bound.  Hidden layers: d + M + 1; parameters at most 42 d^2 M + 6d.
inline TargetNet target_net(int d, int M, double R) {
    if (d < 1) throw std::invalid_argument("target_net: d must be >= 1");
    if (M < 2) throw std::invalid_argument("target_net: M must be >= 2");
    if (!(R >= 1.0)) throw std::invalid_argument("target_net: R must be >= 1");
    TargetNetSpec spec;
    spec.d = d;
    spec.M = M;
    spec.R = R;
    spec.log_c_d = log_normalization_const(d);
    spec.lambda = std::exp(-spec.log_c_d / (4.0 * d));

    const Network psi = hinge_square_net(std::sqrt(2.0 * d), M, R);
    const Network summed = compose(sum_net(1, d), parallelize(std::vector<Network>(d, psi)));
    return TargetNet{lambda_power_chain(spec.lambda, d, summed), spec};
}

// Accuracy-driven parameterization: R = 9 d / sqrt(eps), M = floor(R);
// the resulting L2(phi_d) error against the normalized target is at most eps.
inline TargetNet target_net_for_eps(int d, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("target_net_for_eps: eps must be in (0,1]");
    const double R = 9.0 * d / std::sqrt(eps);
    const int M = static_cast<int>(std::floor(R));
    return target_net(d, M, R);
}

// Scale factor of the realization: lambda^{2d} = c_d^{-1/2}.
inline double target_scale(const TargetNetSpec& spec) { return std::exp(-0.5 * spec.log_c_d); }

// The univariate component net of a target net (rebuilt from its spec).
inline Network target_component(const TargetNetSpec& spec) {
    return hinge_square_net(std::sqrt(2.0 * spec.d), spec.M, spec.R);
}

}  // namespace relucalc
