#pragma once

#include <string>
#include <vector>

#include "relucalc/network.hpp"

// Structural operations on networks.  Each operation builds the exact block
// matrices of its definition; realizations obey the corresponding laws
// (composition realizes the function composition, parallelization maps
// concatenated inputs to concatenated outputs, and so on).

namespace relucalc {

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw ShapeError("matmul: inner dimensions differ");
    Matrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline Vector matvec(const Matrix& a, const Vector& x) {
    if (a.cols != static_cast<int>(x.size())) throw ShapeError("matvec: dimension mismatch");
    Vector y(a.rows, 0.0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) y[i] += a(i, j) * x[j];
    return y;
}

// Single affine layer realizing x -> Wx + B.
inline Network affine_net(Matrix w, Vector b) {
    std::vector<Layer> ls;
    ls.emplace_back(std::move(w), std::move(b));
    return Network(std::move(ls));
}

// Composition f . g: feeds g's output into f, fusing the interface layers
// so that the merged layer is (W_1 WW_L, W_1 BB_L + B_1) with (W_1, B_1)
// the first layer of f and (WW_L, BB_L) the last layer of g.
inline Network compose(const Network& f, const Network& g) {
    if (f.input_dim() != g.output_dim())
        throw ShapeError("compose: f expects input dim " + std::to_string(f.input_dim()) +
                         " but g outputs dim " + std::to_string(g.output_dim()));
    const Layer& first_f = f.layers.front();
    const Layer& last_g = g.layers.back();
    Matrix w = matmul(first_f.weights, last_g.weights);
    Vector b = matvec(first_f.weights, last_g.bias);
    for (size_t i = 0; i < b.size(); ++i) b[i] += first_f.bias[i];

    std::vector<Layer> ls;
    ls.reserve(g.depth() + f.depth() - 1);
    ls.insert(ls.end(), g.layers.begin(), g.layers.end() - 1);
    ls.emplace_back(std::move(w), std::move(b));
    ls.insert(ls.end(), f.layers.begin() + 1, f.layers.end());
    return Network(std::move(ls));
}

// n-fold composition of a network with matching input/output dims;
// n = 0 is the single affine identity layer on R^{out}.
inline Network power(const Network& f, int n) {
    if (f.input_dim() != f.output_dim())
        throw ShapeError("power: network must have equal input and output dims");
    if (n < 0) throw std::invalid_argument("power: n must be nonnegative");
    if (n == 0) return affine_net(Matrix::identity(f.output_dim()), Vector(f.output_dim(), 0.0));
    Network acc = f;
    for (int k = 1; k < n; ++k) acc = compose(f, acc);
    return acc;
}

// Block-diagonal stacking of equal-depth networks.
inline Network parallelize(const std::vector<Network>& nets) {
    if (nets.empty()) throw std::invalid_argument("parallelize: need at least one network");
    const int L = nets.front().depth();
    for (size_t j = 1; j < nets.size(); ++j)
        if (nets[j].depth() != L)
            throw ShapeError("parallelize: network " + std::to_string(j + 1) + " has depth " +
                             std::to_string(nets[j].depth()) + ", expected " + std::to_string(L));
    std::vector<Layer> ls;
    ls.reserve(L);
    for (int k = 0; k < L; ++k) {
        int rows = 0, cols = 0;
        for (const Network& n : nets) {
            rows += n.layers[k].out_dim();
            cols += n.layers[k].in_dim();
        }
        Matrix w(rows, cols);
        Vector b;
        b.reserve(rows);
        int r0 = 0, c0 = 0;
        for (const Network& n : nets) {
            const Layer& l = n.layers[k];
            for (int i = 0; i < l.out_dim(); ++i)
                for (int j = 0; j < l.in_dim(); ++j) w(r0 + i, c0 + j) = l.weights(i, j);
            b.insert(b.end(), l.bias.begin(), l.bias.end());
            r0 += l.out_dim();
            c0 += l.in_dim();
        }
        ls.emplace_back(std::move(w), std::move(b));
    }
    return Network(std::move(ls));
}

// Two-layer ReLU identity on R: x -> relu(x) - relu(-x).
inline Network identity_net_1d() {
    Matrix w1(2, 1, {1.0, -1.0});
    Matrix w2(1, 2, {1.0, -1.0});
    std::vector<Layer> ls;
    ls.emplace_back(std::move(w1), Vector{0.0, 0.0});
    ls.emplace_back(std::move(w2), Vector{0.0});
    return Network(std::move(ls));
}

// Identity on R^d with dims (d, 2d, d): the d-fold parallelization of the
// one-dimensional identity.
inline Network identity_net(int d) {
    if (d < 1) throw std::invalid_argument("identity_net: d must be >= 1");
    return parallelize(std::vector<Network>(d, identity_net_1d()));
}

// Scalar multiple: composes the affine map lambda*I with f, leaving dims
// unchanged and scaling the realization by lambda.
inline Network scalar_mul(double lambda, const Network& f) {
    const int m = f.output_dim();
    Matrix w(m, m);
    for (int i = 0; i < m; ++i) w(i, i) = lambda;
    return compose(affine_net(std::move(w), Vector(m, 0.0)), f);
}

// Summation network (I_m I_m ... I_m) with n blocks: maps the concatenation
// of n vectors in R^m to their sum.
inline Network sum_net(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("sum_net: m and n must be >= 1");
    Matrix w(m, m * n);
    for (int blk = 0; blk < n; ++blk)
        for (int i = 0; i < m; ++i) w(i, blk * m + i) = 1.0;
    return affine_net(std::move(w), Vector(m, 0.0));
}

}  // namespace relucalc
