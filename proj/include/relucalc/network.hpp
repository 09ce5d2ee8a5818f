#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Feedforward ReLU network data model: dense layers, forward evaluation,
// architecture queries and parameter vectorization.
//
// Convention used throughout: ReLU is applied after every layer except the
// last one, which stays affine.  A one-layer network is therefore a plain
// affine map.

namespace relucalc {

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense real matrix, row-major.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;  // rows * cols entries

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0) : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {
        if (r < 1 || c < 1) throw ShapeError("matrix dimensions must be positive");
    }
    Matrix(int r, int c, std::initializer_list<double> vals) : rows(r), cols(c), data(vals) {
        if (static_cast<int>(data.size()) != r * c) throw ShapeError("matrix initializer size mismatch");
    }

    double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

using Vector = std::vector<double>;

inline bool all_finite(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}
inline bool all_finite(const Matrix& m) { return all_finite(m.data); }

// One (W, B) pair; W has out_dim x in_dim entries, B has out_dim entries.
struct Layer {
    Matrix weights;
    Vector bias;

    Layer() = default;
    Layer(Matrix w, Vector b) : weights(std::move(w)), bias(std::move(b)) {
        if (weights.rows != static_cast<int>(bias.size()))
            throw ShapeError("layer: weight row count " + std::to_string(weights.rows) +
                             " != bias length " + std::to_string(bias.size()));
        if (!all_finite(weights) || !all_finite(bias))
            throw ShapeError("layer: non-finite entry");
    }

    int in_dim() const { return weights.cols; }
    int out_dim() const { return weights.rows; }
};

// Ordered non-empty layer sequence with matching interfaces.
struct Network {
    std::vector<Layer> layers;

    Network() = default;
    explicit Network(std::vector<Layer> ls) : layers(std::move(ls)) { validate(); }

    void validate() const {
        if (layers.empty()) throw ShapeError("network must have at least one layer");
        for (size_t k = 1; k < layers.size(); ++k) {
            if (layers[k].in_dim() != layers[k - 1].out_dim())
                throw ShapeError("network: layer " + std::to_string(k + 1) + " expects input " +
                                 std::to_string(layers[k].in_dim()) + " but layer " + std::to_string(k) +
                                 " outputs " + std::to_string(layers[k - 1].out_dim()));
        }
    }

    int depth() const { return static_cast<int>(layers.size()); }
    int input_dim() const { return layers.front().in_dim(); }
    int output_dim() const { return layers.back().out_dim(); }
};

// Componentwise max with zero.
inline Vector relu(Vector x) {
    for (double& v : x) v = std::max(v, 0.0);
    return x;
}

inline Vector affine_apply(const Layer& l, const Vector& x) {
    if (static_cast<int>(x.size()) != l.in_dim())
        throw ShapeError("input length " + std::to_string(x.size()) + " != layer input dim " +
                         std::to_string(l.in_dim()));
    Vector out(l.out_dim());
    for (int i = 0; i < l.out_dim(); ++i) {
        double acc = l.bias[i];
        const double* row = l.weights.data.data() + static_cast<size_t>(i) * l.in_dim();
        for (int j = 0; j < l.in_dim(); ++j) acc += row[j] * x[j];
        out[i] = acc;
    }
    return out;
}

// Forward evaluation: ReLU after every layer except the last.
inline Vector realize(const Network& net, Vector x) {
    const int L = net.depth();
    for (int k = 0; k < L; ++k) {
        x = affine_apply(net.layers[k], x);
        if (k + 1 < L) x = relu(std::move(x));
    }
    return x;
}

inline double realize_scalar(const Network& net, double x) {
    if (net.input_dim() != 1 || net.output_dim() != 1)
        throw ShapeError("realize_scalar requires a 1 -> 1 network");
    return realize(net, Vector{x})[0];
}

// Debug facility: forward pass returning every post-activation vector
// v_1, ..., v_{L-1} plus the affine output v_L.
inline std::vector<Vector> realize_with_trace(const Network& net, Vector x) {
    std::vector<Vector> trace;
    const int L = net.depth();
    trace.reserve(L);
    for (int k = 0; k < L; ++k) {
        x = affine_apply(net.layers[k], x);
        if (k + 1 < L) x = relu(std::move(x));
        trace.push_back(x);
    }
    return trace;
}

// Architecture-derived counts.
struct ArchStats {
    std::vector<int> dims;  // (l_0, l_1, ..., l_L)
    int depth = 0;          // L
    int hidden = 0;         // L - 1
    int input = 0;          // l_0
    int output = 0;         // l_L
    long long params = 0;   // sum l_k (l_{k-1} + 1)
};

inline std::vector<int> dims_of(const Network& net) {
    std::vector<int> d;
    d.reserve(net.depth() + 1);
    d.push_back(net.input_dim());
    for (const Layer& l : net.layers) d.push_back(l.out_dim());
    return d;
}

inline long long param_count(const Network& net) {
    long long p = 0;
    for (const Layer& l : net.layers)
        p += static_cast<long long>(l.out_dim()) * (l.in_dim() + 1);
    return p;
}

inline ArchStats arch_stats(const Network& net) {
    ArchStats s;
    s.dims = dims_of(net);
    s.depth = net.depth();
    s.hidden = s.depth - 1;
    s.input = net.input_dim();
    s.output = net.output_dim();
    s.params = param_count(net);
    return s;
}

// l_n for n <= L, zero beyond the last layer.
inline int dims_at(const Network& net, int n) {
    if (n < 0) throw std::invalid_argument("dims_at: n must be nonnegative");
    if (n > net.depth()) return 0;
    return n == 0 ? net.input_dim() : net.layers[n - 1].out_dim();
}

// Flat parameter vector: per layer, weight entries row-wise, then the bias.
inline Vector vectorize(const Network& net) {
    Vector theta;
    theta.reserve(static_cast<size_t>(param_count(net)));
    for (const Layer& l : net.layers) {
        theta.insert(theta.end(), l.weights.data.begin(), l.weights.data.end());
        theta.insert(theta.end(), l.bias.begin(), l.bias.end());
    }
    return theta;
}

// Inverse of vectorize given the dims vector.
inline Network devectorize(const std::vector<int>& dims, const Vector& theta) {
    if (dims.size() < 2) throw ShapeError("devectorize: dims must have length >= 2");
    std::vector<Layer> layers;
    size_t pos = 0;
    for (size_t k = 1; k < dims.size(); ++k) {
        const int rows = dims[k], cols = dims[k - 1];
        if (rows < 1 || cols < 1) throw ShapeError("devectorize: dims entries must be >= 1");
        const size_t need = static_cast<size_t>(rows) * cols + rows;
        if (pos + need > theta.size()) throw ShapeError("devectorize: parameter vector too short");
        Matrix w(rows, cols);
        std::copy_n(theta.begin() + pos, static_cast<size_t>(rows) * cols, w.data.begin());
        pos += static_cast<size_t>(rows) * cols;
        Vector b(theta.begin() + pos, theta.begin() + pos + rows);
        pos += rows;
        layers.emplace_back(std::move(w), std::move(b));
    }
    if (pos != theta.size()) throw ShapeError("devectorize: parameter vector too long");
    return Network(std::move(layers));
}

// Max absolute value over all weights and biases.
inline double inf_norm(const Network& net) {
    double m = 0.0;
    for (const Layer& l : net.layers) {
        for (double v : l.weights.data) m = std::max(m, std::abs(v));
        for (double v : l.bias) m = std::max(m, std::abs(v));
    }
    return m;
}

inline double inf_norm(const Vector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double two_norm(const Vector& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Structural equality: equal shapes and bit-identical entries.
inline bool bit_equal(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

inline bool structurally_equal(const Network& a, const Network& b) {
    if (a.depth() != b.depth()) return false;
    for (int k = 0; k < a.depth(); ++k) {
        const Layer& la = a.layers[k];
        const Layer& lb = b.layers[k];
        if (la.in_dim() != lb.in_dim() || la.out_dim() != lb.out_dim()) return false;
        for (size_t i = 0; i < la.weights.data.size(); ++i)
            if (!bit_equal(la.weights.data[i], lb.weights.data[i])) return false;
        for (size_t i = 0; i < la.bias.size(); ++i)
            if (!bit_equal(la.bias[i], lb.bias[i])) return false;
    }
    return true;
}

// Componentwise absolute tolerance, default 1e-12.
inline bool approx_equal(const Network& a, const Network& b, double tol = 1e-12) {
    if (a.depth() != b.depth()) return false;
    for (int k = 0; k < a.depth(); ++k) {
        const Layer& la = a.layers[k];
        const Layer& lb = b.layers[k];
        if (la.in_dim() != lb.in_dim() || la.out_dim() != lb.out_dim()) return false;
        for (size_t i = 0; i < la.weights.data.size(); ++i)
            if (std::abs(la.weights.data[i] - lb.weights.data[i]) > tol) return false;
        for (size_t i = 0; i < la.bias.size(); ++i)
            if (std::abs(la.bias[i] - lb.bias[i]) > tol) return false;
    }
    return true;
}

}  // namespace relucalc
