#pragma once

#include "relucalc/network.hpp"
#include "relucalc/rng.hpp"

// Seeded random networks for property tests and sampled certificates:
// dims uniform in [1,6], depth uniform in [1,4], entries uniform in [-2,2].

namespace relucalc {

struct RandomNetOptions {
    int min_width = 1;
    int max_width = 6;
    int min_depth = 1;
    int max_depth = 4;
    double entry_lo = -2.0;
    double entry_hi = 2.0;
    int input_dim = 0;   // 0: draw at random
    int output_dim = 0;  // 0: draw at random
    int depth = 0;       // 0: draw at random
};

inline Network random_network(Rng& rng, const RandomNetOptions& opt = {}) {
    const int depth = opt.depth > 0 ? opt.depth : rng.uniform_int(opt.min_depth, opt.max_depth);
    std::vector<int> dims(depth + 1);
    for (int i = 0; i <= depth; ++i) dims[i] = rng.uniform_int(opt.min_width, opt.max_width);
    if (opt.input_dim > 0) dims.front() = opt.input_dim;
    if (opt.output_dim > 0) dims.back() = opt.output_dim;

    std::vector<Layer> layers;
    layers.reserve(depth);
    for (int k = 1; k <= depth; ++k) {
        Matrix w(dims[k], dims[k - 1]);
        for (double& v : w.data) v = rng.uniform(opt.entry_lo, opt.entry_hi);
        Vector b(dims[k]);
        for (double& v : b) v = rng.uniform(opt.entry_lo, opt.entry_hi);
        layers.emplace_back(std::move(w), std::move(b));
    }
    return Network(std::move(layers));
}

inline Vector random_vector(Rng& rng, int n, double lo = -2.0, double hi = 2.0) {
    Vector x(n);
    for (double& v : x) v = rng.uniform(lo, hi);
    return x;
}

}  // namespace relucalc
