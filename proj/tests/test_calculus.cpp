#include <catch2/catch_amalgamated.hpp>

#include "relucalc/calculus.hpp"
#include "relucalc/constructions.hpp"
#include "relucalc/random_net.hpp"

using namespace relucalc;

namespace {

Network random_pair_partner(Rng& rng, const Network& g) {
    RandomNetOptions opt;
    opt.input_dim = g.output_dim();
    return random_network(rng, opt);
}

}  // namespace

TEST_CASE("compose fuses the interface layers", "[calculus]") {
    // single layers: ((W, B)) after ((W', B')) is ((W W', W B' + B))
    const Network f = affine_net(Matrix(1, 1, {2.0}), {1.0});
    const Network g = affine_net(Matrix(1, 1, {3.0}), {0.0});
    const Network fg = compose(f, g);
    CHECK(fg.depth() == 1);
    CHECK(fg.layers[0].weights(0, 0) == 6.0);
    CHECK(fg.layers[0].bias[0] == 1.0);
    CHECK(realize_scalar(fg, 2.0) == 13.0);

    CHECK(arch_stats(compose(square_net(3), identity_net(1))).hidden == 4);
    CHECK_THROWS_AS(compose(identity_net(2), identity_net(3)), ShapeError);
}

TEST_CASE("composition realizes the function composition", "[calculus][property]") {
    Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const Network g = random_network(rng);
        const Network f = random_pair_partner(rng, g);
        const Network fg = compose(f, g);
        const ArchStats sf = arch_stats(f), sg = arch_stats(g), sfg = arch_stats(fg);
        CHECK(sfg.hidden == sf.hidden + sg.hidden);
        CHECK(sfg.input == sg.input);
        CHECK(sfg.output == sf.output);
        for (int rep = 0; rep < 20; ++rep) {
            const Vector x = random_vector(rng, sg.input);
            const Vector direct = realize(fg, x);
            const Vector chained = realize(f, realize(g, x));
            REQUIRE(direct.size() == chained.size());
            for (size_t i = 0; i < direct.size(); ++i)
                CHECK(std::abs(direct[i] - chained[i]) <= 1e-12);
        }
    }
}

TEST_CASE("composition dims follow the concatenation rule", "[calculus]") {
    Rng rng(102);
    for (int trial = 0; trial < 30; ++trial) {
        const Network g = random_network(rng);
        const Network f = random_pair_partner(rng, g);
        const Network fg = compose(f, g);
        std::vector<int> want;
        const auto dg = dims_of(g), df = dims_of(f);
        want.insert(want.end(), dg.begin(), dg.end() - 1);
        want.insert(want.end(), df.begin() + 1, df.end());
        CHECK(dims_of(fg) == want);
    }
}

TEST_CASE("composition is associative", "[calculus][property]") {
    Rng rng(103);
    // With a middle factor of depth >= 2 both orders only rearrange blocks,
    // so the results agree bitwise.
    for (int trial = 0; trial < 60; ++trial) {
        RandomNetOptions mid_opt;
        mid_opt.depth = rng.uniform_int(2, 4);
        const Network h = random_network(rng);
        mid_opt.input_dim = h.output_dim();
        const Network g = random_network(rng, mid_opt);
        const Network f = random_pair_partner(rng, g);
        CHECK(structurally_equal(compose(compose(f, g), h), compose(f, compose(g, h))));
    }
    // A depth-1 middle factor regroups the fused matrix products, which is
    // only associative up to rounding.
    for (int trial = 0; trial < 30; ++trial) {
        RandomNetOptions mid_opt;
        mid_opt.depth = 1;
        const Network h = random_network(rng);
        mid_opt.input_dim = h.output_dim();
        const Network g = random_network(rng, mid_opt);
        const Network f = random_pair_partner(rng, g);
        CHECK(approx_equal(compose(compose(f, g), h), compose(f, compose(g, h)), 1e-12));
    }
}

TEST_CASE("vector norm bound on composition", "[calculus][property]") {
    Rng rng(104);
    for (int trial = 0; trial < 60; ++trial) {
        const Network g = random_network(rng);
        const Network f = random_pair_partner(rng, g);
        const Layer& wf = f.layers.front();
        const Layer& lg = g.layers.back();
        Matrix w = matmul(wf.weights, lg.weights);
        Vector b = matvec(wf.weights, lg.bias);
        for (size_t i = 0; i < b.size(); ++i) b[i] += wf.bias[i];
        const double interface = inf_norm(affine_net(std::move(w), std::move(b)));
        CHECK(inf_norm(compose(f, g)) <=
              std::max({inf_norm(f), inf_norm(g), interface}) * (1.0 + 1e-15));
    }
}

TEST_CASE("power", "[calculus]") {
    Rng rng(105);
    RandomNetOptions opt;
    opt.input_dim = 3;
    opt.output_dim = 3;
    const Network f = random_network(rng, opt);

    const Network p0 = power(f, 0);
    CHECK(p0.depth() == 1);
    for (int rep = 0; rep < 10; ++rep) {
        const Vector x = random_vector(rng, 3);
        CHECK(realize(p0, x) == x);
    }
    // composing the zeroth power back onto f reproduces f exactly
    CHECK(structurally_equal(compose(p0, f), f));
    CHECK(structurally_equal(power(f, 1), f));

    // dims of powers of a (d, i, d) network
    RandomNetOptions shape;
    shape.depth = 2;
    shape.input_dim = 2;
    shape.output_dim = 2;
    Network psi = random_network(rng, shape);
    for (int n : {1, 2, 4}) {
        const auto dims = dims_of(power(psi, n));
        std::vector<int> want{2};
        want.insert(want.end(), n, dims_of(psi)[1]);
        want.push_back(2);
        CHECK(dims == want);
        CHECK(arch_stats(power(psi, n)).hidden == n);
    }
    CHECK_THROWS_AS(power(identity_net(2), -1), std::invalid_argument);
    CHECK_THROWS_AS(power(affine_net(Matrix(2, 3, 0.0), Vector(2, 0.0)), 2), ShapeError);
}

TEST_CASE("parallelize stacks block-diagonally", "[calculus][property]") {
    Rng rng(106);
    for (int trial = 0; trial < 40; ++trial) {
        RandomNetOptions opt;
        opt.depth = rng.uniform_int(1, 4);
        const Network f = random_network(rng, opt);
        const Network g = random_network(rng, opt);
        const Network par = parallelize({f, g});

        const auto df = dims_of(f), dg = dims_of(g), dp = dims_of(par);
        REQUIRE(dp.size() == df.size());
        for (size_t i = 0; i < dp.size(); ++i) CHECK(dp[i] == df[i] + dg[i]);

        const Vector x = random_vector(rng, f.input_dim());
        const Vector y = random_vector(rng, g.input_dim());
        Vector xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        const Vector out = realize(par, xy);
        const Vector fx = realize(f, x), gy = realize(g, y);
        REQUIRE(static_cast<int>(out.size()) == f.output_dim() + g.output_dim());
        for (size_t i = 0; i < fx.size(); ++i) CHECK(out[i] == Catch::Approx(fx[i]).margin(1e-12));
        for (size_t i = 0; i < gy.size(); ++i)
            CHECK(out[fx.size() + i] == Catch::Approx(gy[i]).margin(1e-12));
    }

    Rng rng_one(9);
    const Network one = random_network(rng_one);
    CHECK(structurally_equal(parallelize({one}), one));

    try {
        parallelize({identity_net(1), affine_net(Matrix(1, 1, {1.0}), {0.0})});
        FAIL("expected ShapeError");
    } catch (const ShapeError& e) {
        CHECK(std::string(e.what()).find("network 2") != std::string::npos);
    }
}

TEST_CASE("parallelization of hinge-square components has the stacked dims", "[calculus]") {
    const int d = 3, M = 4;
    const Network psi = hinge_square_net(std::sqrt(2.0 * d), M, 9.0);
    const auto dims = dims_of(parallelize(std::vector<Network>(d, psi)));
    std::vector<int> want{d, 2 * d};
    want.insert(want.end(), M, 4 * d);
    want.push_back(d);
    CHECK(dims == want);
}

TEST_CASE("identity network", "[calculus]") {
    CHECK(dims_of(identity_net(5)) == std::vector<int>{5, 10, 5});
    CHECK(realize(identity_net(2), {-3.0, 7.0}) == Vector{-3.0, 7.0});
    CHECK(inf_norm(identity_net(7)) == 1.0);
    CHECK_THROWS_AS(identity_net(0), std::invalid_argument);
}

TEST_CASE("affine network", "[calculus]") {
    CHECK(realize(affine_net(Matrix(1, 2, {1.0, 1.0}), {0.0}), {2.0, 3.0}) == Vector{5.0});
    const Network aff = affine_net(Matrix(3, 2, 0.0), Vector(3, 0.0));
    CHECK(dims_of(aff) == std::vector<int>{2, 3});
    CHECK(arch_stats(aff).hidden == 0);
}

TEST_CASE("scalar multiplication", "[calculus]") {
    CHECK(realize_scalar(scalar_mul(3.0, identity_net(1)), 2.0) == 6.0);
    Rng rng(107);
    const Network f = random_network(rng);
    CHECK(dims_of(scalar_mul(-1.5, f)) == dims_of(f));
    const Network zero = scalar_mul(0.0, f);
    for (int rep = 0; rep < 10; ++rep) {
        const Vector out = realize(zero, random_vector(rng, f.input_dim()));
        for (double v : out) CHECK(v == 0.0);
    }
}

TEST_CASE("sum network", "[calculus]") {
    CHECK(realize(sum_net(1, 3), {1.0, 2.0, 3.0}) == Vector{6.0});
    CHECK(dims_of(sum_net(2, 4)) == std::vector<int>{8, 2});
    Rng rng(108);
    const Vector x = random_vector(rng, 4);
    CHECK(realize(sum_net(4, 1), x) == x);
}
