// Acceptance suite: every release-gating check, one pass/fail line each.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "relucalc/bounds.hpp"
#include "relucalc/calculus.hpp"
#include "relucalc/cli.hpp"
#include "relucalc/constructions.hpp"
#include "relucalc/measures.hpp"
#include "relucalc/random_net.hpp"

using namespace relucalc;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;  // 0: untimed
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& why, const std::string& msg) {
    if (!cond && why.empty()) why = msg;
    return cond;
}

// 1. square-net sup error on [0,1] and exact ReLU outside
bool criterion_square_error(std::string& why) {
    bool ok = true;
    for (int M = 1; M <= 10; ++M) {
        const Network net = square_net(M);
        const double bound = std::pow(4.0, -M - 1);
        double worst = 0.0;
        for (int i = 0; i <= 10000; ++i) {
            const double x = i / 10000.0;
            worst = std::max(worst, std::abs(x * x - realize_scalar(net, x)));
        }
        ok &= expect(worst <= bound, why, "sup error " + std::to_string(worst) + " exceeds 4^-(M+1) at M=" +
                                              std::to_string(M));
        for (double x : {-10.0, -1.0, 1.001, 2.0, 10.0})
            ok &= expect(std::abs(realize_scalar(net, x) - std::max(x, 0.0)) <= 1e-12, why,
                         "ReLU mismatch outside [0,1] at M=" + std::to_string(M));
    }
    return ok;
}

// 2. exact architecture arithmetic
bool criterion_architecture(std::string& why) {
    bool ok = true;
    for (int M = 1; M <= 10; ++M) {
        const ArchStats sq = arch_stats(square_net(M));
        ok &= expect(sq.params == 20 * M - 7, why, "square params != 20M-7");
        ok &= expect(sq.hidden == M, why, "square hidden != M");
        std::vector<int> dims{1};
        dims.insert(dims.end(), M, 4);
        dims.push_back(1);
        ok &= expect(sq.dims == dims, why, "square dims mismatch");
        ok &= expect(inf_norm(square_net(M)) <= 4.0, why, "square inf-norm > 4");
    }
    for (int M : {2, 3, 6}) {
        for (double R : {1.0, 4.0, 9.0}) {
            ok &= expect(arch_stats(scaled_square_net(M, R)).params == 20 * M - 7, why,
                         "scaled-square params != 20M-7");
            ok &= expect(inf_norm(scaled_square_net(M, R)) <= std::max(4.0, R * R), why,
                         "scaled-square inf-norm bound");
            for (double a : {0.0, 1.0, 2.5}) {
                const Network h = hinge_square_net(a, M, R);
                const ArchStats st = arch_stats(h);
                ok &= expect(st.params == 20 * M + 1, why, "hinge params != 20M+1");
                ok &= expect(st.hidden == M + 1, why, "hinge hidden != M+1");
                std::vector<int> dims{1, 2};
                dims.insert(dims.end(), M, 4);
                dims.push_back(1);
                ok &= expect(st.dims == dims, why, "hinge dims mismatch");
                ok &= expect(inf_norm(h) <= (std::abs(a) + 1.0) * std::max(4.0, R * R), why,
                             "hinge inf-norm bound");
            }
        }
    }
    for (int d : {1, 2, 4, 6}) {
        ok &= expect(dims_of(identity_net(d)) == std::vector<int>{d, 2 * d, d}, why, "identity dims");
        for (int M : {2, 4}) {
            const TargetNet tn = target_net(d, M, 9.0);
            const ArchStats st = arch_stats(tn.net);
            ok &= expect(st.hidden == d + M + 1, why, "target hidden != d+M+1");
            ok &= expect(st.params <= 42LL * d * d * M + 6 * d, why, "target params > 42d^2M+6d");
            ok &= expect(inf_norm(tn.net) <= 12.0 * std::pow(d, 1.5) * std::max(4.0, 81.0), why,
                         "target inf-norm bound");
        }
    }
    return ok;
}

// 3. calculus laws
bool criterion_calculus_laws(std::string& why) {
    bool ok = true;
    Rng rng(987654321);
    for (int pair = 0; pair < 200; ++pair) {
        const Network g = random_network(rng);
        RandomNetOptions opt;
        opt.input_dim = g.output_dim();
        const Network f = random_network(rng, opt);
        const Network fg = compose(f, g);
        for (int rep = 0; rep < 100; ++rep) {
            const Vector x = random_vector(rng, g.input_dim());
            const Vector direct = realize(fg, x);
            const Vector chained = realize(f, realize(g, x));
            for (size_t i = 0; i < direct.size(); ++i)
                ok &= expect(std::abs(direct[i] - chained[i]) <= 1e-12, why, "composition law violated");
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const Network h = random_network(rng);
        RandomNetOptions mid;
        mid.depth = rng.uniform_int(2, 4);
        mid.input_dim = h.output_dim();
        const Network g = random_network(rng, mid);
        RandomNetOptions top;
        top.input_dim = g.output_dim();
        const Network f = random_network(rng, top);
        ok &= expect(structurally_equal(compose(compose(f, g), h), compose(f, compose(g, h))), why,
                     "associativity not bitwise");
    }
    for (int trial = 0; trial < 100; ++trial) {
        RandomNetOptions opt;
        opt.depth = rng.uniform_int(1, 4);
        const Network f = random_network(rng, opt);
        const Network g = random_network(rng, opt);
        const Network par = parallelize({f, g});
        const auto df = dims_of(f), dg = dims_of(g), dp = dims_of(par);
        for (size_t i = 0; i < dp.size(); ++i)
            ok &= expect(dp[i] == df[i] + dg[i], why, "parallel dims not the componentwise sum");
        const Vector x = random_vector(rng, f.input_dim());
        const Vector y = random_vector(rng, g.input_dim());
        Vector xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        const Vector out = realize(par, xy);
        const Vector fx = realize(f, x), gy = realize(g, y);
        for (size_t i = 0; i < fx.size(); ++i)
            ok &= expect(std::abs(out[i] - fx[i]) <= 1e-12, why, "parallel realization law");
        for (size_t i = 0; i < gy.size(); ++i)
            ok &= expect(std::abs(out[fx.size() + i] - gy[i]) <= 1e-12, why, "parallel realization law");
    }
    for (int trial = 0; trial < 100; ++trial) {
        const Network net = random_network(rng);
        ok &= expect(structurally_equal(devectorize(dims_of(net), vectorize(net)), net), why,
                     "vectorize/devectorize round trip");
    }
    return ok;
}

// 4. deep approximator error bounds
bool criterion_target_error(std::string& why) {
    bool ok = true;
    for (int d : {3, 4, 5}) {
        for (int M : {2, 4, 8}) {
            for (double R : {4.0, 9.0}) {
                const TargetNet tn = target_net(d, M, R);
                const double err = l2_error_separable(target_component(tn.spec), target_scale(tn.spec), d).value;
                const double cap = 50.0 * std::pow(d, 3.5) *
                                   (std::pow(16.0, -M - 1) * std::pow(R, 4) + 105.0 * std::pow(R, -4));
                ok &= expect(err * err <= cap, why,
                             "squared error above the proven cap at d=" + std::to_string(d) + " M=" +
                                 std::to_string(M));
            }
        }
    }
    for (int d = 1; d <= 6; ++d) {
        const TargetNet tn = target_net_for_eps(d, 0.5);
        const double err = l2_error_separable(target_component(tn.spec), target_scale(tn.spec), d).value;
        ok &= expect(err <= 0.5, why, "accuracy-parameterized net misses eps=0.5 at d=" + std::to_string(d));
    }
    return ok;
}

// 5. normalization bracket
bool criterion_norm_bracket(std::string& why) {
    bool ok = true;
    for (int d = 1; d <= 30; ++d) {
        const double log_c = log_normalization_const(d);
        const double lo = -std::log(50.0) - 1.5 * std::log(static_cast<double>(d)) - d;
        const double hi = std::log(3.0) + 2.0 * std::log(static_cast<double>(d)) - d;
        ok &= expect(lo <= log_c && log_c <= hi, why, "bracket violated at d=" + std::to_string(d));
    }
    return ok;
}

// 6. section-3 inequality catalog via the CLI entry point
bool criterion_section3(std::string& why) {
    std::ostringstream out, err;
    const int code = run_cli({"verify", "--suite", "section3"}, out, err);
    bool ok = expect(code == 0, why, "verify --suite section3 exited with " + std::to_string(code));
    const auto reports = run_suite(Suite::Section3);
    ok &= expect(reports.size() >= 1500, why, "catalog grid smaller than expected");
    return ok;
}

// 7. lower-bound consistency
bool criterion_lower_bound(std::string& why) {
    bool ok = true;
    for (int d : {4, 5, 6}) {
        const BoundReport rep = main1_certificate(certificate_input_for_target(target_net_for_eps(d, 0.25)));
        ok &= expect(rep.pass, why, "main1 certificate failed at d=" + std::to_string(d));
    }
    ok &= expect(std::abs(std::exp(cor_main_floor(4, 5)) - 0.037172) <= 1e-5, why,
                 "cor_main_floor(4,5) off target");
    std::vector<double> ds;
    for (int d = 1; d <= 16; ++d) ds.push_back(d);
    const ShallowDeepTable tab = shallow_deep_table(1.2e5, 1.0, ds);
    ok &= expect(tab.crossover_d.has_value() && std::isfinite(*tab.crossover_d), why,
                 "no finite crossover reported");
    for (size_t i = 1; i < tab.rows.size(); ++i) {
        ok &= expect(tab.rows[i].deep_budget_log > tab.rows[i - 1].deep_budget_log &&
                         tab.rows[i].shallow_floor_log > tab.rows[i - 1].shallow_floor_log,
                     why, "table log columns not monotone");
    }
    return ok;
}

// 8. cross-oracle agreement
bool criterion_cross_oracle(std::string& why) {
    bool ok = true;
    const TargetNet tn = target_net(3, 4, 9.0);
    const ErrorEstimate sep = l2_error_separable(target_component(tn.spec), target_scale(tn.spec), 3);
    const ErrorEstimate mc = l2_error_mc(tn.net, 3, 100000, 246813579);
    ok &= expect(std::abs(mc.value - sep.value) <= 3.0 * *mc.std_error, why,
                 "MC and separable errors disagree beyond 3 sigma");
    const double c3 = std::exp(log_normalization_const(3));
    const McResult norm = mc_integral_phi(
        [](const Vector& x) {
            double s = 0.0;
            for (double t : x) s += hinge(3, t);
            return s * s;
        },
        3, 1000000, 1357924680);
    ok &= expect(std::abs(norm.mean - c3) <= 3.0 * norm.std_error, why,
                 "MC normalization constant disagrees beyond 3 sigma");
    return ok;
}

// 9. Gauss-Hermite moment checks
bool criterion_gauss_hermite(std::string& why) {
    bool ok = true;
    const QuadratureRule rule = gauss_hermite(200);
    auto dfact = [](int k) {
        double v = 1.0;
        for (int i = k - 1; i >= 1; i -= 2) v *= i;
        return v;
    };
    for (int k = 0; k <= 16; ++k) {
        const double got = gh_integrate([&](double x) { return std::pow(x, k); }, rule);
        const double want = (k % 2 == 1) ? 0.0 : dfact(k);
        ok &= expect(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)), why,
                     "moment " + std::to_string(k) + " off");
    }
    const double m8 = gh_integrate([](double x) { return std::pow(x, 8); }, rule);
    const double got = 0.5 * kSqrt2Pi * m8;
    const double want = 105.0 * std::sqrt(kPi) / std::sqrt(2.0);
    ok &= expect(std::abs(got - want) <= 1e-8 * want, why, "half-line x^8 integral off");
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "square-net sup error and ReLU tails", 1.0, criterion_square_error},
        {2, "exact architecture arithmetic", 0.0, criterion_architecture},
        {3, "calculus laws", 0.0, criterion_calculus_laws},
        {4, "deep approximator error bounds", 30.0, criterion_target_error},
        {5, "normalization bracket d=1..30", 5.0, criterion_norm_bracket},
        {6, "section-3 inequality catalog", 60.0, criterion_section3},
        {7, "lower-bound consistency", 0.0, criterion_lower_bound},
        {8, "cross-oracle agreement", 0.0, criterion_cross_oracle},
        {9, "Gauss-Hermite moments", 0.0, criterion_gauss_hermite},
    };

    int failures = 0;
    for (Criterion& c : criteria) {
        std::string why;
        const auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        if (ok && c.budget_seconds > 0.0 && elapsed > c.budget_seconds) {
            ok = false;
            why = "runtime " + std::to_string(elapsed) + "s over the " +
                  std::to_string(c.budget_seconds) + "s budget";
        }
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.label.c_str(),
                    elapsed, why.empty() ? "" : " -- ", why.c_str());
        if (!ok) ++failures;
    }
    if (failures == 0) std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
