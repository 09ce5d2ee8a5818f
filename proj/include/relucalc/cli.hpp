#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relucalc/bounds.hpp"
#include "relucalc/constructions.hpp"
#include "relucalc/measures.hpp"
#include "relucalc/serialize.hpp"

// Command-line front end.  Exit codes: 0 success, 1 domain/validation error,
// 2 any bound-catalog failure (so CI can gate on the inequality checks).

namespace relucalc {

namespace cli_detail {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline Vector parse_input_vector(const std::string& text) {
    Vector x;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed number in --input: \"" + item + "\"");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("malformed number in --input: \"" + item + "\"");
        x.push_back(v);
    }
    if (x.empty()) throw std::invalid_argument("--input must contain at least one number");
    return x;
}

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open network file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return doc;
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text << "\n";
}

inline void print_report_line(std::ostream& out, const BoundReport& r) {
    out << "name=" << r.name << " params=" << format_params(r.params) << " scale=" << r.scale
        << " lhs=" << num(r.lhs) << " rhs=" << num(r.rhs) << " slack=" << num(r.slack)
        << " pass=" << (r.pass ? 1 : 0) << "\n";
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using cli_detail::num;

    CLI::App app{"ReLU network calculus: constructions, Gaussian L2 errors, inequality certificates"};
    app.require_subcommand(1);

    // --- build ---------------------------------------------------------------
    auto* build = app.add_subcommand("build", "construct a network and write it as JSON");
    build->require_subcommand(1);
    int opt_M = 2, opt_d = 1;
    double opt_R = 1.0, opt_a = 0.0, opt_eps = 0.5;
    std::string opt_out;
    struct BuildKind {
        CLI::App* cmd;
        std::string kind;
    };
    std::vector<BuildKind> kinds;
    auto add_kind = [&](const std::string& kind, const std::string& desc) {
        auto* c = build->add_subcommand(kind, desc);
        c->add_option("--out", opt_out, "output file")->required();
        kinds.push_back({c, kind});
        return c;
    };
    auto* b_square = add_kind("square", "square-function net on [0,1]");
    b_square->add_option("--M", opt_M, "hidden layers")->required();
    auto* b_scaled = add_kind("scaled-square", "squared-rectifier net on [0,R]");
    b_scaled->add_option("--M", opt_M)->required();
    b_scaled->add_option("--R", opt_R)->required();
    auto* b_hinge = add_kind("hinge-square", "shifted squared-rectifier net");
    b_hinge->add_option("--a", opt_a)->required();
    b_hinge->add_option("--M", opt_M)->required();
    b_hinge->add_option("--R", opt_R)->required();
    auto* b_target = add_kind("target", "deep approximator of the normalized hinge-square target");
    b_target->add_option("--d", opt_d)->required();
    b_target->add_option("--M", opt_M)->required();
    b_target->add_option("--R", opt_R)->required();
    auto* b_targeteps = add_kind("target-eps", "target approximator parameterized by accuracy");
    b_targeteps->add_option("--d", opt_d)->required();
    b_targeteps->add_option("--eps", opt_eps)->required();

    // --- eval / inspect --------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "evaluate a network on an input vector");
    std::string opt_net, opt_input;
    eval->add_option("--net", opt_net, "network JSON file")->required();
    eval->add_option("--input", opt_input, "comma-separated input vector")->required();

    auto* inspect = app.add_subcommand("inspect", "print architecture statistics");
    std::string opt_net2;
    inspect->add_option("--net", opt_net2)->required();

    // --- error -------------------------------------------------------------
    auto* error_cmd = app.add_subcommand("error", "L2(phi_d) error against the normalized target");
    std::string opt_net3, opt_method;
    int opt_err_d = 1;
    long long opt_samples = 100000;
    std::uint64_t opt_seed = 0;
    bool seed_given = false;
    double opt_scale = 1.0;
    error_cmd->add_option("--net", opt_net3)->required();
    error_cmd->add_option("--d", opt_err_d)->required();
    error_cmd->add_option("--method", opt_method)->required()->check(CLI::IsMember({"separable", "mc"}));
    error_cmd->add_option("--samples", opt_samples);
    error_cmd->add_option("--seed", opt_seed)->each([&](const std::string&) { seed_given = true; });
    error_cmd->add_option("--scale", opt_scale, "sum-weight for a univariate component net");

    // --- verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the inequality catalog");
    std::string opt_suite, opt_grid = "default";
    std::uint64_t opt_vseed = 0;
    bool vseed_given = false;
    verify->add_option("--suite", opt_suite)
        ->required()
        ->check(CLI::IsMember({"section3", "section4", "section5", "all"}));
    verify->add_option("--grid", opt_grid)->check(CLI::IsMember({"default"}));
    verify->add_option("--seed", opt_vseed)->each([&](const std::string&) { vseed_given = true; });

    // --- table ---------------------------------------------------------------
    auto* table = app.add_subcommand("table", "deep budget vs shallow floor");
    double opt_c = 0.0, opt_delta = 1.0;
    long long opt_dmax = 16;
    std::string opt_format = "text";
    table->add_option("--c", opt_c)->required();
    table->add_option("--delta", opt_delta)->required();
    table->add_option("--dmax", opt_dmax)->required();
    table->add_option("--format", opt_format)->check(CLI::IsMember({"text", "csv"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (build->parsed()) {
            Network net;
            nlohmann::json doc;
            std::string summary;
            for (const auto& [cmd, kind] : kinds) {
                if (!cmd->parsed()) continue;
                if (kind == "square") net = square_net(opt_M);
                else if (kind == "scaled-square") net = scaled_square_net(opt_M, opt_R);
                else if (kind == "hinge-square") net = hinge_square_net(opt_a, opt_M, opt_R);
                else {
                    const TargetNet tn = kind == "target" ? target_net(opt_d, opt_M, opt_R)
                                                          : target_net_for_eps(opt_d, opt_eps);
                    net = tn.net;
                    doc = network_to_json(net);
                    doc["target"] = {{"d", tn.spec.d},
                                     {"M", tn.spec.M},
                                     {"R", tn.spec.R},
                                     {"lambda", tn.spec.lambda},
                                     {"log_c_d", tn.spec.log_c_d}};
                }
            }
            if (doc.is_null()) doc = network_to_json(net);
            cli_detail::write_text(opt_out, doc.dump());
            const ArchStats st = arch_stats(net);
            out << "wrote " << opt_out << "  depth=" << st.depth << " hidden=" << st.hidden
                << " params=" << st.params << " dims=";
            for (size_t i = 0; i < st.dims.size(); ++i) out << (i ? "," : "") << st.dims[i];
            out << "\n";
            return 0;
        }

        if (eval->parsed()) {
            const Network net = network_from_json(cli_detail::load_json(opt_net));
            const Vector y = realize(net, cli_detail::parse_input_vector(opt_input));
            for (size_t i = 0; i < y.size(); ++i) out << (i ? " " : "") << num(y[i]);
            out << "\n";
            return 0;
        }

        if (inspect->parsed()) {
            const Network net = network_from_json(cli_detail::load_json(opt_net2));
            const ArchStats st = arch_stats(net);
            out << "dims     = ";
            for (size_t i = 0; i < st.dims.size(); ++i) out << (i ? "," : "") << st.dims[i];
            out << "\n";
            out << "depth    = " << st.depth << "\n";
            out << "hidden   = " << st.hidden << "\n";
            out << "in       = " << st.input << "\n";
            out << "out      = " << st.output << "\n";
            out << "params   = " << st.params << "\n";
            out << "inf_norm = " << num(inf_norm(net)) << "\n";
            return 0;
        }

        if (error_cmd->parsed()) {
            const nlohmann::json doc = cli_detail::load_json(opt_net3);
            const Network net = network_from_json(doc);
            ErrorEstimate est;
            if (opt_method == "separable") {
                if (net.input_dim() == 1 && net.output_dim() == 1) {
                    est = l2_error_separable(net, opt_scale, opt_err_d);
                } else if (doc.contains("target")) {
                    TargetNetSpec spec;
                    spec.d = doc["target"].at("d").get<int>();
                    spec.M = doc["target"].at("M").get<int>();
                    spec.R = doc["target"].at("R").get<double>();
                    spec.lambda = doc["target"].at("lambda").get<double>();
                    spec.log_c_d = doc["target"].at("log_c_d").get<double>();
                    if (spec.d != opt_err_d)
                        throw std::invalid_argument("--d disagrees with the network's target metadata");
                    est = l2_error_separable(target_component(spec), target_scale(spec), spec.d);
                } else {
                    throw std::invalid_argument(
                        "separable method needs a univariate component net (with --scale) or a "
                        "target-built file carrying its metadata");
                }
            } else {
                if (!seed_given) throw std::invalid_argument("--method mc requires an explicit --seed");
                est = l2_error_mc(net, opt_err_d, opt_samples, opt_seed);
            }
            out << "method=" << method_name(est.method) << " value=" << num(est.value);
            if (est.std_error) out << " std_error=" << num(*est.std_error);
            if (est.samples) out << " samples=" << *est.samples;
            out << "\n";
            return 0;
        }

        if (verify->parsed()) {
            Suite suite = Suite::All;
            if (opt_suite == "section3") suite = Suite::Section3;
            else if (opt_suite == "section4") suite = Suite::Section4;
            else if (opt_suite == "section5") suite = Suite::Section5;
            const bool randomized = suite == Suite::Section4 || suite == Suite::All;
            if (randomized && !vseed_given)
                throw std::invalid_argument("--suite " + opt_suite + " is randomized and requires --seed");
            const std::vector<BoundReport> reports = run_suite(suite, opt_vseed);
            int failures = 0;
            for (const BoundReport& r : reports) {
                cli_detail::print_report_line(out, r);
                if (!r.pass) ++failures;
            }
            out << "checked " << reports.size() << " inequalities, " << failures << " failures\n";
            return failures == 0 ? 0 : 2;
        }

        if (table->parsed()) {
            if (opt_dmax < 1) throw std::invalid_argument("--dmax must be >= 1");
            std::vector<double> ds;
            for (long long d = 1; d <= opt_dmax; ++d) ds.push_back(static_cast<double>(d));
            const ShallowDeepTable tab = shallow_deep_table(opt_c, opt_delta, ds);
            if (!tab.precondition_ok)
                out << "warning: (c, delta) violates the threshold conditions (c threshold "
                    << num(tab.c_threshold) << ")\n";
            if (opt_format == "csv") {
                out << "d,deep_budget_log,shallow_floor_log\n";
                for (const auto& r : tab.rows)
                    out << r.d << "," << num(r.deep_budget_log) << "," << num(r.shallow_floor_log) << "\n";
            } else {
                out << std::left << std::setw(8) << "d" << std::setw(24) << "deep_budget_log"
                    << "shallow_floor_log\n";
                for (const auto& r : tab.rows)
                    out << std::left << std::setw(8) << r.d << std::setw(24) << num(r.deep_budget_log)
                        << num(r.shallow_floor_log) << "\n";
            }
            if (tab.crossover_d) out << "crossover_d=" << num(*tab.crossover_d) << "\n";
            else out << "crossover_d=none\n";
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 1;
}

}  // namespace relucalc
