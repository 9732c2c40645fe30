#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/parser.hpp"
#include "dunkl/printing.hpp"
#include "dunkl/verify.hpp"
#include "dunkl/version.hpp"

namespace {

using namespace dunkl;

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw UsageError("bad rational value: " + text);
    }
}

ParamBindings make_bindings(int dim, const std::string& mu, const std::string& energy,
                            const std::string& coupling) {
    ParamBindings b = ParamBindings::none(dim);
    if (mu != "sym") {
        std::vector<Rational> values;
        std::string item;
        for (std::size_t k = 0; k <= mu.size(); ++k) {
            if (k == mu.size() || mu[k] == ',') {
                if (!item.empty()) values.push_back(parse_rational(item));
                item.clear();
            } else {
                item += mu[k];
            }
        }
        if (values.size() == 1) values.resize(static_cast<std::size_t>(dim), values[0]);
        if (values.size() != static_cast<std::size_t>(dim))
            throw UsageError("--mu needs one value or d comma-separated values");
        for (int i = 0; i < dim; ++i) b.mu[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(i)];
    }
    if (energy != "sym") b.energy = parse_rational(energy);
    if (coupling != "sym") b.coupling = parse_rational(coupling);
    return b;
}

RenderFormat render_format(const std::string& format) {
    return format == "latex" ? RenderFormat::latex : RenderFormat::plain;
}

void emit_operator(const Operator& op, const std::string& format, const std::string& input) {
    if (format == "json") {
        nlohmann::json j;
        j["dim"] = op.dim();
        j["input"] = input;
        j["result"] = to_string(op);
        j["latex"] = to_string(op, RenderFormat::latex);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(op, render_format(format)) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact operator algebra of the d-dimensional Dunkl-Coulomb model"};
    app.set_version_flag("--version", dunkl::kVersion);
    app.require_subcommand(1);

    int dim = 0;
    std::string mu = "sym";
    std::string energy = "sym";
    std::string coupling = "sym";
    std::uint64_t seed = 0;
    std::string format = "text";
    app.add_option("--dim", dim, "dimension d (required)")->required();
    app.add_option("--mu", mu, "mu parameters: sym or v1,v2,... (default sym)");
    app.add_option("--E", energy, "energy parameter: sym or a rational (default sym)");
    app.add_option("--alpha", coupling, "coupling parameter: sym or a rational (default sym)");
    app.add_option("--seed", seed, "seed for oracle test functions (default 0)");
    app.add_option("--format", format, "output format: text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    std::string expr_text;
    std::string expr2_text;
    auto* nf = app.add_subcommand("nf", "normal form of an operator expression");
    nf->add_option("expr", expr_text, "operator expression")->required();

    auto* comm = app.add_subcommand("comm", "commutator of two operator expressions");
    comm->add_option("lhs", expr_text, "left operand")->required();
    comm->add_option("rhs", expr2_text, "right operand")->required();

    auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a test function");
    apply_cmd->add_option("expr", expr_text, "operator expression")->required();
    apply_cmd->add_option("func", expr2_text, "function expression")->required();

    std::string filter;
    bool inject_failure = false;
    auto* verify = app.add_subcommand("verify", "run the relation catalog");
    verify->add_option("--filter", filter, "restrict to relation ids with this prefix");
    verify->add_flag("--inject-failure", inject_failure,
                     "append a deliberately corrupted relation (test fixture)");

    for (auto* sub : {nf, comm, apply_cmd, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const ModelConfig cfg{dim, make_bindings(dim, mu, energy, coupling)};
        if (nf->parsed()) {
            emit_operator(evaluate(parse(expr_text, dim), cfg), format, expr_text);
            return 0;
        }
        if (comm->parsed()) {
            const Operator result =
                commutator(evaluate(parse(expr_text, dim), cfg), evaluate(parse(expr2_text, dim), cfg));
            emit_operator(result, format, "comm(" + expr_text + ", " + expr2_text + ")");
            return 0;
        }
        if (apply_cmd->parsed()) {
            const Operator op = evaluate(parse(expr_text, dim), cfg);
            const RFunction f = evaluate_function(parse(expr2_text, dim), cfg);
            const RFunction image = apply(op, f);
            if (format == "json") {
                nlohmann::json j;
                j["dim"] = dim;
                j["result"] = to_string(image);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << to_string(image, render_format(format)) << "\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            if (format == "latex") throw UsageError("verify supports text or json output");
            const VerificationReport report =
                run_suite({dim}, seed, filter, /*parallel=*/true, inject_failure);
            std::cout << (format == "json" ? to_json(report) : to_text(report)) << "\n";
            return report.all_pass() ? 0 : 1;
        }
        throw UsageError("no subcommand given");
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const IndexError& e) {
        std::cerr << "index error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
