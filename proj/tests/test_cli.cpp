#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

#include "dunkl/parser.hpp"
#include "dunkl/printing.hpp"
#include "dunkl/verify.hpp"

using namespace dunkl;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DUNKLC_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 512> buffer{};
    CmdResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) result.out += buffer.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("normal form with bound parameters") {
    const CmdResult r = run_cli("nf \"D1*x1\" --dim 1 --mu 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x1*D1 + 1\n");
}

TEST_CASE("commutator output equals the deformed bracket value") {
    const CmdResult r = run_cli("comm \"A(1)\" \"G(1)\" --dim 2");
    CHECK(r.exit_code == 0);
    REQUIRE(!r.out.empty());
    // The printed normal form equals i*GammaD1*(1+2*mu1*R1) as an operator
    // on the function space (the forms differ by the radius relation).
    const ModelConfig cfg = ModelConfig::symbolic(2);
    const std::string printed(r.out.begin(), r.out.end() - 1);
    const Operator parsed_back = evaluate(parse(printed, 2), cfg);
    const Operator expected = evaluate(parse("i*GammaD1*(1+2*mu1*R1)", 2), cfg);
    CHECK(oracle_check(parsed_back - expected, 20, 0));
}

TEST_CASE("apply subcommand") {
    const CmdResult r = run_cli("apply \"D1\" \"r^-1\" --dim 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-x1*r^-3\n");
}

TEST_CASE("parse errors exit with the usage code") {
    CHECK(run_cli("nf \"D0\" --dim 1").exit_code == 2);
    CHECK(run_cli("nf \"x1 +\" --dim 1").exit_code == 2);
    CHECK(run_cli("nf \"x1\"").exit_code == 2);  // --dim missing
    CHECK(run_cli("verify --dim 1 --format latex").exit_code == 2);
}

TEST_CASE("verification subcommand emits a valid report") {
    const CmdResult r = run_cli("verify --dim 1 --filter SO21 --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("version").is_string());
    CHECK(j.at("entries").size() == 3);
    for (const auto& e : j["entries"]) CHECK(e.at("status") != "fail");
}

TEST_CASE("corrupted fixture exits with the failure code") {
    const CmdResult r = run_cli("verify --dim 1 --filter FIXTURE --inject-failure");
    CHECK(r.exit_code == 1);
}
