#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/parser.hpp"
#include "dunkl/printing.hpp"
#include "support/fuzz.hpp"

using namespace dunkl;
using testsupport::Rng;

namespace {

Operator eval_sym(const std::string& text, int d) {
    return evaluate(parse(text, d), ModelConfig::symbolic(d));
}

}  // namespace

TEST_CASE("defining relation through the grammar") {
    const Operator op = eval_sym("D1*x1 - x1*D1", 1);
    const Operator expected =
        Operator::one(1) + Operator::reflection(1, 1) * (Scalar::mu(1, 1) * Scalar::integer(1, 2));
    CHECK(op == expected);
}

TEST_CASE("factor chains and radius powers") {
    CHECK(eval_sym("x1^2 * r^-2", 2) ==
          pow(Operator::coordinate(2, 1), 2) * Operator::radius(2, -2));
    CHECK(eval_sym("r^0", 1) == Operator::one(1));
    CHECK(eval_sym("2*mu1*R1", 1) ==
          Operator::reflection(1, 1) * (Scalar::mu(1, 1) * Scalar::integer(1, 2)));
    CHECK(eval_sym("(1/2)*x1 + 1/2*x1", 1) == Operator::coordinate(1, 1));
}

TEST_CASE("calls and named generators") {
    const ModelConfig cfg = ModelConfig::symbolic(2);
    CHECK(eval_sym("comm(Gamma0, GammaD1)", 2) ==
          commutator(build(GeneratorId::plain(GenKind::Gamma0), cfg),
                     build(GeneratorId::plain(GenKind::GammaD1), cfg)));
    CHECK(eval_sym("J(2,1)", 2) == -build(GeneratorId::pair(GenKind::J, 1, 2), cfg));
    CHECK(eval_sym("L(1,3)", 2) == build_so_generator(1, 3, cfg));
    CHECK(eval_sym("acomm(R1, x1)", 2).is_zero());
    CHECK(eval_sym("adj(x1)", 2) == Operator::coordinate(2, 1));
    CHECK(eval_sym("At(1)", 2) == build(GeneratorId::indexed(GenKind::Atilde, 1), cfg));
}

TEST_CASE("the combination defining the Sturm operator vanishes") {
    CHECK(eval_sym("K - (1/2)*(1-2*E)*Gamma0 - (1/2)*(1+2*E)*GammaD1", 2).is_zero());
}

TEST_CASE("index and syntax errors carry positions") {
    CHECK_THROWS_AS(parse("D0", 1), ParseError);
    CHECK_THROWS_AS(parse("x5", 3), ParseError);
    CHECK_THROWS_AS(parse("mu3", 2), ParseError);
    CHECK_THROWS_AS(parse("J(1,1)", 2), ParseError);
    CHECK_THROWS_AS(parse("x1 + * x2", 2), ParseError);
    CHECK_THROWS_AS(parse("x1^-1", 2), ParseError);
    CHECK_THROWS_AS(parse("bogus", 2), ParseError);
    try {
        parse("x1 + * x2", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 6);
    }
}

TEST_CASE("bound parameters substitute after evaluation") {
    ModelConfig cfg = ModelConfig::symbolic(1);
    cfg.bindings.mu[0] = Rational(0);
    const Operator op = evaluate(parse("D1*x1", 1), cfg);
    CHECK(op == Operator::coordinate(1, 1) * Operator::derivative(1, 1) + Operator::one(1));
}

TEST_CASE("rendering examples are byte exact") {
    const Operator refl = Operator::one(1) +
                          Operator::reflection(1, 1) * (Scalar::mu(1, 1) * Scalar::integer(1, 2));
    CHECK(to_string(refl) == "1 + 2*mu1*R1");
    const Operator ixd = Operator::coordinate(2, 1) * Operator::derivative(2, 2) *
                         Scalar::imaginary_unit(2);
    CHECK(to_string(ixd) == "i*x1*D2");
    ModelConfig cfg = ModelConfig::symbolic(1);
    cfg.bindings.mu[0] = Rational(0);
    CHECK(to_string(evaluate(parse("D1*x1", 1), cfg)) == "x1*D1 + 1");
    const Operator radial = Operator::derivative(1, 1) * Operator::radius(1, -1);
    CHECK(to_string(radial) == "r^-1*D1 - x1*r^-3");
}

TEST_CASE("latex rendering") {
    const Operator refl = Operator::one(2) +
                          Operator::reflection(2, 1) * (Scalar::mu(2, 1) * Scalar::integer(2, 2));
    const std::string tex = to_string(refl, RenderFormat::latex);
    CHECK(tex.find("\\mu_{1}") != std::string::npos);
    CHECK(tex.find("R_{1}") != std::string::npos);
}

TEST_CASE("parse after render round-trips") {
    Rng rng(51);
    for (int t = 0; t < 120; ++t) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const Operator x = testsupport::random_operator(rng, d);
        const std::string text = to_string(x);
        CAPTURE(text);
        const Operator back = eval_sym(text, d);
        CHECK(back == x);
    }
}

TEST_CASE("function expressions") {
    const ModelConfig cfg = ModelConfig::symbolic(2);
    const RFunction f = evaluate_function(parse("x1^2*r^-1 + 3", 2), cfg);
    const RFunction expected = RFunction::coordinate(2, 1) * RFunction::coordinate(2, 1) *
                                   RFunction::radius_power(2, -1) +
                               RFunction::one(2) * Scalar::integer(2, 3);
    CHECK(func_equal(f, expected));
    CHECK_THROWS_AS(evaluate_function(parse("D1", 2), cfg), UsageError);
    CHECK_THROWS_AS(evaluate_function(parse("comm(x1, x2)", 2), cfg), UsageError);
}
