#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/operator.hpp"
#include "support/fuzz.hpp"
#include "support/naive_rewriter.hpp"

using namespace dunkl;
using testsupport::Rng;

namespace {

Operator refl_factor(int d, int i) {
    return Operator::one(d) +
           Operator::reflection(d, i) * (Scalar::mu(d, i) * Scalar::integer(d, 2));
}

}  // namespace

TEST_CASE("defining rewrite rules") {
    const int d = 1;
    // D1 x1 = x1 D1 + 1 + 2 mu1 R1
    const Operator lhs = Operator::derivative(d, 1) * Operator::coordinate(d, 1);
    const Operator rhs =
        Operator::coordinate(d, 1) * Operator::derivative(d, 1) + refl_factor(d, 1);
    CHECK(lhs == rhs);

    // R1 x1 = -x1 R1
    CHECK(Operator::reflection(d, 1) * Operator::coordinate(d, 1) ==
          -(Operator::coordinate(d, 1) * Operator::reflection(d, 1)));

    // D1 r^-1 = r^-1 D1 - x1 r^-3
    const Operator left = Operator::derivative(d, 1) * Operator::radius(d, -1);
    const Operator right = Operator::radius(d, -1) * Operator::derivative(d, 1) -
                           Operator::coordinate(d, 1) * Operator::radius(d, -3);
    CHECK(left == right);
}

TEST_CASE("commutator recovers the reflection term") {
    const int d = 1;
    const Operator c =
        commutator(Operator::derivative(d, 1), Operator::coordinate(d, 1));
    CHECK(c == refl_factor(d, 1));
}

TEST_CASE("radius powers cancel") {
    const int d = 2;
    const Operator x1r = Operator::coordinate(d, 1) * Operator::radius(d, 1);
    CHECK(x1r * Operator::radius(d, -1) == Operator::coordinate(d, 1));
}

TEST_CASE("additive inverse on fuzzed operators") {
    Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const Operator x = testsupport::random_operator(rng, d);
        CHECK((x + (-x)).is_zero());
    }
}

TEST_CASE("product matches the naive rewriter") {
    Rng rng(17);
    long max_steps = 0;
    for (int t = 0; t < 200; ++t) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const Monomial a = testsupport::random_monomial(rng, d);
        const Monomial b = testsupport::random_monomial(rng, d);
        const auto naive = testsupport::naive_product(a, b);
        CHECK(mono_product(a, b) == naive.op);
        max_steps = std::max(max_steps, naive.steps);
        // Termination stays desk-sized on words of this length.
        CHECK(naive.steps < 200000);
    }
    CHECK(max_steps > 0);
}

TEST_CASE("reflection involution and sign rule") {
    const int d = 2;
    const Operator r1 = Operator::reflection(d, 1);
    CHECK(r1 * r1 == Operator::one(d));
    for (unsigned m = 0; m <= 4; ++m) {
        const Operator xm = pow(Operator::coordinate(d, 1), m);
        const Operator lhs = r1 * xm;
        const Operator rhs = (m % 2 ? -(xm * r1) : xm * r1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("associativity of the hand-checkable triple") {
    const int d = 1;
    const Operator a = Operator::derivative(d, 1);
    const Operator b = Operator::coordinate(d, 1);
    const Operator c = Operator::radius(d, -1);
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("associativity on random monomial triples") {
    Rng rng(23);
    for (int t = 0; t < 150; ++t) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const Operator a = Operator::monomial(testsupport::random_monomial(rng, d));
        const Operator b = Operator::monomial(testsupport::random_monomial(rng, d));
        const Operator c = Operator::monomial(testsupport::random_monomial(rng, d));
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("weight homogeneity of products") {
    Rng rng(29);
    for (int t = 0; t < 100; ++t) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const Monomial a = testsupport::random_monomial(rng, d);
        const Monomial b = testsupport::random_monomial(rng, d);
        const int expected = a.weight() + b.weight();
        const Operator product = mono_product(a, b);
        for (const auto& [m, c] : product.terms()) CHECK(m.weight() == expected);
    }
}

TEST_CASE("weight split partitions an operator") {
    const int d = 2;
    const Operator x1d1 = Operator::coordinate(d, 1) * Operator::derivative(d, 1);
    const auto split = weight_split(x1d1);
    CHECK(split.size() == 1);
    CHECK(split.count(0) == 1);

    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        const Operator x = testsupport::random_operator(rng, 2);
        Operator sum(2);
        for (const auto& [w, part] : weight_split(x)) sum += part;
        CHECK(sum == x);
    }
}

TEST_CASE("bracket derivation rule") {
    Rng rng(37);
    for (int t = 0; t < 40; ++t) {
        const int d = 1 + static_cast<int>(rng.below(2));
        const Operator x = testsupport::random_operator(rng, d, 2);
        const Operator y = testsupport::random_operator(rng, d, 2);
        const Operator z = testsupport::random_operator(rng, d, 2);
        CHECK(commutator(x, y * z) == commutator(x, y) * z + y * commutator(x, z));
        CHECK(anticommutator(x, y) == x * y + y * x);
    }
}

TEST_CASE("adjoint properties") {
    const int d = 2;
    CHECK(adjoint(Operator::coordinate(d, 1)) == Operator::coordinate(d, 1));
    CHECK(adjoint(Operator::reflection(d, 2)) == Operator::reflection(d, 2));
    CHECK(adjoint_unweighted(Operator::derivative(d, 1)) == -Operator::derivative(d, 1));

    Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        const int dd = 1 + static_cast<int>(rng.below(2));
        const Operator x = testsupport::random_operator(rng, dd, 2);
        const Operator y = testsupport::random_operator(rng, dd, 2);
        CHECK(adjoint(adjoint(x)) == x);
        CHECK(adjoint(x * y) == adjoint(y) * adjoint(x));
        const Scalar c = testsupport::random_scalar(rng, dd);
        CHECK(adjoint(x * c) == adjoint(x) * c.conj());
    }
}

TEST_CASE("substitution commutes with brackets") {
    // Products rebuild structure constants in the formal parameters, so a
    // binding is applied once more after the bracket; substitution is then
    // a homomorphism onto the bound algebra.
    Rng rng(43);
    for (int t = 0; t < 50; ++t) {
        const int d = 1 + static_cast<int>(rng.below(2));
        const Operator x = testsupport::random_operator(rng, d, 2);
        const Operator y = testsupport::random_operator(rng, d, 2);
        ParamBindings b = ParamBindings::none(d);
        b.mu[0] = Rational(rng.int_in(-1, 2));
        if (rng.below(2)) b.energy = Rational(rng.int_in(-2, 2), 2);
        CHECK(substitute(commutator(x, y), b) ==
              substitute(commutator(substitute(x, b), substitute(y, b)), b));
        CHECK(substitute(substitute(x, b), b) == substitute(x, b));
    }
}

TEST_CASE("substitution collapses reflection factors") {
    const int d = 1;
    ParamBindings b = ParamBindings::all_mu(d, Rational(0));
    CHECK(substitute(refl_factor(d, 1), b) == Operator::one(d));
}

TEST_CASE("dimension mismatch is an error") {
    CHECK_THROWS_AS(Operator::one(1) + Operator::one(2), DimensionError);
    CHECK_THROWS_AS(Operator::one(1) * Operator::one(2), DimensionError);
}
