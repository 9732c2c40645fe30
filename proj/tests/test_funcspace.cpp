#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/funcspace.hpp"
#include "support/fuzz.hpp"

using namespace dunkl;
using testsupport::Rng;

namespace {

XPoly xp(int d, int i) { return XPoly::coordinate(d, i); }

RFunction rf(XPoly p) { return RFunction::polynomial(std::move(p)); }

}  // namespace

TEST_CASE("dunkl derivative on polynomials") {
    const int d = 2;
    const XPoly expected = XPoly::constant(d, Scalar::one(d) + Scalar::mu(d, 1) * Scalar::integer(d, 2));
    CHECK(dunkl_derivative(xp(d, 1), 1) == expected);

    const XPoly p = xp(d, 1) * xp(d, 1) * xp(d, 2);
    CHECK(dunkl_derivative(p, 1) == (xp(d, 1) * xp(d, 2)) * Scalar::integer(d, 2));
    CHECK(dunkl_derivative(xp(d, 2), 1).is_zero());
}

TEST_CASE("polynomial ring sanity") {
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const auto fs = random_basis(d, 3, 40 + static_cast<std::uint64_t>(t));
        const XPoly a = fs[0].even_part();
        const XPoly b = fs[1].even_part();
        const XPoly c = fs[2].even_part();
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("apply matches the derivative on polynomials") {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const auto funcs = random_basis(d, 1, rng.below(1000));
        const RFunction f = rf(funcs[0].even_part());
        const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
        const RFunction image = apply(Operator::derivative(d, i), f);
        CHECK(func_equal(image, rf(dunkl_derivative(f.even_part(), i))));
    }
}

TEST_CASE("radial action examples") {
    const int d = 1;
    // D1 applied to 1/r gives -x1/r^3.
    const RFunction inv_r = RFunction::radius_power(d, -1);
    const RFunction image = apply(Operator::derivative(d, 1), inv_r);
    const RFunction expected =
        RFunction(XPoly::zero(d), -XPoly::coordinate(d, 1), 2);  // -x1 r / r^4
    CHECK(func_equal(image, expected));

    CHECK(func_equal(apply(Operator::reflection(d, 1), rf(xp(d, 1))), rf(-xp(d, 1))));
    CHECK(func_equal(apply(Operator::derivative(d, 1), rf(xp(d, 1))),
                     rf(XPoly::constant(d, Scalar::one(d) + Scalar::mu(d, 1) * Scalar::integer(d, 2)))));
}

TEST_CASE("function equality across the radius relation") {
    const int d = 2;
    const RFunction quotient =
        RFunction(xp(d, 1) * xp(d, 1) + xp(d, 2) * xp(d, 2), XPoly::zero(d), 1);
    CHECK(func_equal(quotient, RFunction::one(d)));

    CHECK(func_equal(RFunction::radius_power(d, 1) * RFunction::radius_power(d, -1),
                     RFunction::one(d)));

    const RFunction padded = RFunction(xp(d, 1) * XPoly::radius_sq(d), XPoly::zero(d), 1);
    CHECK(func_equal(padded, rf(xp(d, 1))));
    CHECK_FALSE(func_equal(rf(xp(d, 1)), rf(xp(d, 2))));
}

TEST_CASE("exact evaluation at Pythagorean points") {
    const int d = 2;
    const std::vector<Rational> p{Rational(3), Rational(4)};
    const ParamBindings none = ParamBindings::none(d);
    CHECK(eval_at(RFunction::radius_power(d, -1), p, none) == Gaussian(Rational(1, 5)));
    const RFunction x1_over_r = RFunction::coordinate(d, 1) * RFunction::radius_power(d, -1);
    CHECK(eval_at(x1_over_r, p, none) == Gaussian(Rational(3, 5)));
    CHECK(eval_at(RFunction::one(d), p, none) == Gaussian(1));

    CHECK_THROWS_AS(eval_at(RFunction::one(d), {Rational(1), Rational(1)}, none),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_at(RFunction::radius_power(d, -1), {Rational(0), Rational(0)}, none),
                    std::domain_error);
}

TEST_CASE("evaluation is multiplicative") {
    Rng rng(7);
    const int d = 2;
    const std::vector<Rational> p{Rational(3), Rational(4)};
    ParamBindings bind = ParamBindings::none(d);
    bind.mu[0] = Rational(1, 2);
    bind.mu[1] = Rational(2);
    bind.energy = Rational(-1, 2);
    bind.coupling = Rational(1);
    for (int t = 0; t < 20; ++t) {
        const auto fs = random_basis(d, 2, 100 + static_cast<std::uint64_t>(t));
        CHECK(eval_at(fs[0] * fs[1], p, bind) ==
              eval_at(fs[0], p, bind) * eval_at(fs[1], p, bind));
    }
}

TEST_CASE("random basis determinism and parity") {
    const auto a = random_basis(2, 6, 42);
    const auto b = random_basis(2, 6, 42);
    REQUIRE(a.size() == 6);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].even_part() == b[k].even_part());
        CHECK(a[k].odd_radial_part() == b[k].odd_radial_part());
        CHECK(a[k].denom_exp() == b[k].denom_exp());
        CHECK(a[k].denom_exp() <= 2);
    }
    // At least one output is odd in x1.
    bool any_odd = false;
    for (const auto& f : a) {
        const RFunction reflected = apply(Operator::reflection(2, 1), f);
        if (!func_equal(reflected, f)) any_odd = true;
    }
    CHECK(any_odd);
}

TEST_CASE("composition soundness of apply") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const Operator x = testsupport::random_operator(rng, d, 2);
        const Operator y = testsupport::random_operator(rng, d, 2);
        const auto fs = random_basis(d, 1, 7000 + static_cast<std::uint64_t>(t));
        const RFunction direct = apply(x * y, fs[0]);
        const RFunction nested = apply(x, apply(y, fs[0]));
        CHECK(func_equal(direct, nested));
    }
}

TEST_CASE("reflection is an involution on functions") {
    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const auto fs = random_basis(d, 1, 9000 + static_cast<std::uint64_t>(t));
        const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
        const Operator r = Operator::reflection(d, i);
        CHECK(func_equal(apply(r, apply(r, fs[0])), fs[0]));
    }
}
