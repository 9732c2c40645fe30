#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Complex number with exact rational real and imaginary parts.
/// The denominator is kept positive and in lowest terms by the
/// underlying rational type.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(int v) : re(v) {}                       // NOLINT(google-explicit-constructor)
    Gaussian(Rational v) : re(std::move(v)) {}       // NOLINT(google-explicit-constructor)
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    Gaussian conj() const { return Gaussian(re, -im); }

    Gaussian operator-() const { return Gaussian(-re, -im); }

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) = default;
};

/// Exponent vector over the formal parameters mu_1..mu_d, E, alpha
/// (in that order; length d+2).
using ParamExp = std::vector<std::uint32_t>;

/// Partial assignment of rational values to the formal parameters.
/// Unbound slots stay formal under evaluation.
struct ParamBindings {
    std::vector<std::optional<Rational>> mu;  // size d, slot i-1 is mu_i
    std::optional<Rational> energy;           // E
    std::optional<Rational> coupling;         // alpha

    static ParamBindings none(int dim) {
        ParamBindings b;
        b.mu.resize(static_cast<std::size_t>(dim));
        return b;
    }
    /// All mu_i bound to the same value, E and alpha formal.
    static ParamBindings all_mu(int dim, const Rational& v);
    bool empty() const;
};

/// Element of the coefficient ring: a polynomial in mu_1..mu_d, E, alpha
/// with Gaussian-rational coefficients. Zero coefficients are never stored,
/// so two equal ring elements have identical term maps.
class Scalar {
public:
    explicit Scalar(int dim) : dim_(dim) { check_dim(dim); }

    static Scalar constant(int dim, Gaussian v);
    static Scalar rational(int dim, const Rational& v) { return constant(dim, Gaussian(v)); }
    static Scalar integer(int dim, long v) { return constant(dim, Gaussian(Rational(v))); }
    static Scalar one(int dim) { return integer(dim, 1); }
    static Scalar imaginary_unit(int dim) { return constant(dim, Gaussian::i()); }
    /// The parameter mu_i (1-based).
    static Scalar mu(int dim, int i);
    static Scalar energy(int dim);
    static Scalar coupling(int dim);

    int dim() const { return dim_; }
    const std::map<ParamExp, Gaussian>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant Scalar; throws if parameters remain.
    Gaussian constant_value() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar operator-() const;
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar operator*(const Gaussian& g) const;

    friend bool operator==(const Scalar& a, const Scalar& b) = default;

    /// Complex conjugation of every coefficient; fixes mu_i, E, alpha.
    Scalar conj() const;

    /// Substitution homomorphism; bound parameters get rational values,
    /// unbound ones remain formal.
    Scalar eval(const ParamBindings& bindings) const;

    void add_term(const ParamExp& exp, const Gaussian& coeff);

private:
    static void check_dim(int dim);
    void check_same_dim(const Scalar& o) const;

    int dim_;
    std::map<ParamExp, Gaussian> terms_;
};

}  // namespace dunkl
