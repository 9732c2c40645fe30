#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dunkl/operator.hpp"

namespace dunkl {

/// Polynomial in x_1..x_d with Scalar coefficients.
class XPoly {
public:
    explicit XPoly(int dim) : dim_(dim) {}

    static XPoly zero(int dim) { return XPoly(dim); }
    static XPoly constant(int dim, Scalar c);
    static XPoly one(int dim) { return constant(dim, Scalar::one(dim)); }
    static XPoly coordinate(int dim, int i);
    /// sum_i x_i^2
    static XPoly radius_sq(int dim);

    int dim() const { return dim_; }
    const std::map<std::vector<std::uint32_t>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<std::uint32_t>& exp, const Scalar& c);

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly operator-() const;
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly operator*(const Scalar& c) const;

    friend bool operator==(const XPoly& a, const XPoly& b) = default;

    /// Ordinary partial derivative in x_i.
    XPoly partial(int i) const;
    /// Sign flip of x_i.
    XPoly reflect(int i) const;
    XPoly times_coordinate(int i) const;
    /// Exact division by x_i; throws std::logic_error on a non-divisible term.
    XPoly divide_coordinate(int i) const;

    /// Value at a rational point, with all parameters bound.
    Gaussian eval(const std::vector<Rational>& point, const ParamBindings& bindings) const;

private:
    int dim_;
    std::map<std::vector<std::uint32_t>, Scalar> terms_;
};

/// Dunkl derivative of a polynomial:
/// D_i p = d p/d x_i + mu_i (p - R_i p) / x_i, the division being exact.
XPoly dunkl_derivative(const XPoly& p, int i);

/// Test function (A(x) + B(x) r) / r^(2M). The space is closed under all
/// algebra generators. Two representations are equal iff the
/// cross-multiplied polynomial identities A1 S^(M2) = A2 S^(M1) and
/// B1 S^(M2) = B2 S^(M1) hold, with S = sum x_i^2.
class RFunction {
public:
    explicit RFunction(int dim) : even_(dim), odd_(dim) {}
    RFunction(XPoly even, XPoly odd, unsigned denom_exp);

    static RFunction zero(int dim) { return RFunction(dim); }
    static RFunction polynomial(XPoly p) {
        const int d = p.dim();
        return RFunction(std::move(p), XPoly::zero(d), 0);
    }
    static RFunction one(int dim) { return RFunction(XPoly::one(dim), XPoly::zero(dim), 0); }
    static RFunction coordinate(int dim, int i) {
        return RFunction(XPoly::coordinate(dim, i), XPoly::zero(dim), 0);
    }
    /// r^k as an element of the space.
    static RFunction radius_power(int dim, int k);

    int dim() const { return even_.dim(); }
    const XPoly& even_part() const { return even_; }
    const XPoly& odd_radial_part() const { return odd_; }
    unsigned denom_exp() const { return denom_; }
    bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

    RFunction& operator+=(const RFunction& o);
    RFunction& operator-=(const RFunction& o);
    RFunction operator-() const;
    friend RFunction operator+(RFunction a, const RFunction& b) { return a += b; }
    friend RFunction operator-(RFunction a, const RFunction& b) { return a -= b; }
    friend RFunction operator*(const RFunction& a, const RFunction& b);
    RFunction operator*(const Scalar& c) const;

private:
    XPoly even_;      // A
    XPoly odd_;       // B
    unsigned denom_ = 0;  // M
};

/// Exact image of f under the operator.
RFunction apply(const Operator& op, const RFunction& f);

/// Equality as functions on R^d minus the origin.
bool func_equal(const RFunction& f, const RFunction& g);

/// Exact value at a rational point whose squared length is a perfect
/// rational square (so r is rational). All parameters appearing in f
/// must be bound. Throws std::domain_error at the origin and
/// std::invalid_argument on a non-Pythagorean point.
Gaussian eval_at(const RFunction& f, const std::vector<Rational>& point,
                 const ParamBindings& bindings);

/// Deterministic pseudo-random test functions: degree <= 4, denominator
/// exponent <= 2, small integer coefficients, mixed parities.
std::vector<RFunction> random_basis(int dim, int count, std::uint64_t seed);

}  // namespace dunkl
