#pragma once

#include <map>
#include <string>

#include "dunkl/monomial.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

/// A finite Scalar-linear combination of normal-ordered monomials.
///
/// Products are expanded with the rewrite rules
///
///   D_i x_i -> x_i D_i + 1 + 2 mu_i R_i        D_i x_j -> x_j D_i   (i != j)
///   D_i r^k -> r^k D_i + k x_i r^(k-2)
///   R_i x_i -> -x_i R_i,  R_i D_i -> -D_i R_i,  R_i R_i -> 1
///   R_i commutes with x_j, D_j (j != i) and with r
///
/// which terminate in the unique canonical form. Zero coefficients are
/// never stored, so equality of operators is equality of term maps.
/// Radius powers stay formal: r^2 is not rewritten into sum x_i^2.
class Operator {
public:
    explicit Operator(int dim) : dim_(dim) {
        if (dim < 1 || dim > 30) throw DimensionError("dimension out of supported range");
    }

    static Operator zero(int dim) { return Operator(dim); }
    static Operator one(int dim) { return monomial(Monomial::identity(dim)); }
    static Operator monomial(Monomial m, Scalar c);
    static Operator monomial(Monomial m);
    /// Embeds a coefficient as a multiple of the identity.
    static Operator scalar(Scalar s);
    static Operator coordinate(int dim, int i) { return monomial(Monomial::coordinate(dim, i)); }
    static Operator radius(int dim, int k) { return monomial(Monomial::radius(dim, k)); }
    static Operator derivative(int dim, int i) { return monomial(Monomial::derivative(dim, i)); }
    static Operator reflection(int dim, int i) { return monomial(Monomial::reflection(dim, i)); }

    int dim() const { return dim_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Scalar& c);

    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    Operator operator-() const;
    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }

    /// Normal-ordered product.
    friend Operator operator*(const Operator& a, const Operator& b);
    Operator& operator*=(const Operator& o) { return *this = *this * o; }

    Operator operator*(const Scalar& c) const;
    friend Operator operator*(const Scalar& c, const Operator& a) { return a * c; }

    friend bool operator==(const Operator& a, const Operator& b) = default;

private:
    void check_same_dim(const Operator& o) const;

    int dim_;
    std::map<Monomial, Scalar> terms_;
};

/// Normal-ordered expansion of the concatenated word a.b.
Operator mono_product(const Monomial& a, const Monomial& b);

Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

/// x^n for n >= 0.
Operator pow(const Operator& x, unsigned n);

/// Formal adjoint for the measure prod_i |x_i|^(2 mu_i) dx: an
/// anti-homomorphism fixing x_i, r, R_i and sending D_i to -D_i,
/// with complex-conjugated coefficients.
Operator adjoint_unweighted(const Operator& x);

/// Adjoint for the radially weighted measure r^-1 prod_i |x_i|^(2 mu_i) dx,
/// i.e. r * adjoint_unweighted(x) * r^-1.
Operator adjoint(const Operator& x);

/// Coefficient-wise parameter substitution, re-canonicalized. Products
/// rebuild structure constants in the formal parameters, so bound
/// computations substitute after the last algebra operation (substitution
/// is idempotent and a homomorphism onto the bound algebra).
Operator substitute(const Operator& x, const ParamBindings& bindings);

/// Partition of the terms by scaling weight; the parts sum back to x.
std::map<int, Operator> weight_split(const Operator& x);

}  // namespace dunkl
