#include "dunkl/scalar.hpp"

#include <utility>

namespace dunkl {

ParamBindings ParamBindings::all_mu(int dim, const Rational& v) {
    ParamBindings b = none(dim);
    for (auto& slot : b.mu) slot = v;
    return b;
}

bool ParamBindings::empty() const {
    if (energy || coupling) return false;
    for (const auto& slot : mu)
        if (slot) return false;
    return true;
}

void Scalar::check_dim(int dim) {
    if (dim < 1) throw DimensionError("dimension must be at least 1");
}

void Scalar::check_same_dim(const Scalar& o) const {
    if (dim_ != o.dim_) throw DimensionError("scalar arity mismatch");
}

Scalar Scalar::constant(int dim, Gaussian v) {
    Scalar s(dim);
    if (!v.is_zero()) s.terms_.emplace(ParamExp(static_cast<std::size_t>(dim) + 2, 0), std::move(v));
    return s;
}

Scalar Scalar::mu(int dim, int i) {
    if (i < 1 || i > dim) throw IndexError("mu index out of range");
    Scalar s(dim);
    ParamExp e(static_cast<std::size_t>(dim) + 2, 0);
    e[static_cast<std::size_t>(i) - 1] = 1;
    s.terms_.emplace(std::move(e), Gaussian(1));
    return s;
}

Scalar Scalar::energy(int dim) {
    Scalar s(dim);
    ParamExp e(static_cast<std::size_t>(dim) + 2, 0);
    e[static_cast<std::size_t>(dim)] = 1;
    s.terms_.emplace(std::move(e), Gaussian(1));
    return s;
}

Scalar Scalar::coupling(int dim) {
    Scalar s(dim);
    ParamExp e(static_cast<std::size_t>(dim) + 2, 0);
    e[static_cast<std::size_t>(dim) + 1] = 1;
    s.terms_.emplace(std::move(e), Gaussian(1));
    return s;
}

bool Scalar::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    for (auto x : e)
        if (x != 0) return false;
    return true;
}

Gaussian Scalar::constant_value() const {
    if (terms_.empty()) return Gaussian(0);
    if (!is_constant()) throw std::domain_error("scalar is not a constant");
    return terms_.begin()->second;
}

void Scalar::add_term(const ParamExp& exp, const Gaussian& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_same_dim(b);
    Scalar out(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ParamExp e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Scalar Scalar::operator*(const Gaussian& g) const {
    Scalar out(dim_);
    if (g.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * g);
    return out;
}

Scalar Scalar::conj() const {
    Scalar out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
    return out;
}

namespace {

Rational rational_pow(const Rational& base, std::uint32_t n) {
    Rational out(1);
    for (std::uint32_t k = 0; k < n; ++k) out *= base;
    return out;
}

}  // namespace

Scalar Scalar::eval(const ParamBindings& bindings) const {
    const auto d = static_cast<std::size_t>(dim_);
    if (bindings.mu.size() != d) throw DimensionError("binding arity mismatch");
    Scalar out(dim_);
    for (const auto& [e, c] : terms_) {
        Gaussian coeff = c;
        ParamExp rest(e.size(), 0);
        for (std::size_t k = 0; k < d + 2; ++k) {
            if (e[k] == 0) continue;
            const std::optional<Rational>* slot = nullptr;
            if (k < d)
                slot = &bindings.mu[k];
            else if (k == d)
                slot = &bindings.energy;
            else
                slot = &bindings.coupling;
            if (slot->has_value())
                coeff *= Gaussian(rational_pow(**slot, e[k]));
            else
                rest[k] = e[k];
        }
        out.add_term(rest, coeff);
    }
    return out;
}

}  // namespace dunkl
