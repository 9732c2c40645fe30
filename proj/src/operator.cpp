#include "dunkl/operator.hpp"

#include <utility>
#include <vector>

namespace dunkl {

Operator Operator::monomial(Monomial m, Scalar c) {
    Operator out(m.dim());
    if (c.dim() != m.dim()) throw DimensionError("coefficient arity mismatch");
    if (!c.is_zero()) out.terms_.emplace(std::move(m), std::move(c));
    return out;
}

Operator Operator::monomial(Monomial m) {
    const int d = m.dim();
    return monomial(std::move(m), Scalar::one(d));
}

Operator Operator::scalar(Scalar s) {
    return monomial(Monomial::identity(s.dim()), std::move(s));
}

void Operator::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Operator::check_same_dim(const Operator& o) const {
    if (dim_ != o.dim_) throw DimensionError("operator dimension mismatch");
}

Operator& Operator::operator+=(const Operator& o) {
    check_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    check_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Operator Operator::operator-() const {
    Operator out(dim_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Operator Operator::operator*(const Scalar& c) const {
    Operator out(dim_);
    if (c.is_zero()) return out;
    for (const auto& [m, s] : terms_) out.add_term(m, s * c);
    return out;
}

namespace {

// One letter of a word: a coordinate, a radius power, a Dunkl derivative,
// or a reflection.
struct Atom {
    enum class Kind { coord, radius, deriv, refl };
    Kind kind;
    int index = 0;  // 1-based, for coord/deriv/refl
    int power = 0;  // for radius
};

void append_atoms(const Monomial& m, std::vector<Atom>& out) {
    const int d = m.dim();
    for (int i = 1; i <= d; ++i)
        for (std::uint32_t k = 0; k < m.x_exp[static_cast<std::size_t>(i) - 1]; ++k)
            out.push_back({Atom::Kind::coord, i, 0});
    if (m.r_pow != 0) out.push_back({Atom::Kind::radius, 0, m.r_pow});
    for (int i = 1; i <= d; ++i)
        for (std::uint32_t k = 0; k < m.d_exp[static_cast<std::size_t>(i) - 1]; ++k)
            out.push_back({Atom::Kind::deriv, i, 0});
    for (int i = 1; i <= d; ++i)
        if (m.refl & (1u << (i - 1))) out.push_back({Atom::Kind::refl, i, 0});
}

void mul_atom(const Monomial& m, const Scalar& c, const Atom& g, Operator& acc);

// Right-multiplication of a reflection-free monomial by one atom.
void mul_atom_bare(const Monomial& m, const Scalar& c, const Atom& g, Operator& acc) {
    const int d = m.dim();
    switch (g.kind) {
        case Atom::Kind::coord: {
            const auto slot = static_cast<std::size_t>(g.index) - 1;
            // D_i^b x_i = x_i D_i^b + b D_i^(b-1) + mu_i (1-(-1)^b) D_i^(b-1) R_i
            Monomial grown = m;
            grown.x_exp[slot] += 1;
            acc.add_term(grown, c);
            const std::uint32_t b = m.d_exp[slot];
            if (b > 0) {
                Monomial lowered = m;
                lowered.d_exp[slot] -= 1;
                acc.add_term(lowered, c * Gaussian(Rational(b)));
                if (b % 2 == 1) {
                    Monomial reflected = lowered;
                    reflected.refl ^= 1u << slot;
                    acc.add_term(reflected, c * (Scalar::mu(d, g.index) * Scalar::integer(d, 2)));
                }
            }
            return;
        }
        case Atom::Kind::deriv: {
            Monomial grown = m;
            grown.d_exp[static_cast<std::size_t>(g.index) - 1] += 1;
            acc.add_term(grown, c);
            return;
        }
        case Atom::Kind::refl: {
            Monomial flipped = m;
            flipped.refl ^= 1u << (g.index - 1);
            acc.add_term(flipped, c);
            return;
        }
        case Atom::Kind::radius: {
            if (g.power == 0) {
                acc.add_term(m, c);
                return;
            }
            int last = 0;  // highest derivative index present
            for (int i = d; i >= 1; --i) {
                if (m.d_exp[static_cast<std::size_t>(i) - 1] > 0) {
                    last = i;
                    break;
                }
            }
            if (last == 0) {
                Monomial merged = m;
                merged.r_pow += g.power;
                acc.add_term(merged, c);
                return;
            }
            // Split off the rightmost derivative:
            //   M D_j r^k = (M r^k) D_j + k (M x_j) r^(k-2)
            Monomial head = m;
            head.d_exp[static_cast<std::size_t>(last) - 1] -= 1;
            Operator lhs(d);
            mul_atom_bare(head, c, g, lhs);
            for (const auto& [mm, cc] : lhs.terms())
                mul_atom(mm, cc, {Atom::Kind::deriv, last, 0}, acc);
            Operator rhs(d);
            mul_atom_bare(head, c * Gaussian(Rational(g.power)), {Atom::Kind::coord, last, 0}, rhs);
            for (const auto& [mm, cc] : rhs.terms())
                mul_atom(mm, cc, {Atom::Kind::radius, 0, g.power - 2}, acc);
            return;
        }
    }
}

// Right-multiplication by one atom; peels the reflection block off first.
// The atom crosses R^s with a sign flip per anticommuting pair, acts on the
// bare word, and the produced reflections merge back by mask xor.
void mul_atom(const Monomial& m, const Scalar& c, const Atom& g, Operator& acc) {
    if (m.refl == 0) {
        mul_atom_bare(m, c, g, acc);
        return;
    }
    bool negate = false;
    if (g.kind == Atom::Kind::coord || g.kind == Atom::Kind::deriv)
        negate = (m.refl >> (g.index - 1)) & 1u;
    Monomial bare = m;
    bare.refl = 0;
    Operator partial(m.dim());
    mul_atom_bare(bare, negate ? -c : c, g, partial);
    for (const auto& [mm, cc] : partial.terms()) {
        Monomial merged = mm;
        merged.refl ^= m.refl;
        acc.add_term(merged, cc);
    }
}

Operator times_atom(const Operator& a, const Atom& g) {
    Operator out(a.dim());
    for (const auto& [m, c] : a.terms()) mul_atom(m, c, g, out);
    return out;
}

Operator times_monomial(const Operator& a, const Monomial& m) {
    std::vector<Atom> atoms;
    append_atoms(m, atoms);
    Operator cur = a;
    for (const Atom& g : atoms) cur = times_atom(cur, g);
    return cur;
}

}  // namespace

Operator mono_product(const Monomial& a, const Monomial& b) {
    if (a.dim() != b.dim()) throw DimensionError("monomial dimension mismatch");
    return times_monomial(Operator::monomial(a), b);
}

Operator operator*(const Operator& a, const Operator& b) {
    a.check_same_dim(b);
    Operator out(a.dim());
    for (const auto& [m, c] : b.terms()) {
        Operator partial = times_monomial(a, m);
        for (const auto& [mm, cc] : partial.terms()) out.add_term(mm, cc * c);
    }
    return out;
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator anticommutator(const Operator& a, const Operator& b) { return a * b + b * a; }

Operator pow(const Operator& x, unsigned n) {
    Operator out = Operator::one(x.dim());
    for (unsigned k = 0; k < n; ++k) out *= x;
    return out;
}

Operator adjoint_unweighted(const Operator& x) {
    const int d = x.dim();
    Operator out(d);
    for (const auto& [m, c] : x.terms()) {
        // (x^a r^k D^b R^s)^+ = R^s (-D)^b r^k x^a with conjugated coefficient.
        Scalar coeff = c.conj();
        if (m.d_degree() % 2 == 1) coeff = -coeff;
        Monomial head(d);
        head.refl = m.refl;
        Operator cur = Operator::monomial(head, coeff);
        for (int i = 1; i <= d; ++i)
            for (std::uint32_t k = 0; k < m.d_exp[static_cast<std::size_t>(i) - 1]; ++k)
                cur = times_atom(cur, {Atom::Kind::deriv, i, 0});
        if (m.r_pow != 0) cur = times_atom(cur, {Atom::Kind::radius, 0, m.r_pow});
        for (int i = 1; i <= d; ++i)
            for (std::uint32_t k = 0; k < m.x_exp[static_cast<std::size_t>(i) - 1]; ++k)
                cur = times_atom(cur, {Atom::Kind::coord, i, 0});
        out += cur;
    }
    return out;
}

Operator adjoint(const Operator& x) {
    const int d = x.dim();
    return Operator::radius(d, 1) * adjoint_unweighted(x) * Operator::radius(d, -1);
}

Operator substitute(const Operator& x, const ParamBindings& bindings) {
    Operator out(x.dim());
    for (const auto& [m, c] : x.terms()) out.add_term(m, c.eval(bindings));
    return out;
}

std::map<int, Operator> weight_split(const Operator& x) {
    std::map<int, Operator> parts;
    for (const auto& [m, c] : x.terms()) {
        auto [it, inserted] = parts.try_emplace(m.weight(), x.dim());
        it->second.add_term(m, c);
    }
    return parts;
}

}  // namespace dunkl
