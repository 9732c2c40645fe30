#include "dunkl/generators.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace dunkl {

namespace {

Scalar half(int d) { return Scalar::rational(d, Rational(1, 2)); }

Scalar imag(int d) { return Scalar::imaginary_unit(d); }

void check_index(int i, int d) {
    if (i < 1 || i > d) throw IndexError("generator index out of range");
}

Operator build_symbolic(const GeneratorId& id, int d);

// Symbolic generators are reused by hundreds of identity checks; cache
// them per (kind, i, j, dim). The build runs outside the lock because
// composite generators recurse into the cache; a duplicate build is
// discarded on insert.
const Operator& cached(const GeneratorId& id, int d) {
    using Key = std::tuple<int, int, int, int>;
    static std::mutex guard;
    static std::map<Key, Operator> cache;
    const Key key{static_cast<int>(id.kind), id.i, id.j, d};
    {
        std::scoped_lock lock(guard);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Operator built = build_symbolic(id, d);
    std::scoped_lock lock(guard);
    return cache.emplace(key, std::move(built)).first->second;
}

Operator sym(GenKind kind, int d) { return cached(GeneratorId::plain(kind), d); }
Operator sym(GenKind kind, int i, int d) { return cached(GeneratorId::indexed(kind, i), d); }

Operator laplacian_sym(int d) {
    Operator out(d);
    for (int i = 1; i <= d; ++i) out += pow(Operator::derivative(d, i), 2);
    return out;
}

Operator euler_sym(int d) {
    Operator out(d);
    for (int i = 1; i <= d; ++i) out += Operator::coordinate(d, i) * Operator::derivative(d, i);
    return out;
}

Operator reflection_sum_sym(int d) {
    Operator out(d);
    for (int i = 1; i <= d; ++i) out += Operator::reflection(d, i) * Scalar::mu(d, i);
    return out;
}

Operator coord_square_sym(int d) {
    Operator out(d);
    for (int i = 1; i <= d; ++i) out += pow(Operator::coordinate(d, i), 2);
    return out;
}

// Common core of A_i and M_i: -(1/2) x_i D^2 + D_i (x.D + (d-3)/2 + sum mu_j R_j).
Operator vector_core(int i, int d) {
    const Operator inner = euler_sym(d) + Operator::scalar(Scalar::rational(d, Rational(d - 3, 2))) +
                           reflection_sum_sym(d);
    return Operator::coordinate(d, i) * laplacian_sym(d) * (-half(d)) +
           Operator::derivative(d, i) * inner;
}

Operator build_symbolic(const GeneratorId& id, int d) {
    const Scalar minus_i = -imag(d);
    switch (id.kind) {
        case GenKind::Gamma0:
            return Operator::radius(d, 1) * (Operator::one(d) - laplacian_sym(d)) * half(d);
        case GenKind::GammaD1:
            return Operator::radius(d, 1) * (-Operator::one(d) - laplacian_sym(d)) * half(d);
        case GenKind::T:
            return (euler_sym(d) + Operator::scalar(Scalar::rational(d, Rational(d - 1, 2))) +
                    reflection_sum_sym(d)) *
                   minus_i;
        case GenKind::J: {
            check_index(id.i, d);
            check_index(id.j, d);
            if (id.i == id.j) throw IndexError("angular momentum needs two distinct indices");
            return (Operator::coordinate(d, id.i) * Operator::derivative(d, id.j) -
                    Operator::coordinate(d, id.j) * Operator::derivative(d, id.i)) *
                   minus_i;
        }
        case GenKind::A:
            check_index(id.i, d);
            return vector_core(id.i, d) - Operator::coordinate(d, id.i) * half(d);
        case GenKind::M:
            check_index(id.i, d);
            return vector_core(id.i, d) + Operator::coordinate(d, id.i) * half(d);
        case GenKind::Gamma:
            check_index(id.i, d);
            return Operator::radius(d, 1) * Operator::derivative(d, id.i) * minus_i;
        case GenKind::K:
            return Operator::radius(d, 1) * laplacian_sym(d) * (-half(d)) +
                   Operator::radius(d, 1) * (-Scalar::energy(d));
        case GenKind::H:
            return laplacian_sym(d) * (-half(d)) +
                   Operator::radius(d, -1) * (-Scalar::coupling(d));
        case GenKind::B: {
            check_index(id.i, d);
            const Scalar e2 = Scalar::energy(d) * Scalar::integer(d, 2);
            return (sym(GenKind::A, id.i, d) * (Scalar::one(d) - e2) +
                    sym(GenKind::M, id.i, d) * (Scalar::one(d) + e2)) *
                   half(d);
        }
        case GenKind::Atilde: {
            check_index(id.i, d);
            const Operator h_shift = sym(GenKind::H, d) - Operator::scalar(Scalar::energy(d));
            return sym(GenKind::B, id.i, d) + Operator::coordinate(d, id.i) * h_shift;
        }
        case GenKind::Jsq: {
            Operator out(d);
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j)
                    out += pow(cached(GeneratorId::pair(GenKind::J, i, j), d), 2);
            return out;
        }
        case GenKind::Qsq:
            return pow(sym(GenKind::Gamma0, d), 2) - pow(sym(GenKind::GammaD1, d), 2) -
                   pow(sym(GenKind::T, d), 2);
    }
    throw UsageError("unknown generator");
}

}  // namespace

Operator build(const GeneratorId& id, const ModelConfig& cfg) {
    const Operator& symbolic = cached(id, cfg.dim);
    if (cfg.bindings.empty()) return symbolic;
    return substitute(symbolic, cfg.bindings);
}

Operator build_so_generator(int a, int b, const ModelConfig& cfg) {
    const int d = cfg.dim;
    if (a < 1 || a > d + 3 || b < 1 || b > d + 3) throw IndexError("so-generator index out of range");
    if (a == b) throw IndexError("so-generator needs two distinct indices");
    if (a > b) return -build_so_generator(b, a, cfg);
    if (b <= d) return build(GeneratorId::pair(GenKind::J, a, b), cfg);
    if (a <= d) {
        if (b == d + 1) return build(GeneratorId::indexed(GenKind::A, a), cfg);
        if (b == d + 2) return build(GeneratorId::indexed(GenKind::M, a), cfg);
        return build(GeneratorId::indexed(GenKind::Gamma, a), cfg);
    }
    if (a == d + 1 && b == d + 2) return build(GeneratorId::plain(GenKind::T), cfg);
    if (a == d + 1 && b == d + 3) return build(GeneratorId::plain(GenKind::GammaD1), cfg);
    return build(GeneratorId::plain(GenKind::Gamma0), cfg);
}

Operator build_metric(int a, int b, const ModelConfig& cfg) {
    const int d = cfg.dim;
    if (a < 1 || a > d + 3 || b < 1 || b > d + 3) throw IndexError("metric index out of range");
    if (a != b) return Operator::zero(d);
    Operator entry(d);
    if (a <= d) {
        entry = Operator::one(d) +
                Operator::reflection(d, a) * (Scalar::mu(d, a) * Scalar::integer(d, 2));
    } else if (a == d + 1) {
        entry = Operator::one(d);
    } else {
        entry = -Operator::one(d);
    }
    if (cfg.bindings.empty()) return entry;
    return substitute(entry, cfg.bindings);
}

Operator build_alternate(const GeneratorId& id, AltForm form, const ModelConfig& cfg) {
    const int d = cfg.dim;
    check_index(id.i, d);
    const Operator xi = Operator::coordinate(d, id.i);
    const Operator di = Operator::derivative(d, id.i);
    const Operator lap = laplacian_sym(d);
    Operator inner_sum(d);
    if (form == AltForm::first_with_derivative_typo) {
        for (int j = 1; j <= d; ++j) inner_sum += Operator::derivative(d, j) * Scalar::mu(d, j);
    } else {
        inner_sum = reflection_sum_sym(d);
    }
    Operator out(d);
    switch (id.kind) {
        case GenKind::B: {
            const Scalar e2 = Scalar::energy(d) * Scalar::integer(d, 2);
            if (form == AltForm::second) {
                const Operator paren = euler_sym(d) +
                                       Operator::scalar(Scalar::rational(d, Rational(d - 1, 2))) +
                                       inner_sum;
                out = (-(xi * lap) + paren * di * Scalar::integer(d, 2) + xi * e2) * half(d);
            } else {
                const Operator paren = euler_sym(d) +
                                       Operator::scalar(Scalar::rational(d, Rational(d - 3, 2))) +
                                       inner_sum;
                out = (-(xi * lap) + di * paren * Scalar::integer(d, 2) + xi * e2) * half(d);
            }
            break;
        }
        case GenKind::Atilde: {
            const Operator coulomb = Operator::radius(d, -1) * xi * (-Scalar::coupling(d));
            if (form == AltForm::second) {
                const Operator paren = euler_sym(d) +
                                       Operator::scalar(Scalar::rational(d, Rational(d - 1, 2))) +
                                       inner_sum;
                out = -(xi * lap) + paren * di + coulomb;
            } else {
                const Operator paren = euler_sym(d) +
                                       Operator::scalar(Scalar::rational(d, Rational(d - 3, 2))) +
                                       inner_sum;
                out = -(xi * lap) + di * paren + coulomb;
            }
            break;
        }
        default:
            throw UsageError("alternate form exists only for B and Atilde");
    }
    if (cfg.bindings.empty()) return out;
    return substitute(out, cfg.bindings);
}

Operator laplacian(const ModelConfig& cfg) {
    Operator out = laplacian_sym(cfg.dim);
    return cfg.bindings.empty() ? out : substitute(out, cfg.bindings);
}

Operator euler(const ModelConfig& cfg) {
    Operator out = euler_sym(cfg.dim);
    return cfg.bindings.empty() ? out : substitute(out, cfg.bindings);
}

Operator weighted_reflection_sum(const ModelConfig& cfg) {
    Operator out = reflection_sum_sym(cfg.dim);
    return cfg.bindings.empty() ? out : substitute(out, cfg.bindings);
}

Operator coordinate_square_sum(const ModelConfig& cfg) {
    Operator out = coord_square_sym(cfg.dim);
    return cfg.bindings.empty() ? out : substitute(out, cfg.bindings);
}

}  // namespace dunkl
