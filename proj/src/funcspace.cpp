#include "dunkl/funcspace.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace dunkl {

XPoly XPoly::constant(int dim, Scalar c) {
    XPoly p(dim);
    if (!c.is_zero()) p.terms_.emplace(std::vector<std::uint32_t>(static_cast<std::size_t>(dim), 0),
                                       std::move(c));
    return p;
}

XPoly XPoly::coordinate(int dim, int i) {
    if (i < 1 || i > dim) throw IndexError("coordinate index out of range");
    XPoly p(dim);
    std::vector<std::uint32_t> e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i) - 1] = 1;
    p.terms_.emplace(std::move(e), Scalar::one(dim));
    return p;
}

XPoly XPoly::radius_sq(int dim) {
    XPoly p(dim);
    for (int i = 1; i <= dim; ++i) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(i) - 1] = 2;
        p.terms_.emplace(std::move(e), Scalar::one(dim));
    }
    return p;
}

void XPoly::add_term(const std::vector<std::uint32_t>& exp, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (dim_ != o.dim_) throw DimensionError("polynomial dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (dim_ != o.dim_) throw DimensionError("polynomial dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

XPoly XPoly::operator-() const {
    XPoly out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.dim_ != b.dim_) throw DimensionError("polynomial dimension mismatch");
    XPoly out(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<std::uint32_t> e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

XPoly XPoly::operator*(const Scalar& c) const {
    XPoly out(dim_);
    if (c.is_zero()) return out;
    for (const auto& [e, s] : terms_) out.add_term(e, s * c);
    return out;
}

XPoly XPoly::partial(int i) const {
    const auto slot = static_cast<std::size_t>(i) - 1;
    XPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[slot] == 0) continue;
        auto lowered = e;
        lowered[slot] -= 1;
        out.add_term(lowered, c * Gaussian(Rational(e[slot])));
    }
    return out;
}

XPoly XPoly::reflect(int i) const {
    const auto slot = static_cast<std::size_t>(i) - 1;
    XPoly out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, e[slot] % 2 ? -c : c);
    return out;
}

XPoly XPoly::times_coordinate(int i) const {
    const auto slot = static_cast<std::size_t>(i) - 1;
    XPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        auto raised = e;
        raised[slot] += 1;
        out.terms_.emplace(std::move(raised), c);
    }
    return out;
}

XPoly XPoly::divide_coordinate(int i) const {
    const auto slot = static_cast<std::size_t>(i) - 1;
    XPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[slot] == 0) throw std::logic_error("inexact coordinate division");
        auto lowered = e;
        lowered[slot] -= 1;
        out.terms_.emplace(std::move(lowered), c);
    }
    return out;
}

Gaussian XPoly::eval(const std::vector<Rational>& point, const ParamBindings& bindings) const {
    if (point.size() != static_cast<std::size_t>(dim_))
        throw DimensionError("evaluation point dimension mismatch");
    Gaussian total(0);
    for (const auto& [e, c] : terms_) {
        const Scalar bound = c.eval(bindings);
        Gaussian value = bound.constant_value();  // throws if parameters remain
        for (std::size_t k = 0; k < e.size(); ++k)
            for (std::uint32_t n = 0; n < e[k]; ++n) value *= Gaussian(point[k]);
        total += value;
    }
    return total;
}

XPoly dunkl_derivative(const XPoly& p, int i) {
    if (i < 1 || i > p.dim()) throw IndexError("derivative index out of range");
    const auto slot = static_cast<std::size_t>(i) - 1;
    // mu_i (p - R_i p) / x_i: twice the odd-in-x_i part, divided exactly.
    XPoly odd(p.dim());
    for (const auto& [e, c] : p.terms()) {
        if (e[slot] % 2 == 0) continue;
        auto lowered = e;
        lowered[slot] -= 1;
        odd.add_term(lowered, c * Gaussian(Rational(2)));
    }
    return p.partial(i) + odd * Scalar::mu(p.dim(), i);
}

RFunction::RFunction(XPoly even, XPoly odd, unsigned denom_exp)
    : even_(std::move(even)), odd_(std::move(odd)), denom_(denom_exp) {
    if (even_.dim() != odd_.dim()) throw DimensionError("function part dimension mismatch");
    if (even_.is_zero() && odd_.is_zero()) denom_ = 0;
}

RFunction RFunction::radius_power(int dim, int k) {
    // Even k = 2t: S^t or 1/r^(2|t|). Odd k = 2t+1: r * r^(2t).
    XPoly even = XPoly::zero(dim);
    XPoly odd = XPoly::zero(dim);
    const bool is_odd = (k % 2) != 0;
    const int t = is_odd ? (k - 1) / 2 : k / 2;
    XPoly body = XPoly::one(dim);
    unsigned denom = 0;
    if (t >= 0) {
        for (int n = 0; n < t; ++n) body = body * XPoly::radius_sq(dim);
    } else {
        denom = static_cast<unsigned>(-t);
    }
    if (is_odd)
        odd = body;
    else
        even = body;
    return RFunction(std::move(even), std::move(odd), denom);
}

namespace {

XPoly scale_pow(const XPoly& p, const XPoly& s, unsigned n) {
    XPoly out = p;
    for (unsigned k = 0; k < n; ++k) out = out * s;
    return out;
}

}  // namespace

RFunction& RFunction::operator+=(const RFunction& o) {
    if (dim() != o.dim()) throw DimensionError("function dimension mismatch");
    const XPoly s = XPoly::radius_sq(dim());
    const unsigned m = std::max(denom_, o.denom_);
    even_ = scale_pow(even_, s, m - denom_) + scale_pow(o.even_, s, m - o.denom_);
    odd_ = scale_pow(odd_, s, m - denom_) + scale_pow(o.odd_, s, m - o.denom_);
    denom_ = (even_.is_zero() && odd_.is_zero()) ? 0 : m;
    return *this;
}

RFunction& RFunction::operator-=(const RFunction& o) { return *this += -o; }

RFunction RFunction::operator-() const { return RFunction(-even_, -odd_, denom_); }

RFunction operator*(const RFunction& a, const RFunction& b) {
    if (a.dim() != b.dim()) throw DimensionError("function dimension mismatch");
    const XPoly s = XPoly::radius_sq(a.dim());
    XPoly even = a.even_ * b.even_ + (a.odd_ * b.odd_) * s;
    XPoly odd = a.even_ * b.odd_ + a.odd_ * b.even_;
    return RFunction(std::move(even), std::move(odd), a.denom_ + b.denom_);
}

RFunction RFunction::operator*(const Scalar& c) const {
    return RFunction(even_ * c, odd_ * c, denom_);
}

namespace {

// Image computation works on the graded form sum_k p_k(x) r^k; the single
// fold back to (A + B r)/r^(2M) happens once at the end.
using Pieces = std::map<int, XPoly>;

void add_piece(Pieces& pieces, int k, const XPoly& p) {
    if (p.is_zero()) return;
    auto it = pieces.find(k);
    if (it == pieces.end()) {
        pieces.emplace(k, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) pieces.erase(it);
    }
}

Pieces unfold(const RFunction& f) {
    Pieces out;
    const int m = static_cast<int>(f.denom_exp());
    add_piece(out, -2 * m, f.even_part());
    add_piece(out, 1 - 2 * m, f.odd_radial_part());
    return out;
}

RFunction fold(const Pieces& pieces, int dim) {
    int m = 0;
    for (const auto& [k, p] : pieces) {
        const int need = (k % 2 == 0) ? (-k + 1) / 2 : (1 - k) / 2;
        m = std::max(m, need);
    }
    const XPoly s = XPoly::radius_sq(dim);
    XPoly even = XPoly::zero(dim);
    XPoly odd = XPoly::zero(dim);
    for (const auto& [k, p] : pieces) {
        if (k % 2 == 0)
            even += scale_pow(p, s, static_cast<unsigned>((k + 2 * m) / 2));
        else
            odd += scale_pow(p, s, static_cast<unsigned>((k - 1 + 2 * m) / 2));
    }
    return RFunction(std::move(even), std::move(odd), static_cast<unsigned>(m));
}

// D_i (p r^k) = (D_i p) r^k + k x_i p r^(k-2).
Pieces derivative_pieces(const Pieces& in, int i) {
    Pieces out;
    for (const auto& [k, p] : in) {
        add_piece(out, k, dunkl_derivative(p, i));
        if (k != 0)
            add_piece(out, k - 2, p.times_coordinate(i) * Scalar::integer(p.dim(), k));
    }
    return out;
}

}  // namespace

RFunction apply(const Operator& op, const RFunction& f) {
    if (op.dim() != f.dim()) throw DimensionError("operator/function dimension mismatch");
    const int d = op.dim();
    const Pieces base = unfold(f);
    Pieces image;
    for (const auto& [mono, coeff] : op.terms()) {
        Pieces cur = base;
        // Rightmost block acts first: reflections, then derivatives,
        // then the radius power, then coordinates.
        for (int i = 1; i <= d; ++i) {
            if (!(mono.refl & (1u << (i - 1)))) continue;
            Pieces next;
            for (const auto& [k, p] : cur) add_piece(next, k, p.reflect(i));
            cur = std::move(next);
        }
        for (int i = 1; i <= d; ++i)
            for (std::uint32_t n = 0; n < mono.d_exp[static_cast<std::size_t>(i) - 1]; ++n)
                cur = derivative_pieces(cur, i);
        if (mono.r_pow != 0) {
            Pieces next;
            for (const auto& [k, p] : cur) add_piece(next, k + mono.r_pow, p);
            cur = std::move(next);
        }
        for (int i = 1; i <= d; ++i)
            for (std::uint32_t n = 0; n < mono.x_exp[static_cast<std::size_t>(i) - 1]; ++n) {
                Pieces next;
                for (const auto& [k, p] : cur) add_piece(next, k, p.times_coordinate(i));
                cur = std::move(next);
            }
        for (const auto& [k, p] : cur) add_piece(image, k, p * coeff);
    }
    return fold(image, d);
}

bool func_equal(const RFunction& f, const RFunction& g) {
    if (f.dim() != g.dim()) throw DimensionError("function dimension mismatch");
    const XPoly s = XPoly::radius_sq(f.dim());
    return scale_pow(f.even_part(), s, g.denom_exp()) ==
               scale_pow(g.even_part(), s, f.denom_exp()) &&
           scale_pow(f.odd_radial_part(), s, g.denom_exp()) ==
               scale_pow(g.odd_radial_part(), s, f.denom_exp());
}

namespace {

// Exact square root of a non-negative rational, if it exists.
std::optional<Rational> exact_sqrt(const Rational& v) {
    if (v < 0) return std::nullopt;
    const Int num = numerator(v);
    const Int den = denominator(v);
    const Int sn = boost::multiprecision::sqrt(num);
    const Int sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace

Gaussian eval_at(const RFunction& f, const std::vector<Rational>& point,
                 const ParamBindings& bindings) {
    if (point.size() != static_cast<std::size_t>(f.dim()))
        throw DimensionError("evaluation point dimension mismatch");
    Rational norm_sq(0);
    for (const auto& x : point) norm_sq += x * x;
    if (norm_sq == 0) throw std::domain_error("evaluation at the origin");
    const auto radius = exact_sqrt(norm_sq);
    if (!radius) throw std::invalid_argument("point is not Pythagorean");
    Gaussian value = f.even_part().eval(point, bindings);
    value += f.odd_radial_part().eval(point, bindings) * Gaussian(*radius);
    Rational denom(1);
    for (unsigned k = 0; k < 2 * f.denom_exp(); ++k) denom *= *radius;
    const Rational inv = Rational(denominator(denom), numerator(denom));
    return value * Gaussian(inv);
}

namespace {

// Uniform value below n from the raw engine; distributions from <random>
// are not byte-stable across standard libraries.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

XPoly random_poly(std::mt19937_64& rng, int dim, unsigned max_terms) {
    XPoly p(dim);
    const auto n_terms = 1 + rand_below(rng, max_terms);
    for (std::uint64_t t = 0; t < n_terms; ++t) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(dim), 0);
        auto budget = rand_below(rng, 5);  // total degree <= 4, biased small
        if (budget > 2 && rand_below(rng, 2) == 0) budget = rand_below(rng, 3);
        for (std::uint64_t k = 0; k < budget; ++k)
            e[static_cast<std::size_t>(rand_below(rng, static_cast<std::uint64_t>(dim)))] += 1;
        const long coeff = static_cast<long>(rand_below(rng, 7)) - 3;
        if (coeff != 0) p.add_term(e, Scalar::integer(dim, coeff));
    }
    return p;
}

}  // namespace

std::vector<RFunction> random_basis(int dim, int count, std::uint64_t seed) {
    if (count < 1) throw UsageError("need at least one test function");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<RFunction> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int idx = 0; idx < count; ++idx) {
        XPoly even = random_poly(rng, dim, 3);
        XPoly odd = rand_below(rng, 3) == 0 ? XPoly::zero(dim) : random_poly(rng, dim, 2);
        // Every fourth function carries a guaranteed odd-in-x_1 term.
        if (idx % 4 == 1) {
            std::vector<std::uint32_t> e(static_cast<std::size_t>(dim), 0);
            e[0] = 1;
            auto bumped = even;
            bumped.add_term(e, Scalar::one(dim));
            if (bumped == bumped.reflect(1)) bumped.add_term(e, Scalar::one(dim));
            even = bumped;
        }
        const auto denom = static_cast<unsigned>(rand_below(rng, 3));  // M <= 2
        if (even.is_zero() && odd.is_zero()) even = XPoly::one(dim);
        out.emplace_back(std::move(even), std::move(odd), denom);
    }
    return out;
}

}  // namespace dunkl
