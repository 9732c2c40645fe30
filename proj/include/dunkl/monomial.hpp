#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl {

/// A normal-ordered word
///
///     x_1^{a_1} ... x_d^{a_d} * r^k * D_1^{b_1} ... D_d^{b_d} * R_1^{s_1} ... R_d^{s_d}
///
/// in exactly this order. Reflection exponents are mask bits (R_i^2 = 1
/// never appears). The scaling weight |a| + k - |b| is preserved by every
/// rewrite rule of the algebra.
struct Monomial {
    std::vector<std::uint32_t> x_exp;  // coordinate exponents a
    std::int32_t r_pow = 0;            // radius power k
    std::vector<std::uint32_t> d_exp;  // Dunkl-derivative exponents b
    std::uint32_t refl = 0;            // reflection mask, bit i-1 = R_i present

    Monomial() = default;
    explicit Monomial(int dim)
        : x_exp(static_cast<std::size_t>(dim), 0), d_exp(static_cast<std::size_t>(dim), 0) {
        if (dim < 1 || dim > 30) throw DimensionError("dimension out of supported range");
    }

    int dim() const { return static_cast<int>(x_exp.size()); }

    static Monomial identity(int dim) { return Monomial(dim); }
    static Monomial coordinate(int dim, int i) {
        Monomial m(dim);
        m.x_exp.at(checked(dim, i)) = 1;
        return m;
    }
    static Monomial radius(int dim, int k) {
        Monomial m(dim);
        m.r_pow = k;
        return m;
    }
    static Monomial derivative(int dim, int i) {
        Monomial m(dim);
        m.d_exp.at(checked(dim, i)) = 1;
        return m;
    }
    static Monomial reflection(int dim, int i) {
        Monomial m(dim);
        m.refl = 1u << checked(dim, i);
        return m;
    }

    bool is_identity() const {
        if (r_pow != 0 || refl != 0) return false;
        for (auto a : x_exp)
            if (a) return false;
        for (auto b : d_exp)
            if (b) return false;
        return true;
    }

    std::uint32_t x_degree() const {
        return std::accumulate(x_exp.begin(), x_exp.end(), std::uint32_t{0});
    }
    std::uint32_t d_degree() const {
        return std::accumulate(d_exp.begin(), d_exp.end(), std::uint32_t{0});
    }

    /// Scaling weight |a| + k - |b|.
    int weight() const {
        return static_cast<int>(x_degree()) + r_pow - static_cast<int>(d_degree());
    }

    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    /// Lexicographic on (x_exp, r_pow, d_exp, refl); the canonical term order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.x_exp <=> b.x_exp; c != 0) return c;
        if (auto c = a.r_pow <=> b.r_pow; c != 0) return c;
        if (auto c = a.d_exp <=> b.d_exp; c != 0) return c;
        return a.refl <=> b.refl;
    }

private:
    static std::size_t checked(int dim, int i) {
        if (i < 1 || i > dim) throw IndexError("generator index out of range");
        return static_cast<std::size_t>(i) - 1;
    }
};

}  // namespace dunkl
