#pragma once

#include <random>

#include "dunkl/operator.hpp"

namespace dunkl::testsupport {

// Raw-engine randomness only; <random> distributions differ across
// standard libraries and would break seed-pinned expectations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    std::uint64_t below(std::uint64_t n) { return gen_() % n; }
    long int_in(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 gen_;
};

inline Monomial random_monomial(Rng& rng, int d, int max_exp = 2, int max_rpow = 2) {
    Monomial m(d);
    for (int i = 0; i < d; ++i) {
        m.x_exp[static_cast<std::size_t>(i)] =
            static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(max_exp) + 1));
        m.d_exp[static_cast<std::size_t>(i)] =
            static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(max_exp) + 1));
    }
    m.r_pow = static_cast<int>(rng.int_in(-max_rpow, max_rpow));
    m.refl = static_cast<std::uint32_t>(rng.below(1ull << d));
    return m;
}

inline Scalar random_scalar(Rng& rng, int d) {
    Scalar s(d);
    const auto n_terms = 1 + rng.below(2);
    for (std::uint64_t t = 0; t < n_terms; ++t) {
        Scalar term = Scalar::constant(
            d, Gaussian(Rational(rng.int_in(-3, 3)), Rational(rng.int_in(-1, 1))));
        if (term.is_zero()) term = Scalar::one(d);
        switch (rng.below(4)) {
            case 0: term *= Scalar::mu(d, static_cast<int>(1 + rng.below(static_cast<std::uint64_t>(d)))); break;
            case 1: term *= Scalar::energy(d); break;
            case 2: term *= Scalar::coupling(d); break;
            default: break;
        }
        s += term;
    }
    if (s.is_zero()) s = Scalar::one(d);
    return s;
}

inline Operator random_operator(Rng& rng, int d, int max_terms = 3) {
    Operator out(d);
    const auto n_terms = 1 + rng.below(static_cast<std::uint64_t>(max_terms));
    for (std::uint64_t t = 0; t < n_terms; ++t)
        out += Operator::monomial(random_monomial(rng, d), random_scalar(rng, d));
    return out;
}

}  // namespace dunkl::testsupport
