#pragma once

#include <list>
#include <utility>
#include <vector>

#include "dunkl/operator.hpp"

namespace dunkl::testsupport {

// Reference normal-ordering engine: literal leftmost-pair rewriting on
// words of unit letters. Deliberately naive and independent of the
// production multiplication path; used to cross-check it and to bound
// the rewrite step count.
struct NaiveResult {
    Operator op;
    long steps = 0;
};

namespace naive_detail {

struct Letter {
    enum class Kind : int { coord = 0, radius = 1, deriv = 2, refl = 3 };
    Kind kind;
    int index = 0;  // coord/deriv/refl
    int power = 0;  // radius
};

using Word = std::vector<Letter>;

inline void push_letter(Word& w, Letter l) {
    if (l.kind == Letter::Kind::radius && l.power == 0) return;
    w.push_back(l);
}

inline void expand_letters(const Monomial& m, Word& w) {
    const int d = m.dim();
    for (int i = 1; i <= d; ++i)
        for (std::uint32_t k = 0; k < m.x_exp[static_cast<std::size_t>(i) - 1]; ++k)
            w.push_back({Letter::Kind::coord, i, 0});
    push_letter(w, {Letter::Kind::radius, 0, m.r_pow});
    for (int i = 1; i <= d; ++i)
        for (std::uint32_t k = 0; k < m.d_exp[static_cast<std::size_t>(i) - 1]; ++k)
            w.push_back({Letter::Kind::deriv, i, 0});
    for (int i = 1; i <= d; ++i)
        if (m.refl & (1u << (i - 1))) w.push_back({Letter::Kind::refl, i, 0});
}

// True if the adjacent pair (u, v) is already in normal order.
inline bool ordered(const Letter& u, const Letter& v) {
    if (static_cast<int>(u.kind) < static_cast<int>(v.kind)) return true;
    if (static_cast<int>(u.kind) > static_cast<int>(v.kind)) return false;
    switch (u.kind) {
        case Letter::Kind::coord:
        case Letter::Kind::deriv: return u.index <= v.index;
        case Letter::Kind::refl: return u.index < v.index;  // equal pair cancels
        case Letter::Kind::radius: return false;            // powers merge
    }
    return true;
}

inline Monomial to_monomial(const Word& w, int d) {
    Monomial m(d);
    for (const Letter& l : w) {
        switch (l.kind) {
            case Letter::Kind::coord: m.x_exp[static_cast<std::size_t>(l.index) - 1] += 1; break;
            case Letter::Kind::radius: m.r_pow += l.power; break;
            case Letter::Kind::deriv: m.d_exp[static_cast<std::size_t>(l.index) - 1] += 1; break;
            case Letter::Kind::refl: m.refl |= 1u << (l.index - 1); break;
        }
    }
    return m;
}

}  // namespace naive_detail

inline NaiveResult naive_product(const Monomial& a, const Monomial& b) {
    using namespace naive_detail;
    const int d = a.dim();
    Word start;
    expand_letters(a, start);
    expand_letters(b, start);

    NaiveResult result{Operator::zero(d), 0};
    std::list<std::pair<Scalar, Word>> work;
    work.emplace_back(Scalar::one(d), std::move(start));

    while (!work.empty()) {
        auto [coeff, w] = std::move(work.front());
        work.pop_front();
        bool reduced = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            const Letter u = w[k];
            const Letter v = w[k + 1];
            if (ordered(u, v)) continue;
            reduced = true;
            ++result.steps;
            auto rest_with = [&](std::vector<Letter> replacement) {
                Word next(w.begin(), w.begin() + static_cast<long>(k));
                for (Letter l : replacement) push_letter(next, l);
                next.insert(next.end(), w.begin() + static_cast<long>(k) + 2, w.end());
                return next;
            };
            if (u.kind == Letter::Kind::radius && v.kind == Letter::Kind::radius) {
                work.emplace_back(coeff, rest_with({{Letter::Kind::radius, 0, u.power + v.power}}));
            } else if (u.kind == v.kind) {
                if (u.kind == Letter::Kind::refl && u.index == v.index) {
                    work.emplace_back(coeff, rest_with({}));
                } else {
                    work.emplace_back(coeff, rest_with({v, u}));
                }
            } else if (u.kind == Letter::Kind::deriv && v.kind == Letter::Kind::coord) {
                work.emplace_back(coeff, rest_with({v, u}));
                if (u.index == v.index) {
                    work.emplace_back(coeff, rest_with({}));
                    work.emplace_back(coeff * (Scalar::mu(d, u.index) * Scalar::integer(d, 2)),
                                      rest_with({{Letter::Kind::refl, u.index, 0}}));
                }
            } else if (u.kind == Letter::Kind::deriv && v.kind == Letter::Kind::radius) {
                work.emplace_back(coeff, rest_with({v, u}));
                work.emplace_back(coeff * Scalar::integer(d, v.power),
                                  rest_with({{Letter::Kind::coord, u.index, 0},
                                             {Letter::Kind::radius, 0, v.power - 2}}));
            } else if (u.kind == Letter::Kind::refl && v.kind == Letter::Kind::coord) {
                work.emplace_back(u.index == v.index ? -coeff : coeff, rest_with({v, u}));
            } else if (u.kind == Letter::Kind::refl && v.kind == Letter::Kind::deriv) {
                work.emplace_back(u.index == v.index ? -coeff : coeff, rest_with({v, u}));
            } else if (u.kind == Letter::Kind::refl && v.kind == Letter::Kind::radius) {
                work.emplace_back(coeff, rest_with({v, u}));
            } else if (u.kind == Letter::Kind::radius && v.kind == Letter::Kind::coord) {
                work.emplace_back(coeff, rest_with({v, u}));
            } else {
                throw std::logic_error("unhandled letter pair");
            }
            break;
        }
        if (!reduced) result.op.add_term(to_monomial(w, d), coeff);
    }
    return result;
}

}  // namespace dunkl::testsupport
