#include "dunkl/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "dunkl/funcspace.hpp"
#include "dunkl/version.hpp"

namespace dunkl {

namespace {

constexpr int kOracleFunctions = 20;

using Residuals = std::vector<Operator>;

Scalar im(int d) { return Scalar::imaginary_unit(d); }
Scalar rat(int d, long p, long q = 1) { return Scalar::rational(d, Rational(p, q)); }
Scalar energy2(int d) { return Scalar::energy(d) * Scalar::integer(d, 2); }

Operator one(int d) { return Operator::one(d); }
Operator num(int d, long p, long q = 1) { return Operator::scalar(rat(d, p, q)); }
Operator X(int d, int i) { return Operator::coordinate(d, i); }
Operator D(int d, int i) { return Operator::derivative(d, i); }
Operator R(int d, int i) { return Operator::reflection(d, i); }
Operator Rk(int d, int k) { return Operator::radius(d, k); }

Operator gen(GenKind k, int d) { return build(GeneratorId::plain(k), ModelConfig::symbolic(d)); }
Operator gen(GenKind k, int i, int d) {
    return build(GeneratorId::indexed(k, i), ModelConfig::symbolic(d));
}

// J with antisymmetric completion; zero on a repeated index.
Operator Jop(int i, int j, int d) {
    if (i == j) return Operator::zero(d);
    if (i > j) return -build(GeneratorId::pair(GenKind::J, j, i), ModelConfig::symbolic(d));
    return build(GeneratorId::pair(GenKind::J, i, j), ModelConfig::symbolic(d));
}

// L with a zero diagonal, for the structure-relation right-hand side.
Operator Lop(int a, int b, int d) {
    if (a == b) return Operator::zero(d);
    return build_so_generator(a, b, ModelConfig::symbolic(d));
}

Operator metric(int a, int b, int d) { return build_metric(a, b, ModelConfig::symbolic(d)); }

// 1 + 2 mu_k R_k
Operator refl_factor(int k, int d) {
    return one(d) + R(d, k) * (Scalar::mu(d, k) * Scalar::integer(d, 2));
}

Operator lap(int d) { return laplacian(ModelConfig::symbolic(d)); }
Operator eul(int d) { return euler(ModelConfig::symbolic(d)); }
Operator mur(int d) { return weighted_reflection_sum(ModelConfig::symbolic(d)); }
Operator xsq(int d) { return coordinate_square_sum(ModelConfig::symbolic(d)); }

// x_i (H - E)
Operator x_shift(int i, int d) {
    return X(d, i) * (gen(GenKind::H, d) - Operator::scalar(Scalar::energy(d)));
}

// -x^2 D^2 + (x.D)^2 + x.D (d - 2 + 2 sum mu_i R_i)
Operator jsq_closed_display(int d) {
    return -(xsq(d) * lap(d)) + pow(eul(d), 2) +
           eul(d) * (num(d, d - 2) + mur(d) * Scalar::integer(d, 2));
}

// The printed expansion of B_1^2.
Operator b1_sq_display(int d) {
    const Operator D2 = lap(d);
    const Operator D4 = D2 * D2;
    const Operator e = eul(d);
    const Operator m = mur(d);
    const Operator x1 = X(d, 1);
    const Operator d1 = D(d, 1);
    const Operator mu1r1 = R(d, 1) * Scalar::mu(d, 1);
    const Operator sign_sum = m - mu1r1 * Scalar::integer(d, 2);  // -mu_1 R_1 + sum_{j!=1}
    const Operator f1 = refl_factor(1, d);
    const Scalar E = Scalar::energy(d);

    Operator out = pow(x1, 2) * D4 * rat(d, 1, 4);
    out -= (x1 * (e + num(d, d + 1, 2)) * d1 + (e + num(d, d - 1, 2)) * rat(d, 1, 2) +
            pow(x1, 2) * E) *
           D2;
    out -= x1 * d1 * D2 * sign_sum;
    out -= (e + num(d, d - 1, 2)) * D2 * mu1r1;
    out -= D2 * m * f1 * rat(d, 1, 2);
    out += (e + num(d, d - 1, 2)) * (e + num(d, d + 1, 2)) * pow(d1, 2);
    out += (e * Scalar::integer(d, 2) + num(d, d)) * pow(d1, 2) * m;
    out += pow(d1, 2) * pow(m, 2);
    out += x1 * (e + num(d, d - 1, 2)) * d1 * (E * Scalar::integer(d, 2));
    out += x1 * d1 * sign_sum * (E * Scalar::integer(d, 2));
    out += (e + num(d, d - 1, 2) + m) * f1 * E;
    out += pow(x1, 2) * (E * E);
    return out;
}

// The printed summed form of B^2.
Operator bsq_sum_display(int d) {
    const Operator D2 = lap(d);
    const Operator D4 = D2 * D2;
    const Operator e = eul(d);
    const Operator m = mur(d);
    const Operator x2 = xsq(d);
    const Scalar E = Scalar::energy(d);

    Operator inner = x2 * D4;
    inner += (e * Scalar::integer(d, 2) + num(d, d - 1) - x2 * (E * Scalar::integer(d, 4))) * D2;
    inner += D2 * m * Scalar::integer(d, 2);
    inner += (pow(e, 2) * Scalar::integer(d, 2) + e * Scalar::integer(d, 2 * d - 3) +
              num(d, d * (d - 1), 2)) *
             (E * Scalar::integer(d, 4));
    inner += (e * Scalar::integer(d, 4) + num(d, 2 * d - 1)) * m * (E * Scalar::integer(d, 4));
    inner += pow(m, 2) * (E * Scalar::integer(d, 8));
    inner += x2 * (E * E * Scalar::integer(d, 4));
    return inner * rat(d, 1, 4);
}

// The printed square of the radially scaled wave operator.
Operator ksq_display(int d) {
    const Operator D2 = lap(d);
    const Operator D4 = D2 * D2;
    const Operator core = eul(d) + num(d, d - 1, 2) + mur(d);
    const Operator x2 = xsq(d);
    const Scalar E = Scalar::energy(d);

    Operator inner = x2 * D4;
    inner += (core + x2 * energy2(d)) * D2 * Scalar::integer(d, 2);
    inner += core * (E * Scalar::integer(d, 4));
    inner += x2 * (E * E * Scalar::integer(d, 4));
    return inner * rat(d, 1, 4);
}

// The printed expansion of sum_i x_i (H - E) x_i (H - E).
Operator asq_xx_display(int d) {
    const Operator D2 = lap(d);
    const Operator D4 = D2 * D2;
    const Operator e = eul(d);
    const Operator x2 = xsq(d);
    const Scalar E = Scalar::energy(d);
    const Scalar al = Scalar::coupling(d);

    Operator out = x2 * D4 * rat(d, 1, 4);
    out += e * D2 * rat(d, 1, 2);
    out += (x2 * D2 + e * Scalar::integer(d, 2) + num(d, d - 1, 2) + mur(d)) * Rk(d, -1) * al;
    out += Operator::scalar(al * al);
    out += (x2 * D2 + e + Rk(d, 1) * (al * Scalar::integer(d, 2))) * E;
    out += x2 * (E * E);
    return out;
}

// The printed expansion of B . x(H-E) + x(H-E) . B.
Operator asq_bx_display(int d) {
    const Operator D2 = lap(d);
    const Operator D4 = D2 * D2;
    const Operator e = eul(d);
    const Operator m = mur(d);
    const Operator x2 = xsq(d);
    const Scalar E = Scalar::energy(d);
    const Scalar al = Scalar::coupling(d);

    const Operator block =
        (e * Scalar::integer(d, 2) + num(d, d, 2) + m) * (num(d, d - 1, 2) + m);
    Operator out = x2 * D4 * rat(d, 1, 2);
    out -= (pow(e, 2) + block) * D2;
    out += (x2 * D2 - pow(e, 2) * Scalar::integer(d, 2) - block * Scalar::integer(d, 2)) *
           Rk(d, -1) * al;
    out += (-(pow(e, 2) * Scalar::integer(d, 2)) - block * Scalar::integer(d, 2) -
            Rk(d, 1) * (al * Scalar::integer(d, 2))) *
           E;
    out -= x2 * (E * E * Scalar::integer(d, 2));
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& id, int d) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
        for (int k = 0; k < 8; ++k) {
            h ^= (v >> (8 * k)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(seed);
    for (char c : id) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    mix(static_cast<std::uint64_t>(d));
    return h;
}

void add(std::vector<IdentitySpec>& cat, std::string id, std::vector<int> dims,
         std::function<Residuals(int)> f, bool expect_nonzero = false) {
    cat.push_back({std::move(id), std::move(dims), std::move(f), expect_nonzero, true});
}

std::vector<IdentitySpec> make_catalog() {
    std::vector<IdentitySpec> cat;
    const std::vector<int> all{1, 2, 3, 4};
    const std::vector<int> pairs{2, 3, 4};
    const std::vector<int> triples{3, 4};
    const std::vector<int> heavy{1, 2, 3};

    // Defining relations of the deformed derivative algebra.
    add(cat, "DNK.DX", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                rs.push_back(commutator(D(d, i), X(d, j)) -
                             (i == j ? refl_factor(i, d) : Operator::zero(d)));
        return rs;
    });
    add(cat, "DNK.RX", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i) rs.push_back(anticommutator(R(d, i), X(d, i)));
        return rs;
    });
    add(cat, "DNK.RD", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i) rs.push_back(anticommutator(R(d, i), D(d, i)));
        return rs;
    });
    add(cat, "DNK.RXC", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                if (i != j) rs.push_back(commutator(R(d, i), X(d, j)));
        return rs;
    });
    add(cat, "DNK.RDC", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                if (i != j) rs.push_back(commutator(R(d, i), D(d, j)));
        return rs;
    });
    add(cat, "DNK.RRC", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) rs.push_back(commutator(R(d, i), R(d, j)));
        return rs;
    });

    // The scale/inversion triple closes on itself.
    add(cat, "SO21.1", all, [](int d) {
        return Residuals{commutator(gen(GenKind::Gamma0, d), gen(GenKind::GammaD1, d)) -
                         gen(GenKind::T, d) * im(d)};
    });
    add(cat, "SO21.2", all, [](int d) {
        return Residuals{commutator(gen(GenKind::Gamma0, d), gen(GenKind::T, d)) +
                         gen(GenKind::GammaD1, d) * im(d)};
    });
    add(cat, "SO21.3", all, [](int d) {
        return Residuals{commutator(gen(GenKind::GammaD1, d), gen(GenKind::T, d)) +
                         gen(GenKind::Gamma0, d) * im(d)};
    });

    add(cat, "JSQ", all, [](int d) {
        return Residuals{gen(GenKind::Jsq, d) - jsq_closed_display(d)};
    });
    add(cat, "CAS", all, [](int d) {
        const Operator shift = (num(d, d - 3, 2) + mur(d)) * (num(d, d - 1, 2) + mur(d));
        return Residuals{gen(GenKind::Qsq, d) - gen(GenKind::Jsq, d) - shift};
    });

    // Brackets of the triple with the four vector families.
    add(cat, "MIX.1", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) {
                rs.push_back(commutator(gen(GenKind::Gamma0, d), Jop(i, j, d)));
                rs.push_back(commutator(gen(GenKind::GammaD1, d), Jop(i, j, d)));
                rs.push_back(commutator(gen(GenKind::T, d), Jop(i, j, d)));
            }
        return rs;
    });
    add(cat, "MIX.2", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i) {
            rs.push_back(commutator(gen(GenKind::Gamma0, d), gen(GenKind::A, i, d)));
            rs.push_back(commutator(gen(GenKind::GammaD1, d), gen(GenKind::M, i, d)));
            rs.push_back(commutator(gen(GenKind::T, d), gen(GenKind::Gamma, i, d)));
        }
        return rs;
    });
    add(cat, "MIX.3", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i) {
            const Operator gi = gen(GenKind::Gamma, i, d) * im(d);
            rs.push_back(commutator(gen(GenKind::GammaD1, d), gen(GenKind::A, i, d)) - gi);
            rs.push_back(commutator(gen(GenKind::Gamma0, d), gen(GenKind::M, i, d)) + gi);
        }
        return rs;
    });
    add(cat, "MIX.4", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i) {
            const Operator mi = gen(GenKind::M, i, d) * im(d);
            rs.push_back(commutator(gen(GenKind::T, d), gen(GenKind::A, i, d)) - mi);
            rs.push_back(commutator(gen(GenKind::Gamma0, d), gen(GenKind::Gamma, i, d)) - mi);
        }
        return rs;
    });
    add(cat, "MIX.5", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i) {
            const Operator ai = gen(GenKind::A, i, d) * im(d);
            rs.push_back(commutator(gen(GenKind::T, d), gen(GenKind::M, i, d)) - ai);
            rs.push_back(commutator(gen(GenKind::GammaD1, d), gen(GenKind::Gamma, i, d)) - ai);
        }
        return rs;
    });

    // Vector-vector brackets that keep their undeformed form.
    add(cat, "SAME.AA", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                rs.push_back(commutator(gen(GenKind::A, i, d), gen(GenKind::A, j, d)) -
                             Jop(i, j, d) * im(d));
        return rs;
    });
    add(cat, "SAME.MM", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                rs.push_back(commutator(gen(GenKind::M, i, d), gen(GenKind::M, j, d)) +
                             Jop(i, j, d) * im(d));
        return rs;
    });
    add(cat, "SAME.GG", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                rs.push_back(commutator(gen(GenKind::Gamma, i, d), gen(GenKind::Gamma, j, d)) +
                             Jop(i, j, d) * im(d));
        return rs;
    });

    // Brackets picking up a reflection factor on the right.
    auto jj_residuals = [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                for (int k = 1; k <= d; ++k)
                    for (int l = k + 1; l <= d; ++l) {
                        Operator rhs = Operator::zero(d);
                        if (i == k) rhs += Jop(j, l, d) * refl_factor(k, d);
                        if (i == l) rhs += Jop(k, j, d) * refl_factor(l, d);
                        if (j == k) rhs += Jop(l, i, d) * refl_factor(k, d);
                        if (j == l) rhs += Jop(i, k, d) * refl_factor(l, d);
                        rs.push_back(commutator(Jop(i, j, d), Jop(k, l, d)) - rhs * im(d));
                    }
        return rs;
    };
    add(cat, "DEF.JJ", pairs, jj_residuals);
    auto deformed_vector = [](GenKind kind) {
        return [kind](int d) {
            Residuals rs;
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j)
                    for (int k = 1; k <= d; ++k) {
                        Operator rhs = Operator::zero(d);
                        if (i == k) rhs += gen(kind, j, d) * refl_factor(k, d);
                        if (j == k) rhs -= gen(kind, i, d) * refl_factor(k, d);
                        rs.push_back(commutator(Jop(i, j, d), gen(kind, k, d)) - rhs * im(d));
                    }
            return rs;
        };
    };
    add(cat, "DEF.JA", pairs, deformed_vector(GenKind::A));
    add(cat, "DEF.JM", pairs, deformed_vector(GenKind::M));
    add(cat, "DEF.JG", pairs, deformed_vector(GenKind::Gamma));
    add(cat, "DEF.AM", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                Operator rhs = i == j ? gen(GenKind::T, d) * refl_factor(i, d) * im(d)
                                      : Operator::zero(d);
                rs.push_back(commutator(gen(GenKind::A, i, d), gen(GenKind::M, j, d)) - rhs);
            }
        return rs;
    });
    add(cat, "DEF.AG", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                Operator rhs = i == j ? gen(GenKind::GammaD1, d) * refl_factor(i, d) * im(d)
                                      : Operator::zero(d);
                rs.push_back(commutator(gen(GenKind::A, i, d), gen(GenKind::Gamma, j, d)) - rhs);
            }
        return rs;
    });
    add(cat, "DEF.MG", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                Operator rhs = i == j ? gen(GenKind::Gamma0, d) * refl_factor(i, d) * im(d)
                                      : Operator::zero(d);
                rs.push_back(commutator(gen(GenKind::M, i, d), gen(GenKind::Gamma, j, d)) - rhs);
            }
        return rs;
    });

    // Reflection (anti)commutation through the generator families.
    add(cat, "REFL.SC", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i) {
            rs.push_back(commutator(R(d, i), gen(GenKind::Gamma0, d)));
            rs.push_back(commutator(R(d, i), gen(GenKind::GammaD1, d)));
            rs.push_back(commutator(R(d, i), gen(GenKind::T, d)));
        }
        return rs;
    });
    add(cat, "REFL.J.C", triples, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                for (int k = j + 1; k <= d; ++k)
                    if (i != j && i != k) rs.push_back(commutator(R(d, i), Jop(j, k, d)));
        return rs;
    });
    add(cat, "REFL.J.A", pairs, [](int d) {
        Residuals rs;
        for (int j = 1; j <= d; ++j)
            for (int k = j + 1; k <= d; ++k) {
                rs.push_back(anticommutator(R(d, j), Jop(j, k, d)));
                rs.push_back(anticommutator(R(d, k), Jop(j, k, d)));
            }
        return rs;
    });
    add(cat, "REFL.VEC.C", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                if (i == j) continue;
                rs.push_back(commutator(R(d, i), gen(GenKind::A, j, d)));
                rs.push_back(commutator(R(d, i), gen(GenKind::M, j, d)));
                rs.push_back(commutator(R(d, i), gen(GenKind::Gamma, j, d)));
            }
        return rs;
    });
    add(cat, "REFL.VEC.A", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i) {
            rs.push_back(anticommutator(R(d, i), gen(GenKind::A, i, d)));
            rs.push_back(anticommutator(R(d, i), gen(GenKind::M, i, d)));
            rs.push_back(anticommutator(R(d, i), gen(GenKind::Gamma, i, d)));
        }
        return rs;
    });

    // Full structure relation with the operator-valued metric, all pairs.
    add(cat, "SODP2", heavy, [](int d) {
        const int n = d + 3;
        Residuals rs;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    for (int e = c + 1; e <= n; ++e) {
                        Operator rhs = Operator::zero(d);
                        if (a == c) rhs += Lop(b, e, d) * metric(a, c, d);
                        if (a == e) rhs += Lop(c, b, d) * metric(a, e, d);
                        if (b == c) rhs += Lop(e, a, d) * metric(b, c, d);
                        if (b == e) rhs += Lop(a, c, d) * metric(b, e, d);
                        rs.push_back(commutator(Lop(a, b, d), Lop(c, e, d)) - rhs * im(d));
                    }
        return rs;
    });
    add(cat, "SODP2.R", heavy, [](int d) {
        const int n = d + 3;
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    if (a == i || b == i)
                        rs.push_back(anticommutator(R(d, i), Lop(a, b, d)));
                    else
                        rs.push_back(commutator(R(d, i), Lop(a, b, d)));
                }
        return rs;
    });

    // Self-adjointness under the radially weighted pairing, and the
    // recorded deviation of the unweighted pairing.
    add(cat, "ADJ", heavy, [](int d) {
        const int n = d + 3;
        Residuals rs;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                const Operator l = Lop(a, b, d);
                rs.push_back(adjoint(l) - l);
            }
        return rs;
    });
    add(cat, "ADJ.T0", heavy, [](int d) {
        const Operator stated = (eul(d) + num(d, d + 1, 2) + mur(d)) * im(d);
        return Residuals{adjoint_unweighted(gen(GenKind::T, d)) + stated};
    });
    add(cat, "ADJ.T0NE", heavy,
        [](int d) {
            return Residuals{adjoint_unweighted(gen(GenKind::T, d)) - gen(GenKind::T, d)};
        },
        /*expect_nonzero=*/true);

    // The radially scaled wave operator and its integrals of motion.
    add(cat, "STURM.K", all, [](int d) {
        const Operator combo = gen(GenKind::Gamma0, d) * (rat(d, 1, 2) - rat(d, 1, 1) * Scalar::energy(d)) +
                               gen(GenKind::GammaD1, d) * (rat(d, 1, 2) + rat(d, 1, 1) * Scalar::energy(d));
        return Residuals{gen(GenKind::K, d) - combo};
    });
    add(cat, "STURM.IOM.J", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                rs.push_back(commutator(Jop(i, j, d), gen(GenKind::K, d)));
        return rs;
    });
    add(cat, "STURM.IOM.B", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            rs.push_back(commutator(gen(GenKind::B, i, d), gen(GenKind::K, d)));
        return rs;
    });
    add(cat, "STURM.B1", all, [](int d) {
        Residuals rs;
        const ModelConfig cfg = ModelConfig::symbolic(d);
        for (int i = 1; i <= d; ++i)
            rs.push_back(gen(GenKind::B, i, d) -
                         build_alternate(GeneratorId::indexed(GenKind::B, i), AltForm::first, cfg));
        return rs;
    });
    add(cat, "STURM.B2", all, [](int d) {
        Residuals rs;
        const ModelConfig cfg = ModelConfig::symbolic(d);
        for (int i = 1; i <= d; ++i)
            rs.push_back(gen(GenKind::B, i, d) -
                         build_alternate(GeneratorId::indexed(GenKind::B, i), AltForm::second, cfg));
        return rs;
    });
    add(cat, "TYPO.B", all,
        [](int d) {
            Residuals rs;
            const ModelConfig cfg = ModelConfig::symbolic(d);
            for (int i = 1; i <= d; ++i)
                rs.push_back(gen(GenKind::B, i, d) -
                             build_alternate(GeneratorId::indexed(GenKind::B, i),
                                             AltForm::first_with_derivative_typo, cfg));
            return rs;
        },
        /*expect_nonzero=*/true);

    add(cat, "COMB.JJ", pairs, jj_residuals);
    add(cat, "COMB.JB", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                for (int k = 1; k <= d; ++k) {
                    Operator rhs = Operator::zero(d);
                    if (i == k) rhs += gen(GenKind::B, j, d) * refl_factor(k, d);
                    if (j == k) rhs -= gen(GenKind::B, i, d) * refl_factor(k, d);
                    rs.push_back(commutator(Jop(i, j, d), gen(GenKind::B, k, d)) - rhs * im(d));
                }
        return rs;
    });
    add(cat, "COMB.BB", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                rs.push_back(commutator(gen(GenKind::B, i, d), gen(GenKind::B, j, d)) +
                             Jop(i, j, d) * (im(d) * energy2(d)));
        return rs;
    });
    add(cat, "COMB.RB.C", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                if (i != j) rs.push_back(commutator(R(d, i), gen(GenKind::B, j, d)));
        return rs;
    });
    add(cat, "COMB.RB.A", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            rs.push_back(anticommutator(R(d, i), gen(GenKind::B, i, d)));
        return rs;
    });
    add(cat, "CYC.B", triples, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                for (int k = j + 1; k <= d; ++k)
                    rs.push_back(Jop(i, j, d) * gen(GenKind::B, k, d) +
                                 Jop(j, k, d) * gen(GenKind::B, i, d) +
                                 Jop(k, i, d) * gen(GenKind::B, j, d));
        return rs;
    });

    // The squared length of B, with the printed intermediate steps.
    add(cat, "BSQ.B1", all, [](int d) {
        return Residuals{pow(gen(GenKind::B, 1, d), 2) - b1_sq_display(d)};
    });
    add(cat, "BSQ.SUM", all, [](int d) {
        Operator bsq = Operator::zero(d);
        for (int i = 1; i <= d; ++i) bsq += pow(gen(GenKind::B, i, d), 2);
        return Residuals{bsq - bsq_sum_display(d)};
    });
    add(cat, "BSQ.K2", all, [](int d) {
        return Residuals{pow(gen(GenKind::K, d), 2) - ksq_display(d)};
    });
    add(cat, "BSQ", all, [](int d) {
        Operator bsq = Operator::zero(d);
        for (int i = 1; i <= d; ++i) bsq += pow(gen(GenKind::B, i, d), 2);
        const Operator shift = gen(GenKind::Jsq, d) + pow(num(d, d - 1, 2) + mur(d), 2);
        return Residuals{bsq - pow(gen(GenKind::K, d), 2) - shift * energy2(d)};
    });

    // Position representation: commutation with the Hamiltonian.
    add(cat, "SCH.XH", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            rs.push_back(commutator(X(d, i), gen(GenKind::H, d)) - D(d, i));
        return rs;
    });
    add(cat, "SCH.BR", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            rs.push_back(commutator(gen(GenKind::B, i, d), Rk(d, -1)) * Rk(d, 1) + D(d, i));
        return rs;
    });
    add(cat, "SCH.JH", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                rs.push_back(commutator(Jop(i, j, d), gen(GenKind::H, d)));
        return rs;
    });
    add(cat, "SCH.AH", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            rs.push_back(commutator(gen(GenKind::Atilde, i, d), gen(GenKind::H, d)));
        return rs;
    });

    // Radial helper brackets.
    add(cat, "HLP.1", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            rs.push_back(commutator(D(d, i), Rk(d, -1)) + X(d, i) * Rk(d, -3));
        return rs;
    });
    add(cat, "HLP.2", all, [](int d) {
        const Operator stated =
            Rk(d, -3) * (eul(d) + num(d, d - 3, 2) + mur(d)) * Scalar::integer(d, 2);
        return Residuals{commutator(lap(d), Rk(d, -1)) + stated};
    });
    add(cat, "HLP.3", all, [](int d) {
        return Residuals{commutator(eul(d), Rk(d, -1)) + Rk(d, -1)};
    });

    // The conserved vector in position representation.
    add(cat, "COMA.JA", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                for (int k = 1; k <= d; ++k) {
                    Operator rhs = Operator::zero(d);
                    if (i == k) rhs += gen(GenKind::Atilde, j, d) * refl_factor(k, d);
                    if (j == k) rhs -= gen(GenKind::Atilde, i, d) * refl_factor(k, d);
                    rs.push_back(commutator(Jop(i, j, d), gen(GenKind::Atilde, k, d)) -
                                 rhs * im(d));
                }
        return rs;
    });
    add(cat, "COMA.AA", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                rs.push_back(commutator(gen(GenKind::Atilde, i, d), gen(GenKind::Atilde, j, d)) +
                             gen(GenKind::H, d) * Jop(i, j, d) * (im(d) * Scalar::integer(d, 2)));
        return rs;
    });
    add(cat, "COMA.XX", pairs, [](int d) {
        Residuals rs;
        const Operator h_shift = gen(GenKind::H, d) - Operator::scalar(Scalar::energy(d));
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                rs.push_back(commutator(x_shift(i, d), x_shift(j, d)) +
                             Jop(i, j, d) * h_shift * im(d));
        return rs;
    });
    add(cat, "COMA.MIX", pairs, [](int d) {
        Residuals rs;
        const Operator h_shift = gen(GenKind::H, d) - Operator::scalar(Scalar::energy(d));
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                rs.push_back(commutator(gen(GenKind::B, i, d), x_shift(j, d)) +
                             commutator(x_shift(i, d), gen(GenKind::B, j, d)) +
                             Jop(i, j, d) * h_shift * im(d));
        return rs;
    });
    add(cat, "COMA.BX", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                Operator rhs = -Jop(i, j, d) * im(d);
                if (i == j) rhs += gen(GenKind::T, d) * refl_factor(i, d) * im(d);
                rs.push_back(commutator(gen(GenKind::B, i, d), X(d, j)) - rhs);
            }
        return rs;
    });
    add(cat, "REFA.C", pairs, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                if (i != j) rs.push_back(commutator(R(d, i), gen(GenKind::Atilde, j, d)));
        return rs;
    });
    add(cat, "REFA.A", all, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            rs.push_back(anticommutator(R(d, i), gen(GenKind::Atilde, i, d)));
        return rs;
    });
    add(cat, "CYC.A", triples, [](int d) {
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                for (int k = j + 1; k <= d; ++k)
                    rs.push_back(Jop(i, j, d) * gen(GenKind::Atilde, k, d) +
                                 Jop(j, k, d) * gen(GenKind::Atilde, i, d) +
                                 Jop(k, i, d) * gen(GenKind::Atilde, j, d));
        return rs;
    });

    // The squared length of the conserved vector, with the printed steps.
    add(cat, "ASQ.XX", heavy, [](int d) {
        Operator lhs = Operator::zero(d);
        for (int i = 1; i <= d; ++i) lhs += x_shift(i, d) * x_shift(i, d);
        return Residuals{lhs - asq_xx_display(d)};
    });
    add(cat, "ASQ.BX", heavy, [](int d) {
        Operator lhs = Operator::zero(d);
        for (int i = 1; i <= d; ++i)
            lhs += gen(GenKind::B, i, d) * x_shift(i, d) + x_shift(i, d) * gen(GenKind::B, i, d);
        return Residuals{lhs - asq_bx_display(d)};
    });
    add(cat, "ASQ.STEP", heavy, [](int d) {
        const Operator sum3 = bsq_sum_display(d) + asq_xx_display(d) + asq_bx_display(d);
        const Operator bracket = jsq_closed_display(d) + pow(num(d, d - 1, 2) + mur(d), 2);
        const Operator rhs =
            bracket * (-lap(d) - Rk(d, -1) * (Scalar::coupling(d) * Scalar::integer(d, 2))) +
            Operator::scalar(Scalar::coupling(d) * Scalar::coupling(d));
        return Residuals{sum3 - rhs};
    });
    add(cat, "ASQ", heavy, [](int d) {
        Operator asq = Operator::zero(d);
        for (int i = 1; i <= d; ++i) asq += pow(gen(GenKind::Atilde, i, d), 2);
        const Operator shift = gen(GenKind::Jsq, d) + pow(num(d, d - 1, 2) + mur(d), 2);
        const Operator rhs = gen(GenKind::H, d) * shift * Scalar::integer(d, 2) +
                             Operator::scalar(Scalar::coupling(d) * Scalar::coupling(d));
        return Residuals{asq - rhs};
    });

    // Vanishing deformation: all reflection factors collapse.
    add(cat, "RED.AA", {3}, [](int d) {
        const ParamBindings mu0 = ParamBindings::all_mu(d, Rational(0));
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) {
                const Operator res =
                    commutator(gen(GenKind::Atilde, i, d), gen(GenKind::Atilde, j, d)) +
                    gen(GenKind::H, d) * Jop(i, j, d) * (im(d) * Scalar::integer(d, 2));
                rs.push_back(substitute(res, mu0));
            }
        return rs;
    });
    add(cat, "RED.CYC", {3}, [](int d) {
        const ParamBindings mu0 = ParamBindings::all_mu(d, Rational(0));
        Residuals rs;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                for (int k = j + 1; k <= d; ++k) {
                    const Operator res = Jop(i, j, d) * gen(GenKind::Atilde, k, d) +
                                         Jop(j, k, d) * gen(GenKind::Atilde, i, d) +
                                         Jop(k, i, d) * gen(GenKind::Atilde, j, d);
                    rs.push_back(substitute(res, mu0));
                }
        return rs;
    });
    add(cat, "RED.ASQ", {3}, [](int d) {
        const ParamBindings mu0 = ParamBindings::all_mu(d, Rational(0));
        Operator asq = Operator::zero(d);
        for (int i = 1; i <= d; ++i) asq += pow(gen(GenKind::Atilde, i, d), 2);
        const Operator rhs = gen(GenKind::H, d) * (gen(GenKind::Jsq, d) + one(d)) *
                                 Scalar::integer(d, 2) +
                             Operator::scalar(Scalar::coupling(d) * Scalar::coupling(d));
        return Residuals{substitute(asq - rhs, mu0)};
    });

    return cat;
}

IdentitySpec corrupted_fixture() {
    IdentitySpec spec;
    spec.id = "FIXTURE.CORRUPT";
    spec.dims = {1, 2, 3, 4};
    spec.residuals = [](int d) {
        // Wrong sign on the right-hand side; the residual is -2i GammaD1.
        return Residuals{commutator(gen(GenKind::Gamma0, d), gen(GenKind::T, d)) -
                         gen(GenKind::GammaD1, d) * im(d)};
    };
    return spec;
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass_syntactic: return "pass-syntactic";
        case CheckStatus::pass_oracle: return "pass-oracle";
        case CheckStatus::fail: return "fail";
    }
    return "unknown";
}

bool VerificationReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.passed()) return false;
    return true;
}

const std::vector<IdentitySpec>& identity_catalog() {
    static const std::vector<IdentitySpec> catalog = make_catalog();
    return catalog;
}

bool oracle_check(const Operator& x, int n, std::uint64_t seed) {
    if (n < 1) throw UsageError("oracle needs at least one test function");
    if (x.is_zero()) return true;
    const auto functions = random_basis(x.dim(), n, seed);
    for (const auto& f : functions)
        if (!apply(x, f).is_zero()) return false;
    return true;
}

ReportEntry run_identity(const IdentitySpec& spec, int d, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    ReportEntry entry;
    entry.id = spec.id;
    entry.d = d;
    entry.expected_nonzero = spec.expect_nonzero;

    const Residuals residuals = spec.residuals(d);
    std::size_t syntactic = 0;
    for (const auto& r : residuals) syntactic += r.term_count();
    entry.syntactic_terms = syntactic;

    const std::uint64_t entry_seed = mix_seed(seed, spec.id, d);
    if (!spec.expect_nonzero) {
        if (syntactic == 0) {
            entry.status = CheckStatus::pass_syntactic;
        } else {
            bool ok = spec.oracle_fallback;
            if (ok) {
                for (const auto& r : residuals) {
                    if (!oracle_check(r, kOracleFunctions, entry_seed)) {
                        ok = false;
                        break;
                    }
                }
            }
            entry.status = ok ? CheckStatus::pass_oracle : CheckStatus::fail;
            entry.residual_terms = ok ? 0 : syntactic;
        }
    } else {
        // The mismatch must be witnessed: nonzero form and a test function
        // with a nonzero image, for every instance.
        bool all_witnessed = true;
        for (const auto& r : residuals) {
            if (r.is_zero() || oracle_check(r, kOracleFunctions, entry_seed)) {
                all_witnessed = false;
                break;
            }
        }
        entry.status = all_witnessed ? CheckStatus::pass_oracle : CheckStatus::fail;
        entry.residual_terms = syntactic;
    }

    const auto stop = std::chrono::steady_clock::now();
    entry.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return entry;
}

VerificationReport run_suite(const std::vector<int>& dims, std::uint64_t seed,
                             const std::string& filter, bool parallel, bool inject_failure) {
    if (dims.empty()) throw UsageError("no dimensions requested");
    std::vector<IdentitySpec> catalog = identity_catalog();
    if (inject_failure) catalog.push_back(corrupted_fixture());

    if (!filter.empty()) {
        const bool known = std::any_of(catalog.begin(), catalog.end(), [&](const IdentitySpec& s) {
            return s.id.rfind(filter, 0) == 0;
        });
        if (!known) throw UsageError("unknown identity filter prefix: " + filter);
    }

    std::vector<std::pair<const IdentitySpec*, int>> jobs;
    for (const auto& spec : catalog) {
        if (!filter.empty() && spec.id.rfind(filter, 0) != 0) continue;
        for (int d : spec.dims)
            if (std::find(dims.begin(), dims.end(), d) != dims.end())
                jobs.emplace_back(&spec, d);
    }
    std::sort(jobs.begin(), jobs.end(), [](const auto& a, const auto& b) {
        if (a.first->id != b.first->id) return a.first->id < b.first->id;
        return a.second < b.second;
    });

    std::vector<ReportEntry> entries(jobs.size());
    const unsigned workers =
        parallel ? std::max(1u, std::min(std::thread::hardware_concurrency(), 8u)) : 1u;
    if (workers > 1 && jobs.size() > 1) {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_guard;
        auto work = [&] {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= jobs.size()) return;
                try {
                    entries[k] = run_identity(*jobs[k].first, jobs[k].second, seed);
                } catch (...) {
                    std::scoped_lock lock(failure_guard);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    } else {
        for (std::size_t k = 0; k < jobs.size(); ++k)
            entries[k] = run_identity(*jobs[k].first, jobs[k].second, seed);
    }

    VerificationReport report;
    report.suite = filter.empty() ? "identity-catalog" : "identity-catalog/" + filter;
    report.dims = dims;
    report.seed = seed;
    report.version = kVersion;
    report.entries = std::move(entries);
    return report;
}

ReportEntry associativity_fuzz(int d, int trials, std::uint64_t seed) {
    if (trials < 1) throw UsageError("need at least one trial");
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(mix_seed(seed, "ENGINE.ASSOC", d));
    auto below = [&rng](std::uint64_t n) { return rng() % n; };
    auto random_monomial = [&]() {
        Monomial m(d);
        for (int i = 0; i < d; ++i) {
            m.x_exp[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(below(3));
            m.d_exp[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(below(3));
        }
        m.r_pow = static_cast<int>(below(7)) - 3;
        m.refl = static_cast<std::uint32_t>(below(1ull << d));
        return m;
    };
    std::size_t failures = 0;
    for (int t = 0; t < trials; ++t) {
        const Operator a = Operator::monomial(random_monomial());
        const Operator b = Operator::monomial(random_monomial());
        const Operator c = Operator::monomial(random_monomial());
        if ((a * b) * c != a * (b * c)) ++failures;
    }
    ReportEntry entry;
    entry.id = "ENGINE.ASSOC";
    entry.d = d;
    entry.status = failures == 0 ? CheckStatus::pass_syntactic : CheckStatus::fail;
    entry.residual_terms = failures;
    entry.syntactic_terms = failures;
    const auto stop = std::chrono::steady_clock::now();
    entry.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return entry;
}

VerificationReport reduction_check(std::uint64_t seed) { return run_suite({3}, seed, "RED"); }

std::string to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["suite"] = report.suite;
    j["dims"] = report.dims;
    j["seed"] = report.seed;
    j["version"] = report.version;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : report.entries) {
        j["entries"].push_back({{"id", e.id},
                                {"d", e.d},
                                {"status", to_string(e.status)},
                                {"residual_terms", e.residual_terms},
                                {"syntactic_terms", e.syntactic_terms},
                                {"millis", e.millis},
                                {"expected", e.expected_nonzero ? "nonzero" : "zero"}});
    }
    return j.dump(2);
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& e : report.entries) {
        if (!e.passed()) ++failed;
        os << (e.passed() ? "PASS" : "FAIL") << "  ";
        os << e.id;
        for (std::size_t k = e.id.size(); k < 16; ++k) os << ' ';
        os << " d=" << e.d << "  " << to_string(e.status);
        if (e.expected_nonzero) os << " (expected nonzero, " << e.residual_terms << " terms)";
        else if (e.status == CheckStatus::pass_oracle)
            os << " (" << e.syntactic_terms << " formal terms)";
        else if (e.status == CheckStatus::fail)
            os << " (" << e.residual_terms << " residual terms)";
        os << "  " << e.millis << " ms\n";
    }
    os << (failed == 0 ? "all " : "") << report.entries.size() - failed << "/"
       << report.entries.size() << " relations verified";
    if (failed) os << ", " << failed << " FAILED";
    os << "\n";
    return os.str();
}

}  // namespace dunkl
