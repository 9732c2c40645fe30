#pragma once

#include <string>

#include "dunkl/operator.hpp"

namespace dunkl {

/// Model setup: the dimension d and an optional partial binding of the
/// formal parameters mu_1..mu_d, E, alpha to rational values.
struct ModelConfig {
    int dim;
    ParamBindings bindings;

    static ModelConfig symbolic(int dim) { return {dim, ParamBindings::none(dim)}; }
};

enum class GenKind {
    Gamma0,   // (r/2)(-D^2 + 1)
    GammaD1,  // (r/2)(-D^2 - 1)
    T,        // -i (x.D + (d-1)/2 + sum_i mu_i R_i)
    J,        // angular momentum -i (x_i D_j - x_j D_i), needs i, j
    A,        // needs i
    M,        // needs i
    Gamma,    // -i r D_i, needs i
    K,        // -(r/2) D^2 - E r
    H,        // -(1/2) D^2 - alpha / r
    B,        // (1/2)[(1-2E) A_i + (1+2E) M_i], needs i
    Atilde,   // B_i + x_i (H - E), needs i
    Jsq,      // (1/2) sum_ij J_ij^2
    Qsq,      // Gamma0^2 - GammaD1^2 - T^2
};

struct GeneratorId {
    GenKind kind;
    int i = 0;
    int j = 0;

    static GeneratorId plain(GenKind k) { return {k, 0, 0}; }
    static GeneratorId indexed(GenKind k, int i) { return {k, i, 0}; }
    static GeneratorId pair(GenKind k, int i, int j) { return {k, i, j}; }
};

/// The named operator in canonical normal form. Indices are validated
/// against cfg.dim. Symbolic results are cached per (id, dim); bound
/// configurations substitute into the cached symbolic form.
Operator build(const GeneratorId& id, const ModelConfig& cfg);

/// The antisymmetric so-algebra family L_ab, 1 <= a, b <= d+3, a != b:
/// L(i,j)=J_ij, L(i,d+1)=A_i, L(i,d+2)=M_i, L(i,d+3)=Gamma_i,
/// L(d+1,d+2)=T, L(d+1,d+3)=GammaD1, L(d+2,d+3)=Gamma0, L(b,a)=-L(a,b).
Operator build_so_generator(int a, int b, const ModelConfig& cfg);

/// Operator-valued metric: diag(1+2mu_1 R_1, ..., 1+2mu_d R_d, 1, -1, -1),
/// zero off the diagonal.
Operator build_metric(int a, int b, const ModelConfig& cfg);

/// Directly transcribed alternative expressions for B_i and Atilde_i,
/// used to cross-check build(). `second` places the parenthesized factor
/// on the left of D_i instead of the right. `first_with_derivative_typo`
/// replaces the reflection sum by a derivative sum inside B_i; it is kept
/// as a deliberately wrong variant that the suite shows to be different.
enum class AltForm { first, second, first_with_derivative_typo };
Operator build_alternate(const GeneratorId& id, AltForm form, const ModelConfig& cfg);

// Building blocks shared by the generator definitions.
Operator laplacian(const ModelConfig& cfg);                // sum_i D_i^2
Operator euler(const ModelConfig& cfg);                    // sum_i x_i D_i
Operator weighted_reflection_sum(const ModelConfig& cfg);  // sum_i mu_i R_i
Operator coordinate_square_sum(const ModelConfig& cfg);    // sum_i x_i^2

}  // namespace dunkl
