#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dunkl/funcspace.hpp"
#include "dunkl/generators.hpp"
#include "dunkl/operator.hpp"

namespace dunkl {

/// Abstract syntax tree for the expression grammar:
///
///   expr   := ["-"] term (("+" | "-") term)*
///   term   := factor ("*" factor)*
///   factor := atom ("^" ["-"] integer)?
///   atom   := number | symbol | call | "(" expr ")"
///
/// Numbers are rationals ("2", "3/2"). Symbols: i, E, alpha, mu<k>,
/// x<k>, D<k>, R<k>, r, Gamma0, GammaD1, T, K, H, Jsq, Qsq. Calls:
/// J(i,j), A(i), M(i), G(i), B(i), At(i), L(a,b), comm(e,e), acomm(e,e),
/// adj(e). A negative exponent is allowed on r only. Indices are 1-based
/// and checked against the dimension at parse time.
class Expression {
public:
    struct Node;
    using NodePtr = std::unique_ptr<Node>;

    enum class Kind {
        number,
        imaginary,
        param_mu,
        param_energy,
        param_coupling,
        coordinate,
        derivative,
        reflection,
        radius,
        generator,
        so_generator,
        add,
        sub,
        mul,
        negate,
        power,
        comm,
        acomm,
        adj,
    };

    struct Node {
        Kind kind;
        Rational value;       // number
        int index = 0;        // parameters, atoms
        int index2 = 0;       // so_generator second index
        int power = 0;        // radius, power
        GeneratorId gen{GenKind::T, 0, 0};
        std::vector<NodePtr> children;
    };

    NodePtr root;
    int dim = 0;
};

/// Parses against dimension d; throws ParseError with position info.
Expression parse(const std::string& text, int d);

/// Evaluates to a canonical operator under the given configuration.
Operator evaluate(const Expression& expr, const ModelConfig& cfg);

/// Evaluates a function-valued expression (numbers, parameters, x_i and
/// r powers under + - * ^). Operator-only constructs are usage errors.
RFunction evaluate_function(const Expression& expr, const ModelConfig& cfg);

}  // namespace dunkl
