#include "dunkl/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

struct Token {
    enum class Kind { end, number, ident, plus, minus, star, caret, lparen, rparen, comma };
    Kind kind = Kind::end;
    std::string text;
    Rational value;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& current() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            step();
        current_ = Token{};
        current_.line = line_;
        current_.col = col_;
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            current_.kind = Token::Kind::number;
            const std::string num = take_digits();
            std::string den;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                step();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw ParseError("expected digits after '/'", line_, col_);
                den = take_digits();
            }
            current_.value = den.empty() ? Rational(Int(num)) : Rational(Int(num), Int(den));
            current_.text = den.empty() ? num : num + "/" + den;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            current_.kind = Token::Kind::ident;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                current_.text += text_[pos_];
                step();
            }
            return;
        }
        step();
        switch (c) {
            case '+': current_.kind = Token::Kind::plus; return;
            case '-': current_.kind = Token::Kind::minus; return;
            case '*': current_.kind = Token::Kind::star; return;
            case '^': current_.kind = Token::Kind::caret; return;
            case '(': current_.kind = Token::Kind::lparen; return;
            case ')': current_.kind = Token::Kind::rparen; return;
            case ',': current_.kind = Token::Kind::comma; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", current_.line,
                                 current_.col);
        }
    }

    std::string take_digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            step();
        }
        return out;
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

using Node = Expression::Node;
using NodePtr = Expression::NodePtr;
using Kind = Expression::Kind;

NodePtr make(Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
}

class Parser {
public:
    Parser(const std::string& text, int d) : lex_(text), dim_(d) {}

    NodePtr run() {
        NodePtr e = expr();
        if (lex_.current().kind != Token::Kind::end)
            throw ParseError("unexpected trailing input", lex_.current().line,
                             lex_.current().col);
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, lex_.current().line, lex_.current().col);
    }

    bool accept(Token::Kind k) {
        if (lex_.current().kind != k) return false;
        lex_.take();
        return true;
    }

    void expect(Token::Kind k, const char* what) {
        if (!accept(k)) fail(std::string("expected ") + what);
    }

    NodePtr expr() {
        NodePtr lhs;
        if (accept(Token::Kind::minus)) {
            lhs = make(Kind::negate);
            lhs->children.push_back(term());
        } else {
            lhs = term();
        }
        for (;;) {
            Kind op;
            if (accept(Token::Kind::plus))
                op = Kind::add;
            else if (accept(Token::Kind::minus))
                op = Kind::sub;
            else
                return lhs;
            NodePtr n = make(op);
            n->children.push_back(std::move(lhs));
            n->children.push_back(term());
            lhs = std::move(n);
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (accept(Token::Kind::star)) {
            NodePtr n = make(Kind::mul);
            n->children.push_back(std::move(lhs));
            n->children.push_back(factor());
            lhs = std::move(n);
        }
        return lhs;
    }

    int exponent() {
        bool negative = accept(Token::Kind::minus);
        if (lex_.current().kind != Token::Kind::number) fail("expected integer exponent");
        const Token t = lex_.take();
        if (denominator(t.value) != 1) throw ParseError("exponent must be an integer", t.line, t.col);
        const Int num = numerator(t.value);
        if (num > 64) throw ParseError("exponent too large", t.line, t.col);
        const int n = static_cast<int>(num);
        return negative ? -n : n;
    }

    NodePtr factor() {
        NodePtr base = atom();
        if (!accept(Token::Kind::caret)) return base;
        const int line = lex_.current().line;
        const int col = lex_.current().col;
        const int n = exponent();
        if (base->kind == Kind::radius) {
            base->power *= n;
            return base;
        }
        if (n < 0)
            throw ParseError("negative exponent is allowed on r only", line, col);
        NodePtr p = make(Kind::power);
        p->power = n;
        p->children.push_back(std::move(base));
        return p;
    }

    int check_index(int i, int limit, const Token& at) {
        if (i < 1 || i > limit)
            throw ParseError("index out of range for dimension " + std::to_string(dim_), at.line,
                             at.col);
        return i;
    }

    int int_arg() {
        if (lex_.current().kind != Token::Kind::number) fail("expected integer index");
        const Token t = lex_.take();
        if (denominator(t.value) != 1 || numerator(t.value) > 1000)
            throw ParseError("expected small integer index", t.line, t.col);
        return static_cast<int>(numerator(t.value));
    }

    // Trailing decimal index of names like x12, mu3; empty if none.
    static std::optional<int> split_index(const std::string& name, const std::string& prefix) {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        int value = 0;
        for (std::size_t k = prefix.size(); k < name.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
            value = value * 10 + (name[k] - '0');
            if (value > 1000) return std::nullopt;
        }
        return value;
    }

    NodePtr indexed_atom(Kind kind, int index, const Token& at) {
        NodePtr n = make(kind);
        n->index = check_index(index, dim_, at);
        return n;
    }

    NodePtr generator_atom(GeneratorId id) {
        NodePtr n = make(Kind::generator);
        n->gen = id;
        return n;
    }

    NodePtr call(const Token& name) {
        expect(Token::Kind::lparen, "'('");
        const std::string& f = name.text;
        if (f == "comm" || f == "acomm") {
            NodePtr n = make(f == "comm" ? Kind::comm : Kind::acomm);
            n->children.push_back(expr());
            expect(Token::Kind::comma, "','");
            n->children.push_back(expr());
            expect(Token::Kind::rparen, "')'");
            return n;
        }
        if (f == "adj") {
            NodePtr n = make(Kind::adj);
            n->children.push_back(expr());
            expect(Token::Kind::rparen, "')'");
            return n;
        }
        if (f == "J" || f == "L") {
            const int a = int_arg();
            expect(Token::Kind::comma, "','");
            const int b = int_arg();
            expect(Token::Kind::rparen, "')'");
            const int limit = f == "J" ? dim_ : dim_ + 3;
            if (a < 1 || a > limit || b < 1 || b > limit || a == b)
                throw ParseError("invalid index pair for " + f, name.line, name.col);
            if (f == "J") {
                NodePtr n = make(Kind::generator);
                // Antisymmetric completion at the syntax level.
                if (a < b) {
                    n->gen = GeneratorId::pair(GenKind::J, a, b);
                    return n;
                }
                n->gen = GeneratorId::pair(GenKind::J, b, a);
                NodePtr neg = make(Kind::negate);
                neg->children.push_back(std::move(n));
                return neg;
            }
            NodePtr n = make(Kind::so_generator);
            n->index = a;
            n->index2 = b;
            return n;
        }
        GenKind kind;
        if (f == "A")
            kind = GenKind::A;
        else if (f == "M")
            kind = GenKind::M;
        else if (f == "G")
            kind = GenKind::Gamma;
        else if (f == "B")
            kind = GenKind::B;
        else if (f == "At")
            kind = GenKind::Atilde;
        else
            throw ParseError("unknown function '" + f + "'", name.line, name.col);
        const int i = int_arg();
        expect(Token::Kind::rparen, "')'");
        check_index(i, dim_, name);
        return generator_atom(GeneratorId::indexed(kind, i));
    }

    NodePtr atom() {
        const Token t = lex_.current();
        if (accept(Token::Kind::lparen)) {
            NodePtr inner = expr();
            expect(Token::Kind::rparen, "')'");
            return inner;
        }
        if (t.kind == Token::Kind::number) {
            lex_.take();
            NodePtr n = make(Kind::number);
            n->value = t.value;
            return n;
        }
        if (t.kind != Token::Kind::ident) fail("expected an operand");
        lex_.take();
        if (lex_.current().kind == Token::Kind::lparen) return call(t);

        const std::string& s = t.text;
        if (s == "i") return make(Kind::imaginary);
        if (s == "E") return make(Kind::param_energy);
        if (s == "alpha") return make(Kind::param_coupling);
        if (s == "r") {
            NodePtr n = make(Kind::radius);
            n->power = 1;
            return n;
        }
        if (s == "Gamma0") return generator_atom(GeneratorId::plain(GenKind::Gamma0));
        if (s == "GammaD1") return generator_atom(GeneratorId::plain(GenKind::GammaD1));
        if (s == "T") return generator_atom(GeneratorId::plain(GenKind::T));
        if (s == "K") return generator_atom(GeneratorId::plain(GenKind::K));
        if (s == "H") return generator_atom(GeneratorId::plain(GenKind::H));
        if (s == "Jsq") return generator_atom(GeneratorId::plain(GenKind::Jsq));
        if (s == "Qsq") return generator_atom(GeneratorId::plain(GenKind::Qsq));
        if (auto idx = split_index(s, "mu")) {
            NodePtr n = make(Kind::param_mu);
            n->index = check_index(*idx, dim_, t);
            return n;
        }
        if (auto idx = split_index(s, "x")) return indexed_atom(Kind::coordinate, *idx, t);
        if (auto idx = split_index(s, "D")) return indexed_atom(Kind::derivative, *idx, t);
        if (auto idx = split_index(s, "R")) return indexed_atom(Kind::reflection, *idx, t);
        throw ParseError("unknown symbol '" + s + "'", t.line, t.col);
    }

    Lexer lex_;
    int dim_;
};

Operator eval_op(const Node& n, const ModelConfig& sym) {
    const int d = sym.dim;
    switch (n.kind) {
        case Kind::number:
            return Operator::scalar(Scalar::rational(d, n.value));
        case Kind::imaginary:
            return Operator::scalar(Scalar::imaginary_unit(d));
        case Kind::param_mu:
            return Operator::scalar(Scalar::mu(d, n.index));
        case Kind::param_energy:
            return Operator::scalar(Scalar::energy(d));
        case Kind::param_coupling:
            return Operator::scalar(Scalar::coupling(d));
        case Kind::coordinate:
            return Operator::coordinate(d, n.index);
        case Kind::derivative:
            return Operator::derivative(d, n.index);
        case Kind::reflection:
            return Operator::reflection(d, n.index);
        case Kind::radius:
            return n.power == 0 ? Operator::one(d) : Operator::radius(d, n.power);
        case Kind::generator:
            return build(n.gen, sym);
        case Kind::so_generator:
            return build_so_generator(n.index, n.index2, sym);
        case Kind::add:
            return eval_op(*n.children[0], sym) + eval_op(*n.children[1], sym);
        case Kind::sub:
            return eval_op(*n.children[0], sym) - eval_op(*n.children[1], sym);
        case Kind::mul:
            return eval_op(*n.children[0], sym) * eval_op(*n.children[1], sym);
        case Kind::negate:
            return -eval_op(*n.children[0], sym);
        case Kind::power:
            return pow(eval_op(*n.children[0], sym), static_cast<unsigned>(n.power));
        case Kind::comm:
            return commutator(eval_op(*n.children[0], sym), eval_op(*n.children[1], sym));
        case Kind::acomm:
            return anticommutator(eval_op(*n.children[0], sym), eval_op(*n.children[1], sym));
        case Kind::adj:
            return adjoint(eval_op(*n.children[0], sym));
    }
    throw UsageError("unhandled expression node");
}

RFunction eval_fn(const Node& n, int d) {
    switch (n.kind) {
        case Kind::number:
            return RFunction::one(d) * Scalar::rational(d, n.value);
        case Kind::imaginary:
            return RFunction::one(d) * Scalar::imaginary_unit(d);
        case Kind::param_mu:
            return RFunction::one(d) * Scalar::mu(d, n.index);
        case Kind::param_energy:
            return RFunction::one(d) * Scalar::energy(d);
        case Kind::param_coupling:
            return RFunction::one(d) * Scalar::coupling(d);
        case Kind::coordinate:
            return RFunction::coordinate(d, n.index);
        case Kind::radius:
            return RFunction::radius_power(d, n.power);
        case Kind::add:
            return eval_fn(*n.children[0], d) + eval_fn(*n.children[1], d);
        case Kind::sub:
            return eval_fn(*n.children[0], d) - eval_fn(*n.children[1], d);
        case Kind::mul:
            return eval_fn(*n.children[0], d) * eval_fn(*n.children[1], d);
        case Kind::negate:
            return -eval_fn(*n.children[0], d);
        case Kind::power: {
            RFunction base = eval_fn(*n.children[0], d);
            RFunction out = RFunction::one(d);
            for (int k = 0; k < n.power; ++k) out = out * base;
            return out;
        }
        default:
            throw UsageError("expression is not a function (operators are not allowed here)");
    }
}

}  // namespace

Expression parse(const std::string& text, int d) {
    if (d < 1) throw DimensionError("dimension must be at least 1");
    Expression e;
    e.dim = d;
    e.root = Parser(text, d).run();
    return e;
}

Operator evaluate(const Expression& expr, const ModelConfig& cfg) {
    if (!expr.root) throw UsageError("empty expression");
    if (cfg.dim != expr.dim) throw DimensionError("expression parsed for a different dimension");
    const Operator symbolic = eval_op(*expr.root, ModelConfig::symbolic(cfg.dim));
    return cfg.bindings.empty() ? symbolic : substitute(symbolic, cfg.bindings);
}

RFunction evaluate_function(const Expression& expr, const ModelConfig& cfg) {
    if (!expr.root) throw UsageError("empty expression");
    if (cfg.dim != expr.dim) throw DimensionError("expression parsed for a different dimension");
    RFunction f = eval_fn(*expr.root, cfg.dim);
    if (cfg.bindings.empty()) return f;
    XPoly even(cfg.dim);
    for (const auto& [e, c] : f.even_part().terms()) even.add_term(e, c.eval(cfg.bindings));
    XPoly odd(cfg.dim);
    for (const auto& [e, c] : f.odd_radial_part().terms()) odd.add_term(e, c.eval(cfg.bindings));
    return RFunction(std::move(even), std::move(odd), f.denom_exp());
}

}  // namespace dunkl
