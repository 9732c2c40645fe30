#include "dunkl/printing.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace dunkl {

namespace {

std::string rational_str(const Rational& r, RenderFormat format) {
    std::ostringstream os;
    if (format == RenderFormat::latex && denominator(r) != 1) {
        os << (r < 0 ? "-" : "") << "\\tfrac{" << boost::multiprecision::abs(numerator(r))
           << "}{" << denominator(r) << "}";
    } else {
        os << r;
    }
    return os.str();
}

bool gaussian_negative(const Gaussian& g) {
    return g.re < 0 || (g.re == 0 && g.im < 0);
}

std::string imag_unit(RenderFormat format) {
    return format == RenderFormat::latex ? "\\mathrm{i}" : "i";
}

std::string product_sep(RenderFormat format) {
    return format == RenderFormat::latex ? " " : "*";
}

// Renders a nonzero Gaussian; mixed real/imaginary values get parentheses
// so they stay a single factor in product position.
std::string gaussian_str(const Gaussian& g, RenderFormat format) {
    const std::string i = imag_unit(format);
    if (g.im == 0) return rational_str(g.re, format);
    std::string imag;
    if (g.im == 1)
        imag = i;
    else if (g.im == -1)
        imag = "-" + i;
    else
        imag = rational_str(g.im, format) + product_sep(format) + i;
    if (g.re == 0) return imag;
    std::string out = "(" + rational_str(g.re, format);
    if (gaussian_negative(Gaussian(Rational(0), g.im))) {
        Gaussian neg(Rational(0), -g.im);
        out += " - " + gaussian_str(neg, format);
    } else {
        out += " + " + gaussian_str(Gaussian(Rational(0), g.im), format);
    }
    return out + ")";
}

std::string param_name(std::size_t slot, int dim, RenderFormat format) {
    const auto d = static_cast<std::size_t>(dim);
    if (slot < d) {
        if (format == RenderFormat::latex) return "\\mu_{" + std::to_string(slot + 1) + "}";
        return "mu" + std::to_string(slot + 1);
    }
    if (slot == d) return "E";
    return format == RenderFormat::latex ? "\\alpha" : "alpha";
}

std::string power_suffix(std::uint32_t n, RenderFormat format) {
    if (n == 1) return "";
    if (format == RenderFormat::latex) return "^{" + std::to_string(n) + "}";
    return "^" + std::to_string(n);
}

// One Scalar term as a list of product factors, sign already removed.
std::vector<std::string> scalar_term_factors(const ParamExp& exp, const Gaussian& coeff, int dim,
                                             RenderFormat format) {
    std::vector<std::string> factors;
    bool any_param = false;
    for (std::size_t k = 0; k < exp.size(); ++k) {
        if (exp[k] == 0) continue;
        any_param = true;
        factors.push_back(param_name(k, dim, format) + power_suffix(exp[k], format));
    }
    if (!(coeff.is_one() && any_param))
        factors.insert(factors.begin(), gaussian_str(coeff, format));
    return factors;
}

std::string join_factors(const std::vector<std::string>& factors, RenderFormat format) {
    std::string out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) out += product_sep(format);
        out += factors[k];
    }
    return out;
}

std::string signed_join(const std::vector<std::pair<bool, std::string>>& parts) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& [neg, body] = parts[k];
        if (k == 0)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

std::string atom_name(const char* plain, const char* latex, int index, std::uint32_t exp,
                      RenderFormat format) {
    if (format == RenderFormat::latex)
        return std::string(latex) + "_{" + std::to_string(index) + "}" + power_suffix(exp, format);
    return std::string(plain) + std::to_string(index) + power_suffix(exp, format);
}

std::vector<std::string> monomial_factors(const Monomial& m, RenderFormat format) {
    std::vector<std::string> factors;
    const int d = m.dim();
    for (int i = 1; i <= d; ++i) {
        const auto a = m.x_exp[static_cast<std::size_t>(i) - 1];
        if (a) factors.push_back(atom_name("x", "x", i, a, format));
    }
    if (m.r_pow != 0) {
        if (m.r_pow == 1)
            factors.emplace_back("r");
        else if (format == RenderFormat::latex)
            factors.push_back("r^{" + std::to_string(m.r_pow) + "}");
        else
            factors.push_back("r^" + std::to_string(m.r_pow));
    }
    for (int i = 1; i <= d; ++i) {
        const auto b = m.d_exp[static_cast<std::size_t>(i) - 1];
        if (b) factors.push_back(atom_name("D", "D", i, b, format));
    }
    for (int i = 1; i <= d; ++i)
        if (m.refl & (1u << (i - 1))) factors.push_back(atom_name("R", "R", i, 1, format));
    return factors;
}

// (negative?, body) for one operator term.
std::pair<bool, std::string> operator_term(const Monomial& m, const Scalar& c,
                                           RenderFormat format) {
    std::vector<std::string> factors = monomial_factors(m, format);
    if (c.terms().size() > 1) {
        std::string coeff = "(" + to_string(c, format) + ")";
        factors.insert(factors.begin(), coeff);
        return {false, join_factors(factors, format)};
    }
    const auto& [exp, coeff] = *c.terms().begin();
    const bool neg = gaussian_negative(coeff);
    auto coeff_factors = scalar_term_factors(exp, neg ? -coeff : coeff, c.dim(), format);
    if (!factors.empty() && coeff_factors.size() == 1 && coeff_factors[0] == "1")
        coeff_factors.clear();
    factors.insert(factors.begin(), coeff_factors.begin(), coeff_factors.end());
    if (factors.empty()) factors.emplace_back("1");
    return {neg, join_factors(factors, format)};
}

}  // namespace

std::string to_string(const Gaussian& g, RenderFormat format) {
    if (g.is_zero()) return "0";
    if (gaussian_negative(g)) return "-" + gaussian_str(-g, format);
    return gaussian_str(g, format);
}

std::string to_string(const Scalar& s, RenderFormat format) {
    if (s.is_zero()) return "0";
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& [exp, coeff] : s.terms()) {
        const bool neg = gaussian_negative(coeff);
        auto factors = scalar_term_factors(exp, neg ? -coeff : coeff, s.dim(), format);
        parts.emplace_back(neg, join_factors(factors, format));
    }
    return signed_join(parts);
}

namespace {

// One graded piece p(x) r^k of a test function.
void append_piece_terms(std::vector<std::pair<bool, std::string>>& parts, const XPoly& p, int k,
                        int dim, RenderFormat format) {
    std::string radial;
    if (k == 1)
        radial = "r";
    else if (k != 0)
        radial = format == RenderFormat::latex ? "r^{" + std::to_string(k) + "}"
                                               : "r^" + std::to_string(k);
    for (const auto& [exp, coeff] : p.terms()) {
        Monomial carrier(dim);
        carrier.x_exp = exp;
        std::vector<std::string> factors = monomial_factors(carrier, format);
        if (!radial.empty()) factors.push_back(radial);
        if (coeff.terms().size() > 1) {
            factors.insert(factors.begin(), "(" + to_string(coeff, format) + ")");
            parts.emplace_back(false, join_factors(factors, format));
            continue;
        }
        const auto& [pexp, g] = *coeff.terms().begin();
        const bool neg = gaussian_negative(g);
        auto coeff_factors = scalar_term_factors(pexp, neg ? -g : g, dim, format);
        if (!factors.empty() && coeff_factors.size() == 1 && coeff_factors[0] == "1")
            coeff_factors.clear();
        factors.insert(factors.begin(), coeff_factors.begin(), coeff_factors.end());
        if (factors.empty()) factors.emplace_back("1");
        parts.emplace_back(neg, join_factors(factors, format));
    }
}

}  // namespace

std::string to_string(const RFunction& f, RenderFormat format) {
    if (f.is_zero()) return "0";
    const int m = static_cast<int>(f.denom_exp());
    std::vector<std::pair<bool, std::string>> parts;
    append_piece_terms(parts, f.even_part(), -2 * m, f.dim(), format);
    append_piece_terms(parts, f.odd_radial_part(), 1 - 2 * m, f.dim(), format);
    return signed_join(parts);
}

std::string to_string(const Operator& x, RenderFormat format) {
    if (x.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Scalar>*> order;
    order.reserve(x.term_count());
    for (const auto& term : x.terms()) order.push_back(&term);
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        const auto da = a->first.x_degree() + a->first.d_degree();
        const auto db = b->first.x_degree() + b->first.d_degree();
        if (da != db) return da > db;
        return a->first < b->first;
    });
    std::vector<std::pair<bool, std::string>> parts;
    parts.reserve(order.size());
    for (const auto* term : order) parts.push_back(operator_term(term->first, term->second, format));
    return signed_join(parts);
}

}  // namespace dunkl
