#include "rigcert/poly.hpp"

#include <cctype>
#include <sstream>

namespace rigcert {

std::vector<Exp> NatPoly::unit_exponents() const {
    static const Int kMassLimit(1 << 22);
    if (coeff_mass() > kMassLimit)
        throw std::length_error("coefficient mass too large to decompose into unit monomials");
    std::vector<Exp> units;
    for (const auto& [e, c] : terms()) {
        unsigned long n = mpz_get_ui(c.get_mpz_t());
        for (unsigned long i = 0; i < n; ++i) units.push_back(e);
    }
    return units;
}

std::optional<NatPoly> nat_sub(const NatPoly& a, const NatPoly& b) {
    return NatPoly::from_int(a.as_int() - b.as_int());
}

RatDivRem divrem(const RatPoly& a, const RatPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    RatPoly quotient;
    RatPoly remainder = a;
    const Exp dd = static_cast<Exp>(d.degree());
    const Rat dlc = d.leading_coeff();
    while (!remainder.is_zero() && remainder.degree() >= d.degree()) {
        Exp shift = static_cast<Exp>(remainder.degree()) - dd;
        Rat c = remainder.leading_coeff() / dlc;
        RatPoly term = RatPoly::monomial(c, shift);
        quotient = quotient + term;
        remainder = remainder - term * d;
    }
    return {std::move(quotient), std::move(remainder)};
}

RatPoly to_rat(const IntPoly& p) {
    RatPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(e, Rat(c));
    return out;
}

std::optional<IntPoly> to_int(const RatPoly& p) {
    IntPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (c.get_den() != 1) return std::nullopt;
        out.add_term(e, c.get_num());
    }
    return out;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divrem(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rat inv_lc = Rat(1) / a.leading_coeff();
        a = a * inv_lc;
    }
    return a;
}

ContentResult content_primitive(const IntPoly& a) {
    Int g(0);
    for (const auto& [e, c] : a.terms())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return {g, g == 1};
}

bool squarefree(const IntPoly& d) {
    if (d.is_zero()) throw std::domain_error("squarefree check on the zero polynomial");
    RatPoly g = rat_gcd(to_rat(d), to_rat(d.derivative()));
    return g.degree() <= 0;
}

PosNegSplit pos_neg_split(const IntPoly& r) {
    IntPoly pos, neg;
    for (const auto& [e, c] : r.terms()) {
        if (c > 0)
            pos.add_term(e, c);
        else
            neg.add_term(e, -c);
    }
    return {*NatPoly::from_int(pos), *NatPoly::from_int(neg)};
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    IntPoly parse() {
        IntPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    IntPoly parse_expr() {
        skip_ws();
        bool negate = consume('-');
        IntPoly acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            if (consume('+'))
                acc = acc + parse_term();
            else if (consume('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    IntPoly parse_term() {
        IntPoly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (consume('*')) {
                acc = acc * parse_factor();
                continue;
            }
            // juxtaposition: 2x^3, 16(1+x)
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(') {
                acc = acc * parse_factor();
                continue;
            }
            break;
        }
        return acc;
    }

    IntPoly parse_factor() {
        IntPoly base = parse_primary();
        skip_ws();
        if (consume('^')) {
            Exp n = parse_natural();
            return base.pow(n);
        }
        return base;
    }

    IntPoly parse_primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            IntPoly inner = parse_expr();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return IntPoly::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return IntPoly(Int(std::string(text_.substr(start, pos_ - start))));
        }
        fail("expected a number, 'x' or '('");
    }

    Exp parse_natural() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        Exp value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<Exp>(text_[pos_] - '0');
            if (value > (Exp(1) << 32)) fail("exponent out of range");
            ++pos_;
        }
        return value;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial syntax error at offset " + std::to_string(pos_) + ": " + msg, pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_int_poly(std::string_view text) { return PolyParser(text).parse(); }

NatPoly parse_nat_poly(std::string_view text) {
    IntPoly p = parse_int_poly(text);
    auto n = NatPoly::from_int(p);
    if (!n) throw ParseError("negative coefficient in a polynomial over N", 0);
    return *n;
}

// ---------------------------------------------------------------------------
// Printing: ascending exponents, matching the accepted text syntax.
// ---------------------------------------------------------------------------

namespace {

template <typename C>
void append_term(std::ostringstream& os, bool first, bool negative, const std::string& abs_coeff,
                 Exp e) {
    if (first) {
        if (negative) os << "-";
    } else {
        os << (negative ? " - " : " + ");
    }
    if (e == 0) {
        os << abs_coeff;
        return;
    }
    if (abs_coeff != "1") os << abs_coeff;
    os << "x";
    if (e != 1) os << "^" << e;
}

}  // namespace

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Int a = abs(c);
        append_term<Int>(os, first, c < 0, a.get_str(), e);
        first = false;
    }
    return os.str();
}

std::string to_string(const NatPoly& p) { return to_string(p.as_int()); }

std::string to_string(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rat a = abs(c);
        std::string text = a.get_num().get_str();
        if (a.get_den() != 1) text = "(" + text + "/" + a.get_den().get_str() + ")";
        append_term<Rat>(os, first, c < 0, text, e);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Pair-list form
// ---------------------------------------------------------------------------

TermPairs to_pairs(const IntPoly& p) {
    TermPairs out;
    out.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) out.emplace_back(e, c.get_str());
    return out;
}

TermPairs to_pairs(const NatPoly& p) { return to_pairs(p.as_int()); }

IntPoly int_poly_from_pairs(const TermPairs& pairs) {
    IntPoly out;
    bool have_prev = false;
    Exp prev = 0;
    for (const auto& [e, text] : pairs) {
        if (have_prev && e <= prev)
            throw ParseError(e == prev ? "duplicate exponent in term list"
                                       : "term list not sorted by ascending exponent",
                             0);
        prev = e;
        have_prev = true;
        Int c;
        if (text.empty() || mpz_set_str(c.get_mpz_t(), text.c_str(), 10) != 0)
            throw ParseError("malformed coefficient '" + text + "'", 0);
        if (c == 0) throw ParseError("zero coefficient in term list", 0);
        out.add_term(e, c);
    }
    return out;
}

NatPoly nat_poly_from_pairs(const TermPairs& pairs) {
    auto n = NatPoly::from_int(int_poly_from_pairs(pairs));
    if (!n) throw ParseError("negative coefficient in a polynomial over N", 0);
    return *n;
}

}  // namespace rigcert
