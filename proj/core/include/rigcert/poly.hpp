#pragma once

// Exact sparse univariate polynomials over Z, Q and N, with the text and
// pair-list formats shared by every tool in this project.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rigcert {

using Int = mpz_class;
using Rat = mpq_class;
using Exp = std::uint64_t;

/// Thrown by the polynomial/certificate/value text parsers; carries the
/// byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string what, std::size_t position)
        : std::runtime_error(std::move(what)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Sparse polynomial, exponent -> coefficient. Canonical form: no zero
// coefficient is ever stored (the zero polynomial has an empty term map),
// exponents are unique and iterate in ascending order.
template <typename C>
class SparsePoly {
public:
    using Coeff = C;
    using TermMap = std::map<Exp, C>;

    SparsePoly() = default;

    explicit SparsePoly(C constant) {
        if (constant != 0) terms_.emplace(0, std::move(constant));
    }

    static SparsePoly monomial(C coeff, Exp e) {
        SparsePoly p;
        if (coeff != 0) p.terms_.emplace(e, std::move(coeff));
        return p;
    }

    static SparsePoly variable() { return monomial(C(1), 1); }

    static SparsePoly from_terms(TermMap terms) {
        SparsePoly p;
        for (auto& [e, c] : terms)
            if (c != 0) p.terms_.emplace(e, std::move(c));
        return p;
    }

    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    /// Degree as a signed value; -1 for the zero polynomial.
    std::int64_t degree() const {
        return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.rbegin()->first);
    }

    C coeff(Exp e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    C constant_term() const { return coeff(0); }

    C leading_coeff() const {
        return terms_.empty() ? C(0) : terms_.rbegin()->second;
    }

    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Sum of all coefficients, i.e. the value at 1.
    C coeff_sum() const {
        C s(0);
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool operator==(const SparsePoly&) const = default;

    SparsePoly operator+(const SparsePoly& rhs) const {
        SparsePoly out = *this;
        for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
        return out;
    }

    SparsePoly operator-() const
        requires std::is_same_v<C, Int> || std::is_same_v<C, Rat>
    {
        SparsePoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    SparsePoly operator-(const SparsePoly& rhs) const
        requires std::is_same_v<C, Int> || std::is_same_v<C, Rat>
    {
        SparsePoly out = *this;
        for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
        return out;
    }

    SparsePoly operator*(const SparsePoly& rhs) const {
        SparsePoly out;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    SparsePoly operator*(const C& scalar) const {
        SparsePoly out;
        if (scalar == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
        return out;
    }

    /// Multiply by x^j.
    SparsePoly shift_up(Exp j) const {
        SparsePoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e + j, c);
        return out;
    }

    SparsePoly pow(Exp n) const {
        if (degree() > 0 && n > (Exp(1) << 48) / static_cast<Exp>(degree()))
            throw std::overflow_error("polynomial power exponent out of range");
        SparsePoly acc{C(1)};
        SparsePoly base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    /// Formal derivative.
    SparsePoly derivative() const {
        SparsePoly out;
        for (const auto& [e, c] : terms_)
            if (e > 0) out.add_term(e - 1, c * C(static_cast<unsigned long>(e)));
        return out;
    }

    /// Value at an element of the coefficient domain.
    C operator()(const C& x0) const {
        C acc(0), pw(1);
        Exp cur = 0;
        for (const auto& [e, c] : terms_) {
            for (; cur < e; ++cur) pw *= x0;
            acc += c * pw;
        }
        return acc;
    }

    void add_term(Exp e, C c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    TermMap terms_;
};

using IntPoly = SparsePoly<Int>;
using RatPoly = SparsePoly<Rat>;

// ---------------------------------------------------------------------------
// NatPoly: element of N[x]. Same canonical form as IntPoly plus the
// invariant that every stored coefficient is >= 1. Only rig operations are
// exposed; subtraction happens in Z[x] followed by a checked conversion.
// ---------------------------------------------------------------------------
class NatPoly {
public:
    NatPoly() = default;

    explicit NatPoly(Int constant) : rep_(check_nonneg(IntPoly(std::move(constant)))) {}

    static NatPoly monomial(Int coeff, Exp e) {
        return NatPoly(check_nonneg(IntPoly::monomial(std::move(coeff), e)));
    }

    static NatPoly variable() { return NatPoly(IntPoly::variable()); }

    /// Checked conversion from Z[x]; nullopt if any coefficient is negative.
    static std::optional<NatPoly> from_int(const IntPoly& p) {
        for (const auto& [e, c] : p.terms())
            if (c < 0) return std::nullopt;
        return NatPoly(p);
    }

    const IntPoly& as_int() const noexcept { return rep_; }
    const IntPoly::TermMap& terms() const noexcept { return rep_.terms(); }

    bool is_zero() const noexcept { return rep_.is_zero(); }
    bool is_constant() const noexcept { return rep_.is_constant(); }
    std::int64_t degree() const { return rep_.degree(); }
    Int coeff(Exp e) const { return rep_.coeff(e); }
    Int constant_term() const { return rep_.constant_term(); }
    std::size_t term_count() const noexcept { return rep_.term_count(); }

    /// Total coefficient mass (the value at 1).
    Int coeff_mass() const { return rep_.coeff_sum(); }

    bool operator==(const NatPoly&) const = default;

    NatPoly operator+(const NatPoly& rhs) const { return NatPoly(rep_ + rhs.rep_); }
    NatPoly operator*(const NatPoly& rhs) const { return NatPoly(rep_ * rhs.rep_); }
    NatPoly shift_up(Exp j) const { return NatPoly(rep_.shift_up(j)); }
    NatPoly pow(Exp n) const { return NatPoly(rep_.pow(n)); }
    NatPoly scaled(const Int& n) const { return NatPoly(check_nonneg(rep_ * n)); }

    Int operator()(const Int& x0) const { return rep_(x0); }

    /// The unit-monomial decomposition: exponents in ascending order,
    /// coefficient-many copies each. Throws std::length_error if the
    /// coefficient mass is too large to materialize.
    std::vector<Exp> unit_exponents() const;

private:
    explicit NatPoly(IntPoly rep) : rep_(std::move(rep)) {}

    static IntPoly check_nonneg(IntPoly p) {
        for (const auto& [e, c] : p.terms())
            if (c < 0) throw std::domain_error("negative coefficient in N[x] value");
        return p;
    }

    IntPoly rep_;
};

/// a - b in N[x] if the difference has no negative coefficient.
std::optional<NatPoly> nat_sub(const NatPoly& a, const NatPoly& b);

// ---------------------------------------------------------------------------
// Division, gcd, content
// ---------------------------------------------------------------------------

struct RatDivRem {
    RatPoly quotient;
    RatPoly remainder;
};

/// Division with remainder in Q[x]: a = quotient*d + remainder, with
/// remainder zero or of degree < deg d. Throws std::domain_error if d = 0.
RatDivRem divrem(const RatPoly& a, const RatPoly& d);

RatPoly to_rat(const IntPoly& p);

/// Quotient in Z[x] if it exists (remainder zero and integral quotient).
std::optional<IntPoly> to_int(const RatPoly& p);

/// Monic gcd in Q[x]; gcd(0,0) = 0.
RatPoly rat_gcd(RatPoly a, RatPoly b);

struct ContentResult {
    Int content;        // gcd of absolute coefficient values; 0 for the zero polynomial
    bool is_primitive;  // content == 1
};

ContentResult content_primitive(const IntPoly& a);

/// True iff d has no repeated complex roots, decided as gcd(d, d') constant
/// over Q. Throws std::domain_error for d = 0.
bool squarefree(const IntPoly& d);

struct PosNegSplit {
    NatPoly positive;  // r1
    NatPoly negative;  // r2
};

/// Minimal split r = r1 - r2 with disjoint supports.
PosNegSplit pos_neg_split(const IntPoly& r);

// ---------------------------------------------------------------------------
// Generic evaluation into a rig supplied through its operations
// ---------------------------------------------------------------------------

template <typename M>
concept RigModel = requires(const M m, const typename M::Elem a, const Int& n) {
    { m.zero() } -> std::convertible_to<typename M::Elem>;
    { m.one() } -> std::convertible_to<typename M::Elem>;
    { m.add(a, a) } -> std::convertible_to<typename M::Elem>;
    { m.mul(a, a) } -> std::convertible_to<typename M::Elem>;
    { m.from_int(n) } -> std::convertible_to<typename M::Elem>;
    { m.eq(a, a) } -> std::convertible_to<bool>;
};

/// Image of q under the homomorphism sending x to x0. For a rig without
/// negatives the model's from_int must reject negative inputs, which makes
/// IntPoly evaluation into such a model fail exactly when it should.
template <RigModel M>
typename M::Elem eval_poly(const IntPoly& q, const M& m, const typename M::Elem& x0) {
    auto acc = m.zero();
    auto pw = m.one();
    Exp cur = 0;
    for (const auto& [e, c] : q.terms()) {
        for (; cur < e; ++cur) pw = m.mul(pw, x0);
        acc = m.add(acc, m.mul(m.from_int(c), pw));
    }
    return acc;
}

template <RigModel M>
typename M::Elem eval_poly(const NatPoly& q, const M& m, const typename M::Elem& x0) {
    return eval_poly(q.as_int(), m, x0);
}

// ---------------------------------------------------------------------------
// Text format: `3 + 2x^3 + 4x^5`, `x`, `(1+x)^9`; `*` optional, whitespace
// ignored. IntPoly additionally accepts `-`.
// ---------------------------------------------------------------------------

IntPoly parse_int_poly(std::string_view text);
NatPoly parse_nat_poly(std::string_view text);

std::string to_string(const IntPoly& p);
std::string to_string(const NatPoly& p);
std::string to_string(const RatPoly& p);

// Canonical pair-list form: [exponent, coefficient-decimal-string] sorted by
// ascending exponent. Used by the certificate file format and --json output.
using TermPairs = std::vector<std::pair<Exp, std::string>>;

TermPairs to_pairs(const IntPoly& p);
TermPairs to_pairs(const NatPoly& p);

/// Rejects zero coefficients, unsorted or duplicate exponents.
IntPoly int_poly_from_pairs(const TermPairs& pairs);
NatPoly nat_poly_from_pairs(const TermPairs& pairs);

}  // namespace rigcert
