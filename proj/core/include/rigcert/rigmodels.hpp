#pragma once

// The small concrete rigs used for evaluation tests and for showing the
// main theorem's hypotheses are sharp: degrees, codegrees, countable
// cardinals, and the 3-element quotient of N[x].

#include <optional>
#include <string>
#include <vector>

#include "rigcert/poly.hpp"

namespace rigcert {

// L^-infinity (the zero), L^0, L^1, ...; addition is max, multiplication
// adds exponents.
struct DegreeElem {
    std::optional<Exp> level;  // nullopt = L^-infinity

    bool operator==(const DegreeElem&) const = default;
};

// epsilon^0, epsilon^1, ..., epsilon^infinity (the zero); the formal dual
// of degrees: addition is min, multiplication adds exponents.
struct CodegreeElem {
    std::optional<Exp> level;  // nullopt = epsilon^infinity

    bool operator==(const CodegreeElem&) const = default;
};

// A countable cardinal: a natural number or aleph_0.
struct CardElem {
    std::optional<Int> finite;  // nullopt = aleph_0

    bool operator==(const CardElem&) const = default;
};

enum class ThreeElem { zero, nonzero_constant, non_constant };

struct DegreeRig {
    using Elem = DegreeElem;
    Elem zero() const { return {std::nullopt}; }
    Elem one() const { return {0}; }
    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem from_int(const Int& n) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::vector<Elem> enumerate(std::size_t count) const;
    std::string to_string(const Elem& a) const;
    static constexpr const char* name() { return "degrees"; }
};

struct CodegreeRig {
    using Elem = CodegreeElem;
    Elem zero() const { return {std::nullopt}; }
    Elem one() const { return {0}; }
    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem from_int(const Int& n) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::vector<Elem> enumerate(std::size_t count) const;
    std::string to_string(const Elem& a) const;
    static constexpr const char* name() { return "codegrees"; }
};

struct CardinalRig {
    using Elem = CardElem;
    Elem zero() const { return {Int(0)}; }
    Elem one() const { return {Int(1)}; }
    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem from_int(const Int& n) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::vector<Elem> enumerate(std::size_t count) const;  // 0, 1, ..., then aleph_0 last
    std::string to_string(const Elem& a) const;
    static constexpr const char* name() { return "cardinals"; }
};

// Quotient of N[x] whose classes are {0}, the nonzero constants, and the
// non-constants.
struct ThreeRig {
    using Elem = ThreeElem;
    Elem zero() const { return ThreeElem::zero; }
    Elem one() const { return ThreeElem::nonzero_constant; }
    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem from_int(const Int& n) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::vector<Elem> enumerate(std::size_t count) const;
    std::vector<Elem> carrier() const;  // the full finite carrier
    std::string to_string(const Elem& a) const;
    static constexpr const char* name() { return "three"; }

    static Elem classify(const NatPoly& q);
};

/// Least enumerated element a with p1(a) = p2(a) but q1(a) != q2(a), or
/// nullopt if none among the first `bound` elements.
template <RigModel M>
std::optional<typename M::Elem> find_counterexample(const NatPoly& p1, const NatPoly& p2,
                                                    const NatPoly& q1, const NatPoly& q2,
                                                    const M& model, std::size_t bound) {
    for (const auto& a : model.enumerate(bound)) {
        if (!model.eq(eval_poly(p1, model, a), eval_poly(p2, model, a))) continue;
        if (!model.eq(eval_poly(q1, model, a), eval_poly(q2, model, a))) return a;
    }
    return std::nullopt;
}

/// High elements of a finite additive semigroup, by exhaustive cofactor
/// search: a is high iff every b has some c with b + c = a.
template <typename M>
std::vector<typename M::Elem> high_set(const M& model) {
    const auto carrier = model.carrier();
    std::vector<typename M::Elem> high;
    for (const auto& a : carrier) {
        bool all_below = true;
        for (const auto& b : carrier) {
            bool found = false;
            for (const auto& c : carrier)
                if (model.eq(model.add(b, c), a)) {
                    found = true;
                    break;
                }
            if (!found) {
                all_below = false;
                break;
            }
        }
        if (all_below) high.push_back(a);
    }
    return high;
}

}  // namespace rigcert
