#include "rigcert/rigmodels.hpp"

#include <algorithm>

namespace rigcert {

// ---------------------------------------------------------------------------
// Degrees
// ---------------------------------------------------------------------------

DegreeElem DegreeRig::add(const Elem& a, const Elem& b) const {
    if (!a.level) return b;
    if (!b.level) return a;
    return {std::max(*a.level, *b.level)};
}

DegreeElem DegreeRig::mul(const Elem& a, const Elem& b) const {
    if (!a.level || !b.level) return zero();
    return {*a.level + *b.level};
}

DegreeElem DegreeRig::from_int(const Int& n) const {
    if (n < 0) throw std::domain_error("rig of degrees has no negatives");
    return n == 0 ? zero() : one();
}

std::vector<DegreeElem> DegreeRig::enumerate(std::size_t count) const {
    std::vector<Elem> out;
    out.push_back(zero());
    for (Exp n = 0; out.size() < count; ++n) out.push_back({n});
    return out;
}

std::string DegreeRig::to_string(const Elem& a) const {
    return a.level ? "L^" + std::to_string(*a.level) : "L^-inf";
}

// ---------------------------------------------------------------------------
// Codegrees
// ---------------------------------------------------------------------------

CodegreeElem CodegreeRig::add(const Elem& a, const Elem& b) const {
    if (!a.level) return b;
    if (!b.level) return a;
    return {std::min(*a.level, *b.level)};
}

CodegreeElem CodegreeRig::mul(const Elem& a, const Elem& b) const {
    if (!a.level || !b.level) return zero();
    return {*a.level + *b.level};
}

CodegreeElem CodegreeRig::from_int(const Int& n) const {
    if (n < 0) throw std::domain_error("rig of codegrees has no negatives");
    return n == 0 ? zero() : one();
}

std::vector<CodegreeElem> CodegreeRig::enumerate(std::size_t count) const {
    std::vector<Elem> out;
    out.push_back(zero());
    for (Exp n = 0; out.size() < count; ++n) out.push_back({n});
    return out;
}

std::string CodegreeRig::to_string(const Elem& a) const {
    return a.level ? "eps^" + std::to_string(*a.level) : "eps^inf";
}

// ---------------------------------------------------------------------------
// Countable cardinals
// ---------------------------------------------------------------------------

CardElem CardinalRig::add(const Elem& a, const Elem& b) const {
    if (!a.finite || !b.finite) return {std::nullopt};
    return {*a.finite + *b.finite};
}

CardElem CardinalRig::mul(const Elem& a, const Elem& b) const {
    if (a.finite && *a.finite == 0) return zero();
    if (b.finite && *b.finite == 0) return zero();
    if (!a.finite || !b.finite) return {std::nullopt};
    return {*a.finite * *b.finite};
}

CardElem CardinalRig::from_int(const Int& n) const {
    if (n < 0) throw std::domain_error("rig of cardinals has no negatives");
    return {n};
}

std::vector<CardElem> CardinalRig::enumerate(std::size_t count) const {
    std::vector<Elem> out;
    for (std::size_t n = 0; n + 1 < count; ++n) out.push_back({Int(static_cast<unsigned long>(n))});
    out.push_back({std::nullopt});
    return out;
}

std::string CardinalRig::to_string(const Elem& a) const {
    return a.finite ? a.finite->get_str() : "aleph_0";
}

// ---------------------------------------------------------------------------
// The 3-element quotient of N[x]
// ---------------------------------------------------------------------------

ThreeElem ThreeRig::add(const Elem& a, const Elem& b) const {
    if (a == ThreeElem::non_constant || b == ThreeElem::non_constant)
        return ThreeElem::non_constant;
    if (a == ThreeElem::zero) return b;
    if (b == ThreeElem::zero) return a;
    return ThreeElem::nonzero_constant;
}

ThreeElem ThreeRig::mul(const Elem& a, const Elem& b) const {
    if (a == ThreeElem::zero || b == ThreeElem::zero) return ThreeElem::zero;
    if (a == ThreeElem::non_constant || b == ThreeElem::non_constant)
        return ThreeElem::non_constant;
    return ThreeElem::nonzero_constant;
}

ThreeElem ThreeRig::from_int(const Int& n) const {
    if (n < 0) throw std::domain_error("the 3-element rig has no negatives");
    return n == 0 ? ThreeElem::zero : ThreeElem::nonzero_constant;
}

std::vector<ThreeElem> ThreeRig::carrier() const {
    return {ThreeElem::zero, ThreeElem::nonzero_constant, ThreeElem::non_constant};
}

std::vector<ThreeElem> ThreeRig::enumerate(std::size_t count) const {
    auto all = carrier();
    if (all.size() > count) all.resize(count);
    return all;
}

std::string ThreeRig::to_string(const Elem& a) const {
    switch (a) {
        case ThreeElem::zero: return "zero";
        case ThreeElem::nonzero_constant: return "nonzero-constant";
        case ThreeElem::non_constant: return "non-constant";
    }
    return "?";
}

ThreeElem ThreeRig::classify(const NatPoly& q) {
    if (q.is_zero()) return ThreeElem::zero;
    if (q.is_constant()) return ThreeElem::nonzero_constant;
    return ThreeElem::non_constant;
}

}  // namespace rigcert
