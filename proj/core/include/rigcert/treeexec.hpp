#pragma once

// Executes certificates as bijections on values of the initial algebra
// T ~ p(T): trees whose node shapes are the unit monomials of p, and
// values of q(T) given as a summand choice plus a tuple of trees.

#include <cstdint>
#include <string>
#include <vector>

#include "rigcert/chain.hpp"
#include "rigcert/poly.hpp"

namespace rigcert {

// A tree over p: each node picks a slot in the unit-monomial decomposition
// of p (ascending exponents, coefficient copies consecutive) and has one
// child per unit of that monomial's exponent. Slots with exponent 0 are
// leaves.
struct Tree {
    std::size_t slot = 0;
    std::vector<Tree> children;

    bool operator==(const Tree&) const = default;

    std::size_t node_count() const {
        std::size_t n = 1;
        for (const auto& c : children) n += c.node_count();
        return n;
    }
};

// A value of q(T): a slot in q's unit-monomial decomposition plus a tuple
// of trees of length equal to that monomial's exponent.
struct PolyValue {
    NatPoly q;
    std::size_t slot = 0;
    std::vector<Tree> tuple;

    bool operator==(const PolyValue&) const = default;

    std::size_t node_count() const {
        std::size_t n = 0;
        for (const auto& t : tuple) n += t.node_count();
        return n;
    }
};

/// Structural validity of a tree over p.
bool valid_tree(const Tree& t, const NatPoly& p);

/// Structural validity of a value (v.q's decomposition and all its trees).
bool valid_value(const PolyValue& v, const NatPoly& p);

/// The structure isomorphism T -> p(T): unpacks the root node into the
/// corresponding summand of p(T). Requires p(0) >= 1 so trees exist.
PolyValue alpha(const Tree& t, const NatPoly& p);

/// Inverse of alpha; requires v.q = p.
Tree alpha_inv(const PolyValue& v, const NatPoly& p);

enum class Direction { forward, backward };

// Precomputes the replayed terms of a verified certificate once, then maps
// values across it in either direction. Forward then backward is the
// identity.
class BijectionExecutor {
public:
    /// Verifies the certificate; throws std::invalid_argument if invalid.
    explicit BijectionExecutor(Certificate cert);

    const Certificate& certificate() const noexcept { return cert_; }

    /// v.q must equal cert.start (forward) or cert.end (backward).
    PolyValue apply(const PolyValue& v, Direction dir) const;

private:
    PolyValue apply_step_value(PolyValue v, std::size_t index, bool forwards) const;

    Certificate cert_;
    std::vector<NatPoly> terms_;
};

/// One-shot convenience wrapper around BijectionExecutor.
PolyValue apply_bijection(const Certificate& cert, const PolyValue& v, Direction dir);

/// Deterministic random tree over p with node_count <= size_bound
/// (size_bound >= 1); every slot is reachable once the bound admits it.
Tree random_tree(const NatPoly& p, std::size_t size_bound, std::uint64_t seed);

/// Deterministic random value over q: a random slot plus random trees of
/// node_count <= tree_size_bound each.
PolyValue random_value(const NatPoly& q, const NatPoly& p, std::size_t tree_size_bound,
                       std::uint64_t seed);

/// All trees over p with node_count <= max_nodes, ordered by size, then
/// root slot, then children lexicographically.
std::vector<Tree> enumerate_trees(const NatPoly& p, std::size_t max_nodes);

/// All values over q with node_count <= max_nodes, ordered by slot, then
/// total size, then tuple lexicographically. Duplicate-free.
std::vector<PolyValue> enumerate_values(const NatPoly& q, const NatPoly& p,
                                        std::size_t max_nodes);

// Text format: `slot(child, ...)`, a bare slot for childless nodes; values
// use the same shape with the top-level slot indexing q's decomposition.
std::string to_string(const Tree& t);
std::string to_string(const PolyValue& v);
Tree parse_tree(std::string_view text, const NatPoly& p);
PolyValue parse_value(std::string_view text, const NatPoly& q, const NatPoly& p);

}  // namespace rigcert
