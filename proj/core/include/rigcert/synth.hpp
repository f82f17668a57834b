#pragma once

// Constructive synthesis of rewrite-chain certificates: the ladder and
// multiples/powers witnesses, the highness oracle, additive cancellation,
// and the top-level pipeline from a ring-theoretic cofactor to a full
// certificate. Also a bounded breadth-first search used as an independent
// oracle at small scale.

#include <optional>

#include "rigcert/chain.hpp"
#include "rigcert/hypotheses.hpp"

namespace rigcert {

// Constructive proof of b <= a in the additive semigroup of
// N[x]/(x = p(x)): a cofactor c together with a chain from b + c to a.
struct LeWitness {
    NatPoly b;
    NatPoly a;
    NatPoly c;
    Certificate cert;  // start = b + c, end = a
};

// A unit for the high clique: base + z ~ base, with z non-constant.
struct UnitData {
    NatPoly base;
    NatPoly z;
    Certificate cert;  // start = base + z, end = base
};

class SynthesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class HypothesisViolation : public SynthesisError {
public:
    HypothesisViolation(std::string what, HypothesisReport report)
        : SynthesisError(std::move(what)), report(report) {}
    HypothesisReport report;
};

class RingImplicationFailure : public SynthesisError {
public:
    RingImplicationFailure(std::string what, RingVerdict verdict)
        : SynthesisError(std::move(what)), verdict(std::move(verdict)) {}
    RingVerdict verdict;
};

/// x^n <= x^(n+1), one contract step; requires p(0) >= 1.
LeWitness ladder_up(const NatPoly& p, Exp n);

/// x^(n+1) <= x^n for n >= 1; requires p(0) >= 1 and deg p >= 2.
LeWitness ladder_down(const NatPoly& p, Exp n);

/// n*x <= x; requires p(0) >= 1 and deg p >= 2 (n = 0 and n = 1 are the
/// trivial witnesses).
LeWitness witness_multiple(const NatPoly& p, const Int& n);

/// x^n <= x; requires p(0) >= 1 and deg p >= 2.
LeWitness witness_power(const NatPoly& p, Exp n);

/// b <= a for any b and non-constant a; requires p(0) >= 1 and deg p >= 2.
LeWitness highness_oracle(const NatPoly& p, const NatPoly& a, const NatPoly& b);

/// Unit for the clique of high elements, anchored at non-constant a1.
UnitData unit_element(const NatPoly& p, const NatPoly& a1);

/// b + z ~ b for non-constant b.
Certificate unit_absorb(const NatPoly& p, const UnitData& u, const NatPoly& b);

/// h <= z for non-constant h.
LeWitness inverse_witness(const NatPoly& p, const UnitData& u, const NatPoly& h);

/// a1 ~ a2 from a certificate for a1 + b ~ a2 + b, with a1, a2
/// non-constant; b is recovered from the endpoints.
Certificate cancel_high(const NatPoly& p, const Certificate& K, const NatPoly& a1,
                        const NatPoly& a2);

struct Prop33Result {
    NatPoly s;
    Certificate cert;  // start = q1 + s, end = q2 + s
};

/// From the cofactor rtilde with q1 - q2 = rtilde * (p - x) in Z[x], a
/// certificate for q1 + s ~ q2 + s with s = r1*x + r2*p where
/// (r1, r2) = pos_neg_split(-rtilde).
Prop33Result prop33(const NatPoly& p, const NatPoly& q1, const NatPoly& q2, const IntPoly& rtilde);

/// The full pipeline: hypothesis checks, ring verdict, prop33, then
/// cancellation. Throws HypothesisViolation or RingImplicationFailure.
/// Deterministic: identical inputs yield identical certificates.
Certificate synthesize(const NatPoly& p, const NatPoly& q1, const NatPoly& q2);

struct SearchBounds {
    std::size_t max_steps = 0;
    Exp max_degree = 0;
    unsigned long max_coeff_mass = 0;
};

/// Breadth-first search for a minimal-length chain from q1 to q2 through
/// states with degree and coefficient mass within bounds. Expansion order
/// is fixed (ascending k, expand before contract), so results are
/// deterministic. nullopt when the bounded graph is exhausted.
std::optional<Certificate> bfs_search(const NatPoly& p, const NatPoly& q1, const NatPoly& q2,
                                      const SearchBounds& bounds);

}  // namespace rigcert
