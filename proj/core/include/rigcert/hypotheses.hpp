#pragma once

// Decides whether q1(x) = q2(x) follows from p1(x) = p2(x) in every ring,
// and checks the preconditions of certificate synthesis.

#include <optional>

#include "rigcert/poly.hpp"

namespace rigcert {

// Verdict on the ring-theoretic implication p1 = p2 => q1 = q2, i.e. on
// whether d = p2 - p1 divides q1 - q2 in Z[x]. Exactly one of cofactor and
// remainder is present. cofactor satisfies cofactor * d = q1 - q2. The
// remainder is the rational division remainder; it is zero in the one
// failure mode where q1 - q2 is divisible over Q but the quotient is not
// integral (then rational_quotient shows the non-integral coefficients).
struct RingVerdict {
    bool holds = false;
    std::optional<IntPoly> cofactor;
    std::optional<RatPoly> remainder;
    std::optional<RatPoly> rational_quotient;  // present whenever the rational remainder is zero
};

struct HypothesisReport {
    bool primitive = false;
    bool squarefree = false;
    bool roots_condition = false;
    bool constant_term_ok = false;
    bool degree_ok = false;
    bool q1_nonconstant = false;
    bool q2_nonconstant = false;

    bool synthesis_ok() const {
        return constant_term_ok && degree_ok && q1_nonconstant && q2_nonconstant;
    }
};

/// Divisibility of q1 - q2 by d = p2 - p1 in Z[x], decided by rational
/// division plus an integrality check on the quotient. Throws
/// std::domain_error when p1 = p2.
RingVerdict check_ring_implication(const IntPoly& p1, const IntPoly& p2, const IntPoly& q1,
                                   const IntPoly& q2);

struct ComplexRouteResult {
    HypothesisReport report;  // primitive / squarefree / roots_condition of d = p2 - p1
    RingVerdict verdict;
};

/// The complex-number route: reports whether d = p2 - p1 is primitive and
/// squarefree and whether every complex root t of d satisfies q1(t) = q2(t),
/// decided algebraically as divisibility of q1 - q2 by the radical of d
/// over Q (for squarefree d that is d itself). When all three hold, the
/// ring implication is forced by Gauss's Lemma and a non-holding verdict is
/// reported as a logic error.
ComplexRouteResult check_complex_route(const IntPoly& p1, const IntPoly& p2, const IntPoly& q1,
                                       const IntPoly& q2);

/// Preconditions of the main synthesis theorem: p(0) >= 1, deg p >= 2,
/// deg q1 >= 1, deg q2 >= 1.
HypothesisReport check_synthesis_preconditions(const NatPoly& p, const NatPoly& q1,
                                               const NatPoly& q2);

}  // namespace rigcert
