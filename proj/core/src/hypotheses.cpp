#include "rigcert/hypotheses.hpp"

namespace rigcert {

RingVerdict check_ring_implication(const IntPoly& p1, const IntPoly& p2, const IntPoly& q1,
                                   const IntPoly& q2) {
    IntPoly d = p2 - p1;
    if (d.is_zero()) throw std::domain_error("p1 = p2: divisor is zero");

    auto [quotient, remainder] = divrem(to_rat(q1 - q2), to_rat(d));
    RingVerdict v;
    if (!remainder.is_zero()) {
        v.remainder = std::move(remainder);
        return v;
    }
    v.rational_quotient = quotient;
    if (auto integral = to_int(quotient)) {
        v.holds = true;
        v.cofactor = std::move(*integral);
    } else {
        v.remainder = RatPoly();
    }
    return v;
}

ComplexRouteResult check_complex_route(const IntPoly& p1, const IntPoly& p2, const IntPoly& q1,
                                       const IntPoly& q2) {
    IntPoly d = p2 - p1;
    if (d.is_zero()) throw std::domain_error("p1 = p2: divisor is zero");

    ComplexRouteResult out;
    out.report.primitive = content_primitive(d).is_primitive;
    out.report.squarefree = squarefree(d);
    // "Every complex root t of d satisfies q1(t) = q2(t)" holds iff the
    // radical d / gcd(d, d') divides q1 - q2 over Q; for squarefree d the
    // radical is d itself.
    const RatPoly rd = to_rat(d);
    const RatPoly radical = divrem(rd, rat_gcd(rd, to_rat(d.derivative()))).quotient;
    out.report.roots_condition = divrem(to_rat(q1 - q2), radical).remainder.is_zero();
    out.verdict = check_ring_implication(p1, p2, q1, q2);

    // Gauss's Lemma: primitive + squarefree + rational divisibility force an
    // integral quotient. Anything else is a bug, not an input failure.
    if (out.report.primitive && out.report.squarefree && out.report.roots_condition &&
        !out.verdict.holds)
        throw std::logic_error("Gauss's Lemma violated: rational quotient not integral");
    return out;
}

HypothesisReport check_synthesis_preconditions(const NatPoly& p, const NatPoly& q1,
                                               const NatPoly& q2) {
    HypothesisReport r;
    r.constant_term_ok = p.constant_term() >= 1;
    r.degree_ok = p.degree() >= 2;
    r.q1_nonconstant = q1.degree() >= 1;
    r.q2_nonconstant = q2.degree() >= 1;
    return r;
}

}  // namespace rigcert
