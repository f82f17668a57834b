#pragma once

// Rewrite-chain certificates for the congruence on N[x] generated by
// x = p(x): single link steps, whole chains, independent verification,
// the JSON file format, and the transforms used to assemble chains.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rigcert/poly.hpp"

namespace rigcert {

enum class StepDir { expand, contract };

// One link of the congruence: expand replaces f + x^k * x by f + x^k * p,
// contract is the reverse. The spectator f is stored redundantly so a
// third party can verify each step without trusting the producer.
struct LinkStep {
    Exp k = 0;
    NatPoly f;
    StepDir dir = StepDir::expand;

    bool operator==(const LinkStep&) const = default;
};

struct Certificate {
    NatPoly p;
    NatPoly start;
    NatPoly end;
    std::vector<LinkStep> steps;

    bool operator==(const Certificate&) const = default;
};

/// Thrown by apply_step when r does not match the step's claimed
/// decomposition; names the first exponent where the sides differ.
class StepMismatch : public std::runtime_error {
public:
    StepMismatch(std::string what, Exp exponent)
        : std::runtime_error(std::move(what)), exponent_(exponent) {}
    Exp exponent() const noexcept { return exponent_; }

private:
    Exp exponent_;
};

/// The partner term of r under the step: f + x^k * p for expand (requires
/// r = f + x^(k+1) exactly), f + x^(k+1) for contract (requires
/// r = f + x^k * p exactly).
NatPoly apply_step(const NatPoly& r, const NatPoly& p, const LinkStep& step);

/// Non-throwing variant; nullopt on mismatch.
std::optional<NatPoly> try_apply_step(const NatPoly& r, const NatPoly& p, const LinkStep& step);

struct VerifyResult {
    bool ok = false;
    std::optional<std::size_t> first_failure;  // index of the first failing step
};

/// Replays the chain from cert.start; valid iff every step applies and the
/// replay lands exactly on cert.end. Shares nothing with synthesis.
VerifyResult verify(const Certificate& cert);

/// All replayed terms r_0 .. r_n of a valid certificate. Throws
/// StepMismatch on an invalid one.
std::vector<NatPoly> replay(const Certificate& cert);

// Congruence-closure transforms. Each maps valid certificates to valid
// certificates.

/// a + g ~ a' + g from a ~ a'; every spectator absorbs g.
Certificate shift(const Certificate& cert, const NatPoly& g);

/// x^j * a ~ x^j * a' from a ~ a'.
Certificate mul_monomial(const Certificate& cert, Exp j);

/// g * a ~ g * a' from a ~ a'. Each original step becomes one unit-monomial
/// step per unit of g's coefficient mass, in ascending-exponent order, so
/// the result has |steps| * (sum of g's coefficients) steps.
Certificate mul_poly(const Certificate& cert, const NatPoly& g);

/// Transitivity; requires a.end = b.start and a.p = b.p.
Certificate concat(const Certificate& a, const Certificate& b);

/// Symmetry: flips every step's direction and reverses the order.
Certificate reverse(const Certificate& cert);

// ---------------------------------------------------------------------------
// Certificate file format (canonical JSON). Polynomials are stored as
// [exponent, coefficient-decimal-string] pairs sorted by ascending
// exponent; files with zero coefficients, unsorted or duplicate exponents
// are rejected.
// ---------------------------------------------------------------------------

std::string serialize(const Certificate& cert);

/// Throws ParseError with a position/context message on malformed input.
Certificate parse_certificate(const std::string& text);

}  // namespace rigcert
