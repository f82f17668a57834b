#pragma once

// Shared helpers for the test suites: deterministic generators, independent
// oracles, and small rig models used only by tests.

#include <random>
#include <vector>

#include "rigcert/chain.hpp"
#include "rigcert/poly.hpp"

namespace testutil {

using namespace rigcert;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline IntPoly random_int_poly(std::mt19937_64& rng, Exp max_deg, long coeff_range) {
    IntPoly out;
    for (Exp e = 0; e <= max_deg; ++e) {
        long c = static_cast<long>(rng() % (2 * coeff_range + 1)) - coeff_range;
        out.add_term(e, Int(c));
    }
    return out;
}

inline NatPoly random_nat_poly(std::mt19937_64& rng, Exp max_deg, unsigned long coeff_range) {
    IntPoly out;
    for (Exp e = 0; e <= max_deg; ++e)
        out.add_term(e, Int(static_cast<unsigned long>(rng() % (coeff_range + 1))));
    return *NatPoly::from_int(out);
}

/// Random p admissible for synthesis: p(0) >= 1 and deg p >= 2.
inline NatPoly random_synth_p(std::mt19937_64& rng, Exp max_deg, unsigned long coeff_range) {
    Exp deg = 2 + rng() % (max_deg - 1);
    IntPoly out;
    out.add_term(0, Int(1 + rng() % coeff_range));
    out.add_term(deg, Int(1 + rng() % coeff_range));
    for (Exp e = 1; e < deg; ++e)
        out.add_term(e, Int(static_cast<unsigned long>(rng() % (coeff_range + 1))));
    return *NatPoly::from_int(out);
}

/// Random valid certificate: a random walk of applicable link steps.
inline Certificate random_certificate(std::mt19937_64& rng, const NatPoly& p,
                                      const NatPoly& start, std::size_t want_steps) {
    Certificate cert{p, start, start, {}};
    NatPoly current = start;
    for (std::size_t i = 0; i < want_steps; ++i) {
        std::vector<LinkStep> applicable;
        const std::int64_t deg = current.degree();
        for (Exp k = 0; deg >= 0 && k <= static_cast<Exp>(deg); ++k) {
            if (current.coeff(k + 1) >= 1)
                applicable.push_back(
                    {k, *nat_sub(current, NatPoly::monomial(1, k + 1)), StepDir::expand});
            if (auto f = nat_sub(current, p.shift_up(k)))
                applicable.push_back({k, std::move(*f), StepDir::contract});
        }
        if (applicable.empty()) break;
        LinkStep step = applicable[rng() % applicable.size()];
        current = apply_step(current, p, step);
        cert.steps.push_back(std::move(step));
    }
    cert.end = current;
    return cert;
}

/// Independent schoolbook multiplication over dense coefficient arrays.
inline IntPoly schoolbook_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> da(static_cast<std::size_t>(a.degree()) + 1, Int(0));
    std::vector<Int> db(static_cast<std::size_t>(b.degree()) + 1, Int(0));
    for (const auto& [e, c] : a.terms()) da[static_cast<std::size_t>(e)] = c;
    for (const auto& [e, c] : b.terms()) db[static_cast<std::size_t>(e)] = c;
    std::vector<Int> dc(da.size() + db.size() - 1, Int(0));
    for (std::size_t i = 0; i < da.size(); ++i)
        for (std::size_t j = 0; j < db.size(); ++j) dc[i + j] += da[i] * db[j];
    IntPoly out;
    for (std::size_t e = 0; e < dc.size(); ++e) out.add_term(e, dc[e]);
    return out;
}

/// Canonical remainder of t modulo (p - x) over Q.
inline RatPoly reduce_mod_p(const NatPoly& t, const NatPoly& p) {
    RatPoly d = to_rat(p.as_int() - IntPoly::variable());
    return divrem(to_rat(t.as_int()), d).remainder;
}

// The integers as a ring model for eval_poly.
struct IntRing {
    using Elem = Int;
    Elem zero() const { return Int(0); }
    Elem one() const { return Int(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem from_int(const Int& n) const { return n; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

// Z/mZ as a ring model.
struct ZmodRig {
    explicit ZmodRig(unsigned long m) : m_(m) {}
    using Elem = unsigned long;
    Elem zero() const { return 0; }
    Elem one() const { return 1 % m_; }
    Elem add(Elem a, Elem b) const { return (a + b) % m_; }
    Elem mul(Elem a, Elem b) const { return (a * b) % m_; }
    Elem from_int(const Int& n) const {
        Int r = n % Int(m_);
        if (r < 0) r += m_;
        return mpz_get_ui(r.get_mpz_t());
    }
    bool eq(Elem a, Elem b) const { return a == b; }
    unsigned long modulus() const { return m_; }

private:
    unsigned long m_;
};

}  // namespace testutil
