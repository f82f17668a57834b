#include "rigcert/synth.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace rigcert {

namespace {

void require_synth_shape(const NatPoly& p) {
    if (p.constant_term() < 1)
        throw std::invalid_argument("p must have non-zero constant term");
    if (p.degree() < 2) throw std::invalid_argument("p must have degree at least two");
}

Certificate empty_cert(const NatPoly& p, const NatPoly& at) { return {p, at, at, {}}; }

/// In-place concat; keeps long accumulations linear.
void append_chain(Certificate& acc, const Certificate& more) {
    if (acc.p != more.p || acc.end != more.start)
        throw std::logic_error("append_chain: segments do not chain");
    acc.steps.insert(acc.steps.end(), more.steps.begin(), more.steps.end());
    acc.end = more.end;
}

/// b <= a when b + c = a holds syntactically in N[x]: empty chain.
LeWitness le_trivial(const NatPoly& p, const NatPoly& b, const NatPoly& a) {
    auto c = nat_sub(a, b);
    if (!c) throw std::logic_error("le_trivial: b is not a syntactic summand of a");
    return {b, a, *c, empty_cert(p, a)};
}

/// b <= m and m <= a compose to b <= a with cofactor summed.
LeWitness le_compose(const LeWitness& w, const LeWitness& v) {
    if (w.a != v.b) throw std::logic_error("le_compose: witnesses do not chain");
    return {w.b, v.a, w.c + v.c, concat(shift(w.cert, v.c), v.cert)};
}

/// Pointwise sum: b_1 + ... + b_n <= a_1 + ... + a_n. Each witness's chain
/// is shifted once by the already-finished prefix and the untouched suffix.
LeWitness le_sum(const NatPoly& p, const std::vector<LeWitness>& ws) {
    NatPoly total_b, total_c, total_a;
    for (const auto& w : ws) {
        total_b = total_b + w.b;
        total_c = total_c + w.c;
        total_a = total_a + w.a;
    }
    Certificate cert = empty_cert(p, total_b + total_c);
    NatPoly prefix_a;
    NatPoly suffix = total_b + total_c;
    for (const auto& w : ws) {
        suffix = *nat_sub(suffix, w.b + w.c);
        append_chain(cert, shift(w.cert, prefix_a + suffix));
        prefix_a = prefix_a + w.a;
    }
    return {total_b, total_a, total_c, std::move(cert)};
}

LeWitness le_mul_monomial(const LeWitness& w, Exp j) {
    return {w.b.shift_up(j), w.a.shift_up(j), w.c.shift_up(j), mul_monomial(w.cert, j)};
}

/// x^from <= x^to for from <= to, by composing ladder_up.
LeWitness le_ladder(const NatPoly& p, Exp from, Exp to) {
    LeWitness acc = le_trivial(p, NatPoly::monomial(1, from), NatPoly::monomial(1, from));
    for (Exp n = from; n < to; ++n) acc = le_compose(acc, ladder_up(p, n));
    return acc;
}

/// Smallest exponent >= 2 carrying a nonzero coefficient of p.
Exp pick_d(const NatPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (e >= 2) return e;
    throw std::invalid_argument("p must have degree at least two");
}

/// The single contract step p ~ x, read as 1 + x^d <= x with cofactor
/// g = p - 1 - x^d.
LeWitness le_one_plus_xd(const NatPoly& p, Exp d) {
    NatPoly b = NatPoly(1) + NatPoly::monomial(1, d);
    NatPoly g = *nat_sub(p, b);
    Certificate cert{p, p, NatPoly::variable(), {{0, NatPoly(), StepDir::contract}}};
    return {b, NatPoly::variable(), g, std::move(cert)};
}

/// 2x <= x along the chain x >= x^d >= x^(d-1)(1 + x^d) >= 2x.
LeWitness two_x_le_x(const NatPoly& p) {
    const Exp d = pick_d(p);
    // 2x <= x^(d-1) + x^(2d-1)
    std::vector<LeWitness> parts;
    parts.push_back(le_ladder(p, 1, d - 1));
    parts.push_back(le_ladder(p, 1, 2 * d - 1));
    LeWitness up = le_sum(p, parts);
    // x^(d-1) + x^(2d-1) <= x^d
    LeWitness mid = le_mul_monomial(le_one_plus_xd(p, d), d - 1);
    // x^d <= x: the same one-step chain p ~ x with the split x^d + (1 + g) = p
    LeWitness down{NatPoly::monomial(1, d), NatPoly::variable(),
                   *nat_sub(p, NatPoly::monomial(1, d)), le_one_plus_xd(p, d).cert};
    return le_compose(le_compose(up, mid), down);
}

NatPoly nat_scaled(const NatPoly& a, unsigned long n) { return a.scaled(Int(n)); }

}  // namespace

LeWitness ladder_up(const NatPoly& p, Exp n) {
    if (p.constant_term() < 1)
        throw std::invalid_argument("ladder_up requires p with non-zero constant term");
    NatPoly b = NatPoly::monomial(1, n);
    NatPoly a = NatPoly::monomial(1, n + 1);
    NatPoly c = nat_sub(p, NatPoly(1))->shift_up(n);
    Certificate cert{p, p.shift_up(n), a, {{n, NatPoly(), StepDir::contract}}};
    return {std::move(b), std::move(a), std::move(c), std::move(cert)};
}

LeWitness ladder_down(const NatPoly& p, Exp n) {
    require_synth_shape(p);
    if (n < 1) throw std::invalid_argument("ladder_down requires n >= 1");
    const Exp d = pick_d(p);
    LeWitness xd_le_x{NatPoly::monomial(1, d), NatPoly::variable(),
                      *nat_sub(p, NatPoly::monomial(1, d)), le_one_plus_xd(p, d).cert};
    LeWitness core = le_compose(le_ladder(p, 2, d), xd_le_x);  // x^2 <= x^d <= x
    return le_mul_monomial(core, n - 1);
}

LeWitness witness_multiple(const NatPoly& p, const Int& n) {
    require_synth_shape(p);
    if (n < 0) throw std::invalid_argument("witness_multiple requires n >= 0");
    const NatPoly x = NatPoly::variable();
    if (n == 0) return {NatPoly(), x, x, empty_cert(p, x)};
    if (n == 1) return {x, x, NatPoly(), empty_cert(p, x)};
    if (n > (1 << 22)) throw std::length_error("witness_multiple: multiplicity too large");
    const unsigned long count = mpz_get_ui(n.get_mpz_t());

    const LeWitness w2 = two_x_le_x(p);
    // Unrolled induction: j x + (j-1) c2  ~  (j-1) x + (j-2) c2, j = n .. 2.
    Certificate cert = empty_cert(p, nat_scaled(x, count) + nat_scaled(w2.c, count - 1));
    for (unsigned long j = count; j >= 2; --j) {
        NatPoly spectator = nat_scaled(x + w2.c, j - 2);
        append_chain(cert, shift(w2.cert, spectator));
    }
    return {nat_scaled(x, count), x, nat_scaled(w2.c, count - 1), std::move(cert)};
}

LeWitness witness_power(const NatPoly& p, Exp n) {
    require_synth_shape(p);
    if (n == 0) return ladder_up(p, 0);
    LeWitness acc = le_trivial(p, NatPoly::monomial(1, n), NatPoly::monomial(1, n));
    for (Exp j = n; j >= 2; --j) acc = le_compose(acc, ladder_down(p, j - 1));
    return acc;
}

LeWitness highness_oracle(const NatPoly& p, const NatPoly& a, const NatPoly& b) {
    require_synth_shape(p);
    if (a.is_constant()) throw std::invalid_argument("highness_oracle requires non-constant a");
    if (b.is_zero()) return le_trivial(p, NatPoly(), a);

    const std::vector<Exp> units = b.unit_exponents();
    std::vector<LeWitness> powers;
    powers.reserve(units.size());
    for (Exp e : units) powers.push_back(witness_power(p, e));
    LeWitness acc = le_sum(p, powers);                             // b <= k x
    acc = le_compose(acc, witness_multiple(p, Int(units.size())));  // k x <= x

    Exp m = 0;
    for (const auto& [e, c] : a.terms())
        if (e >= 1) {
            m = e;
            break;
        }
    acc = le_compose(acc, le_ladder(p, 1, m));                           // x <= x^m
    return le_compose(acc, le_trivial(p, NatPoly::monomial(1, m), a));  // x^m <= a
}

UnitData unit_element(const NatPoly& p, const NatPoly& a1) {
    if (a1.is_constant()) throw std::invalid_argument("unit_element requires non-constant anchor");
    LeWitness w = highness_oracle(p, a1, a1 + a1);  // 2 a1 + d ~ a1
    return {a1, a1 + w.c, std::move(w.cert)};
}

Certificate unit_absorb(const NatPoly& p, const UnitData& u, const NatPoly& b) {
    if (b.is_constant()) throw std::invalid_argument("unit_absorb requires non-constant b");
    if (b == u.base) return u.cert;
    LeWitness e = highness_oracle(p, b, u.base + b);  // (base + b) + d' ~ b
    Certificate out = shift(reverse(e.cert), u.z);    // b + z ~ base + b + d' + z
    append_chain(out, shift(u.cert, b + e.c));        // ... ~ base + b + d'
    append_chain(out, e.cert);                        // ... ~ b
    return out;
}

LeWitness inverse_witness(const NatPoly& p, const UnitData& u, const NatPoly& h) {
    if (h.is_constant()) throw std::invalid_argument("inverse_witness requires non-constant h");
    return highness_oracle(p, u.z, h);
}

Certificate cancel_high(const NatPoly& p, const Certificate& K, const NatPoly& a1,
                        const NatPoly& a2) {
    if (a1.is_constant() || a2.is_constant())
        throw std::invalid_argument("cancel_high requires non-constant endpoints");
    auto b = nat_sub(K.start, a1);
    if (!b || K.end != a2 + *b)
        throw std::invalid_argument("cancel_high: K is not a certificate for a1 + b ~ a2 + b");

    const NatPoly h = *b + a1;
    const Certificate k_shifted = shift(K, a1);  // a1 + h ~ a2 + h
    const UnitData u = unit_element(p, a1);
    const LeWitness inv = inverse_witness(p, u, h);  // h + h' ~ z

    Certificate out = reverse(u.cert);               // a1 ~ a1 + z
    append_chain(out, reverse(shift(inv.cert, a1)));  // ... ~ a1 + h + h'
    append_chain(out, shift(k_shifted, inv.c));       // ... ~ a2 + h + h'
    append_chain(out, shift(inv.cert, a2));           // ... ~ a2 + z
    append_chain(out, unit_absorb(p, u, a2));         // ... ~ a2
    return out;
}

Prop33Result prop33(const NatPoly& p, const NatPoly& q1, const NatPoly& q2,
                    const IntPoly& rtilde) {
    const IntPoly d = p.as_int() - IntPoly::variable();
    if (q1.as_int() - q2.as_int() != rtilde * d)
        throw std::invalid_argument("prop33: rtilde does not satisfy q1 - q2 = rtilde * (p - x)");

    auto [r1, r2] = pos_neg_split(-rtilde);
    const NatPoly x = NatPoly::variable();
    const NatPoly s = r1 * x + r2 * p;

    // One-step generator chain x ~ p, multiplied through r1 and r2.
    const Certificate gen{p, x, p, {{0, NatPoly(), StepDir::expand}}};
    Certificate phase1 = shift(mul_poly(gen, r1), q1 + r2 * p);           // q1 + s ~ q1 + r1 p + r2 p
    Certificate phase2 = shift(mul_poly(reverse(gen), r2), q1 + r1 * p);  // ... ~ q1 + r1 p + r2 x
    Certificate cert = concat(std::move(phase1), std::move(phase2));
    if (cert.end != q2 + s) throw std::logic_error("prop33: chain does not land on q2 + s");
    return {s, std::move(cert)};
}

Certificate synthesize(const NatPoly& p, const NatPoly& q1, const NatPoly& q2) {
    const HypothesisReport hyp = check_synthesis_preconditions(p, q1, q2);
    if (!hyp.synthesis_ok()) {
        std::ostringstream os;
        os << "hypothesis violation:";
        if (!hyp.constant_term_ok) os << " p(0) = 0;";
        if (!hyp.degree_ok) os << " deg p < 2;";
        if (!hyp.q1_nonconstant) os << " q1 constant;";
        if (!hyp.q2_nonconstant) os << " q2 constant;";
        throw HypothesisViolation(os.str(), hyp);
    }
    if (q1 == q2) return empty_cert(p, q1);

    RingVerdict verdict = check_ring_implication(IntPoly::variable(), p.as_int(), q1.as_int(),
                                                 q2.as_int());
    if (!verdict.holds)
        throw RingImplicationFailure("ring-theoretic implication fails: p - x does not divide "
                                     "q1 - q2 in Z[x]",
                                     verdict);

    Prop33Result step = prop33(p, q1, q2, *verdict.cofactor);
    return cancel_high(p, step.cert, q1, q2);
}

// ---------------------------------------------------------------------------
// Bounded breadth-first search
// ---------------------------------------------------------------------------

namespace {

std::string state_key(const NatPoly& r) {
    std::ostringstream os;
    for (const auto& [e, c] : r.terms()) os << e << ":" << c.get_str() << ",";
    return os.str();
}

struct SearchNode {
    NatPoly term;
    std::size_t parent;  // index into the node pool; self for the root
    LinkStep step;       // step that produced this node from parent
    std::size_t depth;
};

}  // namespace

std::optional<Certificate> bfs_search(const NatPoly& p, const NatPoly& q1, const NatPoly& q2,
                                      const SearchBounds& bounds) {
    if (bounds.max_steps == 0 || bounds.max_degree == 0 || bounds.max_coeff_mass == 0)
        throw std::invalid_argument("bfs_search bounds must be positive");

    auto build = [&](const std::vector<SearchNode>& nodes, std::size_t goal) {
        Certificate cert{p, q1, q2, {}};
        for (std::size_t i = goal; nodes[i].parent != i; i = nodes[i].parent)
            cert.steps.push_back(nodes[i].step);
        std::reverse(cert.steps.begin(), cert.steps.end());
        return cert;
    };

    std::vector<SearchNode> nodes;
    std::unordered_map<std::string, std::size_t> seen;
    nodes.push_back({q1, 0, LinkStep{}, 0});
    seen.emplace(state_key(q1), 0);
    if (q1 == q2) return build(nodes, 0);

    const Int mass_limit(bounds.max_coeff_mass);
    std::deque<std::size_t> frontier{0};

    auto visit = [&](std::size_t from, const NatPoly& succ, LinkStep step) -> std::optional<std::size_t> {
        if (succ.degree() > static_cast<std::int64_t>(bounds.max_degree)) return std::nullopt;
        if (succ.coeff_mass() > mass_limit) return std::nullopt;
        auto [it, inserted] = seen.emplace(state_key(succ), nodes.size());
        if (!inserted) return std::nullopt;
        nodes.push_back({succ, from, std::move(step), nodes[from].depth + 1});
        std::size_t idx = nodes.size() - 1;
        frontier.push_back(idx);
        return succ == q2 ? std::optional<std::size_t>(idx) : std::nullopt;
    };

    while (!frontier.empty()) {
        std::size_t cur = frontier.front();
        frontier.pop_front();
        if (nodes[cur].depth >= bounds.max_steps) continue;
        const NatPoly r = nodes[cur].term;
        const std::int64_t deg = r.degree();
        if (deg < 0) continue;
        for (Exp k = 0; k <= static_cast<Exp>(deg); ++k) {
            if (r.coeff(k + 1) >= 1) {  // expand: r = f + x^(k+1)
                NatPoly f = *nat_sub(r, NatPoly::monomial(1, k + 1));
                NatPoly succ = f + p.shift_up(k);
                if (auto goal = visit(cur, succ, {k, std::move(f), StepDir::expand}))
                    return build(nodes, *goal);
            }
            if (auto f = nat_sub(r, p.shift_up(k))) {  // contract: r = f + x^k p
                NatPoly succ = *f + NatPoly::monomial(1, k + 1);
                if (auto goal = visit(cur, succ, {k, std::move(*f), StepDir::contract}))
                    return build(nodes, *goal);
            }
        }
    }
    return std::nullopt;
}

}  // namespace rigcert
