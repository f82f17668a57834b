#include "rigcert/chain.hpp"

#include <json.hpp>

namespace rigcert {

namespace {

/// First exponent at which a and b differ; a and b are assumed unequal.
Exp first_difference(const IntPoly& a, const IntPoly& b) {
    IntPoly d = a - b;
    return d.terms().begin()->first;
}

NatPoly step_source(const NatPoly& p, const LinkStep& step) {
    if (step.dir == StepDir::expand) return step.f + NatPoly::monomial(1, step.k + 1);
    return step.f + p.shift_up(step.k);
}

NatPoly step_target(const NatPoly& p, const LinkStep& step) {
    if (step.dir == StepDir::expand) return step.f + p.shift_up(step.k);
    return step.f + NatPoly::monomial(1, step.k + 1);
}

}  // namespace

std::optional<NatPoly> try_apply_step(const NatPoly& r, const NatPoly& p, const LinkStep& step) {
    if (r != step_source(p, step)) return std::nullopt;
    return step_target(p, step);
}

NatPoly apply_step(const NatPoly& r, const NatPoly& p, const LinkStep& step) {
    NatPoly expected = step_source(p, step);
    if (r != expected) {
        Exp e = first_difference(r.as_int(), expected.as_int());
        throw StepMismatch("term does not match the step's decomposition (differs at x^" +
                               std::to_string(e) + ")",
                           e);
    }
    return step_target(p, step);
}

VerifyResult verify(const Certificate& cert) {
    NatPoly current = cert.start;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        auto next = try_apply_step(current, cert.p, cert.steps[i]);
        if (!next) return {false, i};
        current = std::move(*next);
    }
    if (current != cert.end) return {false, cert.steps.size()};
    return {true, std::nullopt};
}

std::vector<NatPoly> replay(const Certificate& cert) {
    std::vector<NatPoly> terms;
    terms.reserve(cert.steps.size() + 1);
    terms.push_back(cert.start);
    for (const auto& step : cert.steps)
        terms.push_back(apply_step(terms.back(), cert.p, step));
    if (terms.back() != cert.end)
        throw StepMismatch("replay does not land on the stated end term",
                           first_difference(terms.back().as_int(), cert.end.as_int()));
    return terms;
}

Certificate shift(const Certificate& cert, const NatPoly& g) {
    Certificate out;
    out.p = cert.p;
    out.start = cert.start + g;
    out.end = cert.end + g;
    out.steps.reserve(cert.steps.size());
    for (const auto& s : cert.steps) out.steps.push_back({s.k, s.f + g, s.dir});
    return out;
}

Certificate mul_monomial(const Certificate& cert, Exp j) {
    Certificate out;
    out.p = cert.p;
    out.start = cert.start.shift_up(j);
    out.end = cert.end.shift_up(j);
    out.steps.reserve(cert.steps.size());
    for (const auto& s : cert.steps) out.steps.push_back({s.k + j, s.f.shift_up(j), s.dir});
    return out;
}

Certificate mul_poly(const Certificate& cert, const NatPoly& g) {
    const std::vector<Exp> units = g.unit_exponents();
    Certificate out;
    out.p = cert.p;
    out.start = cert.start * g;
    out.end = cert.end * g;
    out.steps.reserve(cert.steps.size() * units.size());

    NatPoly current = out.start;
    for (const auto& s : cert.steps) {
        for (Exp j : units) {
            LinkStep sub;
            sub.k = s.k + j;
            sub.dir = s.dir;
            NatPoly active = sub.dir == StepDir::expand ? NatPoly::monomial(1, sub.k + 1)
                                                        : cert.p.shift_up(sub.k);
            auto spectator = nat_sub(current, active);
            if (!spectator) throw std::logic_error("mul_poly: input certificate is not valid");
            sub.f = std::move(*spectator);
            current = step_target(cert.p, sub);
            out.steps.push_back(std::move(sub));
        }
    }
    if (current != out.end) throw std::logic_error("mul_poly: input certificate is not valid");
    return out;
}

Certificate concat(const Certificate& a, const Certificate& b) {
    if (a.p != b.p) throw std::invalid_argument("concat: certificates use different generators");
    if (a.end != b.start) throw std::invalid_argument("concat: endpoint mismatch");
    Certificate out = a;
    out.end = b.end;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

Certificate reverse(const Certificate& cert) {
    Certificate out;
    out.p = cert.p;
    out.start = cert.end;
    out.end = cert.start;
    out.steps.reserve(cert.steps.size());
    for (auto it = cert.steps.rbegin(); it != cert.steps.rend(); ++it) {
        StepDir flipped = it->dir == StepDir::expand ? StepDir::contract : StepDir::expand;
        out.steps.push_back({it->k, it->f, flipped});
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON file format
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json pairs_to_json(const NatPoly& p) {
    json out = json::array();
    for (const auto& [e, text] : to_pairs(p)) out.push_back(json::array({e, text}));
    return out;
}

NatPoly poly_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a term list", 0);
    TermPairs pairs;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
            !item[1].is_string())
            throw ParseError(where + ": each term must be [exponent, coefficient-string]", 0);
        pairs.emplace_back(item[0].get<Exp>(), item[1].get<std::string>());
    }
    try {
        return nat_poly_from_pairs(pairs);
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), e.position());
    }
}

}  // namespace

std::string serialize(const Certificate& cert) {
    json j;
    j["p"] = pairs_to_json(cert.p);
    j["start"] = pairs_to_json(cert.start);
    j["end"] = pairs_to_json(cert.end);
    json steps = json::array();
    for (const auto& s : cert.steps) {
        steps.push_back({{"k", s.k},
                         {"f", pairs_to_json(s.f)},
                         {"dir", s.dir == StepDir::expand ? "expand" : "contract"}});
    }
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object()) throw ParseError("certificate must be a JSON object", 0);
    for (const char* key : {"p", "start", "end", "steps"})
        if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'", 0);

    Certificate cert;
    cert.p = poly_from_json(j["p"], "p");
    cert.start = poly_from_json(j["start"], "start");
    cert.end = poly_from_json(j["end"], "end");
    if (!j["steps"].is_array()) throw ParseError("steps: expected a list", 0);
    std::size_t index = 0;
    for (const auto& js : j["steps"]) {
        std::string where = "steps[" + std::to_string(index) + "]";
        if (!js.is_object() || !js.contains("k") || !js.contains("f") || !js.contains("dir"))
            throw ParseError(where + ": expected {k, f, dir}", 0);
        if (!js["k"].is_number_unsigned()) throw ParseError(where + ".k: expected a natural", 0);
        LinkStep step;
        step.k = js["k"].get<Exp>();
        step.f = poly_from_json(js["f"], where + ".f");
        std::string dir = js["dir"].is_string() ? js["dir"].get<std::string>() : "";
        if (dir == "expand")
            step.dir = StepDir::expand;
        else if (dir == "contract")
            step.dir = StepDir::contract;
        else
            throw ParseError(where + ".dir: expected \"expand\" or \"contract\"", 0);
        cert.steps.push_back(std::move(step));
        ++index;
    }
    return cert;
}

}  // namespace rigcert
