#include "rigcert/treeexec.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace rigcert {

namespace {

/// Number of units of g with exponent strictly below e, as a checked size_t.
std::size_t offset_below(const NatPoly& g, Exp e) {
    Int acc(0);
    for (const auto& [ge, gc] : g.terms()) {
        if (ge >= e) break;
        acc += gc;
    }
    if (!acc.fits_ulong_p()) throw std::length_error("unit offset exceeds addressable range");
    return mpz_get_ui(acc.get_mpz_t());
}

struct UnitLoc {
    Exp exponent = 0;
    std::size_t copy = 0;  // index within the exponent's block
};

UnitLoc locate_unit(const NatPoly& g, std::size_t slot) {
    Int acc(0);
    for (const auto& [e, c] : g.terms()) {
        Int next = acc + c;
        if (next > slot) {
            Int copy = Int(static_cast<unsigned long>(slot)) - acc;
            return {e, mpz_get_ui(copy.get_mpz_t())};
        }
        acc = std::move(next);
    }
    throw std::out_of_range("slot out of range for the unit decomposition");
}

std::size_t coeff_as_size(const NatPoly& g, Exp e) {
    Int c = g.coeff(e);
    if (!c.fits_ulong_p()) throw std::length_error("coefficient exceeds addressable range");
    return mpz_get_ui(c.get_mpz_t());
}

void require_tree_shape(const NatPoly& p) {
    if (p.constant_term() < 1)
        throw std::invalid_argument("p(0) must be >= 1 so that trees exist");
}

}  // namespace

bool valid_tree(const Tree& t, const NatPoly& p) {
    const std::vector<Exp> units = p.unit_exponents();
    auto check = [&](const Tree& node, const auto& self) -> bool {
        if (node.slot >= units.size()) return false;
        if (node.children.size() != units[node.slot]) return false;
        for (const auto& c : node.children)
            if (!self(c, self)) return false;
        return true;
    };
    return check(t, check);
}

bool valid_value(const PolyValue& v, const NatPoly& p) {
    const std::vector<Exp> units = v.q.unit_exponents();
    if (v.slot >= units.size()) return false;
    if (v.tuple.size() != units[v.slot]) return false;
    for (const auto& t : v.tuple)
        if (!valid_tree(t, p)) return false;
    return true;
}

PolyValue alpha(const Tree& t, const NatPoly& p) {
    require_tree_shape(p);
    if (!valid_tree(t, p)) throw std::invalid_argument("alpha: tree does not match p's signature");
    return {p, t.slot, t.children};
}

Tree alpha_inv(const PolyValue& v, const NatPoly& p) {
    if (v.q != p) throw std::invalid_argument("alpha_inv: value is not over p");
    if (!valid_value(v, p)) throw std::invalid_argument("alpha_inv: malformed value");
    return {v.slot, v.tuple};
}

// ---------------------------------------------------------------------------
// Step-wise bijection
// ---------------------------------------------------------------------------

BijectionExecutor::BijectionExecutor(Certificate cert) : cert_(std::move(cert)) {
    VerifyResult r = verify(cert_);
    if (!r.ok)
        throw std::invalid_argument("certificate does not verify (step " +
                                    (r.first_failure ? std::to_string(*r.first_failure) : "?") +
                                    ")");
    terms_ = replay(cert_);
}

// One link step f + x^k * x ~ f + x^k * p, as a bijection between the unit
// summands of the two sides. Units of the spectator f map identically;
// within each exponent block the spectator copies come first and the
// active copies follow, in p's decomposition order.
PolyValue BijectionExecutor::apply_step_value(PolyValue v, std::size_t index,
                                              bool forwards) const {
    const LinkStep& step = cert_.steps[index];
    const NatPoly& source = terms_[forwards ? index : index + 1];
    const NatPoly& target = terms_[forwards ? index + 1 : index];
    const bool expanding = (step.dir == StepDir::expand) == forwards;
    const NatPoly& p = cert_.p;
    const Exp k = step.k;

    const UnitLoc loc = locate_unit(source, v.slot);
    PolyValue out;
    out.q = target;

    if (expanding) {
        // source = f + x^(k+1), target = f + x^k p
        const std::size_t spectators = coeff_as_size(step.f, loc.exponent);
        if (loc.exponent != k + 1 || loc.copy < spectators) {
            out.slot = offset_below(target, loc.exponent) + loc.copy;
            out.tuple = std::move(v.tuple);
            return out;
        }
        // active unit: expand the last tree of the (k+1)-tuple by alpha
        Tree last = std::move(v.tuple.back());
        v.tuple.pop_back();
        const std::vector<Exp> p_units = p.unit_exponents();
        if (last.slot >= p_units.size())
            throw std::out_of_range("tree slot out of range for p");
        const Exp ej = p_units[last.slot];
        const std::size_t copy_in_p = last.slot - offset_below(p, ej);
        const Exp target_exp = k + ej;
        out.slot = offset_below(target, target_exp) + coeff_as_size(step.f, target_exp) +
                   copy_in_p;
        out.tuple = std::move(v.tuple);
        out.tuple.insert(out.tuple.end(), std::make_move_iterator(last.children.begin()),
                         std::make_move_iterator(last.children.end()));
        return out;
    }

    // contracting: source = f + x^k p, target = f + x^(k+1)
    const std::size_t spectators = coeff_as_size(step.f, loc.exponent);
    if (loc.copy < spectators) {
        out.slot = offset_below(target, loc.exponent) + loc.copy;
        out.tuple = std::move(v.tuple);
        return out;
    }
    // active unit: repack the last (exponent - k) trees into one node
    if (loc.exponent < k) throw std::logic_error("active unit below the monomial shift");
    const Exp ej = loc.exponent - k;
    const std::size_t copy_in_p = loc.copy - spectators;
    const std::size_t node_slot = offset_below(p, ej) + copy_in_p;
    const std::size_t keep = static_cast<std::size_t>(k);
    Tree node;
    node.slot = node_slot;
    node.children.assign(std::make_move_iterator(v.tuple.begin() + keep),
                         std::make_move_iterator(v.tuple.end()));
    out.tuple.assign(std::make_move_iterator(v.tuple.begin()),
                     std::make_move_iterator(v.tuple.begin() + keep));
    out.tuple.push_back(std::move(node));
    out.slot = offset_below(target, k + 1) + coeff_as_size(step.f, k + 1);
    return out;
}

PolyValue BijectionExecutor::apply(const PolyValue& v, Direction dir) const {
    const bool forwards = dir == Direction::forward;
    const NatPoly& endpoint = forwards ? cert_.start : cert_.end;
    if (v.q != endpoint)
        throw std::invalid_argument("value is not over the certificate's endpoint");
    if (!valid_value(v, cert_.p)) throw std::invalid_argument("malformed value");

    PolyValue cur = v;
    if (forwards) {
        for (std::size_t i = 0; i < cert_.steps.size(); ++i)
            cur = apply_step_value(std::move(cur), i, true);
    } else {
        for (std::size_t i = cert_.steps.size(); i-- > 0;)
            cur = apply_step_value(std::move(cur), i, false);
    }
    return cur;
}

PolyValue apply_bijection(const Certificate& cert, const PolyValue& v, Direction dir) {
    return BijectionExecutor(cert).apply(v, dir);
}

// ---------------------------------------------------------------------------
// Generation and enumeration
// ---------------------------------------------------------------------------

namespace {

Tree random_tree_with(const std::vector<Exp>& units, std::mt19937_64& rng, std::size_t budget) {
    std::vector<std::size_t> feasible;
    for (std::size_t j = 0; j < units.size(); ++j)
        if (units[j] + 1 <= budget) feasible.push_back(j);
    const std::size_t slot = feasible[rng() % feasible.size()];
    const std::size_t arity = units[slot];
    Tree t;
    t.slot = slot;
    std::size_t remaining = budget - 1;
    for (std::size_t i = 0; i < arity; ++i) {
        const std::size_t pending = arity - 1 - i;
        const std::size_t child_budget =
            i + 1 == arity ? remaining : 1 + rng() % (remaining - pending);
        t.children.push_back(random_tree_with(units, rng, child_budget));
        remaining -= child_budget;
    }
    return t;
}

}  // namespace

Tree random_tree(const NatPoly& p, std::size_t size_bound, std::uint64_t seed) {
    require_tree_shape(p);
    if (size_bound == 0) throw std::invalid_argument("size bound must be >= 1");
    const std::vector<Exp> units = p.unit_exponents();
    std::mt19937_64 rng(seed);
    return random_tree_with(units, rng, size_bound);
}

PolyValue random_value(const NatPoly& q, const NatPoly& p, std::size_t tree_size_bound,
                       std::uint64_t seed) {
    require_tree_shape(p);
    if (q.is_zero()) throw std::invalid_argument("q = 0 has no values");
    if (tree_size_bound == 0) throw std::invalid_argument("size bound must be >= 1");
    const std::vector<Exp> q_units = q.unit_exponents();
    const std::vector<Exp> p_units = p.unit_exponents();
    std::mt19937_64 rng(seed);
    PolyValue v;
    v.q = q;
    v.slot = rng() % q_units.size();
    const std::size_t arity = q_units[v.slot];
    for (std::size_t i = 0; i < arity; ++i) {
        std::size_t budget = 1 + rng() % tree_size_bound;
        v.tuple.push_back(random_tree_with(p_units, rng, budget));
    }
    return v;
}

namespace {

/// Positive compositions of total into parts, lexicographic.
void for_each_composition(std::size_t total, std::size_t parts,
                          std::vector<std::size_t>& prefix,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (parts == 0) {
        if (total == 0) fn(prefix);
        return;
    }
    if (total < parts) return;
    for (std::size_t first = 1; first + (parts - 1) <= total; ++first) {
        prefix.push_back(first);
        for_each_composition(total - first, parts - 1, prefix, fn);
        prefix.pop_back();
    }
}

class TreeEnumerator {
public:
    explicit TreeEnumerator(const NatPoly& p) : units_(p.unit_exponents()) {}

    const std::vector<Tree>& of_size(std::size_t n) {
        auto it = memo_.find(n);
        if (it != memo_.end()) return it->second;
        std::vector<Tree> out;
        for (std::size_t slot = 0; slot < units_.size(); ++slot) {
            const std::size_t arity = units_[slot];
            if (arity == 0) {
                if (n == 1) out.push_back({slot, {}});
                continue;
            }
            if (n < 1 + arity) continue;
            std::vector<std::size_t> prefix;
            for_each_composition(n - 1, arity, prefix, [&](const std::vector<std::size_t>& sizes) {
                std::vector<Tree> partial;
                product(slot, sizes, 0, partial, out);
            });
        }
        return memo_.emplace(n, std::move(out)).first->second;
    }

private:
    void product(std::size_t slot, const std::vector<std::size_t>& sizes, std::size_t at,
                 std::vector<Tree>& partial, std::vector<Tree>& out) {
        if (at == sizes.size()) {
            out.push_back({slot, partial});
            return;
        }
        for (const Tree& t : of_size(sizes[at])) {
            partial.push_back(t);
            product(slot, sizes, at + 1, partial, out);
            partial.pop_back();
        }
    }

    std::vector<Exp> units_;
    std::map<std::size_t, std::vector<Tree>> memo_;
};

}  // namespace

std::vector<Tree> enumerate_trees(const NatPoly& p, std::size_t max_nodes) {
    require_tree_shape(p);
    TreeEnumerator en(p);
    std::vector<Tree> out;
    for (std::size_t n = 1; n <= max_nodes; ++n)
        for (const Tree& t : en.of_size(n)) out.push_back(t);
    return out;
}

std::vector<PolyValue> enumerate_values(const NatPoly& q, const NatPoly& p,
                                        std::size_t max_nodes) {
    require_tree_shape(p);
    TreeEnumerator en(p);
    const std::vector<Exp> units = q.unit_exponents();
    std::vector<PolyValue> out;
    for (std::size_t slot = 0; slot < units.size(); ++slot) {
        const std::size_t arity = units[slot];
        if (arity == 0) {
            out.push_back({q, slot, {}});
            continue;
        }
        for (std::size_t total = arity; total <= max_nodes; ++total) {
            std::vector<std::size_t> prefix;
            for_each_composition(total, arity, prefix, [&](const std::vector<std::size_t>& sizes) {
                std::vector<Tree> partial;
                auto emit = [&](const auto& self, std::size_t at) -> void {
                    if (at == sizes.size()) {
                        out.push_back({q, slot, partial});
                        return;
                    }
                    for (const Tree& t : en.of_size(sizes[at])) {
                        partial.push_back(t);
                        self(self, at + 1);
                        partial.pop_back();
                    }
                };
                emit(emit, 0);
            });
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace {

void print_tree(std::ostringstream& os, const Tree& t) {
    os << t.slot;
    if (!t.children.empty()) {
        os << "(";
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            if (i) os << ",";
            print_tree(os, t.children[i]);
        }
        os << ")";
    }
}

class ValueParser {
public:
    explicit ValueParser(std::string_view text) : text_(text) {}

    Tree parse_tree_text() {
        Tree t = node();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return t;
    }

    std::pair<std::size_t, std::vector<Tree>> parse_value_text() {
        skip_ws();
        std::size_t slot = number();
        std::vector<Tree> tuple;
        skip_ws();
        if (consume('(')) {
            do {
                tuple.push_back(node());
                skip_ws();
            } while (consume(','));
            if (!consume(')')) fail("expected ')'");
        }
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return {slot, std::move(tuple)};
    }

private:
    Tree node() {
        skip_ws();
        Tree t;
        t.slot = number();
        skip_ws();
        if (consume('(')) {
            do {
                t.children.push_back(node());
                skip_ws();
            } while (consume(','));
            if (!consume(')')) fail("expected ')'");
        }
        return t;
    }

    std::size_t number() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a slot number");
        std::size_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            ++pos_;
        }
        return value;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("value syntax error at offset " + std::to_string(pos_) + ": " + msg,
                         pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Tree& t) {
    std::ostringstream os;
    print_tree(os, t);
    return os.str();
}

std::string to_string(const PolyValue& v) {
    std::ostringstream os;
    os << v.slot;
    if (!v.tuple.empty()) {
        os << "(";
        for (std::size_t i = 0; i < v.tuple.size(); ++i) {
            if (i) os << ",";
            print_tree(os, v.tuple[i]);
        }
        os << ")";
    }
    return os.str();
}

Tree parse_tree(std::string_view text, const NatPoly& p) {
    Tree t = ValueParser(text).parse_tree_text();
    if (!valid_tree(t, p)) throw ParseError("tree does not match p's signature", 0);
    return t;
}

PolyValue parse_value(std::string_view text, const NatPoly& q, const NatPoly& p) {
    auto [slot, tuple] = ValueParser(text).parse_value_text();
    PolyValue v{q, slot, std::move(tuple)};
    if (!valid_value(v, p)) throw ParseError("value does not match q's signature over p", 0);
    return v;
}

}  // namespace rigcert
