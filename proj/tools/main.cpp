// rigcert: prove, verify and execute rewrite-chain certificates for
// polynomial identities in rigs.
//
// Exit codes (stable contract):
//   0  success / implication holds / certificate valid / found
//   1  implication fails / certificate invalid / not found
//   2  input error (parse failure, bad flags, unreadable file)
//   3  hypothesis violation

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigcert/chain.hpp"
#include "rigcert/hypotheses.hpp"
#include "rigcert/poly.hpp"
#include "rigcert/rigmodels.hpp"
#include "rigcert/synth.hpp"
#include "rigcert/treeexec.hpp"

namespace {

using namespace rigcert;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kHypothesisError = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const char* kUsage = R"(usage: rigcert <command> [flags]

commands:
  check          -p P -q1 Q1 -q2 Q2 [--json]
                 or -p1 P1 -p2 P2 -q1 Q1 -q2 Q2 [--json]
                 Report the synthesis hypotheses and the ring-theoretic
                 implication p1 = p2 => q1 = q2 (divisibility in Z[x]).
  prove          -p P -q1 Q1 -q2 Q2 (-o FILE | --stdout)
                 Synthesize a certificate for q1 ~ q2 in N[x]/(x = p).
  verify         FILE
                 Replay a certificate file independently of the prover.
  run            --cert FILE (--value V [--direction forward|backward]
                 | --roundtrip N [--seed S] [--max-nodes B])
                 Apply the certificate's bijection to tree values.
  search         -p P -q1 Q1 -q2 Q2 [--max-steps N] [--max-degree N]
                 [--max-mass N] [-o FILE | --stdout]
                 Breadth-first search for a minimal chain within bounds.
  counterexample -p1 P1 -p2 P2 -q1 Q1 -q2 Q2 --model NAME [--bound N]
                 Hunt for a rig element with p1(a) = p2(a), q1(a) != q2(a).
                 Models: degrees, codegrees, cardinals, three.

Polynomials use the text syntax 3 + 2x^3 + 4x^5, (1+x)^9, 16(1+x); values
use slot(child,...) notation, e.g. 0(1(0,0)).
)";

struct Args {
    std::map<std::string, std::string> options;
    std::set<std::string> switches;
    std::vector<std::string> positional;

    std::string require(const std::string& name) const {
        auto it = options.find(name);
        if (it == options.end()) throw UsageError("missing required flag -" + name);
        return it->second;
    }
    std::optional<std::string> get(const std::string& name) const {
        auto it = options.find(name);
        if (it == options.end()) return std::nullopt;
        return it->second;
    }
    bool has(const std::string& name) const { return switches.count(name) > 0; }
};

Args parse_args(int argc, char** argv, int from, const std::set<std::string>& value_flags,
                const std::set<std::string>& switch_flags) {
    Args args;
    for (int i = from; i < argc; ++i) {
        std::string tok = argv[i];
        if (tok.size() < 2 || tok[0] != '-' || std::isdigit(static_cast<unsigned char>(tok[1]))) {
            args.positional.push_back(tok);
            continue;
        }
        std::string name = tok.substr(tok[1] == '-' ? 2 : 1);
        std::string inline_value;
        bool has_inline = false;
        if (auto eq = name.find('='); eq != std::string::npos) {
            inline_value = name.substr(eq + 1);
            name = name.substr(0, eq);
            has_inline = true;
        }
        if (switch_flags.count(name)) {
            if (has_inline) throw UsageError("flag --" + name + " takes no value");
            args.switches.insert(name);
            continue;
        }
        if (!value_flags.count(name)) throw UsageError("unknown flag " + tok);
        if (has_inline) {
            args.options[name] = inline_value;
        } else {
            if (i + 1 >= argc) throw UsageError("flag " + tok + " needs a value");
            args.options[name] = argv[++i];
        }
    }
    return args;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(what);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + ": '" + text + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const Args& args, const std::string& content, const std::string& what) {
    if (args.has("stdout")) {
        std::cout << content;
        return;
    }
    auto path = args.get("o");
    if (!path) path = args.get("out");
    if (!path) throw UsageError(what + ": pass -o FILE or --stdout");
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw UsageError("cannot write file: " + *path);
    out << content;
    std::cerr << what << " written to " << *path << "\n";
}

json pairs_json(const TermPairs& pairs) {
    json out = json::array();
    for (const auto& [e, c] : pairs) out.push_back(json::array({e, c}));
    return out;
}

void print_flag(const char* label, bool ok, const std::string& detail = "") {
    std::cout << "  " << label << ": " << (ok ? "ok" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int cmd_check(const Args& args) {
    const bool general = args.get("p1").has_value() || args.get("p2").has_value();
    NatPoly p1, p2;
    if (general) {
        p1 = parse_nat_poly(args.require("p1"));
        p2 = parse_nat_poly(args.require("p2"));
    } else {
        p1 = NatPoly::variable();
        p2 = parse_nat_poly(args.require("p"));
    }
    const NatPoly q1 = parse_nat_poly(args.require("q1"));
    const NatPoly q2 = parse_nat_poly(args.require("q2"));

    const ComplexRouteResult route =
        check_complex_route(p1.as_int(), p2.as_int(), q1.as_int(), q2.as_int());
    HypothesisReport hyp;
    if (!general) hyp = check_synthesis_preconditions(p2, q1, q2);

    const IntPoly d = p2.as_int() - p1.as_int();
    int exit_code = kOk;
    if (!general && !hyp.synthesis_ok())
        exit_code = kHypothesisError;
    else if (!route.verdict.holds)
        exit_code = kFail;

    if (args.has("json")) {
        json j;
        j["p1"] = pairs_json(to_pairs(p1));
        j["p2"] = pairs_json(to_pairs(p2));
        j["q1"] = pairs_json(to_pairs(q1));
        j["q2"] = pairs_json(to_pairs(q2));
        j["divisor"] = pairs_json(to_pairs(d));
        if (!general) {
            j["hypotheses"] = {{"constant_term_ok", hyp.constant_term_ok},
                               {"degree_ok", hyp.degree_ok},
                               {"q1_nonconstant", hyp.q1_nonconstant},
                               {"q2_nonconstant", hyp.q2_nonconstant}};
        }
        j["complex_route"] = {{"primitive", route.report.primitive},
                              {"squarefree", route.report.squarefree},
                              {"roots_condition", route.report.roots_condition}};
        j["ring"] = {{"holds", route.verdict.holds}};
        if (route.verdict.cofactor)
            j["ring"]["cofactor"] = pairs_json(to_pairs(*route.verdict.cofactor));
        if (route.verdict.remainder)
            j["ring"]["remainder"] = to_string(*route.verdict.remainder);
        j["exit"] = exit_code;
        std::cout << j.dump(2) << "\n";
        return exit_code;
    }

    if (general)
        std::cout << "checking " << to_string(p1) << " = " << to_string(p2) << "  =>  ";
    else
        std::cout << "checking x = " << to_string(p2) << "  =>  ";
    std::cout << to_string(q1) << " = " << to_string(q2) << "\n";
    if (!general) {
        std::cout << "synthesis hypotheses:\n";
        print_flag("p has non-zero constant term", hyp.constant_term_ok);
        print_flag("p has degree >= 2", hyp.degree_ok);
        print_flag("q1 non-constant", hyp.q1_nonconstant);
        print_flag("q2 non-constant", hyp.q2_nonconstant);
    }
    std::cout << "complex route for d = " << to_string(d) << ":\n";
    print_flag("d primitive", route.report.primitive);
    print_flag("d squarefree", route.report.squarefree);
    print_flag("every root t of d has q1(t) = q2(t)", route.report.roots_condition);
    if (route.verdict.holds) {
        std::cout << "ring implication holds; cofactor = "
                  << to_string(*route.verdict.cofactor) << "\n";
    } else if (route.verdict.remainder && !route.verdict.remainder->is_zero()) {
        std::cout << "ring implication fails; remainder = "
                  << to_string(*route.verdict.remainder) << "\n";
    } else {
        std::cout << "ring implication fails; quotient "
                  << to_string(*route.verdict.rational_quotient) << " is not integral\n";
    }
    return exit_code;
}

// ---------------------------------------------------------------------------
// prove
// ---------------------------------------------------------------------------

int cmd_prove(const Args& args) {
    const NatPoly p = parse_nat_poly(args.require("p"));
    const NatPoly q1 = parse_nat_poly(args.require("q1"));
    const NatPoly q2 = parse_nat_poly(args.require("q2"));

    Certificate cert;
    try {
        cert = synthesize(p, q1, q2);
    } catch (const HypothesisViolation& e) {
        std::cerr << "rigcert: " << e.what() << "\n";
        return kHypothesisError;
    } catch (const RingImplicationFailure& e) {
        std::cerr << "rigcert: " << e.what() << "\n";
        return kFail;
    }
    write_output(args, serialize(cert), "certificate");
    std::cerr << "steps: " << cert.steps.size() << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const Args& args) {
    std::string path;
    if (!args.positional.empty())
        path = args.positional.front();
    else
        path = args.require("cert");
    const Certificate cert = parse_certificate(read_file(path));
    const VerifyResult r = verify(cert);
    if (r.ok) {
        std::cout << "valid: " << to_string(cert.start) << " ~ " << to_string(cert.end) << " in "
                  << cert.steps.size() << " steps over p = " << to_string(cert.p) << "\n";
        return kOk;
    }
    std::cout << "invalid at step " << *r.first_failure << "\n";
    return kFail;
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

int cmd_run(const Args& args) {
    const Certificate cert = parse_certificate(read_file(args.require("cert")));
    BijectionExecutor exec(cert);

    if (auto roundtrips = args.get("roundtrip")) {
        const std::size_t n = parse_size(*roundtrips, "roundtrip count");
        const std::uint64_t seed =
            args.get("seed") ? parse_size(*args.get("seed"), "seed") : 20060317;
        const std::size_t bound =
            args.get("max-nodes") ? parse_size(*args.get("max-nodes"), "max-nodes") : 50;
        std::size_t failures = 0;
        for (std::size_t i = 0; i < n; ++i) {
            PolyValue v = random_value(cert.start, cert.p, bound, seed + i);
            if (exec.apply(exec.apply(v, Direction::forward), Direction::backward) != v)
                ++failures;
            PolyValue w = random_value(cert.end, cert.p, bound, seed + n + i);
            if (exec.apply(exec.apply(w, Direction::backward), Direction::forward) != w)
                ++failures;
        }
        std::cout << (failures == 0 ? "pass" : "FAIL") << ": " << n
                  << " roundtrips in each direction, " << failures << " failures\n";
        return failures == 0 ? kOk : kFail;
    }

    const std::string value_text = args.require("value");
    Direction dir = Direction::forward;
    if (auto d = args.get("direction")) {
        if (*d == "forward")
            dir = Direction::forward;
        else if (*d == "backward")
            dir = Direction::backward;
        else
            throw UsageError("--direction must be forward or backward");
    }
    const NatPoly& endpoint = dir == Direction::forward ? cert.start : cert.end;
    const PolyValue v = parse_value(value_text, endpoint, cert.p);
    std::cout << to_string(exec.apply(v, dir)) << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

int cmd_search(const Args& args) {
    const NatPoly p = parse_nat_poly(args.require("p"));
    const NatPoly q1 = parse_nat_poly(args.require("q1"));
    const NatPoly q2 = parse_nat_poly(args.require("q2"));
    SearchBounds bounds;
    bounds.max_steps = args.get("max-steps") ? parse_size(*args.get("max-steps"), "max-steps") : 18;
    bounds.max_degree =
        args.get("max-degree") ? parse_size(*args.get("max-degree"), "max-degree") : 8;
    bounds.max_coeff_mass = args.get("max-mass") ? parse_size(*args.get("max-mass"), "max-mass") : 64;

    const auto found = bfs_search(p, q1, q2, bounds);
    if (!found) {
        std::cout << "not found within bounds (max-steps " << bounds.max_steps << ", max-degree "
                  << bounds.max_degree << ", max-mass " << bounds.max_coeff_mass << ")\n";
        return kFail;
    }
    std::cout << "found certificate with " << found->steps.size() << " steps:\n";
    for (const NatPoly& term : replay(*found)) std::cout << "  " << to_string(term) << "\n";
    if (args.has("stdout") || args.get("o") || args.get("out"))
        write_output(args, serialize(*found), "certificate");
    return kOk;
}

// ---------------------------------------------------------------------------
// counterexample
// ---------------------------------------------------------------------------

template <typename M>
int hunt(const M& model, const NatPoly& p1, const NatPoly& p2, const NatPoly& q1,
         const NatPoly& q2, std::size_t bound) {
    auto found = find_counterexample(p1, p2, q1, q2, model, bound);
    if (found) {
        std::cout << "counterexample: x = " << model.to_string(*found) << " in the rig of "
                  << model.name() << "\n";
        return kOk;
    }
    std::cout << "none within bound " << bound << "\n";
    return kFail;
}

int cmd_counterexample(const Args& args) {
    const NatPoly p1 = parse_nat_poly(args.require("p1"));
    const NatPoly p2 = parse_nat_poly(args.require("p2"));
    const NatPoly q1 = parse_nat_poly(args.require("q1"));
    const NatPoly q2 = parse_nat_poly(args.require("q2"));
    const std::string model = args.require("model");
    const std::size_t bound = args.get("bound") ? parse_size(*args.get("bound"), "bound") : 32;

    if (model == "degrees") return hunt(DegreeRig{}, p1, p2, q1, q2, bound);
    if (model == "codegrees") return hunt(CodegreeRig{}, p1, p2, q1, q2, bound);
    if (model == "cardinals") return hunt(CardinalRig{}, p1, p2, q1, q2, bound);
    if (model == "three") return hunt(ThreeRig{}, p1, p2, q1, q2, bound);
    throw UsageError("unknown model '" + model + "' (degrees, codegrees, cardinals, three)");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << kUsage;
        return kInputError;
    }
    const std::string command = argv[1];
    if (command == "--help" || command == "-h" || command == "help") {
        std::cout << kUsage;
        return kOk;
    }

    try {
        if (command == "check") {
            Args args = parse_args(argc, argv, 2, {"p", "p1", "p2", "q1", "q2"}, {"json"});
            return cmd_check(args);
        }
        if (command == "prove") {
            Args args = parse_args(argc, argv, 2, {"p", "q1", "q2", "o", "out"}, {"stdout"});
            return cmd_prove(args);
        }
        if (command == "verify") {
            Args args = parse_args(argc, argv, 2, {"cert"}, {});
            return cmd_verify(args);
        }
        if (command == "run") {
            Args args = parse_args(argc, argv, 2,
                                   {"cert", "value", "direction", "roundtrip", "seed", "max-nodes"},
                                   {});
            return cmd_run(args);
        }
        if (command == "search") {
            Args args = parse_args(argc, argv, 2,
                                   {"p", "q1", "q2", "max-steps", "max-degree", "max-mass", "o",
                                    "out"},
                                   {"stdout"});
            return cmd_search(args);
        }
        if (command == "counterexample") {
            Args args = parse_args(argc, argv, 2, {"p1", "p2", "q1", "q2", "model", "bound"}, {});
            return cmd_counterexample(args);
        }
        std::cerr << "rigcert: unknown command '" << command << "'\n" << kUsage;
        return kInputError;
    } catch (const UsageError& e) {
        std::cerr << "rigcert: " << e.what() << "\n";
        return kInputError;
    } catch (const ParseError& e) {
        std::cerr << "rigcert: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "rigcert: " << e.what() << "\n";
        return kInputError;
    }
}
