#include <doctest.h>

#include <algorithm>

#include "rigcert/rigmodels.hpp"
#include "testutil.hpp"

using namespace rigcert;
using namespace testutil;

namespace {

NatPoly np(const char* text) { return parse_nat_poly(text); }

/// Exhaustive rig-axiom check over a finite slice of the carrier. The slice
/// need not be closed: operation results are only compared, never iterated.
template <typename M>
void check_rig_axioms(const M& m, const std::vector<typename M::Elem>& elems) {
    for (const auto& a : elems) {
        CHECK(m.eq(m.add(a, m.zero()), a));
        CHECK(m.eq(m.mul(a, m.one()), a));
        CHECK(m.eq(m.mul(m.one(), a), a));
        CHECK(m.eq(m.mul(a, m.zero()), m.zero()));
        CHECK(m.eq(m.mul(m.zero(), a), m.zero()));
        for (const auto& b : elems) {
            CHECK(m.eq(m.add(a, b), m.add(b, a)));
            for (const auto& c : elems) {
                CHECK(m.eq(m.add(m.add(a, b), c), m.add(a, m.add(b, c))));
                CHECK(m.eq(m.mul(m.mul(a, b), c), m.mul(a, m.mul(b, c))));
                CHECK(m.eq(m.mul(a, m.add(b, c)), m.add(m.mul(a, b), m.mul(a, c))));
                CHECK(m.eq(m.mul(m.add(b, c), a), m.add(m.mul(b, a), m.mul(c, a))));
            }
        }
    }
}

// Test-only finite rigs for high_set.
struct TrivialRig {
    using Elem = int;
    Elem zero() const { return 0; }
    Elem one() const { return 0; }
    Elem add(Elem, Elem) const { return 0; }
    Elem mul(Elem, Elem) const { return 0; }
    Elem from_int(const Int&) const { return 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::vector<Elem> carrier() const { return {0}; }
};

// The 2-element Boolean distributive lattice: + is max, . is min.
struct BoolLattice {
    using Elem = bool;
    Elem zero() const { return false; }
    Elem one() const { return true; }
    Elem add(Elem a, Elem b) const { return a || b; }
    Elem mul(Elem a, Elem b) const { return a && b; }
    Elem from_int(const Int& n) const {
        if (n < 0) throw std::domain_error("no negatives");
        return n != 0;
    }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::vector<Elem> carrier() const { return {false, true}; }
};

}  // namespace

TEST_CASE("degree rig operations") {
    DegreeRig m;
    CHECK(m.eq(m.add(DegreeElem{1}, DegreeElem{0}), DegreeElem{1}));  // L^1 + L^0 = L^1
    CHECK(m.eq(m.mul(DegreeElem{2}, DegreeElem{3}), DegreeElem{5}));
    CHECK(m.eq(m.add(m.zero(), DegreeElem{4}), DegreeElem{4}));
    CHECK(m.eq(m.mul(m.zero(), DegreeElem{4}), m.zero()));
    CHECK(m.to_string(m.zero()) == "L^-inf");
}

TEST_CASE("codegree rig operations are the formal dual") {
    CodegreeRig m;
    CHECK(m.eq(m.add(CodegreeElem{1}, CodegreeElem{2}), CodegreeElem{1}));  // eps^1 + eps^2
    CHECK(m.eq(m.mul(CodegreeElem{1}, CodegreeElem{2}), CodegreeElem{3}));
    CHECK(m.eq(m.add(m.zero(), CodegreeElem{5}), CodegreeElem{5}));
}

TEST_CASE("cardinal rig operations") {
    CardinalRig m;
    CardElem aleph{std::nullopt};
    CHECK(m.eq(m.add(m.mul(aleph, aleph), m.one()), aleph));  // aleph*aleph + 1 = aleph
    CHECK(m.eq(m.mul(m.zero(), aleph), m.zero()));            // 0 * aleph = 0
    CHECK(m.eq(m.mul(aleph, m.zero()), m.zero()));
    CHECK(m.eq(m.add(CardElem{Int(3)}, CardElem{Int(4)}), CardElem{Int(7)}));
    CHECK(m.eq(m.mul(CardElem{Int(3)}, aleph), aleph));
}

TEST_CASE("codegree evaluation matches the least-exponent definition") {
    CodegreeRig m;
    auto rng = make_rng(4001);
    for (int i = 0; i < 200; ++i) {
        NatPoly q = random_nat_poly(rng, 6, 3);
        CodegreeElem image = eval_poly(q, m, CodegreeElem{1});
        if (q.is_zero()) {
            CHECK(m.eq(image, m.zero()));
        } else {
            Exp codeg = q.terms().begin()->first;
            CHECK(m.eq(image, CodegreeElem{codeg}));
        }
    }
}

TEST_CASE("degree evaluation matches the degree") {
    DegreeRig m;
    auto rng = make_rng(4002);
    for (int i = 0; i < 200; ++i) {
        NatPoly q = random_nat_poly(rng, 6, 3);
        if (q.is_zero()) continue;
        CHECK(m.eq(eval_poly(q, m, DegreeElem{1}), DegreeElem{static_cast<Exp>(q.degree())}));
    }
}

TEST_CASE("rig axioms hold exhaustively on bounded carriers") {
    check_rig_axioms(DegreeRig{}, DegreeRig{}.enumerate(8));
    check_rig_axioms(CodegreeRig{}, CodegreeRig{}.enumerate(8));
    check_rig_axioms(CardinalRig{}, CardinalRig{}.enumerate(8));
    check_rig_axioms(ThreeRig{}, ThreeRig{}.carrier());
    check_rig_axioms(BoolLattice{}, BoolLattice{}.carrier());
}

TEST_CASE("the paper's three counterexamples") {
    CodegreeRig cod;
    auto c1 = find_counterexample(np("x"), np("x + x^2"), np("x^2"), np("x^3"), cod, 32);
    REQUIRE(c1.has_value());
    CHECK(cod.eq(*c1, CodegreeElem{1}));  // eps^1

    DegreeRig deg;
    auto c2 = find_counterexample(np("x"), np("1 + x"), np("x"), np("x^2"), deg, 32);
    REQUIRE(c2.has_value());
    CHECK(deg.eq(*c2, DegreeElem{1}));  // L^1

    CardinalRig card;
    auto c3 = find_counterexample(np("x"), np("1 + x^2"), np("x^6"), np("1"), card, 32);
    REQUIRE(c3.has_value());
    CHECK(card.eq(*c3, CardElem{std::nullopt}));  // aleph_0
}

TEST_CASE("no counterexample to a rig-valid implication") {
    DegreeRig deg;
    CHECK_FALSE(
        find_counterexample(np("x"), np("1 + x^2"), np("x^7"), np("x"), deg, 32).has_value());
    CodegreeRig cod;
    CHECK_FALSE(
        find_counterexample(np("x"), np("1 + x^2"), np("x^7"), np("x"), cod, 32).has_value());
    CardinalRig card;
    CHECK_FALSE(
        find_counterexample(np("x"), np("1 + x^2"), np("x^7"), np("x"), card, 32).has_value());
}

TEST_CASE("high elements") {
    auto three = high_set(ThreeRig{});
    REQUIRE(three.size() == 1);
    CHECK(three.front() == ThreeElem::non_constant);

    auto trivial = high_set(TrivialRig{});
    REQUIRE(trivial.size() == 1);
    CHECK(trivial.front() == 0);

    auto lattice = high_set(BoolLattice{});
    REQUIRE(lattice.size() == 1);
    CHECK(lattice.front() == true);  // the greatest element
}

TEST_CASE("classification of N[x] into the three-element rig is a homomorphism") {
    ThreeRig m;
    auto rng = make_rng(4003);
    for (int i = 0; i < 300; ++i) {
        NatPoly a = random_nat_poly(rng, 4, 2);
        NatPoly b = random_nat_poly(rng, 4, 2);
        CHECK(ThreeRig::classify(a + b) == m.add(ThreeRig::classify(a), ThreeRig::classify(b)));
        CHECK(ThreeRig::classify(a * b) == m.mul(ThreeRig::classify(a), ThreeRig::classify(b)));
    }
    CHECK(ThreeRig::classify(NatPoly()) == ThreeElem::zero);
    CHECK(ThreeRig::classify(np("7")) == ThreeElem::nonzero_constant);
    CHECK(ThreeRig::classify(np("x + 1")) == ThreeElem::non_constant);
}

TEST_CASE("enumeration orders are documented and stable") {
    DegreeRig deg;
    auto d = deg.enumerate(3);
    REQUIRE(d.size() == 3);
    CHECK(deg.eq(d[0], deg.zero()));
    CHECK(deg.eq(d[1], DegreeElem{0}));
    CHECK(deg.eq(d[2], DegreeElem{1}));

    CardinalRig card;
    auto c = card.enumerate(4);
    REQUIRE(c.size() == 4);
    CHECK(card.eq(c[0], CardElem{Int(0)}));
    CHECK(card.eq(c[3], CardElem{std::nullopt}));  // aleph_0 last
}

TEST_CASE("negative integers do not embed into the models") {
    CHECK_THROWS_AS(DegreeRig{}.from_int(Int(-1)), std::domain_error);
    CHECK_THROWS_AS(CodegreeRig{}.from_int(Int(-2)), std::domain_error);
    CHECK_THROWS_AS(CardinalRig{}.from_int(Int(-3)), std::domain_error);
    CHECK_THROWS_AS(ThreeRig{}.from_int(Int(-1)), std::domain_error);
}
