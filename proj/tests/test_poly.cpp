#include <doctest.h>

#include "rigcert/poly.hpp"
#include "rigcert/rigmodels.hpp"
#include "testutil.hpp"

using namespace rigcert;
using namespace testutil;

namespace {
IntPoly ip(const char* text) { return parse_int_poly(text); }
NatPoly np(const char* text) { return parse_nat_poly(text); }
}  // namespace

TEST_CASE("canonical form stores no zero coefficients") {
    IntPoly a = ip("1 + x^2") - ip("x^2");
    CHECK(a == ip("1"));
    CHECK(a.term_count() == 1);
    CHECK((ip("x") - ip("x")).is_zero());
    CHECK(IntPoly(Int(0)).terms().empty());
    CHECK(IntPoly::monomial(Int(0), 5).is_zero());
}

TEST_CASE("addition and multiplication examples") {
    CHECK(np("1 + x^2") * np("x") == np("x + x^3"));
    CHECK(np("x^2") + NatPoly() == np("x^2"));
    // independent schoolbook oracle for the seven-trees cofactor product
    IntPoly a = ip("x^2 - x + 1");
    IntPoly b = ip("x^5 + x^4 - x^2 - x");
    CHECK(a * b == schoolbook_mul(a, b));
    CHECK(a * b == ip("x^7 - x"));
}

TEST_CASE("integer subtraction examples") {
    CHECK(ip("1 + x^2") - ip("x") == ip("x^2 - x + 1"));
    CHECK((ip("3x^4 - 2") - ip("3x^4 - 2")).is_zero());
    // input from implication (1.2): d = p2 - p1
    CHECK(ip("2 + x + 2x^2") - ip("x") == ip("2x^2 + 2"));
}

TEST_CASE("ring laws on random triples") {
    auto rng = make_rng(101);
    for (int i = 0; i < 200; ++i) {
        IntPoly a = random_int_poly(rng, 6, 5);
        IntPoly b = random_int_poly(rng, 6, 5);
        IntPoly c = random_int_poly(rng, 6, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("divrem examples with multiply-back oracle") {
    auto [q, r] = divrem(to_rat(ip("x^7 - x")), to_rat(ip("x^2 - x + 1")));
    CHECK(r.is_zero());
    CHECK(q == to_rat(ip("x^5 + x^4 - x^2 - x")));

    auto [q2, r2] = divrem(to_rat(ip("x^2")), to_rat(ip("x")));
    CHECK(q2 == to_rat(ip("x")));
    CHECK(r2.is_zero());

    auto [q3, r3] = divrem(to_rat(ip("x^2 + 1")), to_rat(ip("x + 1")));
    CHECK(q3 == to_rat(ip("x - 1")));
    CHECK(r3 == to_rat(ip("2")));

    CHECK_THROWS_AS(divrem(to_rat(ip("x")), RatPoly()), std::domain_error);
}

TEST_CASE("divrem postcondition re-multiplied reproduces the dividend") {
    auto rng = make_rng(202);
    for (int i = 0; i < 200; ++i) {
        RatPoly a = to_rat(random_int_poly(rng, 8, 9));
        RatPoly d = to_rat(random_int_poly(rng, 4, 4));
        if (d.is_zero()) continue;
        auto [q, r] = divrem(a, d);
        CHECK(q * d + r == a);
        CHECK((r.is_zero() || r.degree() < d.degree()));
    }
}

TEST_CASE("content and primitivity") {
    auto c1 = content_primitive(ip("2x^2 + 2"));
    CHECK(c1.content == 2);
    CHECK_FALSE(c1.is_primitive);
    auto c2 = content_primitive(ip("x^2 - x + 1"));
    CHECK(c2.content == 1);
    CHECK(c2.is_primitive);
    auto c3 = content_primitive(IntPoly());
    CHECK(c3.content == 0);
    CHECK_FALSE(c3.is_primitive);
}

TEST_CASE("squarefree detection") {
    CHECK(squarefree(ip("x^2 - x + 1")));       // discriminant -3
    CHECK_FALSE(squarefree(ip("x^2 + 2x + 1")));  // (x+1)^2, from implication (1.3)
    CHECK(squarefree(ip("x")));
    CHECK(squarefree(ip("7")));
    CHECK_FALSE(squarefree(ip("x^2") * ip("x - 1")));
    CHECK_THROWS_AS(squarefree(IntPoly()), std::domain_error);
}

TEST_CASE("pos_neg_split examples and properties") {
    auto s = pos_neg_split(ip("x + x^2 - x^4 - x^5"));
    CHECK(s.positive == np("x + x^2"));
    CHECK(s.negative == np("x^4 + x^5"));
    auto z = pos_neg_split(IntPoly());
    CHECK(z.positive.is_zero());
    CHECK(z.negative.is_zero());
    auto m = pos_neg_split(ip("-3"));
    CHECK(m.positive.is_zero());
    CHECK(m.negative == np("3"));

    auto rng = make_rng(303);
    for (int i = 0; i < 200; ++i) {
        IntPoly r = random_int_poly(rng, 7, 6);
        auto [r1, r2] = pos_neg_split(r);
        CHECK(r1.as_int() - r2.as_int() == r);
        for (const auto& [e, c] : r1.terms()) CHECK(r2.coeff(e) == 0);
    }
}

TEST_CASE("evaluation examples") {
    CHECK(np("1 + x^2")(Int(2)) == 5);
    DegreeRig deg;
    CHECK(deg.eq(eval_poly(np("1 + x"), deg, DegreeElem{1}), DegreeElem{1}));
    CardinalRig card;
    CHECK(card.eq(eval_poly(np("1 + x^2"), card, CardElem{std::nullopt}),
                  CardElem{std::nullopt}));
}

TEST_CASE("eval is a homomorphism in every supplied model") {
    auto rng = make_rng(404);
    IntRing zz;
    ZmodRig zm(97);
    DegreeRig deg;
    for (int i = 0; i < 100; ++i) {
        NatPoly a = random_nat_poly(rng, 5, 4);
        NatPoly b = random_nat_poly(rng, 5, 4);
        NatPoly c = random_nat_poly(rng, 5, 4);
        NatPoly combined = a * b + c;

        Int x0(static_cast<long>(rng() % 19) - 9);
        CHECK(eval_poly(combined, zz, x0) ==
              eval_poly(a, zz, x0) * eval_poly(b, zz, x0) + eval_poly(c, zz, x0));

        unsigned long xm = rng() % 97;
        CHECK(eval_poly(combined, zm, xm) ==
              zm.add(zm.mul(eval_poly(a, zm, xm), eval_poly(b, zm, xm)), eval_poly(c, zm, xm)));

        DegreeElem xd{rng() % 4};
        CHECK(deg.eq(eval_poly(combined, deg, xd),
                     deg.add(deg.mul(eval_poly(a, deg, xd), eval_poly(b, deg, xd)),
                             eval_poly(c, deg, xd))));
    }
}

TEST_CASE("IntPoly with negatives cannot evaluate into a rig") {
    DegreeRig deg;
    CHECK_THROWS_AS(eval_poly(ip("x - 2"), deg, DegreeElem{1}), std::domain_error);
}

TEST_CASE("text syntax accepts the paper's shapes") {
    CHECK(np("3 + 2x^3 + 4x^5") == np("3+2 x ^3+4x^5"));
    CHECK(np("x") == NatPoly::variable());
    CHECK(np("16(1+x)") == np("16 + 16x"));
    CHECK(np("2*x^3") == np("2x^3"));
    CHECK(np("(1+x)(1+x)") == np("1 + 2x + x^2"));
    CHECK(ip("-x + x^2") == ip("x^2") - ip("x"));
    CHECK(np("x^0") == np("1"));
}

TEST_CASE("integer-power expansion matches the Pascal recurrence") {
    // binomial coefficients computed independently of polynomial arithmetic
    std::vector<Int> row{1};
    for (int n = 1; n <= 9; ++n) {
        std::vector<Int> next(n + 1, Int(1));
        for (int k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
        row = next;
    }
    NatPoly nine = np("(1+x)^9");
    for (Exp k = 0; k <= 9; ++k) CHECK(nine.coeff(k) == row[static_cast<std::size_t>(k)]);
}

TEST_CASE("parse then print then parse is the identity") {
    auto rng = make_rng(505);
    for (int i = 0; i < 200; ++i) {
        IntPoly a = random_int_poly(rng, 9, 30);
        CHECK(parse_int_poly(to_string(a)) == a);
    }
    CHECK(to_string(ip("x^2 - x + 1")) == "1 - x + x^2");
    CHECK(to_string(IntPoly()) == "0");
    CHECK(to_string(ip("-x")) == "-x");
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_int_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_int_poly("(1+x"), ParseError);
    CHECK_THROWS_AS(parse_int_poly("x + y"), ParseError);
    CHECK_THROWS_AS(parse_nat_poly("x - 2x"), ParseError);
    CHECK_THROWS_AS(parse_int_poly(""), ParseError);
    try {
        parse_int_poly("1 + $");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("pair-list form roundtrips and rejects malformed input") {
    IntPoly a = ip("3 + 2x^3 + 4x^5");
    CHECK(int_poly_from_pairs(to_pairs(a)) == a);
    CHECK_THROWS_AS(int_poly_from_pairs({{0, "1"}, {0, "2"}}), ParseError);  // duplicate
    CHECK_THROWS_AS(int_poly_from_pairs({{3, "1"}, {1, "2"}}), ParseError);  // unsorted
    CHECK_THROWS_AS(int_poly_from_pairs({{0, "0"}}), ParseError);            // zero coeff
    CHECK_THROWS_AS(int_poly_from_pairs({{0, "12a"}}), ParseError);          // junk
    CHECK_THROWS_AS(nat_poly_from_pairs({{0, "-1"}}), ParseError);           // negative
}

TEST_CASE("NatPoly rejects negative coefficients") {
    CHECK_THROWS_AS(NatPoly(Int(-1)), std::domain_error);
    CHECK_FALSE(NatPoly::from_int(ip("x - 1")).has_value());
    CHECK(NatPoly::from_int(ip("x + 1")).has_value());
    CHECK(nat_sub(np("x + 1"), np("x")) == np("1"));
    CHECK_FALSE(nat_sub(np("x"), np("x^2")).has_value());
}

TEST_CASE("unit decomposition is ascending with coefficient copies") {
    NatPoly g = np("2 + x^2 + 3x^5");
    std::vector<Exp> units = g.unit_exponents();
    CHECK(units == std::vector<Exp>{0, 0, 2, 5, 5, 5});
    CHECK(g.coeff_mass() == 6);
    CHECK(NatPoly().unit_exponents().empty());
}
