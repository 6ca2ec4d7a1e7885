#include "doctest.h"

#include <random>

#include "dirconv/rings.hpp"
#include "helpers.hpp"

using namespace dirconv;

TEST_CASE("rational arithmetic and canonical form") {
    Ring q = Ring::rationals();
    CHECK(q.parse("1/2") + q.parse("1/3") == q.parse("5/6"));
    CHECK(q.parse("2/4") == q.parse("1/2"));
    CHECK(q.parse("-3/-6").str() == "1/2");
    CHECK(q.parse("7").str() == "7");
    CHECK((q.parse("2/3") * q.parse("3/2")) == q.one());
    CHECK_THROWS_AS(q.parse("1/0"), ParseError);
    CHECK_THROWS_AS(q.parse("abc"), ParseError);
}

TEST_CASE("rational inverse") {
    Ring q = Ring::rationals();
    auto inv = ring_inverse(q.parse("2/5"));
    REQUIRE(inv.has_value());
    CHECK(*inv == q.parse("5/2"));
    CHECK_FALSE(ring_inverse(q.zero()).has_value());
}

TEST_CASE("integer units are exactly +-1") {
    Ring z = Ring::integers();
    CHECK(ring_inverse(z.one()).has_value());
    CHECK(ring_inverse(z.from_int(-1)).has_value());
    CHECK(*ring_inverse(z.from_int(-1)) == z.from_int(-1));
    CHECK_FALSE(ring_inverse(z.from_int(2)).has_value());
    CHECK_FALSE(ring_inverse(z.zero()).has_value());
    CHECK_THROWS_AS(z.parse("1/2"), ParseError);
}

TEST_CASE("modular arithmetic") {
    Ring m5 = Ring::modular(5);
    CHECK(m5.parse("3") + m5.parse("4") == m5.parse("2"));
    CHECK(m5.parse("3 mod 5") == m5.from_int(3));
    CHECK(m5.from_int(-1) == m5.from_int(4));
    CHECK_THROWS_AS(m5.parse("3 mod 7"), ParseError);

    Ring m7 = Ring::modular(7);
    auto inv = ring_inverse(m7.from_int(3));
    REQUIRE(inv.has_value());
    CHECK(*inv * m7.from_int(3) == m7.one());

    Ring m4 = Ring::modular(4);
    CHECK_FALSE(ring_inverse(m4.from_int(2)).has_value());
    CHECK(ring_inverse(m4.from_int(3)).has_value());
}

TEST_CASE("complex parse and format") {
    Ring c = Ring::complex_floats();
    CHECK(c.parse("1+2i") == c.from_complex({1, 2}));
    CHECK(c.parse("-i") == c.from_complex({0, -1}));
    CHECK(c.parse("3") == c.from_complex({3, 0}));
    CHECK(c.parse("2.5e-3i") == c.from_complex({0, 2.5e-3}));
    CHECK(c.parse("1e2+1e-2i") == c.from_complex({100, 0.01}));
    // format is re-parseable
    Value v = c.from_complex({-0.125, 3.5});
    CHECK(c.parse(c.format(v)) == v);

    auto inv = ring_inverse(c.from_complex({1, 1}));
    REQUIRE(inv.has_value());
    CHECK(*inv == c.from_complex({0.5, -0.5}));
}

TEST_CASE("complex equality uses the ring tolerance") {
    Ring c = Ring::complex_floats(1e-6);
    CHECK(c.from_complex({1, 0}) == c.from_complex({1 + 1e-9, 0}));
    CHECK_FALSE(c.from_complex({1, 0}) == c.from_complex({1 + 1e-3, 0}));
    CHECK(c.from_complex({1e-9, 0}).is_zero());
    CHECK_FALSE(exactly_zero(c.from_complex({1e-9, 0})));
    CHECK(exactly_zero(c.zero()));
}

TEST_CASE("polynomial truncation") {
    Ring p = Ring::poly(1);
    // (1+z)(1-z) = 1 - z^2, and z^2 falls off the cap
    CHECK(p.parse("1,1") * p.parse("1,-1") == p.one());
    Ring p2 = Ring::poly(2);
    CHECK(p2.parse("1,1") * p2.parse("1,-1") == p2.parse("1,0,-1"));
    CHECK_THROWS_AS(p.parse("1,2,3"), ParseError);
}

TEST_CASE("polynomial inverse is the geometric expansion") {
    Ring p = Ring::poly(3);
    auto inv = ring_inverse(p.parse("1,-1"));
    REQUIRE(inv.has_value());
    CHECK(*inv == p.parse("1,1,1,1"));
    CHECK(*inv * p.parse("1,-1") == p.one());
    CHECK_FALSE(ring_inverse(p.parse("0,1")).has_value());
}

TEST_CASE("polynomial derivative") {
    Ring p = Ring::poly(3);
    CHECK(poly_derivative(p.parse("1,2,1")) == p.parse("2,2"));
    CHECK(poly_derivative(p.parse("0,0,0,1")) == p.parse("0,0,3"));
    CHECK(poly_derivative(p.one()) == p.zero());
}

TEST_CASE("polynomial evaluation") {
    Ring p = Ring::poly(2);
    Ring c = Ring::complex_floats();
    // 1 + 2z + z^2 at z = 2 is 9
    CHECK(eval_at(p.parse("1,2,1"), {2, 0}) == std::complex<double>(9, 0));
    CHECK(eval_at(c.from_complex({3, 1}), {5, 5}) == std::complex<double>(3, 1));
}

TEST_CASE("mixed ring operands are rejected") {
    CHECK_THROWS_AS(Ring::rationals().one() + Ring::integers().one(), MixedRings);
    CHECK_THROWS_AS(Ring::modular(5).one() * Ring::modular(7).one(), MixedRings);
}

TEST_CASE("ring name round trip") {
    for (const char* name : {"Q", "Z", "Zmod:7", "C", "Poly:4", "C:1e-06"}) {
        Ring r = Ring::parse_name(name);
        CHECK(Ring::parse_name(r.name()).name() == r.name());
    }
    CHECK(Ring::parse_name("Q").kind() == RingKind::Rational);
    CHECK(Ring::parse_name("Zmod:7").modulus() == 7);
    CHECK(Ring::parse_name("Poly:4").degree_cap() == 4);
    CHECK_THROWS_AS(Ring::parse_name("Zmod:1"), ParseError);
    CHECK_THROWS_AS(Ring::parse_name("F17"), ParseError);
}

TEST_CASE("ring axioms hold on random values") {
    std::mt19937 rng(1101);
    for (Ring ring : {Ring::rationals(), Ring::integers(), Ring::modular(7),
                      Ring::complex_floats(), Ring::poly(3)}) {
        for (int i = 0; i < 40; ++i) {
            Value a = testutil::random_value(ring, rng);
            Value b = testutil::random_value(ring, rng);
            Value c = testutil::random_value(ring, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == ring.zero());
            CHECK(a * ring.one() == a);
            CHECK(a + ring.zero() == a);
        }
    }
}
