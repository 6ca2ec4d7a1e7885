#include "doctest.h"

#include <random>

#include "dirconv/arith.hpp"
#include "helpers.hpp"

using namespace dirconv;
using testutil::oracle_convolve;
using testutil::random_fn;
using testutil::random_value;

namespace {
const MonoidSpec kSpecs[] = {MonoidSpec::nstar(), MonoidSpec::prime_generated(3),
                             MonoidSpec::finitely_generated({4, 6})};
}

TEST_CASE("mobius values match the sieve") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    std::uint64_t bound = 1000;
    ArithFunction mu = fn_mobius(all, q, bound);
    auto sieve = testutil::sieve_mobius(bound);
    for (std::uint64_t n = 1; n <= bound; ++n) CHECK(mu.at(n) == q.from_int(sieve[n]));

    // spot values
    CHECK(mu.at(1) == q.one());
    CHECK(mu.at(2) == q.from_int(-1));
    CHECK(mu.at(4) == q.zero());
    CHECK(mu.at(6) == q.one());
    CHECK(mu.at(12) == q.zero());
    CHECK(mu.at(30) == q.from_int(-1));
}

TEST_CASE("mobius inverts the constant function") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    ArithFunction mu = fn_mobius(all, q, 512);
    ArithFunction one = fn_constant_one(all, q, 512);
    CHECK(fn_convolve(mu, one) == fn_unit(all, q, 512));
}

TEST_CASE("convolution matches the double-loop oracle") {
    std::mt19937 rng(2201);
    for (const auto& spec : kSpecs) {
        for (Ring ring : {Ring::rationals(), Ring::modular(7), Ring::complex_floats()}) {
            for (int i = 0; i < 20; ++i) {
                ArithFunction a = random_fn(spec, ring, 256, rng, 12);
                ArithFunction b = random_fn(spec, ring, 256, rng, 12);
                CHECK(fn_convolve(a, b) == oracle_convolve(a, b));
            }
        }
    }
}

TEST_CASE("divisor count comes out of one*one") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring z = Ring::integers();
    ArithFunction tau = fn_convolve(fn_constant_one(all, z, 64), fn_constant_one(all, z, 64));
    CHECK(tau.at(12) == z.from_int(6));
    CHECK(tau.at(1) == z.one());
    CHECK(tau.at(7) == z.from_int(2));
    CHECK(tau.at(36) == z.from_int(9));
}

TEST_CASE("ring laws for convolution") {
    std::mt19937 rng(2301);
    for (const auto& spec : kSpecs) {
        Ring ring = Ring::rationals();
        ArithFunction e = fn_unit(spec, ring, 256);
        for (int i = 0; i < 10; ++i) {
            ArithFunction a = random_fn(spec, ring, 256, rng, 10);
            ArithFunction b = random_fn(spec, ring, 256, rng, 10);
            ArithFunction c = random_fn(spec, ring, 256, rng, 10);
            CHECK(fn_convolve(a, b) == fn_convolve(b, a));
            CHECK(fn_convolve(fn_convolve(a, b), c) == fn_convolve(a, fn_convolve(b, c)));
            CHECK(fn_convolve(a, fn_add(b, c)) == fn_add(fn_convolve(a, b), fn_convolve(a, c)));
            CHECK(fn_convolve(a, e) == a);
            CHECK(fn_add(a, fn_neg(a)) == ArithFunction(spec, ring, 256));
        }
    }
}

TEST_CASE("inverse of the geometric indicator") {
    MonoidSpec g1 = MonoidSpec::prime_generated(1);
    Ring q = Ring::rationals();
    ArithFunction a(g1, q, 16);
    a.set(1, q.one());
    a.set(2, q.from_int(3));
    ArithFunction inv = fn_invert(a);
    CHECK(inv.at(1) == q.one());
    CHECK(inv.at(2) == q.from_int(-3));
    CHECK(inv.at(4) == q.from_int(9));
    CHECK(inv.at(8) == q.from_int(-27));
    CHECK(inv.at(16) == q.from_int(81));
}

TEST_CASE("inversion round trips") {
    std::mt19937 rng(2401);
    for (const auto& spec : kSpecs) {
        for (Ring ring : {Ring::rationals(), Ring::modular(7)}) {
            ArithFunction e = fn_unit(spec, ring, 256);
            for (int i = 0; i < 10; ++i) {
                ArithFunction a = random_fn(spec, ring, 256, rng, 10, /*unit_lead=*/true);
                ArithFunction inv = fn_invert(a);
                CHECK(fn_convolve(a, inv) == e);
                CHECK(fn_invert(inv) == a);
            }
        }
    }
}

TEST_CASE("inversion requires a unit at 1") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    ArithFunction zero_lead(all, q, 16);
    zero_lead.set(2, q.one());
    CHECK_THROWS_AS(fn_invert(zero_lead), NotAUnit);

    Ring z = Ring::integers();
    ArithFunction two_lead(all, z, 16);
    two_lead.set(1, z.from_int(2));
    CHECK_THROWS_AS(fn_invert(two_lead), NotAUnit);

    ArithFunction neg_lead(all, z, 16);
    neg_lead.set(1, z.from_int(-1));
    neg_lead.set(3, z.from_int(5));
    CHECK(fn_convolve(neg_lead, fn_invert(neg_lead)) == fn_unit(all, z, 16));
}

TEST_CASE("support norm") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    CHECK(fn_norm(fn_unit(all, q, 64)) == 1);
    CHECK_FALSE(fn_norm(ArithFunction(all, q, 64)).has_value());

    ArithFunction d2(all, q, 64), d3(all, q, 64);
    d2.set(2, q.one());
    d3.set(3, q.one());
    CHECK(fn_norm(d2) == 2);
    CHECK(fn_norm(fn_convolve(d2, d3)) == 6);
}

TEST_CASE("norm is multiplicative over a domain and ultrametric") {
    std::mt19937 rng(2501);
    MonoidSpec all = MonoidSpec::nstar();
    for (Ring ring : {Ring::rationals(), Ring::integers()}) {
        for (int i = 0; i < 40; ++i) {
            ArithFunction a = random_fn(all, ring, 512, rng, 6);
            ArithFunction b = random_fn(all, ring, 512, rng, 6);
            auto na = fn_norm(a), nb = fn_norm(b);
            if (!na || !nb) continue;
            if (*na * *nb <= 512) {
                auto nab = fn_norm(fn_convolve(a, b));
                REQUIRE(nab.has_value());
                CHECK(*nab == *na * *nb);
            }
            auto ns = fn_norm(fn_add(a, b));
            if (ns) CHECK(*ns >= std::min(*na, *nb));
        }
    }
}

TEST_CASE("scalar embedding splits off the ring") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    Value r = q.parse("3/7");
    ArithFunction i_r = fn_embed_scalar(all, r, 64);
    CHECK(fn_project(i_r) == r);
    CHECK(i_r.at(1) == r);
    CHECK(i_r.at(5) == q.zero());
    CHECK(fn_embed_scalar(all, q.one(), 64) == fn_unit(all, q, 64));
    CHECK(fn_project(fn_mobius(all, q, 64)) == q.one());

    std::mt19937 rng(2601);
    for (int i = 0; i < 20; ++i) {
        Value a = random_value(q, rng), b = random_value(q, rng);
        CHECK(fn_embed_scalar(all, a + b, 16) ==
              fn_add(fn_embed_scalar(all, a, 16), fn_embed_scalar(all, b, 16)));
        CHECK(fn_embed_scalar(all, a * b, 16) ==
              fn_convolve(fn_embed_scalar(all, a, 16), fn_embed_scalar(all, b, 16)));
    }
}

TEST_CASE("totally multiplicative evaluation") {
    Ring q = Ring::rationals();
    TotallyMultiplicativeFn L(q, {{2, q.from_int(2)}, {3, q.from_int(3)}});
    CHECK(L.eval(12) == q.from_int(12));
    CHECK(L.eval(1) == q.one());
    CHECK_THROWS_AS(L.eval(10), MissingPrimeValue);
    CHECK_THROWS_AS(TotallyMultiplicativeFn(q, {{4, q.one()}}), ParseError);

    TotallyMultiplicativeFn sign(q, {{2, q.from_int(-1)}});
    CHECK(sign.eval(8) == q.from_int(-1));
    CHECK(sign.eval(4) == q.one());
}

TEST_CASE("twisting is a ring morphism") {
    std::mt19937 rng(2701);
    MonoidSpec g2 = MonoidSpec::prime_generated(2);
    Ring q = Ring::rationals();
    TotallyMultiplicativeFn L(q, {{2, q.parse("1/2")}, {3, q.from_int(-3)}});

    CHECK(fn_twist(L, fn_unit(g2, q, 128)) == fn_unit(g2, q, 128));
    for (int i = 0; i < 15; ++i) {
        ArithFunction a = random_fn(g2, q, 128, rng, 8);
        ArithFunction b = random_fn(g2, q, 128, rng, 8);
        CHECK(fn_twist(L, fn_add(a, b)) == fn_add(fn_twist(L, a), fn_twist(L, b)));
        CHECK(fn_twist(L, fn_convolve(a, b)) == fn_convolve(fn_twist(L, a), fn_twist(L, b)));
    }

    // the constant-one character twists trivially; L(p) = p scales by n
    std::map<std::uint64_t, Value> ones{{2, q.one()}, {3, q.one()}};
    ArithFunction a = random_fn(g2, q, 128, rng, 8);
    CHECK(fn_twist(TotallyMultiplicativeFn(q, ones), a) == a);
    CHECK(tm_identity_character(q, 128).eval(12) == q.from_int(12));
}

TEST_CASE("twist by n scales pointwise") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    std::map<std::uint64_t, Value> npv;
    for (auto p : first_k_primes(11))
        if (p <= 31) npv.emplace(p, q.from_int(static_cast<long long>(p)));
    TotallyMultiplicativeFn N(q, npv);
    ArithFunction one = fn_constant_one(all, q, 30);
    ArithFunction twisted = fn_twist(N, one);
    for (std::uint64_t n = 1; n <= 30; ++n)
        CHECK(twisted.at(n) == q.from_int(static_cast<long long>(n)));
}

TEST_CASE("character extraction from a function") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    ArithFunction f(all, q, 16);
    f.set(1, q.from_int(9));  // value at 1 is not a prime value, ignored
    f.set(2, q.from_int(5));
    f.set(3, q.from_int(7));
    TotallyMultiplicativeFn L = tm_from_function(f);
    CHECK(L.eval(6) == q.from_int(35));
    CHECK(L.eval(4) == q.from_int(25));

    ArithFunction bad(all, q, 16);
    bad.set(6, q.one());
    CHECK_THROWS_AS(tm_from_function(bad), ParseError);
}

TEST_CASE("extension by zero and restriction") {
    MonoidSpec g2 = MonoidSpec::prime_generated(2);
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    std::mt19937 rng(2801);

    ArithFunction a = random_fn(g2, q, 128, rng, 8, true);
    ArithFunction ea = fn_extend_submonoid(a, all);
    CHECK(ea.spec() == all);
    for (std::uint64_t n = 1; n <= 128; ++n) {
        if (g2.contains(n))
            CHECK(ea.at(n) == a.at(n));
        else
            CHECK(ea.at(n) == q.zero());
    }
    CHECK(fn_restrict(ea, g2) == a);

    // extension is a ring morphism
    ArithFunction b = random_fn(g2, q, 128, rng, 8);
    CHECK(fn_extend_submonoid(fn_convolve(a, b), all) ==
          fn_convolve(fn_extend_submonoid(a, all), fn_extend_submonoid(b, all)));
    CHECK(fn_extend_submonoid(fn_unit(g2, q, 128), all) == fn_unit(all, q, 128));

    CHECK_THROWS_AS(fn_extend_submonoid(ea, g2), NotASubmonoid);
}

TEST_CASE("bounded knowledge is enforced") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    ArithFunction f(all, q, 10);
    f.set(3, q.one());
    CHECK_THROWS_AS(f.at(11), BoundTooSmall);
    CHECK_THROWS_AS(f.set(11, q.one()), BoundTooSmall);
    MonoidSpec g2 = MonoidSpec::prime_generated(2);
    ArithFunction g(g2, q, 10);
    CHECK_THROWS_AS(g.at(5), NotInMonoid);
    CHECK_THROWS_AS(g.set(5, q.one()), NotInMonoid);

    ArithFunction h(all, Ring::integers(), 10);
    CHECK_THROWS_AS(fn_add(f, h), MixedRings);
    CHECK_THROWS_AS(fn_add(ArithFunction(g2, q, 10), f), MonoidMismatch);
}

TEST_CASE("equality compares the common window") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    ArithFunction a(all, q, 10), b(all, q, 20);
    a.set(3, q.one());
    b.set(3, q.one());
    b.set(15, q.from_int(4));  // beyond a's window, irrelevant
    CHECK(a == b);
    b.set(7, q.one());
    CHECK_FALSE(a == b);
}

TEST_CASE("convolution window shrinks to the smaller operand") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    ArithFunction a(all, q, 100), b(all, q, 10);
    a.set(1, q.one());
    b.set(1, q.one());
    ArithFunction c = fn_convolve(a, b);
    CHECK(c.bound() == 10);
    CHECK_THROWS_AS(c.at(11), BoundTooSmall);
}
