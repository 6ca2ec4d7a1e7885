#include "doctest.h"

#include <cmath>
#include <random>

#include "dirconv/grothendieck.hpp"
#include "helpers.hpp"

using namespace dirconv;
using testutil::random_fn;

namespace {

ExtFunction random_ext(const MonoidSpec& spec, const Ring& ring, std::uint64_t bound,
                       std::uint64_t den, std::mt19937& rng, int support) {
    return ext_make(den, random_fn(spec, ring, bound, rng, support));
}

}  // namespace

TEST_CASE("fraction reduction") {
    MonoidSpec all = MonoidSpec::nstar();
    CHECK(groth_reduce(all, 4, 6) == Fraction{2, 3});
    CHECK(groth_reduce(all, 6, 6) == Fraction{1, 1});
    CHECK(groth_reduce(all, 12, 4) == Fraction{3, 1});
    CHECK_THROWS_AS(groth_reduce(all, 0, 3), NotInMonoid);

    // class labels may leave a restricted monoid
    MonoidSpec g = MonoidSpec::finitely_generated({4, 6});
    CHECK(groth_reduce(g, 4, 6) == Fraction{2, 3});
    CHECK_THROWS_AS(groth_reduce(g, 2, 3), NotInMonoid);
}

TEST_CASE("reduction is constant on equivalence classes") {
    std::mt19937 rng(5101);
    MonoidSpec all = MonoidSpec::nstar();
    std::uniform_int_distribution<std::uint64_t> pick(1, 40);
    for (int i = 0; i < 60; ++i) {
        std::uint64_t m = pick(rng), n = pick(rng), a = pick(rng);
        CHECK(groth_reduce(all, m * a, n * a) == groth_reduce(all, m, n));
        Fraction f = groth_reduce(all, m, n);
        // the representative is in the same class: m·den = n·num
        CHECK(m * f.den == n * f.num);
    }
}

TEST_CASE("fraction group operations") {
    CHECK(frac_mul({2, 3}, {3, 2}) == Fraction{1, 1});
    CHECK(frac_mul({2, 3}, {5, 7}) == Fraction{10, 21});
    CHECK(frac_inverse({4, 9}) == Fraction{9, 4});
    std::mt19937 rng(5201);
    std::uniform_int_distribution<std::uint64_t> pick(1, 30);
    MonoidSpec all = MonoidSpec::nstar();
    for (int i = 0; i < 40; ++i) {
        Fraction a = groth_reduce(all, pick(rng), pick(rng));
        Fraction b = groth_reduce(all, pick(rng), pick(rng));
        CHECK(frac_mul(a, b) == frac_mul(b, a));
        CHECK(frac_mul(a, frac_inverse(a)) == Fraction{1, 1});
        CHECK(frac_mul(a, Fraction{1, 1}) == a);
    }
}

TEST_CASE("multiplicative functions extend to fractions uniquely") {
    Ring q = Ring::rationals();
    std::map<std::uint64_t, Value> npv;
    for (std::uint64_t p = 2; p <= 40; ++p)
        if (is_prime(p)) npv.emplace(p, q.from_int(static_cast<long long>(p)));
    TotallyMultiplicativeFn N(q, npv);
    CHECK(universal_extend_multiplicative(N, {3, 2}) == q.parse("3/2"));
    CHECK(universal_extend_multiplicative(N, {1, 8}) == q.parse("1/8"));

    std::mt19937 rng(5301);
    std::uniform_int_distribution<std::uint64_t> pick(1, 40);
    MonoidSpec all = MonoidSpec::nstar();
    for (int i = 0; i < 30; ++i) {
        Fraction a = groth_reduce(all, pick(rng), pick(rng));
        Fraction b = groth_reduce(all, pick(rng), pick(rng));
        CHECK(universal_extend_multiplicative(N, frac_mul(a, b)) ==
              universal_extend_multiplicative(N, a) * universal_extend_multiplicative(N, b));
    }

    Ring z = Ring::integers();
    TotallyMultiplicativeFn two(z, {{2, z.from_int(2)}});
    CHECK_THROWS_AS(universal_extend_multiplicative(two, {1, 2}), NotAUnit);
}

TEST_CASE("additive characters extend to fractions") {
    Ring c = Ring::complex_floats();
    AdditiveCharacter lg = AdditiveCharacter::log_character(c, 100);
    Value v = lg.eval_fraction(3, 2)[0];
    CHECK(v == c.from_complex({std::log(3.0) - std::log(2.0), 0}));
    CHECK(lg.eval_fraction(6, 6)[0] == c.zero());
}

TEST_CASE("denominators reduce when the core lives on multiples") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();

    // core = point mass at 2, denominator 2: as a function on fractions this
    // is the unit
    ArithFunction d2(all, q, 64);
    d2.set(2, q.one());
    ExtFunction e2 = ext_make(2, d2);
    CHECK(e2.denominator() == 1);
    CHECK(e2.canonical_certain());
    CHECK(e2 == ext_embed(fn_unit(all, q, 32)));

    // support 6Z reduces a denominator 6 fully
    ArithFunction c6(all, q, 120);
    c6.set(6, q.from_int(2));
    c6.set(12, q.from_int(-1));
    c6.set(30, q.from_int(7));
    ExtFunction e6 = ext_make(6, c6);
    CHECK(e6.denominator() == 1);
    CHECK(e6.bound() == 20);
    CHECK(e6.at({1, 1}) == q.from_int(2));
    CHECK(e6.at({2, 1}) == q.from_int(-1));
    CHECK(e6.at({5, 1}) == q.from_int(7));

    // support on odd multiples of 3 only reduces the 3
    ArithFunction c(all, q, 60);
    c.set(3, q.one());
    c.set(15, q.one());
    ExtFunction e = ext_make(6, c);
    CHECK(e.denominator() == 2);
    CHECK(e.at({1, 2}) == q.one());
    CHECK(e.at({5, 2}) == q.one());
    CHECK(e.at({1, 1}) == q.zero());
}

TEST_CASE("empty cores keep their denominator but are flagged") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    ExtFunction e = ext_make(6, ArithFunction(all, q, 64));
    CHECK(e.denominator() == 6);
    CHECK_FALSE(e.canonical_certain());
    CHECK(ext_make(1, ArithFunction(all, q, 64)).canonical_certain());
}

TEST_CASE("reduction stops when the quotient leaves the monoid") {
    // in gen(4,6) the denominator 4 cannot lose a factor 2 because 2 is not
    // an element
    MonoidSpec g = MonoidSpec::finitely_generated({4, 6});
    Ring q = Ring::rationals();
    ArithFunction core(g, q, 600);
    core.set(16, q.one());
    core.set(144, q.from_int(3));
    ExtFunction e = ext_make(4, core);
    CHECK(e.denominator() == 4);
    CHECK(e.canonical_certain());
    CHECK(e.at({4, 1}) == q.one());
    CHECK(e.at({36, 1}) == q.from_int(3));
}

TEST_CASE("equal classes from different representatives") {
    std::mt19937 rng(5401);
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    for (int i = 0; i < 20; ++i) {
        ArithFunction core = random_fn(all, q, 128, rng, 8);
        ExtFunction a = ext_make(3, core);
        ExtFunction b = ext_make(6, shift_core(core, 2));
        CHECK(a == b);
        CHECK(a.denominator() == b.denominator());
    }
}

TEST_CASE("evaluation at fractions") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    ArithFunction core(all, q, 64);
    core.set(3, q.from_int(5));
    ExtFunction e(2, core);
    CHECK(e.at({3, 2}) == q.from_int(5));
    CHECK(e.at({1, 1}) == q.zero());
    CHECK(e.at({1, 3}) == q.zero());  // 2/3 is not integral
    CHECK_THROWS_AS(e.at({100, 1}), BoundTooSmall);
}

TEST_CASE("extension ring laws") {
    std::mt19937 rng(5501);
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    ExtFunction zero = ext_embed(ArithFunction(all, q, 512));
    ExtFunction one = ext_embed(fn_unit(all, q, 512));
    for (int i = 0; i < 12; ++i) {
        ExtFunction a = random_ext(all, q, 512, 2, rng, 6);
        ExtFunction b = random_ext(all, q, 512, 3, rng, 6);
        ExtFunction c = random_ext(all, q, 512, 4, rng, 6);
        CHECK(ext_convolve(a, b) == ext_convolve(b, a));
        CHECK(ext_convolve(ext_convolve(a, b), c) == ext_convolve(a, ext_convolve(b, c)));
        CHECK(ext_add(a, b) == ext_add(b, a));
        CHECK(ext_convolve(a, ext_add(b, c)) ==
              ext_add(ext_convolve(a, b), ext_convolve(a, c)));
        CHECK(ext_convolve(a, one) == a);
        CHECK(ext_add(a, ext_neg(a)) == zero);
        CHECK(ext_add(a, zero) == a);
    }
}

TEST_CASE("embedding is a ring morphism") {
    std::mt19937 rng(5601);
    MonoidSpec g2 = MonoidSpec::prime_generated(2);
    Ring q = Ring::rationals();
    for (int i = 0; i < 12; ++i) {
        ArithFunction a = random_fn(g2, q, 256, rng, 8);
        ArithFunction b = random_fn(g2, q, 256, rng, 8);
        CHECK(ext_embed(fn_convolve(a, b)) == ext_convolve(ext_embed(a), ext_embed(b)));
        CHECK(ext_embed(fn_add(a, b)) == ext_add(ext_embed(a), ext_embed(b)));
    }
    CHECK(ext_embed(fn_unit(g2, q, 16)).denominator() == 1);
}

TEST_CASE("point masses convolve to fraction point masses") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    // indicator of 1/2
    ArithFunction half_core(all, q, 64);
    half_core.set(1, q.one());
    ExtFunction half(2, half_core);
    // indicator of 3
    ArithFunction three(all, q, 64);
    three.set(3, q.one());
    ExtFunction prod = ext_convolve(half, ext_embed(three));
    CHECK(prod.at({3, 2}) == q.one());
    CHECK(prod.at({3, 1}) == q.zero());
    CHECK(prod.at({1, 2}) == q.zero());

    // and 1/2 times 2 collapses to the unit
    ArithFunction two(all, q, 64);
    two.set(2, q.one());
    ExtFunction unit = ext_convolve(half, ext_embed(two));
    CHECK(unit.denominator() == 1);
    CHECK(unit.at({1, 1}) == q.one());
}

TEST_CASE("extension module action") {
    std::mt19937 rng(5701);
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    for (int i = 0; i < 10; ++i) {
        ExtFunction a = random_ext(all, q, 512, 2, rng, 6);
        ExtFunction b = random_ext(all, q, 512, 3, rng, 6);
        ModuleFunction core(all, q, 2, 512);
        auto elems = all.elements_up_to(512);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        for (int j = 0; j < 6; ++j)
            core.set(elems[pick(rng)],
                     {testutil::random_value(q, rng), testutil::random_value(q, rng)});
        ExtModuleFunction f = ext_module_make(2, core);
        CHECK(ext_module_action(ext_convolve(a, b), f) ==
              ext_module_action(a, ext_module_action(b, f)));
        CHECK(ext_module_action(ext_embed(fn_unit(all, q, 512)), f) == f);
        CHECK(ext_module_action(ext_add(a, b), f) ==
              ext_module_add(ext_module_action(a, f), ext_module_action(b, f)));
    }
}

TEST_CASE("module embedding respects the action") {
    std::mt19937 rng(5801);
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    for (int i = 0; i < 10; ++i) {
        ArithFunction a = random_fn(all, q, 256, rng, 6);
        ModuleFunction f(all, q, 2, 256);
        auto elems = all.elements_up_to(256);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        for (int j = 0; j < 6; ++j)
            f.set(elems[pick(rng)],
                  {testutil::random_value(q, rng), testutil::random_value(q, rng)});
        CHECK(ext_module_embed(mod_action(a, f)) ==
              ext_module_action(ext_embed(a), ext_module_embed(f)));
    }
}

TEST_CASE("extended derivation restricts to the lifted one") {
    std::mt19937 rng(5901);
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    DerivationSpec d{BaseDerivation::Zero, AdditiveCharacter::factor_count(q, 512)};
    for (int i = 0; i < 10; ++i) {
        ArithFunction a = random_fn(all, q, 256, rng, 8);
        CHECK(ext_derivation(d, ext_embed(a)) == ext_module_embed(lift_derivation(d, a)));
    }
}

TEST_CASE("extended derivation satisfies the product rule") {
    std::mt19937 rng(6001);
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    DerivationSpec d{BaseDerivation::Zero, AdditiveCharacter::factor_count(q, 2048)};
    for (int i = 0; i < 10; ++i) {
        ExtFunction a = random_ext(all, q, 512, 2, rng, 5);
        ExtFunction b = random_ext(all, q, 512, 3, rng, 5);
        ExtModuleFunction lhs = ext_derivation(d, ext_convolve(a, b));
        ExtModuleFunction rhs = ext_module_add(
            ext_module_action(a, ext_derivation(d, b)),
            ext_module_action(b, ext_derivation(d, a)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("derivation values on genuine fractions") {
    MonoidSpec all = MonoidSpec::nstar();
    Ring q = Ring::rationals();
    DerivationSpec d{BaseDerivation::Zero, AdditiveCharacter::factor_count(q, 64)};
    // indicator of 3/2: delta-bar counts factors of the numerator minus the
    // denominator, so 1 - 1 = 0
    ArithFunction core(all, q, 64);
    core.set(3, q.one());
    ExtModuleFunction out = ext_derivation(d, ExtFunction(2, core));
    CHECK(out.denominator() == 2);
    CHECK(out.core().at(3) == std::vector<Value>{q.zero()});

    // indicator of 9/2: 2 - 1 = 1
    ArithFunction core2(all, q, 64);
    core2.set(9, q.one());
    ExtModuleFunction out2 = ext_derivation(d, ExtFunction(2, core2));
    CHECK(out2.core().at(9) == std::vector<Value>{q.one()});
}
