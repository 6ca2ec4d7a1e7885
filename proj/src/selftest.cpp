#include "dirconv/selftest.hpp"

#include <random>

#include "dirconv/powerseries.hpp"
#include "dirconv/series_eval.hpp"

namespace dirconv {

namespace {

Value random_value(const Ring& ring, std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-9, 9);
    switch (ring.kind()) {
        case RingKind::Rational: {
            std::uniform_int_distribution<int> den(1, 9);
            return ring.parse(std::to_string(small(rng)) + "/" + std::to_string(den(rng)));
        }
        case RingKind::Integer:
            return ring.from_int(small(rng));
        case RingKind::Modular: {
            std::uniform_int_distribution<std::uint64_t> r(0, ring.modulus() - 1);
            return ring.from_int(static_cast<long long>(r(rng)));
        }
        case RingKind::Complex: {
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            return ring.from_complex({u(rng), u(rng)});
        }
        case RingKind::Poly: {
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            Value acc = ring.from_complex({u(rng), u(rng)});
            if (ring.degree_cap() < 1) return acc;
            Value x = ring.parse("0,1");
            Value c1 = ring.from_complex({u(rng), u(rng)});
            Value c2 = ring.from_complex({u(rng), u(rng)});
            return acc + x * (c1 + x * c2);
        }
    }
    throw Error("unreachable ring kind");
}

ArithFunction random_fn(const MonoidSpec& spec, const Ring& ring, std::uint64_t bound,
                        std::mt19937& rng, int support_size, bool unit_lead) {
    auto elements = spec.elements_up_to(bound);
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    ArithFunction f(spec, ring, bound);
    for (int i = 0; i < support_size; ++i) f.set(elements[pick(rng)], random_value(ring, rng));
    if (unit_lead) f.set(1, ring.one());
    return f;
}

}  // namespace

std::vector<SelftestItem> run_selftest(const MonoidSpec& spec, const Ring& ring,
                                       std::uint64_t bound) {
    std::vector<SelftestItem> out;
    auto item = [&](const std::string& name, bool pass) { out.push_back({name, pass}); };
    std::mt19937 rng(20240811);

    {
        auto mu = fn_mobius(spec, ring, bound);
        auto one = fn_constant_one(spec, ring, bound);
        item("mobius-inversion", fn_convolve(mu, one) == fn_unit(spec, ring, bound));
    }
    {
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            auto a = random_fn(spec, ring, bound, rng, 8, true);
            auto inv = fn_invert(a);
            ok = fn_convolve(a, inv) == fn_unit(spec, ring, bound) && fn_invert(inv) == a;
        }
        item("inverse-round-trip", ok);
    }
    {
        auto r = random_value(ring, rng);
        bool ok = fn_project(fn_embed_scalar(spec, r, bound)) == r &&
                  fn_embed_scalar(spec, ring.one(), bound) == fn_unit(spec, ring, bound);
        item("scalar-embedding", ok);
    }
    {
        std::map<std::uint64_t, Value> pv;
        for (std::uint64_t p = 2; p <= bound && p <= 97; ++p)
            if (is_prime(p)) pv.emplace(p, random_value(ring, rng));
        TotallyMultiplicativeFn L(ring, std::move(pv));
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            auto a = random_fn(spec, ring, std::min<std::uint64_t>(bound, 97), rng, 6, false);
            auto b = random_fn(spec, ring, std::min<std::uint64_t>(bound, 97), rng, 6, false);
            ok = fn_twist(L, fn_convolve(a, b)) == fn_convolve(fn_twist(L, a), fn_twist(L, b)) &&
                 fn_twist(L, fn_add(a, b)) == fn_add(fn_twist(L, a), fn_twist(L, b));
        }
        item("twist-morphism", ok);
    }
    {
        auto g3 = MonoidSpec::prime_generated(3);
        std::vector<int> caps{3, 2, 2};
        std::uint64_t box = 8 * 9 * 25;
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            ArithFunction a(g3, ring, box);
            ArithFunction b(g3, ring, box);
            std::uniform_int_distribution<int> e1(0, 3), e2(0, 2);
            for (int j = 0; j < 6; ++j) {
                auto n = [&] {
                    std::uint64_t v = 1;
                    for (int t = e1(rng); t-- > 0;) v *= 2;
                    for (int t = e2(rng); t-- > 0;) v *= 3;
                    for (int t = e2(rng); t-- > 0;) v *= 5;
                    return v;
                };
                a.set(n(), random_value(ring, rng));
                b.set(n(), random_value(ring, rng));
            }
            ok = iso_decode(iso_encode(a, caps).series) == a &&
                 iso_encode(fn_convolve(a, b), caps).series ==
                     series_mul(iso_encode(a, caps).series, iso_encode(b, caps).series);
        }
        item("iso-round-trip", ok);
    }
    {
        auto g2 = MonoidSpec::prime_generated(2);
        std::uint64_t d = 8 * 27;
        std::uint64_t box = 64 * 729;
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            ArithFunction core(g2, ring, box);
            std::uniform_int_distribution<int> e(0, 6);
            for (int j = 0; j < 5; ++j) {
                std::uint64_t n = 1;
                for (int t = e(rng); t-- > 0;) n *= 2;
                for (int t = e(rng); t-- > 0;) n *= 3;
                core.set(n, random_value(ring, rng));
            }
            ExtFunction a(d, core);
            auto enc = laurent_encode(a, {6, 6});
            ok = laurent_decode(enc.series) == a;
        }
        item("laurent-round-trip", ok);
    }
    {
        auto delta = AdditiveCharacter::factor_count(ring, bound);
        DerivationSpec d{BaseDerivation::Zero, delta};
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            auto a = random_fn(spec, ring, bound, rng, 6, false);
            auto b = random_fn(spec, ring, bound, rng, 6, false);
            auto lhs = lift_derivation_scalar(d, fn_convolve(a, b));
            auto rhs = fn_add(fn_convolve(lift_derivation_scalar(d, a), b),
                              fn_convolve(a, lift_derivation_scalar(d, b)));
            ok = lhs == rhs;
        }
        item("leibniz-lift", ok);
    }
    {
        auto nstar = MonoidSpec::nstar();
        auto Q = Ring::rationals();
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            auto a = random_fn(nstar, Q, 128, rng, 6, false);
            auto b = random_fn(nstar, Q, 128, rng, 6, false);
            auto lhs = p_derivation(2, BaseDerivation::Zero, fn_convolve(a, b));
            auto rhs = fn_add(fn_convolve(p_derivation(2, BaseDerivation::Zero, a), b),
                              fn_convolve(a, p_derivation(2, BaseDerivation::Zero, b)));
            ok = lhs == rhs;
        }
        item("leibniz-p", ok);
    }
    {
        auto nstar = MonoidSpec::nstar();
        auto C = Ring::complex_floats();
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            auto a = random_fn(nstar, C, 64, rng, 6, false);
            auto b = random_fn(nstar, C, 64, rng, 6, false);
            auto lhs = log_derivation(fn_convolve(a, b));
            auto rhs = fn_add(fn_convolve(log_derivation(a), b),
                              fn_convolve(a, log_derivation(b)));
            ok = lhs == rhs;
        }
        item("leibniz-log", ok);
    }
    {
        auto nstar = MonoidSpec::nstar();
        auto P = Ring::poly(3);
        // degree <= 1 values in a cap-3 ring: the pairwise products stay
        // below the cap, so the identity is exact
        auto low_degree_fn = [&rng, &nstar, &P]() {
            auto elements = nstar.elements_up_to(64);
            std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            ArithFunction f(nstar, P, 64);
            for (int t = 0; t < 6; ++t) {
                Value v = P.from_complex({u(rng), u(rng)}) * P.parse("0,1") +
                          P.from_complex({u(rng), u(rng)});
                f.set(elements[pick(rng)], v);
            }
            return f;
        };
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            auto a = low_degree_fn();
            auto b = low_degree_fn();
            auto lhs = holo_derivation(fn_convolve(a, b));
            auto rhs = fn_add(fn_convolve(holo_derivation(a), b),
                              fn_convolve(a, holo_derivation(b)));
            ok = lhs == rhs;
        }
        item("leibniz-holo", ok);
    }
    return out;
}

}  // namespace dirconv
