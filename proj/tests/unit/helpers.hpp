#pragma once

// Shared test utilities: deterministic random data and independent oracles
// (sieve, double-loop convolution) that never call the code paths they
// are checking.

#include <cstdint>
#include <random>
#include <vector>

#include "dirconv/arith.hpp"

namespace testutil {

using namespace dirconv;

// Polynomial value of bounded degree, so that products and derivatives of
// generated values stay below the ring's cap and remain exact.
inline Value random_poly_value(const Ring& ring, int max_degree, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Value x = ring.degree_cap() >= 1 ? ring.parse("0,1") : ring.one();
    Value out = ring.from_complex({u(rng), u(rng)});
    for (int i = 0; i < max_degree; ++i)
        out = out * x + ring.from_complex({u(rng), u(rng)});
    return out;
}

inline Value random_value(const Ring& ring, std::mt19937& rng) {
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
            std::vector<std::complex<double>> c(
                static_cast<std::size_t>(ring.degree_cap()) + 1);
            for (auto& x : c) x = {u(rng), u(rng)};
            Value out = ring.from_complex(c.back());
            Value x = ring.degree_cap() >= 1 ? ring.parse("0,1") : ring.one();
            for (std::size_t i = c.size() - 1; i-- > 0;)
                out = out * x + ring.from_complex(c[i]);
            return out;
        }
    }
    throw Error("unreachable ring kind");
}

// Sparse random function; support size elements drawn from the monoid
// window, value at 1 forced to the ring unit when unit_lead is set.
inline ArithFunction random_fn(const MonoidSpec& spec, const Ring& ring, std::uint64_t bound,
                               std::mt19937& rng, int support, bool unit_lead = false) {
    auto elements = spec.elements_up_to(bound);
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    ArithFunction f(spec, ring, bound);
    for (int i = 0; i < support; ++i) f.set(elements[pick(rng)], random_value(ring, rng));
    if (unit_lead) f.set(1, ring.one());
    return f;
}

// Independent convolution oracle: trial-division divisor walk with explicit
// membership filtering, summing in ascending divisor order.
inline ArithFunction oracle_convolve(const ArithFunction& a, const ArithFunction& b) {
    std::uint64_t window = std::min(a.bound(), b.bound());
    ArithFunction out(a.spec(), a.ring(), window);
    for (auto n : a.spec().elements_up_to(window)) {
        Value sum = a.ring().zero();
        for (std::uint64_t d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            if (!a.spec().contains(d) || !a.spec().contains(n / d)) continue;
            sum += a.at(d) * b.at(n / d);
        }
        out.set(n, sum);
    }
    return out;
}

// Smallest-prime-factor sieve for the Mobius function on all of N*.
inline ArithFunction random_fn_poly(const MonoidSpec& spec, const Ring& ring,
                                    std::uint64_t bound, std::mt19937& rng, int support,
                                    int max_degree) {
    auto elements = spec.elements_up_to(bound);
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    ArithFunction f(spec, ring, bound);
    for (int i = 0; i < support; ++i)
        f.set(elements[pick(rng)], random_poly_value(ring, max_degree, rng));
    return f;
}

inline std::vector<int> sieve_mobius(std::uint64_t bound) {
    std::vector<std::uint64_t> spf(bound + 1, 0);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= bound; j += i)
            if (spf[j] == 0) spf[j] = i;
    }
    std::vector<int> mu(bound + 1, 0);
    mu[1] = 1;
    for (std::uint64_t n = 2; n <= bound; ++n) {
        std::uint64_t p = spf[n], m = n / p;
        mu[n] = m % p == 0 ? 0 : -mu[m];
    }
    return mu;
}

}  // namespace testutil
