#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dirconv/errors.hpp"

namespace dirconv {

// Elements are the positive-integer images inside N*; membership is checked
// by the operations that consume them.
using MonoidElement = std::uint64_t;

enum class MonoidKind { FullNStar, PrimeGenerated, FinitelyGenerated, AffineEmbedded };

std::vector<std::uint64_t> first_k_primes(int k);
bool is_prime(std::uint64_t n);

// ∏ primes[i]^{v[i]}: the embedding of (N^k,+) into (N*,·).
MonoidElement embed_affine(const std::vector<std::uint64_t>& primes,
                           const std::vector<std::uint64_t>& v);

// A multiplicative submonoid of the positive integers. Four shapes:
//   nstar                            all of N*
//   gamma(k)                         numbers smooth over the first k primes
//   gen(4,6,9)                       generated by the listed integers
//   affine[(1,0),(1,2)]@primes(2,3)  N^k vectors embedded via p_i^{v_i}
class MonoidSpec {
public:
    static MonoidSpec nstar();
    static MonoidSpec prime_generated(int k);
    static MonoidSpec finitely_generated(std::vector<std::uint64_t> generators);
    static MonoidSpec affine_embedded(std::vector<std::vector<std::uint64_t>> vectors,
                                      std::vector<std::uint64_t> primes);

    MonoidKind kind() const { return kind_; }
    // PrimeGenerated and AffineEmbedded: the underlying primes.
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    // FinitelyGenerated and AffineEmbedded: the multiplicative generators in N*.
    const std::vector<std::uint64_t>& generators() const { return generators_; }
    const std::vector<std::vector<std::uint64_t>>& vectors() const { return vectors_; }

    bool contains(std::uint64_t n) const;
    // All ordered pairs (a,b) with ab = n and both factors in the monoid,
    // ascending in a. Throws NotInMonoid if n itself is outside.
    std::vector<std::pair<MonoidElement, MonoidElement>> divisor_pairs(MonoidElement n) const;
    // All members <= bound, ascending.
    std::vector<MonoidElement> elements_up_to(std::uint64_t bound) const;

    std::string syntax() const;
    static MonoidSpec parse(std::string_view text);

    friend bool operator==(const MonoidSpec& a, const MonoidSpec& b) {
        return a.kind_ == b.kind_ && a.primes_ == b.primes_ && a.generators_ == b.generators_ &&
               a.vectors_ == b.vectors_;
    }
    friend bool operator!=(const MonoidSpec& a, const MonoidSpec& b) { return !(a == b); }

private:
    MonoidSpec(MonoidKind kind, std::vector<std::uint64_t> primes,
               std::vector<std::uint64_t> generators,
               std::vector<std::vector<std::uint64_t>> vectors)
        : kind_(kind),
          primes_(std::move(primes)),
          generators_(std::move(generators)),
          vectors_(std::move(vectors)) {}

    MonoidKind kind_;
    std::vector<std::uint64_t> primes_;
    std::vector<std::uint64_t> generators_;
    std::vector<std::vector<std::uint64_t>> vectors_;
};

// True when every member of sub up to the bound also lies in super.
bool submonoid_up_to(const MonoidSpec& sub, const MonoidSpec& super, std::uint64_t bound);

}  // namespace dirconv
