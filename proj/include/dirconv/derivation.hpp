#pragma once

// Derivations of the convolution ring. All four constructions satisfy the
// Leibniz rule on their stated windows:
//   lift:  D̃(α)(n) = D(α(n)) + α(n)·δ(n), δ a completely additive character
//   p:     D̃_p(α)(n) = D(α(n)) + α(np)·v_p(np), valid for n ≤ floor(B/p)
//   log:   D_L(α)(n) = −log(n)·α(n), complex coefficients
//   holo:  D̃(α)(n) = α(n)′ − log(n)·α(n), truncated-polynomial coefficients

#include <cstdint>
#include <map>
#include <vector>

#include "dirconv/modfun.hpp"

namespace dirconv {

// Completely additive character δ: Γ → R^rank. Determined by its values on
// primes: δ(1) = 0 and δ(∏ p_i^{a_i}) = Σ a_i·δ(p_i).
class AdditiveCharacter {
public:
    AdditiveCharacter(Ring ring, int rank, std::map<std::uint64_t, std::vector<Value>> prime_values);

    static AdditiveCharacter zero(Ring ring, int rank = 1);
    // Scalar character from prime values.
    static AdditiveCharacter from_scalar(Ring ring,
                                         const std::map<std::uint64_t, Value>& prime_values);
    // δ(p) = sign·log p over a complex ring, for primes up to the bound.
    static AdditiveCharacter log_character(Ring ring, std::uint64_t bound, double sign = 1.0);
    // δ(p) = 1 for primes up to the bound, so δ(n) counts prime factors
    // with multiplicity.
    static AdditiveCharacter factor_count(Ring ring, std::uint64_t bound);

    const Ring& ring() const { return ring_; }
    int rank() const { return rank_; }
    const std::map<std::uint64_t, std::vector<Value>>& prime_values() const {
        return prime_values_;
    }

    std::vector<Value> eval(std::uint64_t n) const;
    Value eval_scalar(std::uint64_t n) const;  // rank 1 only
    // δ̄(m/n) = δ(m) − δ(n): the unique extension to formal fractions.
    std::vector<Value> eval_fraction(std::uint64_t num, std::uint64_t den) const;

private:
    Ring ring_;
    int rank_;
    bool identically_zero_ = false;
    std::map<std::uint64_t, std::vector<Value>> prime_values_;
};

enum class BaseDerivation { Zero, PolyDerivative };

// Base derivation applied to a single coefficient.
Value apply_base(BaseDerivation base, const Value& v);

struct DerivationSpec {
    BaseDerivation base;
    AdditiveCharacter character;
};

// D̃(α)(n) = D(α(n)) + α(n)·δ(n). Rank follows the character; a
// PolyDerivative base requires rank 1 and a polynomial coefficient ring.
ModuleFunction lift_derivation(const DerivationSpec& d, const ArithFunction& a);
// Scalar shortcut for rank-1 characters.
ArithFunction lift_derivation_scalar(const DerivationSpec& d, const ArithFunction& a);

// D̃_p(α)(n) = D(α(n)) + α(np)·v_p(np). The result bound is floor(B/p)
// because the formula reads ahead at np.
ArithFunction p_derivation(std::uint64_t p, BaseDerivation base, const ArithFunction& a);

// D_L(α)(n) = −log(n)·α(n); complex coefficients only.
ArithFunction log_derivation(const ArithFunction& a);

// D̃(α)(n) = α(n)′ − log(n)·α(n); truncated-polynomial coefficients only.
ArithFunction holo_derivation(const ArithFunction& a);

// Exponent of the highest power of p dividing n.
std::uint64_t p_adic_valuation(std::uint64_t p, std::uint64_t n);

}  // namespace dirconv
