#pragma once

// The ring of arithmetic functions on a multiplicative monoid under
// Dirichlet convolution. A function is stored on every monoid element up to
// a bound B; within that window convolution and inversion are exact, since
// the value at n only ever depends on divisors of n.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dirconv/monoid.hpp"
#include "dirconv/rings.hpp"

namespace dirconv {

class ArithFunction {
public:
    // The zero function.
    ArithFunction(MonoidSpec spec, Ring ring, std::uint64_t bound);

    const MonoidSpec& spec() const { return spec_; }
    const Ring& ring() const { return ring_; }
    std::uint64_t bound() const { return bound_; }

    // Value at n; ring zero where nothing is stored. Reading outside the
    // monoid or beyond the bound is an error, not a zero.
    Value at(std::uint64_t n) const;
    void set(std::uint64_t n, Value v);

    // Nonzero values, ascending in n. Entries that are exactly zero are
    // never stored.
    const std::map<std::uint64_t, Value>& support() const { return values_; }
    bool zero_up_to_bound() const;

    // Equal on the overlap of the two bounds. Same spec and ring required.
    friend bool operator==(const ArithFunction& a, const ArithFunction& b);
    friend bool operator!=(const ArithFunction& a, const ArithFunction& b) { return !(a == b); }

private:
    MonoidSpec spec_;
    Ring ring_;
    std::uint64_t bound_;
    std::map<std::uint64_t, Value> values_;
};

// A function determined by its values on primes: L(1) = 1 and
// L(ab) = L(a)L(b) everywhere. Evaluation factors n and multiplies the
// assigned prime values; a prime factor with no assignment is an error.
class TotallyMultiplicativeFn {
public:
    TotallyMultiplicativeFn(Ring ring, std::map<std::uint64_t, Value> prime_values);

    const Ring& ring() const { return ring_; }
    const std::map<std::uint64_t, Value>& prime_values() const { return prime_values_; }
    Value eval(std::uint64_t n) const;

private:
    Ring ring_;
    std::map<std::uint64_t, Value> prime_values_;
};

// Character whose prime values are read off an arithmetic function.
TotallyMultiplicativeFn tm_from_function(const ArithFunction& f);
// L(p) = p for every prime.
TotallyMultiplicativeFn tm_identity_character(const Ring& ring, std::uint64_t bound);

ArithFunction fn_make(const MonoidSpec& spec, const Ring& ring, std::uint64_t bound,
                      const std::vector<std::pair<std::uint64_t, Value>>& assignments);
// e: 1 at the identity, 0 elsewhere. The convolution unit.
ArithFunction fn_unit(const MonoidSpec& spec, const Ring& ring, std::uint64_t bound);
// The constant function 1 on every monoid element.
ArithFunction fn_constant_one(const MonoidSpec& spec, const Ring& ring, std::uint64_t bound);

ArithFunction fn_add(const ArithFunction& a, const ArithFunction& b);
ArithFunction fn_neg(const ArithFunction& a);
ArithFunction fn_sub(const ArithFunction& a, const ArithFunction& b);

// (α·β)(n) = Σ_{ab=n} α(a)β(b), exact up to min of the bounds.
ArithFunction fn_convolve(const ArithFunction& a, const ArithFunction& b);

// Convolution inverse: β(1) = α(1)⁻¹ and, ascending,
// β(n) = −α(1)⁻¹ Σ_{ab=n, b≠n} α(a)β(b). Throws NotAUnit unless α(1) is a
// unit of the coefficient ring.
ArithFunction fn_invert(const ArithFunction& a);

// Least n with α(n) ≠ 0, or nullopt when α vanishes on the whole window
// (which does not decide whether α is the zero function).
std::optional<std::uint64_t> fn_norm(const ArithFunction& a);

// r ↦ (r at 1, zero elsewhere) and its left inverse α ↦ α(1).
ArithFunction fn_embed_scalar(const MonoidSpec& spec, const Value& r, std::uint64_t bound);
Value fn_project(const ArithFunction& a);

// Pointwise twist n ↦ L(n)α(n); a ring morphism in α.
ArithFunction fn_twist(const TotallyMultiplicativeFn& L, const ArithFunction& a);

// Extension by zero from a submonoid, and restriction back. Both are ring
// morphisms; restrict(extend(α)) = α.
ArithFunction fn_extend_submonoid(const ArithFunction& a, const MonoidSpec& target);
ArithFunction fn_restrict(const ArithFunction& a, const MonoidSpec& sub);

// Möbius function of the spec: the convolution inverse of constant 1.
ArithFunction fn_mobius(const MonoidSpec& spec, const Ring& ring, std::uint64_t bound);

}  // namespace dirconv
