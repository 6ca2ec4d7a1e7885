#pragma once

// Truncated multivariate power series, Laurent series with monomial
// denominators, and the explicit encode/decode pairs between them and
// functions on prime-generated monoids: a function α on the monoid
// generated by the first k primes corresponds to the series
// Σ α(∏ p_i^{a_i}) x^a. These pairs serve as independent oracles for
// convolution (series product) and the extension ring (Laurent product).

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dirconv/grothendieck.hpp"

namespace dirconv {

// Exponents of n over the given primes, or nullopt when n has another
// prime factor.
std::optional<std::vector<int>> exponents_over(std::uint64_t n,
                                               const std::vector<std::uint64_t>& primes);

class TruncatedSeries {
public:
    // The zero series in caps.size() variables; coefficients live on the
    // box 0 <= a_i <= caps[i] and products drop anything beyond it.
    TruncatedSeries(Ring ring, std::vector<int> degree_caps);

    const Ring& ring() const { return ring_; }
    int nvars() const { return static_cast<int>(caps_.size()); }
    const std::vector<int>& degree_caps() const { return caps_; }

    Value coeff(const std::vector<int>& expo) const;
    void set_coeff(const std::vector<int>& expo, Value v);

    // Nonzero coefficients in lexicographic exponent order.
    const std::map<std::vector<int>, Value>& coefficients() const { return coeff_; }

    static TruncatedSeries one(const Ring& ring, std::vector<int> degree_caps);

    // Equal on the componentwise-min cap box. Same ring and nvars required.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    Ring ring_;
    std::vector<int> caps_;
    std::map<std::vector<int>, Value> coeff_;
};

TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);
// Multiply by the monomial x^t, t >= 0, growing the caps by t so no
// knowledge is lost.
TruncatedSeries series_shift_up(const TruncatedSeries& s, const std::vector<int>& t);

// x^shift · body, shift in Z^k. Canonical form: positive shift components
// are absorbed into the body; while some variable with a negative shift
// divides every body term, the factor moves from the body into the shift;
// a zero body forces shift 0. Every Laurent element has exactly one such
// representative, so equality is componentwise.
class LaurentSeries {
public:
    LaurentSeries(std::vector<int> shift, TruncatedSeries body);

    const std::vector<int>& shift() const { return shift_; }
    const TruncatedSeries& body() const { return body_; }
    const Ring& ring() const { return body_.ring(); }
    int nvars() const { return body_.nvars(); }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

private:
    std::vector<int> shift_;
    TruncatedSeries body_;
};

LaurentSeries laurent_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b);

// Series image of a function over a prime-generated monoid. Coefficients
// beyond the caps are dropped; a coefficient at exponent a is exact iff
// ∏ p_i^{a_i} <= exact_bound (the bound of the encoded function).
struct EncodedSeries {
    TruncatedSeries series;
    std::uint64_t exact_bound;
};
EncodedSeries iso_encode(const ArithFunction& a, const std::vector<int>& caps);

// Canonical function representative of a capped series: supported exactly
// on the exponent box, zero elsewhere, over the monoid of the first
// nvars primes with bound ∏ p_i^{cap_i}.
ArithFunction iso_decode(const TruncatedSeries& s);

// Laurent image of an extension-ring element: the fraction ∏ p_i^{m_i}
// (m ∈ Z^k) maps to the monomial x^m. The caps describe the body window.
struct EncodedLaurent {
    LaurentSeries series;
    std::uint64_t exact_bound;
};
EncodedLaurent laurent_encode(const ExtFunction& a, const std::vector<int>& caps);

ExtFunction laurent_decode(const LaurentSeries& ls);

}  // namespace dirconv
