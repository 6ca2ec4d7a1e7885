#pragma once

// The group of formal fractions of monoid elements and the extension of the
// convolution ring to it. A function on fractions with bounded denominators
// is stored as a pair (d, core): denominator d in the monoid and
// core(n) = α(n/d). The pair is reduced to a canonical representative so
// that equality is decidable.

#include <cstdint>

#include "dirconv/derivation.hpp"

namespace dirconv {

// A reduced fraction m/n of positive integers; class equality of unreduced
// pairs is (m,n) ~ (p,q) iff mq = np.
struct Fraction {
    std::uint64_t num = 1;
    std::uint64_t den = 1;

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
};

// Reduced representative of the class of (m,n); both must lie in the monoid.
// The reduced numerator and denominator are class labels and may themselves
// fall outside a restricted monoid.
Fraction groth_reduce(const MonoidSpec& spec, std::uint64_t m, std::uint64_t n);

Fraction frac_mul(const Fraction& a, const Fraction& b);
Fraction frac_inverse(const Fraction& a);

// The unique multiplicative extension f̄(m/n) = f(m)·f(n)⁻¹ of a totally
// multiplicative function to fractions. Throws NotAUnit when f(n) has no
// inverse in the coefficient ring.
Value universal_extend_multiplicative(const TotallyMultiplicativeFn& f, const Fraction& q);

// The additive counterpart δ̄(m/n) = δ(m) − δ(n) lives on AdditiveCharacter
// as eval_fraction.

// Core shifted to a larger denominator: shift_e(A)(n) = A(n/e) when e | n
// and n/e stays in the monoid, 0 otherwise. Exact up to e·bound(A).
ArithFunction shift_core(const ArithFunction& a, std::uint64_t e);
ModuleFunction shift_module_core(const ModuleFunction& f, std::uint64_t e);

class ExtFunction {
public:
    // Canonicalizes: every prime p of the denominator with d/p still in the
    // monoid and the whole core support inside pΓ is divided out. A core
    // with empty support cannot certify its own support condition, so a
    // denominator > 1 is then kept and flagged as possibly reducible.
    ExtFunction(std::uint64_t denominator, ArithFunction core);

    const MonoidSpec& spec() const { return core_.spec(); }
    const Ring& ring() const { return core_.ring(); }
    std::uint64_t denominator() const { return denominator_; }
    const ArithFunction& core() const { return core_; }
    std::uint64_t bound() const { return core_.bound(); }
    bool canonical_certain() const { return canonical_certain_; }

    // α(m/n) = core(d·m/n) when that is a monoid element within bound;
    // exactly zero when d·m/n is not; unknown beyond the bound.
    Value at(const Fraction& q) const;

    // Equality as functions on fractions, on the overlap of the windows.
    friend bool operator==(const ExtFunction& a, const ExtFunction& b);
    friend bool operator!=(const ExtFunction& a, const ExtFunction& b) { return !(a == b); }

private:
    std::uint64_t denominator_;
    ArithFunction core_;
    bool canonical_certain_ = true;
};

class ExtModuleFunction {
public:
    ExtModuleFunction(std::uint64_t denominator, ModuleFunction core);

    const MonoidSpec& spec() const { return core_.spec(); }
    const Ring& ring() const { return core_.ring(); }
    int rank() const { return core_.rank(); }
    std::uint64_t denominator() const { return denominator_; }
    const ModuleFunction& core() const { return core_; }
    std::uint64_t bound() const { return core_.bound(); }
    bool canonical_certain() const { return canonical_certain_; }

    friend bool operator==(const ExtModuleFunction& a, const ExtModuleFunction& b);
    friend bool operator!=(const ExtModuleFunction& a, const ExtModuleFunction& b) {
        return !(a == b);
    }

private:
    std::uint64_t denominator_;
    ModuleFunction core_;
    bool canonical_certain_ = true;
};

ExtFunction ext_make(std::uint64_t denominator, ArithFunction core);
// d = 1: the injective ring morphism from functions on the monoid itself.
ExtFunction ext_embed(const ArithFunction& a);

ExtFunction ext_add(const ExtFunction& a, const ExtFunction& b);
ExtFunction ext_neg(const ExtFunction& a);
ExtFunction ext_convolve(const ExtFunction& a, const ExtFunction& b);

ExtModuleFunction ext_module_make(std::uint64_t denominator, ModuleFunction core);
ExtModuleFunction ext_module_embed(const ModuleFunction& f);
ExtModuleFunction ext_module_add(const ExtModuleFunction& f, const ExtModuleFunction& g);
ExtModuleFunction ext_module_action(const ExtFunction& a, const ExtModuleFunction& f);

// D̄(α)(q) = D(α(q)) + α(q)·δ̄(q) with δ̄(n/d) = δ(n) − δ(d). Embedding a
// plain function and extending its lifted derivation commute with this map.
ExtModuleFunction ext_derivation(const DerivationSpec& d, const ExtFunction& a);

}  // namespace dirconv
