#include "dirconv/grothendieck.hpp"

#include <algorithm>
#include <numeric>

namespace dirconv {

Fraction groth_reduce(const MonoidSpec& spec, std::uint64_t m, std::uint64_t n) {
    if (!spec.contains(m)) throw NotInMonoid(std::to_string(m) + " is not in " + spec.syntax());
    if (!spec.contains(n)) throw NotInMonoid(std::to_string(n) + " is not in " + spec.syntax());
    std::uint64_t g = std::gcd(m, n);
    return Fraction{m / g, n / g};
}

Fraction frac_mul(const Fraction& a, const Fraction& b) {
    std::uint64_t num = a.num * b.num;
    std::uint64_t den = a.den * b.den;
    std::uint64_t g = std::gcd(num, den);
    return Fraction{num / g, den / g};
}

Fraction frac_inverse(const Fraction& a) { return Fraction{a.den, a.num}; }

Value universal_extend_multiplicative(const TotallyMultiplicativeFn& f, const Fraction& q) {
    Value num = f.eval(q.num);
    Value den = f.eval(q.den);
    auto inv = ring_inverse(den);
    if (!inv)
        throw NotAUnit("denominator value " + den.str() + " has no inverse in " +
                       f.ring().name());
    return num * *inv;
}

ArithFunction shift_core(const ArithFunction& a, std::uint64_t e) {
    if (!a.spec().contains(e))
        throw NotInMonoid(std::to_string(e) + " is not in " + a.spec().syntax());
    ArithFunction out(a.spec(), a.ring(), e * a.bound());
    for (const auto& [n, v] : a.support()) out.set(n * e, v);
    return out;
}

ModuleFunction shift_module_core(const ModuleFunction& f, std::uint64_t e) {
    if (!f.spec().contains(e))
        throw NotInMonoid(std::to_string(e) + " is not in " + f.spec().syntax());
    ModuleFunction out(f.spec(), f.ring(), f.rank(), e * f.bound());
    for (const auto& [n, v] : f.support()) out.set(n * e, v);
    return out;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t d) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        out.push_back(p);
        while (d % p == 0) d /= p;
    }
    if (d > 1) out.push_back(d);
    return out;
}

// One canonicalization pass shared by the scalar and module variants.
// SupportIn(p): every support element n has p | n and n/p in the monoid.
// Shrink(p): replace the core by n ↦ core(np) with bound/p.
template <typename Core, typename SupportIn, typename Shrink>
bool reduce_denominator(const MonoidSpec& spec, std::uint64_t& d, Core& core,
                        const SupportIn& support_in, const Shrink& shrink) {
    bool certain = true;
    bool changed = true;
    while (changed && d > 1) {
        changed = false;
        if (core.support().empty()) {
            // Nothing stored: the support condition beyond the bound is
            // unknowable, so stop rather than guess.
            certain = false;
            break;
        }
        for (auto p : prime_factors(d)) {
            if (!spec.contains(d / p)) continue;
            if (!support_in(p)) continue;
            shrink(p);
            d /= p;
            changed = true;
            break;
        }
    }
    return certain;
}

}  // namespace

ExtFunction::ExtFunction(std::uint64_t denominator, ArithFunction core)
    : denominator_(denominator), core_(std::move(core)) {
    if (!core_.spec().contains(denominator_))
        throw NotInMonoid(std::to_string(denominator_) + " is not in " + core_.spec().syntax());
    auto support_in = [&](std::uint64_t p) {
        for (const auto& [n, v] : core_.support())
            if (n % p != 0 || !core_.spec().contains(n / p)) return false;
        return true;
    };
    auto shrink = [&](std::uint64_t p) {
        ArithFunction smaller(core_.spec(), core_.ring(), core_.bound() / p);
        for (const auto& [n, v] : core_.support()) smaller.set(n / p, v);
        core_ = std::move(smaller);
    };
    canonical_certain_ =
        reduce_denominator(core_.spec(), denominator_, core_, support_in, shrink);
}

Value ExtFunction::at(const Fraction& q) const {
    // d·m/n must be integral; with gcd(m,n)=1 that means n | d.
    if ((denominator_ * q.num) % q.den != 0) return ring().zero();
    std::uint64_t target = denominator_ * q.num / q.den;
    if (!spec().contains(target)) return ring().zero();
    return core_.at(target);
}

bool operator==(const ExtFunction& a, const ExtFunction& b) {
    if (a.ring() != b.ring()) throw MixedRings(a.ring().name() + " vs " + b.ring().name());
    if (a.spec() != b.spec())
        throw MonoidMismatch(a.spec().syntax() + " vs " + b.spec().syntax());
    return shift_core(a.core(), b.denominator()) == shift_core(b.core(), a.denominator());
}

ExtModuleFunction::ExtModuleFunction(std::uint64_t denominator, ModuleFunction core)
    : denominator_(denominator), core_(std::move(core)) {
    if (!core_.spec().contains(denominator_))
        throw NotInMonoid(std::to_string(denominator_) + " is not in " + core_.spec().syntax());
    auto support_in = [&](std::uint64_t p) {
        for (const auto& [n, v] : core_.support())
            if (n % p != 0 || !core_.spec().contains(n / p)) return false;
        return true;
    };
    auto shrink = [&](std::uint64_t p) {
        ModuleFunction smaller(core_.spec(), core_.ring(), core_.rank(), core_.bound() / p);
        for (const auto& [n, v] : core_.support()) smaller.set(n / p, v);
        core_ = std::move(smaller);
    };
    canonical_certain_ =
        reduce_denominator(core_.spec(), denominator_, core_, support_in, shrink);
}

bool operator==(const ExtModuleFunction& a, const ExtModuleFunction& b) {
    if (a.ring() != b.ring()) throw MixedRings(a.ring().name() + " vs " + b.ring().name());
    if (a.spec() != b.spec())
        throw MonoidMismatch(a.spec().syntax() + " vs " + b.spec().syntax());
    if (a.rank() != b.rank())
        throw RankMismatch(std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
    return shift_module_core(a.core(), b.denominator()) ==
           shift_module_core(b.core(), a.denominator());
}

ExtFunction ext_make(std::uint64_t denominator, ArithFunction core) {
    return ExtFunction(denominator, std::move(core));
}

ExtFunction ext_embed(const ArithFunction& a) { return ExtFunction(1, a); }

ExtFunction ext_add(const ExtFunction& a, const ExtFunction& b) {
    if (a.ring() != b.ring()) throw MixedRings(a.ring().name() + " vs " + b.ring().name());
    if (a.spec() != b.spec())
        throw MonoidMismatch(a.spec().syntax() + " vs " + b.spec().syntax());
    return ExtFunction(a.denominator() * b.denominator(),
                       fn_add(shift_core(a.core(), b.denominator()),
                              shift_core(b.core(), a.denominator())));
}

ExtFunction ext_neg(const ExtFunction& a) {
    return ExtFunction(a.denominator(), fn_neg(a.core()));
}

ExtFunction ext_convolve(const ExtFunction& a, const ExtFunction& b) {
    return ExtFunction(a.denominator() * b.denominator(), fn_convolve(a.core(), b.core()));
}

ExtModuleFunction ext_module_make(std::uint64_t denominator, ModuleFunction core) {
    return ExtModuleFunction(denominator, std::move(core));
}

ExtModuleFunction ext_module_embed(const ModuleFunction& f) { return ExtModuleFunction(1, f); }

ExtModuleFunction ext_module_add(const ExtModuleFunction& f, const ExtModuleFunction& g) {
    return ExtModuleFunction(f.denominator() * g.denominator(),
                             mod_add(shift_module_core(f.core(), g.denominator()),
                                     shift_module_core(g.core(), f.denominator())));
}

ExtModuleFunction ext_module_action(const ExtFunction& a, const ExtModuleFunction& f) {
    return ExtModuleFunction(a.denominator() * f.denominator(),
                             mod_action(a.core(), f.core()));
}

ExtModuleFunction ext_derivation(const DerivationSpec& d, const ExtFunction& a) {
    const AdditiveCharacter& delta = d.character;
    if (delta.ring() != a.ring())
        throw MixedRings("character over " + delta.ring().name() + ", function over " +
                         a.ring().name());
    if (d.base == BaseDerivation::PolyDerivative && a.ring().kind() != RingKind::Poly)
        throw WrongRing("polynomial base derivation on " + a.ring().name());
    auto delta_d = delta.eval(a.denominator());
    ModuleFunction core(a.spec(), a.ring(), delta.rank(), a.bound());
    for (const auto& [n, v] : a.core().support()) {
        // q = n/d, so the extended character value is δ(n) − δ(d).
        auto dv = delta.eval(n);
        for (std::size_t i = 0; i < dv.size(); ++i) dv[i] = v * (dv[i] - delta_d[i]);
        if (d.base != BaseDerivation::Zero) dv[0] += apply_base(d.base, v);
        core.set(n, std::move(dv));
    }
    return ExtModuleFunction(a.denominator(), std::move(core));
}

}  // namespace dirconv
