#include "dirconv/derivation.hpp"

#include <cmath>

namespace dirconv {

AdditiveCharacter::AdditiveCharacter(Ring ring, int rank,
                                     std::map<std::uint64_t, std::vector<Value>> prime_values)
    : ring_(ring), rank_(rank), prime_values_(std::move(prime_values)) {
    if (rank_ < 1) throw RankMismatch("character rank must be >= 1");
    for (const auto& [p, v] : prime_values_) {
        if (!is_prime(p))
            throw ParseError("character index " + std::to_string(p) + " is not prime");
        if (static_cast<int>(v.size()) != rank_)
            throw RankMismatch("character value of length " + std::to_string(v.size()) +
                               " in rank " + std::to_string(rank_) + " character");
        for (const auto& x : v)
            if (x.ring() != ring_)
                throw MixedRings(x.ring().name() + " value in " + ring_.name() + " character");
    }
}

AdditiveCharacter AdditiveCharacter::zero(Ring ring, int rank) {
    AdditiveCharacter c(ring, rank, {});
    c.identically_zero_ = true;
    return c;
}

AdditiveCharacter AdditiveCharacter::from_scalar(Ring ring,
                                                 const std::map<std::uint64_t, Value>& prime_values) {
    std::map<std::uint64_t, std::vector<Value>> pv;
    for (const auto& [p, v] : prime_values) pv.emplace(p, std::vector<Value>{v});
    return AdditiveCharacter(ring, 1, std::move(pv));
}

AdditiveCharacter AdditiveCharacter::log_character(Ring ring, std::uint64_t bound, double sign) {
    if (ring.kind() != RingKind::Complex && ring.kind() != RingKind::Poly)
        throw WrongRing("log character needs C or Poly coefficients, got " + ring.name());
    std::map<std::uint64_t, std::vector<Value>> pv;
    for (std::uint64_t p = 2; p <= bound; ++p)
        if (is_prime(p))
            pv.emplace(p, std::vector<Value>{ring.from_complex(
                              {sign * std::log(static_cast<double>(p)), 0.0})});
    return AdditiveCharacter(ring, 1, std::move(pv));
}

AdditiveCharacter AdditiveCharacter::factor_count(Ring ring, std::uint64_t bound) {
    std::map<std::uint64_t, std::vector<Value>> pv;
    for (std::uint64_t p = 2; p <= bound; ++p)
        if (is_prime(p)) pv.emplace(p, std::vector<Value>{ring.one()});
    return AdditiveCharacter(ring, 1, std::move(pv));
}

std::vector<Value> AdditiveCharacter::eval(std::uint64_t n) const {
    std::vector<Value> out(static_cast<std::size_t>(rank_), ring_.zero());
    if (identically_zero_ || n == 1) return out;
    auto accumulate = [&](std::uint64_t p, std::uint64_t exponent) {
        auto it = prime_values_.find(p);
        if (it == prime_values_.end())
            throw MissingPrimeValue("no character value at prime " + std::to_string(p));
        Value e = ring_.from_int(static_cast<long long>(exponent));
        for (int i = 0; i < rank_; ++i) out[static_cast<std::size_t>(i)] += e * it->second[i];
    };
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        std::uint64_t e = 0;
        while (n % p == 0) {
            ++e;
            n /= p;
        }
        accumulate(p, e);
    }
    if (n > 1) accumulate(n, 1);
    return out;
}

Value AdditiveCharacter::eval_scalar(std::uint64_t n) const {
    if (rank_ != 1) throw RankMismatch("scalar evaluation of a rank " + std::to_string(rank_) +
                                       " character");
    return eval(n)[0];
}

std::vector<Value> AdditiveCharacter::eval_fraction(std::uint64_t num, std::uint64_t den) const {
    auto a = eval(num);
    auto b = eval(den);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] - b[i];
    return a;
}

Value apply_base(BaseDerivation base, const Value& v) {
    switch (base) {
        case BaseDerivation::Zero: return v.ring().zero();
        case BaseDerivation::PolyDerivative: return poly_derivative(v);
    }
    throw Error("unreachable base derivation");
}

ModuleFunction lift_derivation(const DerivationSpec& d, const ArithFunction& a) {
    const AdditiveCharacter& delta = d.character;
    if (delta.ring() != a.ring())
        throw MixedRings("character over " + delta.ring().name() + ", function over " +
                         a.ring().name());
    if (d.base == BaseDerivation::PolyDerivative) {
        if (a.ring().kind() != RingKind::Poly)
            throw WrongRing("polynomial base derivation on " + a.ring().name());
        if (delta.rank() != 1)
            throw RankMismatch("polynomial base derivation needs a rank-1 character");
    }
    ModuleFunction out(a.spec(), a.ring(), delta.rank(), a.bound());
    for (const auto& [n, v] : a.support()) {
        auto dv = delta.eval(n);
        for (auto& x : dv) x = v * x;
        if (d.base != BaseDerivation::Zero) dv[0] += apply_base(d.base, v);
        out.set(n, std::move(dv));
    }
    return out;
}

ArithFunction lift_derivation_scalar(const DerivationSpec& d, const ArithFunction& a) {
    auto m = lift_derivation(d, a);
    if (m.rank() != 1) throw RankMismatch("scalar lift of a rank " + std::to_string(m.rank()) +
                                          " derivation");
    ArithFunction out(a.spec(), a.ring(), a.bound());
    for (const auto& [n, v] : m.support()) out.set(n, v[0]);
    return out;
}

std::uint64_t p_adic_valuation(std::uint64_t p, std::uint64_t n) {
    std::uint64_t e = 0;
    while (n % p == 0) {
        ++e;
        n /= p;
    }
    return e;
}

ArithFunction p_derivation(std::uint64_t p, BaseDerivation base, const ArithFunction& a) {
    if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
    if (!a.spec().contains(p))
        throw NotInMonoid("prime " + std::to_string(p) + " is not in " + a.spec().syntax());
    if (base == BaseDerivation::PolyDerivative && a.ring().kind() != RingKind::Poly)
        throw WrongRing("polynomial base derivation on " + a.ring().name());
    std::uint64_t shrunk = a.bound() / p;
    if (shrunk < 1)
        throw BoundTooSmall("bound " + std::to_string(a.bound()) + " cannot see multiples of " +
                            std::to_string(p));
    ArithFunction out(a.spec(), a.ring(), shrunk);
    for (auto n : a.spec().elements_up_to(shrunk)) {
        Value term = apply_base(base, a.at(n));
        term += a.at(n * p) * a.ring().from_int(static_cast<long long>(p_adic_valuation(p, n * p)));
        out.set(n, std::move(term));
    }
    return out;
}

ArithFunction log_derivation(const ArithFunction& a) {
    if (a.ring().kind() != RingKind::Complex)
        throw WrongRing("log derivation needs C coefficients, got " + a.ring().name());
    ArithFunction out(a.spec(), a.ring(), a.bound());
    for (const auto& [n, v] : a.support())
        out.set(n, a.ring().from_complex({-std::log(static_cast<double>(n)), 0.0}) * v);
    return out;
}

ArithFunction holo_derivation(const ArithFunction& a) {
    if (a.ring().kind() != RingKind::Poly)
        throw WrongRing("holomorphic derivation needs Poly coefficients, got " + a.ring().name());
    ArithFunction out(a.spec(), a.ring(), a.bound());
    for (const auto& [n, v] : a.support()) {
        Value term = poly_derivative(v) +
                     a.ring().from_complex({-std::log(static_cast<double>(n)), 0.0}) * v;
        out.set(n, std::move(term));
    }
    return out;
}

}  // namespace dirconv
