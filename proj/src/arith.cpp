#include "dirconv/arith.hpp"

#include <algorithm>

namespace dirconv {

namespace {

void require_compatible(const ArithFunction& a, const ArithFunction& b) {
    if (a.ring() != b.ring())
        throw MixedRings(a.ring().name() + " vs " + b.ring().name());
    if (a.spec() != b.spec())
        throw MonoidMismatch(a.spec().syntax() + " vs " + b.spec().syntax());
}

}  // namespace

ArithFunction::ArithFunction(MonoidSpec spec, Ring ring, std::uint64_t bound)
    : spec_(std::move(spec)), ring_(ring), bound_(bound) {
    if (bound_ < 1) throw BoundTooSmall("bound must be >= 1");
}

Value ArithFunction::at(std::uint64_t n) const {
    if (n > bound_)
        throw BoundTooSmall("value at " + std::to_string(n) + " is beyond bound " +
                            std::to_string(bound_));
    auto it = values_.find(n);
    if (it != values_.end()) return it->second;
    if (!spec_.contains(n)) throw NotInMonoid(std::to_string(n) + " is not in " + spec_.syntax());
    return ring_.zero();
}

void ArithFunction::set(std::uint64_t n, Value v) {
    if (v.ring() != ring_) throw MixedRings(v.ring().name() + " value in " + ring_.name() + " function");
    if (n > bound_)
        throw BoundTooSmall("assignment at " + std::to_string(n) + " is beyond bound " +
                            std::to_string(bound_));
    if (!spec_.contains(n)) throw NotInMonoid(std::to_string(n) + " is not in " + spec_.syntax());
    if (exactly_zero(v))
        values_.erase(n);
    else
        values_.insert_or_assign(n, std::move(v));
}

bool ArithFunction::zero_up_to_bound() const {
    for (const auto& [n, v] : values_)
        if (!v.is_zero()) return false;
    return true;
}

bool operator==(const ArithFunction& a, const ArithFunction& b) {
    require_compatible(a, b);
    std::uint64_t window = std::min(a.bound(), b.bound());
    auto ia = a.support().begin(), ib = b.support().begin();
    const auto ea = a.support().end(), eb = b.support().end();
    while (ia != ea || ib != eb) {
        std::uint64_t na = ia != ea ? ia->first : window + 1;
        std::uint64_t nb = ib != eb ? ib->first : window + 1;
        std::uint64_t n = std::min(na, nb);
        if (n > window) break;
        if (na == nb) {
            if (ia->second != ib->second) return false;
            ++ia, ++ib;
        } else if (na < nb) {
            if (!ia->second.is_zero()) return false;
            ++ia;
        } else {
            if (!ib->second.is_zero()) return false;
            ++ib;
        }
    }
    return true;
}

TotallyMultiplicativeFn::TotallyMultiplicativeFn(Ring ring,
                                                 std::map<std::uint64_t, Value> prime_values)
    : ring_(ring), prime_values_(std::move(prime_values)) {
    for (const auto& [p, v] : prime_values_) {
        if (!is_prime(p))
            throw ParseError("character index " + std::to_string(p) + " is not prime");
        if (v.ring() != ring_)
            throw MixedRings(v.ring().name() + " value in " + ring_.name() + " character");
    }
}

Value TotallyMultiplicativeFn::eval(std::uint64_t n) const {
    Value out = ring_.one();
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        auto it = prime_values_.find(p);
        if (it == prime_values_.end())
            throw MissingPrimeValue("no character value at prime " + std::to_string(p));
        while (n % p == 0) {
            out *= it->second;
            n /= p;
        }
    }
    if (n > 1) {
        auto it = prime_values_.find(n);
        if (it == prime_values_.end())
            throw MissingPrimeValue("no character value at prime " + std::to_string(n));
        out *= it->second;
    }
    return out;
}

TotallyMultiplicativeFn tm_from_function(const ArithFunction& f) {
    std::map<std::uint64_t, Value> pv;
    for (const auto& [n, v] : f.support()) {
        if (n == 1) continue;
        if (!is_prime(n))
            throw ParseError("character file has a value at composite " + std::to_string(n));
        pv.emplace(n, v);
    }
    return TotallyMultiplicativeFn(f.ring(), std::move(pv));
}

TotallyMultiplicativeFn tm_identity_character(const Ring& ring, std::uint64_t bound) {
    std::map<std::uint64_t, Value> pv;
    for (std::uint64_t p = 2; p <= bound; ++p)
        if (is_prime(p)) pv.emplace(p, ring.from_int(static_cast<long long>(p)));
    return TotallyMultiplicativeFn(ring, std::move(pv));
}

ArithFunction fn_make(const MonoidSpec& spec, const Ring& ring, std::uint64_t bound,
                      const std::vector<std::pair<std::uint64_t, Value>>& assignments) {
    ArithFunction f(spec, ring, bound);
    for (const auto& [n, v] : assignments) f.set(n, v);
    return f;
}

ArithFunction fn_unit(const MonoidSpec& spec, const Ring& ring, std::uint64_t bound) {
    ArithFunction f(spec, ring, bound);
    f.set(1, ring.one());
    return f;
}

ArithFunction fn_constant_one(const MonoidSpec& spec, const Ring& ring, std::uint64_t bound) {
    ArithFunction f(spec, ring, bound);
    for (auto n : spec.elements_up_to(bound)) f.set(n, ring.one());
    return f;
}

ArithFunction fn_add(const ArithFunction& a, const ArithFunction& b) {
    require_compatible(a, b);
    ArithFunction out(a.spec(), a.ring(), std::min(a.bound(), b.bound()));
    for (const auto& [n, v] : a.support())
        if (n <= out.bound()) out.set(n, v);
    for (const auto& [n, v] : b.support())
        if (n <= out.bound()) out.set(n, out.at(n) + v);
    return out;
}

ArithFunction fn_neg(const ArithFunction& a) {
    ArithFunction out(a.spec(), a.ring(), a.bound());
    for (const auto& [n, v] : a.support()) out.set(n, -v);
    return out;
}

ArithFunction fn_sub(const ArithFunction& a, const ArithFunction& b) {
    return fn_add(a, fn_neg(b));
}

ArithFunction fn_convolve(const ArithFunction& a, const ArithFunction& b) {
    require_compatible(a, b);
    std::uint64_t window = std::min(a.bound(), b.bound());
    ArithFunction out(a.spec(), a.ring(), window);
    std::map<std::uint64_t, Value> acc;
    for (const auto& [x, vx] : a.support()) {
        if (x > window) break;
        for (const auto& [y, vy] : b.support()) {
            if (y > window / x) break;
            Value term = vx * vy;
            auto [it, fresh] = acc.try_emplace(x * y, term);
            if (!fresh) it->second += term;
        }
    }
    for (auto& [n, v] : acc) out.set(n, std::move(v));
    return out;
}

ArithFunction fn_invert(const ArithFunction& a) {
    Value lead = a.at(1);
    auto inv = ring_inverse(lead);
    if (!inv)
        throw NotAUnit("value at 1 (" + lead.str() + ") has no inverse in " + a.ring().name());
    Value neg_inv = -*inv;
    ArithFunction out(a.spec(), a.ring(), a.bound());
    out.set(1, *inv);
    for (auto n : a.spec().elements_up_to(a.bound())) {
        if (n == 1) continue;
        Value sum = a.ring().zero();
        for (auto [x, y] : a.spec().divisor_pairs(n)) {
            if (y == n) continue;
            sum += a.at(x) * out.at(y);
        }
        out.set(n, neg_inv * sum);
    }
    return out;
}

std::optional<std::uint64_t> fn_norm(const ArithFunction& a) {
    for (const auto& [n, v] : a.support())
        if (!v.is_zero()) return n;
    return std::nullopt;
}

ArithFunction fn_embed_scalar(const MonoidSpec& spec, const Value& r, std::uint64_t bound) {
    ArithFunction f(spec, r.ring(), bound);
    f.set(1, r);
    return f;
}

Value fn_project(const ArithFunction& a) { return a.at(1); }

ArithFunction fn_twist(const TotallyMultiplicativeFn& L, const ArithFunction& a) {
    if (L.ring() != a.ring())
        throw MixedRings("character over " + L.ring().name() + ", function over " + a.ring().name());
    ArithFunction out(a.spec(), a.ring(), a.bound());
    for (const auto& [n, v] : a.support()) out.set(n, L.eval(n) * v);
    return out;
}

ArithFunction fn_extend_submonoid(const ArithFunction& a, const MonoidSpec& target) {
    if (!submonoid_up_to(a.spec(), target, a.bound()))
        throw NotASubmonoid(a.spec().syntax() + " is not contained in " + target.syntax());
    ArithFunction out(target, a.ring(), a.bound());
    for (const auto& [n, v] : a.support()) out.set(n, v);
    return out;
}

ArithFunction fn_restrict(const ArithFunction& a, const MonoidSpec& sub) {
    if (!submonoid_up_to(sub, a.spec(), a.bound()))
        throw NotASubmonoid(sub.syntax() + " is not contained in " + a.spec().syntax());
    ArithFunction out(sub, a.ring(), a.bound());
    for (const auto& [n, v] : a.support())
        if (sub.contains(n)) out.set(n, v);
    return out;
}

ArithFunction fn_mobius(const MonoidSpec& spec, const Ring& ring, std::uint64_t bound) {
    return fn_invert(fn_constant_one(spec, ring, bound));
}

}  // namespace dirconv
