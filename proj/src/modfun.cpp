#include "dirconv/modfun.hpp"

#include <algorithm>

namespace dirconv {

namespace {

void require_compatible(const ModuleFunction& a, const ModuleFunction& b) {
    if (a.ring() != b.ring()) throw MixedRings(a.ring().name() + " vs " + b.ring().name());
    if (a.spec() != b.spec())
        throw MonoidMismatch(a.spec().syntax() + " vs " + b.spec().syntax());
    if (a.rank() != b.rank())
        throw RankMismatch(std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
}

bool all_exactly_zero(const std::vector<Value>& v) {
    return std::all_of(v.begin(), v.end(), [](const Value& x) { return exactly_zero(x); });
}

std::vector<Value> scale(const Value& c, const std::vector<Value>& v) {
    std::vector<Value> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(c * x);
    return out;
}

void add_into(std::vector<Value>& acc, const std::vector<Value>& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

}  // namespace

ModuleFunction::ModuleFunction(MonoidSpec spec, Ring ring, int rank, std::uint64_t bound)
    : spec_(std::move(spec)), ring_(ring), rank_(rank), bound_(bound) {
    if (rank_ < 1) throw RankMismatch("rank must be >= 1");
    if (bound_ < 1) throw BoundTooSmall("bound must be >= 1");
}

std::vector<Value> ModuleFunction::at(std::uint64_t n) const {
    if (n > bound_)
        throw BoundTooSmall("value at " + std::to_string(n) + " is beyond bound " +
                            std::to_string(bound_));
    auto it = values_.find(n);
    if (it != values_.end()) return it->second;
    if (!spec_.contains(n)) throw NotInMonoid(std::to_string(n) + " is not in " + spec_.syntax());
    return std::vector<Value>(static_cast<std::size_t>(rank_), ring_.zero());
}

void ModuleFunction::set(std::uint64_t n, std::vector<Value> v) {
    if (static_cast<int>(v.size()) != rank_)
        throw RankMismatch("vector of length " + std::to_string(v.size()) + " in rank " +
                           std::to_string(rank_) + " function");
    for (const auto& x : v)
        if (x.ring() != ring_)
            throw MixedRings(x.ring().name() + " entry in " + ring_.name() + " function");
    if (n > bound_)
        throw BoundTooSmall("assignment at " + std::to_string(n) + " is beyond bound " +
                            std::to_string(bound_));
    if (!spec_.contains(n)) throw NotInMonoid(std::to_string(n) + " is not in " + spec_.syntax());
    if (all_exactly_zero(v))
        values_.erase(n);
    else
        values_.insert_or_assign(n, std::move(v));
}

bool operator==(const ModuleFunction& a, const ModuleFunction& b) {
    require_compatible(a, b);
    std::uint64_t window = std::min(a.bound(), b.bound());
    const Ring& ring = a.ring();
    auto vec_eq = [&](const std::vector<Value>& x, const std::vector<Value>& y) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != y[i]) return false;
        return true;
    };
    std::vector<Value> zero(static_cast<std::size_t>(a.rank()), ring.zero());
    for (const auto& [n, v] : a.support()) {
        if (n > window) break;
        if (!vec_eq(v, n <= b.bound() ? b.at(n) : zero)) return false;
    }
    for (const auto& [n, v] : b.support()) {
        if (n > window) break;
        if (a.support().count(n)) continue;
        if (!vec_eq(v, zero)) return false;
    }
    return true;
}

ModuleFunction mod_make(const MonoidSpec& spec, const Ring& ring, int rank, std::uint64_t bound,
                        const std::vector<std::pair<std::uint64_t, std::vector<Value>>>& assignments) {
    ModuleFunction f(spec, ring, rank, bound);
    for (const auto& [n, v] : assignments) f.set(n, v);
    return f;
}

ModuleFunction mod_add(const ModuleFunction& f, const ModuleFunction& g) {
    require_compatible(f, g);
    ModuleFunction out(f.spec(), f.ring(), f.rank(), std::min(f.bound(), g.bound()));
    for (const auto& [n, v] : f.support())
        if (n <= out.bound()) out.set(n, v);
    for (const auto& [n, v] : g.support()) {
        if (n > out.bound()) continue;
        auto acc = out.at(n);
        add_into(acc, v);
        out.set(n, std::move(acc));
    }
    return out;
}

ModuleFunction mod_neg(const ModuleFunction& f) {
    ModuleFunction out(f.spec(), f.ring(), f.rank(), f.bound());
    for (const auto& [n, v] : f.support()) {
        std::vector<Value> neg;
        neg.reserve(v.size());
        for (const auto& x : v) neg.push_back(-x);
        out.set(n, std::move(neg));
    }
    return out;
}

ModuleFunction mod_action(const ArithFunction& alpha, const ModuleFunction& f) {
    if (alpha.ring() != f.ring())
        throw MixedRings(alpha.ring().name() + " scalar on " + f.ring().name() + " module");
    if (alpha.spec() != f.spec())
        throw MonoidMismatch(alpha.spec().syntax() + " vs " + f.spec().syntax());
    std::uint64_t window = std::min(alpha.bound(), f.bound());
    ModuleFunction out(f.spec(), f.ring(), f.rank(), window);
    std::map<std::uint64_t, std::vector<Value>> acc;
    for (const auto& [x, vx] : alpha.support()) {
        if (x > window) break;
        for (const auto& [y, vy] : f.support()) {
            if (y > window / x) break;
            auto term = scale(vx, vy);
            auto [it, fresh] = acc.try_emplace(x * y, term);
            if (!fresh) add_into(it->second, term);
        }
    }
    for (auto& [n, v] : acc) out.set(n, std::move(v));
    return out;
}

ModuleFunction mod_map(const Matrix& phi, const ModuleFunction& f) {
    if (phi.empty()) throw RankMismatch("empty matrix");
    std::size_t rank_in = phi.front().size();
    for (const auto& row : phi)
        if (row.size() != rank_in) throw RankMismatch("ragged matrix rows");
    if (static_cast<int>(rank_in) != f.rank())
        throw RankMismatch("matrix expects rank " + std::to_string(rank_in) + ", function has " +
                           std::to_string(f.rank()));
    ModuleFunction out(f.spec(), f.ring(), static_cast<int>(phi.size()), f.bound());
    for (const auto& [n, v] : f.support()) {
        std::vector<Value> image;
        image.reserve(phi.size());
        for (const auto& row : phi) {
            Value s = f.ring().zero();
            for (std::size_t j = 0; j < rank_in; ++j) s += row[j] * v[j];
            image.push_back(std::move(s));
        }
        out.set(n, std::move(image));
    }
    return out;
}

ModuleFunction mod_twist_action(const TotallyMultiplicativeFn& L, const ArithFunction& alpha,
                                const ModuleFunction& f) {
    return mod_action(fn_twist(L, alpha), f);
}

ModuleFunction mod_phi_L(const TotallyMultiplicativeFn& L, const ModuleFunction& f) {
    if (L.ring() != f.ring())
        throw MixedRings("character over " + L.ring().name() + ", function over " + f.ring().name());
    ModuleFunction out(f.spec(), f.ring(), f.rank(), f.bound());
    for (const auto& [n, v] : f.support()) out.set(n, scale(L.eval(n), v));
    return out;
}

ModuleFunction mod_extend_submonoid(const ModuleFunction& f, const MonoidSpec& target) {
    if (!submonoid_up_to(f.spec(), target, f.bound()))
        throw NotASubmonoid(f.spec().syntax() + " is not contained in " + target.syntax());
    ModuleFunction out(target, f.ring(), f.rank(), f.bound());
    for (const auto& [n, v] : f.support()) out.set(n, v);
    return out;
}

}  // namespace dirconv
