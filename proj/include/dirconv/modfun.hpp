#pragma once

// Vector-valued arithmetic functions: maps Γ → R^m with the module action
// (α·f)(n) = Σ_{ab=n} α(a)f(b) over the convolution ring, pointwise linear
// maps, and the twisted structures built from a totally multiplicative
// character.

#include <cstdint>
#include <map>
#include <vector>

#include "dirconv/arith.hpp"

namespace dirconv {

class ModuleFunction {
public:
    // The zero function into R^rank.
    ModuleFunction(MonoidSpec spec, Ring ring, int rank, std::uint64_t bound);

    const MonoidSpec& spec() const { return spec_; }
    const Ring& ring() const { return ring_; }
    int rank() const { return rank_; }
    std::uint64_t bound() const { return bound_; }

    std::vector<Value> at(std::uint64_t n) const;
    void set(std::uint64_t n, std::vector<Value> v);

    const std::map<std::uint64_t, std::vector<Value>>& support() const { return values_; }

    friend bool operator==(const ModuleFunction& a, const ModuleFunction& b);
    friend bool operator!=(const ModuleFunction& a, const ModuleFunction& b) { return !(a == b); }

private:
    MonoidSpec spec_;
    Ring ring_;
    int rank_;
    std::uint64_t bound_;
    std::map<std::uint64_t, std::vector<Value>> values_;
};

// Rows of a rank_out x rank_in matrix over the coefficient ring.
using Matrix = std::vector<std::vector<Value>>;

ModuleFunction mod_make(const MonoidSpec& spec, const Ring& ring, int rank, std::uint64_t bound,
                        const std::vector<std::pair<std::uint64_t, std::vector<Value>>>& assignments);

ModuleFunction mod_add(const ModuleFunction& f, const ModuleFunction& g);
ModuleFunction mod_neg(const ModuleFunction& f);

// Convolution action of the scalar ring: (α·f)(n) = Σ_{ab=n} α(a)f(b).
ModuleFunction mod_action(const ArithFunction& alpha, const ModuleFunction& f);

// Pointwise application of a linear map R^m → R^m'; functorial in φ.
ModuleFunction mod_map(const Matrix& phi, const ModuleFunction& f);

// Twisted action α ·_L f := twist(α)·f and the module twist
// Φ_L(f)(n) = L(n)f(n) intertwining it with the plain action.
ModuleFunction mod_twist_action(const TotallyMultiplicativeFn& L, const ArithFunction& alpha,
                                const ModuleFunction& f);
ModuleFunction mod_phi_L(const TotallyMultiplicativeFn& L, const ModuleFunction& f);

// Extension by zero from a submonoid; a module morphism over the smaller ring.
ModuleFunction mod_extend_submonoid(const ModuleFunction& f, const MonoidSpec& target);

}  // namespace dirconv
