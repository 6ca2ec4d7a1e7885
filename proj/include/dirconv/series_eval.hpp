#pragma once

// Numeric evaluation of the (truncated) Dirichlet series
// F_α(z) = Σ_{n≤B} α(n)(z)·n^{−z}, and a finite-difference check of the
// derivative identity F′_α = F_{D̃(α)} for the holomorphic derivation.

#include <complex>
#include <optional>

#include "dirconv/derivation.hpp"

namespace dirconv {

struct DirichletSeriesValue {
    std::complex<double> point;
    std::complex<double> value;
    std::uint64_t truncation;
};

// Finite sum over the window, ascending n, with n^{−z} = exp(−z·log n).
// Coefficients must come from the complex or truncated-polynomial ring.
// For a finitely supported function this is the exact series value.
DirichletSeriesValue eval_F(const ArithFunction& a, std::complex<double> z);

// Bound on the discarded tail Σ_{n>B} n^{−Re z}, available only when
// Re z > 1 and every stored coefficient has magnitude at most 1 at z:
// the integral estimate B^{1−σ}/(σ−1).
std::optional<double> eval_tail_bound(const ArithFunction& a, std::complex<double> z);

struct DerivativeCheck {
    std::complex<double> finite_difference;  // (F(z+h) − F(z−h)) / 2h
    std::complex<double> derived_series;     // F at z of the derived function
    double discrepancy;                      // absolute difference
};

// Central finite difference of F_α against the series of the holomorphic
// derivation; for finitely supported α the discrepancy is O(h²).
DerivativeCheck check_derivative_identity(const ArithFunction& a, std::complex<double> z,
                                          double h = 1e-4);

// Pointwise character twist; same map as fn_twist, named for the
// evaluation context.
ArithFunction eval_twist(const TotallyMultiplicativeFn& L, const ArithFunction& a);

}  // namespace dirconv
