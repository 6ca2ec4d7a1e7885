#include "dirconv/series_eval.hpp"

#include <cmath>

namespace dirconv {

DirichletSeriesValue eval_F(const ArithFunction& a, std::complex<double> z) {
    if (a.ring().kind() != RingKind::Complex && a.ring().kind() != RingKind::Poly)
        throw WrongRing("series evaluation needs C or Poly coefficients, got " + a.ring().name());
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [n, v] : a.support())
        sum += eval_at(v, z) * std::exp(-z * std::log(static_cast<double>(n)));
    return DirichletSeriesValue{z, sum, a.bound()};
}

std::optional<double> eval_tail_bound(const ArithFunction& a, std::complex<double> z) {
    double sigma = z.real();
    if (sigma <= 1.0) return std::nullopt;
    for (const auto& [n, v] : a.support())
        if (std::abs(eval_at(v, z)) > 1.0 + 1e-12) return std::nullopt;
    double b = static_cast<double>(a.bound());
    return std::pow(b, 1.0 - sigma) / (sigma - 1.0);
}

DerivativeCheck check_derivative_identity(const ArithFunction& a, std::complex<double> z,
                                          double h) {
    std::complex<double> plus = eval_F(a, z + std::complex<double>(h, 0.0)).value;
    std::complex<double> minus = eval_F(a, z - std::complex<double>(h, 0.0)).value;
    std::complex<double> fd = (plus - minus) / (2.0 * h);
    std::complex<double> exact = eval_F(holo_derivation(a), z).value;
    return DerivativeCheck{fd, exact, std::abs(fd - exact)};
}

ArithFunction eval_twist(const TotallyMultiplicativeFn& L, const ArithFunction& a) {
    return fn_twist(L, a);
}

}  // namespace dirconv
