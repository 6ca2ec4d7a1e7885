#include "dirconv/powerseries.hpp"

#include <algorithm>

namespace dirconv {

std::optional<std::vector<int>> exponents_over(std::uint64_t n,
                                               const std::vector<std::uint64_t>& primes) {
    std::vector<int> expo(primes.size(), 0);
    for (std::size_t i = 0; i < primes.size(); ++i)
        while (n % primes[i] == 0) {
            ++expo[i];
            n /= primes[i];
        }
    if (n != 1) return std::nullopt;
    return expo;
}

namespace {

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.ring() != b.ring()) throw MixedRings(a.ring().name() + " vs " + b.ring().name());
    if (a.nvars() != b.nvars())
        throw ShapeMismatch(std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) +
                            " variables");
}

std::vector<int> min_caps(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

bool within(const std::vector<int>& expo, const std::vector<int>& caps) {
    for (std::size_t i = 0; i < expo.size(); ++i)
        if (expo[i] > caps[i]) return false;
    return true;
}

}  // namespace

TruncatedSeries::TruncatedSeries(Ring ring, std::vector<int> degree_caps)
    : ring_(ring), caps_(std::move(degree_caps)) {
    for (int c : caps_)
        if (c < 0) throw ShapeMismatch("negative degree cap");
    if (caps_.empty()) throw ShapeMismatch("series needs at least one variable");
}

Value TruncatedSeries::coeff(const std::vector<int>& expo) const {
    if (expo.size() != caps_.size())
        throw ShapeMismatch("exponent vector of length " + std::to_string(expo.size()) + " in " +
                            std::to_string(caps_.size()) + " variables");
    auto it = coeff_.find(expo);
    return it != coeff_.end() ? it->second : ring_.zero();
}

void TruncatedSeries::set_coeff(const std::vector<int>& expo, Value v) {
    if (expo.size() != caps_.size())
        throw ShapeMismatch("exponent vector of length " + std::to_string(expo.size()) + " in " +
                            std::to_string(caps_.size()) + " variables");
    for (std::size_t i = 0; i < expo.size(); ++i)
        if (expo[i] < 0 || expo[i] > caps_[i])
            throw ShapeMismatch("exponent " + std::to_string(expo[i]) + " outside cap " +
                                std::to_string(caps_[i]));
    if (v.ring() != ring_)
        throw MixedRings(v.ring().name() + " coefficient in " + ring_.name() + " series");
    if (exactly_zero(v))
        coeff_.erase(expo);
    else
        coeff_.insert_or_assign(expo, std::move(v));
}

TruncatedSeries TruncatedSeries::one(const Ring& ring, std::vector<int> degree_caps) {
    TruncatedSeries s(ring, std::move(degree_caps));
    s.set_coeff(std::vector<int>(s.caps_.size(), 0), ring.one());
    return s;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_compatible(a, b);
    auto window = min_caps(a.degree_caps(), b.degree_caps());
    for (const auto& [e, v] : a.coefficients()) {
        if (!within(e, window)) continue;
        if (v != b.coeff(e)) return false;
    }
    for (const auto& [e, v] : b.coefficients()) {
        if (!within(e, window) || a.coefficients().count(e)) continue;
        if (!v.is_zero()) return false;
    }
    return true;
}

TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_compatible(s, t);
    TruncatedSeries out(s.ring(), min_caps(s.degree_caps(), t.degree_caps()));
    for (const auto& [e, v] : s.coefficients())
        if (within(e, out.degree_caps())) out.set_coeff(e, v);
    for (const auto& [e, v] : t.coefficients())
        if (within(e, out.degree_caps())) out.set_coeff(e, out.coeff(e) + v);
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_compatible(s, t);
    TruncatedSeries out(s.ring(), min_caps(s.degree_caps(), t.degree_caps()));
    std::vector<int> sum(static_cast<std::size_t>(s.nvars()));
    for (const auto& [e1, v1] : s.coefficients())
        for (const auto& [e2, v2] : t.coefficients()) {
            bool fits = true;
            for (std::size_t i = 0; i < sum.size(); ++i) {
                sum[i] = e1[i] + e2[i];
                if (sum[i] > out.degree_caps()[i]) {
                    fits = false;
                    break;
                }
            }
            if (fits) out.set_coeff(sum, out.coeff(sum) + v1 * v2);
        }
    return out;
}

TruncatedSeries series_shift_up(const TruncatedSeries& s, const std::vector<int>& t) {
    if (t.size() != static_cast<std::size_t>(s.nvars()))
        throw ShapeMismatch("shift vector of length " + std::to_string(t.size()) + " in " +
                            std::to_string(s.nvars()) + " variables");
    std::vector<int> caps = s.degree_caps();
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (t[i] < 0) throw ShapeMismatch("negative upward shift");
        caps[i] += t[i];
    }
    TruncatedSeries out(s.ring(), std::move(caps));
    for (const auto& [e, v] : s.coefficients()) {
        std::vector<int> shifted = e;
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += t[i];
        out.set_coeff(shifted, v);
    }
    return out;
}

LaurentSeries::LaurentSeries(std::vector<int> shift, TruncatedSeries body)
    : shift_(std::move(shift)), body_(std::move(body)) {
    if (shift_.size() != static_cast<std::size_t>(body_.nvars()))
        throw ShapeMismatch("shift vector of length " + std::to_string(shift_.size()) + " in " +
                            std::to_string(body_.nvars()) + " variables");
    if (body_.coefficients().empty()) {
        std::fill(shift_.begin(), shift_.end(), 0);
        return;
    }
    // Positive shifts are absorbed into the body so that the shift is the
    // pure denominator part and the representative is unique.
    bool any_positive = false;
    std::vector<int> up(shift_.size(), 0);
    for (std::size_t i = 0; i < shift_.size(); ++i)
        if (shift_[i] > 0) {
            up[i] = shift_[i];
            shift_[i] = 0;
            any_positive = true;
        }
    if (any_positive) body_ = series_shift_up(body_, up);
    for (std::size_t i = 0; i < shift_.size(); ++i) {
        while (shift_[i] < 0) {
            bool divisible = true;
            for (const auto& [e, v] : body_.coefficients())
                if (e[i] == 0) {
                    divisible = false;
                    break;
                }
            if (!divisible) break;
            std::vector<int> caps = body_.degree_caps();
            --caps[i];
            TruncatedSeries smaller(body_.ring(), std::move(caps));
            for (const auto& [e, v] : body_.coefficients()) {
                std::vector<int> down = e;
                --down[i];
                smaller.set_coeff(down, v);
            }
            body_ = std::move(smaller);
            ++shift_[i];
        }
    }
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.ring() != b.ring()) throw MixedRings(a.ring().name() + " vs " + b.ring().name());
    if (a.nvars() != b.nvars())
        throw ShapeMismatch(std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) +
                            " variables");
    return a.shift() == b.shift() && a.body() == b.body();
}

LaurentSeries laurent_add(const LaurentSeries& a, const LaurentSeries& b) {
    std::vector<int> shift(a.shift().size());
    std::vector<int> ta(a.shift().size()), tb(a.shift().size());
    for (std::size_t i = 0; i < shift.size(); ++i) {
        shift[i] = std::min(a.shift()[i], b.shift()[i]);
        ta[i] = a.shift()[i] - shift[i];
        tb[i] = b.shift()[i] - shift[i];
    }
    return LaurentSeries(std::move(shift), series_add(series_shift_up(a.body(), ta),
                                                      series_shift_up(b.body(), tb)));
}

LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b) {
    std::vector<int> shift(a.shift().size());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = a.shift()[i] + b.shift()[i];
    return LaurentSeries(std::move(shift), series_mul(a.body(), b.body()));
}

EncodedSeries iso_encode(const ArithFunction& a, const std::vector<int>& caps) {
    if (a.spec().kind() != MonoidKind::PrimeGenerated)
        throw SpecMismatch("series encoding needs a gamma(k) monoid, got " + a.spec().syntax());
    const auto& primes = a.spec().primes();
    if (caps.size() != primes.size())
        throw ShapeMismatch(std::to_string(caps.size()) + " caps for " +
                            std::to_string(primes.size()) + " primes");
    TruncatedSeries s(a.ring(), caps);
    for (const auto& [n, v] : a.support()) {
        auto expo = exponents_over(n, primes);
        if (within(*expo, caps)) s.set_coeff(*expo, v);
    }
    return EncodedSeries{std::move(s), a.bound()};
}

ArithFunction iso_decode(const TruncatedSeries& s) {
    MonoidSpec spec = MonoidSpec::prime_generated(s.nvars());
    const auto& primes = spec.primes();
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (int e = 0; e < s.degree_caps()[i]; ++e) bound *= primes[i];
    ArithFunction out(spec, s.ring(), bound);
    for (const auto& [expo, v] : s.coefficients()) {
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (int e = 0; e < expo[i]; ++e) n *= primes[i];
        out.set(n, v);
    }
    return out;
}

EncodedLaurent laurent_encode(const ExtFunction& a, const std::vector<int>& caps) {
    auto primes = first_k_primes(static_cast<int>(caps.size()));
    auto dexpo = exponents_over(a.denominator(), primes);
    if (!dexpo)
        throw DenominatorOutsideVariables("denominator " + std::to_string(a.denominator()) +
                                          " has a prime factor beyond " +
                                          std::to_string(primes.back()));
    TruncatedSeries body(a.ring(), caps);
    for (const auto& [n, v] : a.core().support()) {
        auto expo = exponents_over(n, primes);
        if (!expo)
            throw SpecMismatch("support element " + std::to_string(n) +
                               " has a prime factor beyond " + std::to_string(primes.back()));
        if (!within(*expo, caps))
            throw SpecMismatch("support element " + std::to_string(n) +
                               " falls outside the series caps");
        body.set_coeff(*expo, v);
    }
    std::vector<int> shift(dexpo->size());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -(*dexpo)[i];
    return EncodedLaurent{LaurentSeries(std::move(shift), std::move(body)), a.bound()};
}

ExtFunction laurent_decode(const LaurentSeries& ls) {
    MonoidSpec spec = MonoidSpec::prime_generated(ls.nvars());
    const auto& primes = spec.primes();
    const auto& shift = ls.shift();
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (int e = 0; e < -std::min(shift[i], 0); ++e) d *= primes[i];
    // Core exponent in variable i runs from max(shift_i, 0) up to that
    // plus the body cap.
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        int top = std::max(shift[i], 0) + ls.body().degree_caps()[i];
        for (int e = 0; e < top; ++e) bound *= primes[i];
    }
    ArithFunction core(spec, ls.ring(), bound);
    for (const auto& [expo, v] : ls.body().coefficients()) {
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            int total = std::max(shift[i], 0) + expo[i];
            for (int e = 0; e < total; ++e) n *= primes[i];
        }
        core.set(n, v);
    }
    return ExtFunction(d, std::move(core));
}

}  // namespace dirconv
