#include "dirconv/monoid.hpp"

#include <algorithm>
#include <unordered_map>

namespace dirconv {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> first_k_primes(int k) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; static_cast<int>(out.size()) < k; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

MonoidElement embed_affine(const std::vector<std::uint64_t>& primes,
                           const std::vector<std::uint64_t>& v) {
    if (primes.size() != v.size()) throw ShapeMismatch("vector length does not match prime count");
    MonoidElement n = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::uint64_t e = 0; e < v[i]; ++e) n *= primes[i];
    return n;
}

MonoidSpec MonoidSpec::nstar() { return MonoidSpec(MonoidKind::FullNStar, {}, {}, {}); }

MonoidSpec MonoidSpec::prime_generated(int k) {
    if (k < 1) throw ParseError("gamma(k) needs k >= 1");
    auto ps = first_k_primes(k);
    return MonoidSpec(MonoidKind::PrimeGenerated, ps, ps, {});
}

MonoidSpec MonoidSpec::finitely_generated(std::vector<std::uint64_t> generators) {
    for (auto g : generators)
        if (g < 2) throw ParseError("generators must be >= 2");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    if (generators.empty()) throw ParseError("generator list is empty");
    return MonoidSpec(MonoidKind::FinitelyGenerated, {}, std::move(generators), {});
}

MonoidSpec MonoidSpec::affine_embedded(std::vector<std::vector<std::uint64_t>> vectors,
                                       std::vector<std::uint64_t> primes) {
    if (primes.empty()) throw ParseError("affine spec needs at least one prime");
    for (auto p : primes)
        if (!is_prime(p)) throw ParseError("affine base " + std::to_string(p) + " is not prime");
    auto sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError("affine primes must be distinct");
    if (vectors.empty()) throw ParseError("affine spec needs at least one vector");
    std::vector<std::uint64_t> gens;
    for (const auto& v : vectors) {
        if (v.size() != primes.size())
            throw ParseError("affine vector length does not match prime count");
        MonoidElement g = embed_affine(primes, v);
        if (g > 1) gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) throw ParseError("affine spec generates only the identity");
    return MonoidSpec(MonoidKind::AffineEmbedded, std::move(primes), std::move(gens),
                      std::move(vectors));
}

namespace {

// Is n a product of the given generators? Memoized divide-and-recurse over
// the divisors of n.
bool generated_contains(const std::vector<std::uint64_t>& gens, std::uint64_t n,
                        std::unordered_map<std::uint64_t, bool>& memo) {
    if (n == 1) return true;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (auto g : gens) {
        if (n % g == 0 && generated_contains(gens, n / g, memo)) {
            ok = true;
            break;
        }
    }
    memo.emplace(n, ok);
    return ok;
}

}  // namespace

bool MonoidSpec::contains(std::uint64_t n) const {
    if (n == 0) return false;
    switch (kind_) {
        case MonoidKind::FullNStar:
            return true;
        case MonoidKind::PrimeGenerated: {
            for (auto p : primes_)
                while (n % p == 0) n /= p;
            return n == 1;
        }
        case MonoidKind::FinitelyGenerated:
        case MonoidKind::AffineEmbedded: {
            std::unordered_map<std::uint64_t, bool> memo;
            return generated_contains(generators_, n, memo);
        }
    }
    return false;
}

std::vector<std::pair<MonoidElement, MonoidElement>> MonoidSpec::divisor_pairs(
    MonoidElement n) const {
    if (!contains(n)) throw NotInMonoid(std::to_string(n) + " is not in " + syntax());
    std::vector<MonoidElement> low, high;
    for (MonoidElement d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        if (kind_ != MonoidKind::FullNStar && !(contains(d) && contains(n / d))) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    std::vector<std::pair<MonoidElement, MonoidElement>> out;
    out.reserve(low.size() + high.size());
    for (auto d : low) out.emplace_back(d, n / d);
    for (auto it = high.rbegin(); it != high.rend(); ++it) out.emplace_back(*it, n / *it);
    return out;
}

std::vector<MonoidElement> MonoidSpec::elements_up_to(std::uint64_t bound) const {
    std::vector<MonoidElement> out;
    if (bound == 0) return out;
    if (kind_ == MonoidKind::FullNStar) {
        out.resize(bound);
        for (std::uint64_t n = 1; n <= bound; ++n) out[n - 1] = n;
        return out;
    }
    const auto& gens = generators_;
    std::vector<bool> mark(bound + 1, false);
    mark[1] = true;
    for (std::uint64_t m = 1; m <= bound; ++m) {
        if (!mark[m]) continue;
        for (auto g : gens)
            if (m <= bound / g) mark[m * g] = true;
    }
    for (std::uint64_t n = 1; n <= bound; ++n)
        if (mark[n]) out.push_back(n);
    return out;
}

std::string MonoidSpec::syntax() const {
    switch (kind_) {
        case MonoidKind::FullNStar:
            return "nstar";
        case MonoidKind::PrimeGenerated:
            return "gamma(" + std::to_string(primes_.size()) + ")";
        case MonoidKind::FinitelyGenerated: {
            std::string s = "gen(";
            for (std::size_t i = 0; i < generators_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(generators_[i]);
            }
            return s + ")";
        }
        case MonoidKind::AffineEmbedded: {
            std::string s = "affine[";
            for (std::size_t i = 0; i < vectors_.size(); ++i) {
                if (i) s += ",";
                s += "(";
                for (std::size_t j = 0; j < vectors_[i].size(); ++j) {
                    if (j) s += ",";
                    s += std::to_string(vectors_[i][j]);
                }
                s += ")";
            }
            s += "]@primes(";
            for (std::size_t i = 0; i < primes_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(primes_[i]);
            }
            return s + ")";
        }
    }
    throw Error("unreachable monoid kind");
}

namespace {

std::vector<std::uint64_t> parse_uint_list(std::string_view s, const char* what) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string piece(s.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                        : comma - pos));
        if (piece.empty()) throw ParseError(std::string("empty entry in ") + what);
        char* end = nullptr;
        unsigned long long v = std::strtoull(piece.c_str(), &end, 10);
        if (end != piece.c_str() + piece.size())
            throw ParseError("bad " + std::string(what) + " entry '" + piece + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

MonoidSpec MonoidSpec::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s == "nstar") return nstar();
    if (s.rfind("gamma(", 0) == 0 && s.back() == ')') {
        std::string body = s.substr(6, s.size() - 7);
        char* end = nullptr;
        long k = std::strtol(body.c_str(), &end, 10);
        if (end != body.c_str() + body.size() || k < 1)
            throw ParseError("bad monoid '" + s + "'");
        return prime_generated(static_cast<int>(k));
    }
    if (s.rfind("gen(", 0) == 0 && s.back() == ')')
        return finitely_generated(parse_uint_list(s.substr(4, s.size() - 5), "generator"));
    if (s.rfind("affine[", 0) == 0) {
        std::size_t close = s.find(']');
        if (close == std::string::npos) throw ParseError("bad monoid '" + s + "'");
        std::string_view body = std::string_view(s).substr(7, close - 7);
        std::vector<std::vector<std::uint64_t>> vectors;
        std::size_t pos = 0;
        while (pos < body.size()) {
            if (body[pos] != '(') throw ParseError("bad monoid '" + s + "'");
            std::size_t end = body.find(')', pos);
            if (end == std::string_view::npos) throw ParseError("bad monoid '" + s + "'");
            vectors.push_back(parse_uint_list(body.substr(pos + 1, end - pos - 1), "vector"));
            pos = end + 1;
            if (pos < body.size()) {
                if (body[pos] != ',') throw ParseError("bad monoid '" + s + "'");
                ++pos;
            }
        }
        std::string_view tail = std::string_view(s).substr(close + 1);
        if (tail.rfind("@primes(", 0) != 0 || tail.back() != ')')
            throw ParseError("bad monoid '" + s + "'");
        auto primes = parse_uint_list(tail.substr(8, tail.size() - 9), "prime");
        return affine_embedded(std::move(vectors), std::move(primes));
    }
    throw ParseError("unknown monoid '" + s + "'");
}

bool submonoid_up_to(const MonoidSpec& sub, const MonoidSpec& super, std::uint64_t bound) {
    for (auto n : sub.elements_up_to(bound))
        if (!super.contains(n)) return false;
    return true;
}

}  // namespace dirconv
