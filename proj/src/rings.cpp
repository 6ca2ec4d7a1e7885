#include "dirconv/rings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace dirconv {

namespace {

// Deterministic 12-significant-digit rendering, "-0" normalized to "0".
std::string format_double(double x) {
    if (x == 0.0) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string format_complex(std::complex<double> z, double /*tol*/) {
    const double re = z.real(), im = z.imag();
    if (im == 0.0) return format_double(re);
    std::string out;
    if (re != 0.0) {
        out = format_double(re);
        if (im > 0.0 || std::isnan(im)) out += "+";
    }
    out += format_double(im);
    out += "i";
    return out;
}

double parse_double_strict(std::string_view s) {
    if (s.empty()) throw ParseError("empty number");
    std::string tmp(s);
    char* end = nullptr;
    double v = std::strtod(tmp.c_str(), &end);
    if (end != tmp.c_str() + tmp.size()) throw ParseError("bad number '" + tmp + "'");
    return v;
}

std::complex<double> parse_complex(std::string_view s) {
    if (s.empty()) throw ParseError("empty complex literal");
    if (s.back() != 'i') return {parse_double_strict(s), 0.0};
    std::string_view t = s.substr(0, s.size() - 1);
    // Split before the imaginary coefficient: the last sign that is neither
    // leading nor part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto coeff = [](std::string_view c) -> double {
        if (c.empty() || c == "+") return 1.0;
        if (c == "-") return -1.0;
        return parse_double_strict(c);
    };
    if (split == std::string_view::npos) return {0.0, coeff(t)};
    return {parse_double_strict(t.substr(0, split)), coeff(t.substr(split))};
}

std::uint64_t mod_reduce_ll(long long n, std::uint64_t m) {
    __int128 r = static_cast<__int128>(n) % static_cast<__int128>(m);
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Extended Euclid; returns x with a*x = 1 (mod m) when gcd(a,m) = 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = m, new_r = a % m;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) return std::nullopt;
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

void trim_poly(std::vector<std::complex<double>>& c) {
    while (!c.empty() && c.back() == std::complex<double>(0.0, 0.0)) c.pop_back();
}

void require_same_ring(const Value& a, const Value& b, const char* op) {
    if (a.ring() != b.ring())
        throw MixedRings(std::string(op) + " between " + a.ring().name() + " and " + b.ring().name());
}

}  // namespace

Ring Ring::modular(std::uint64_t modulus) {
    if (modulus < 2) throw ParseError("modulus must be >= 2");
    return Ring(RingKind::Modular, modulus, 0.0, 0);
}

Ring Ring::complex_floats(double tolerance) {
    if (tolerance < 0.0) throw ParseError("tolerance must be nonnegative");
    return Ring(RingKind::Complex, 0, tolerance, 0);
}

Ring Ring::poly(int degree_cap, double tolerance) {
    if (degree_cap < 0) throw ParseError("degree cap must be nonnegative");
    if (tolerance < 0.0) throw ParseError("tolerance must be nonnegative");
    return Ring(RingKind::Poly, 0, tolerance, degree_cap);
}

Value::Value(Ring ring, Payload payload) : ring_(ring), payload_(std::move(payload)) {
    switch (ring_.kind()) {
        case RingKind::Rational:
            std::get<mpq_class>(payload_).canonicalize();
            break;
        case RingKind::Modular: {
            auto& m = std::get<ModularValue>(payload_);
            m.residue %= ring_.modulus();
            break;
        }
        case RingKind::Poly: {
            auto& c = std::get<PolyValue>(payload_).coeff;
            if (static_cast<int>(c.size()) > ring_.degree_cap() + 1)
                c.resize(ring_.degree_cap() + 1);
            trim_poly(c);
            break;
        }
        default:
            break;
    }
}

Value Ring::zero() const { return from_int(0); }
Value Ring::one() const { return from_int(1); }

Value Ring::from_int(long long n) const {
    switch (kind_) {
        case RingKind::Rational: return Value(*this, mpq_class(static_cast<long>(n)));
        case RingKind::Integer: return Value(*this, mpz_class(static_cast<long>(n)));
        case RingKind::Modular: return Value(*this, ModularValue{mod_reduce_ll(n, modulus_)});
        case RingKind::Complex: return Value(*this, std::complex<double>(static_cast<double>(n), 0.0));
        case RingKind::Poly: {
            PolyValue p;
            if (n != 0) p.coeff.push_back({static_cast<double>(n), 0.0});
            return Value(*this, std::move(p));
        }
    }
    throw Error("unreachable ring kind");
}

Value Ring::from_complex(std::complex<double> z) const {
    switch (kind_) {
        case RingKind::Complex: return Value(*this, z);
        case RingKind::Poly: {
            PolyValue p;
            p.coeff.push_back(z);
            return Value(*this, std::move(p));
        }
        default:
            throw WrongRing("from_complex requires C or Poly, got " + name());
    }
}

bool Value::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::Rational: return sgn(rational()) == 0;
        case RingKind::Integer: return sgn(integer()) == 0;
        case RingKind::Modular: return residue() == 0;
        case RingKind::Complex: return std::abs(complex_value()) <= ring_.tolerance();
        case RingKind::Poly: {
            for (const auto& c : poly_coeff())
                if (std::abs(c) > ring_.tolerance()) return false;
            return true;
        }
    }
    return false;
}

Value operator+(const Value& a, const Value& b) {
    require_same_ring(a, b, "addition");
    const Ring& r = a.ring();
    switch (r.kind()) {
        case RingKind::Rational: return Value(r, mpq_class(a.rational() + b.rational()));
        case RingKind::Integer: return Value(r, mpz_class(a.integer() + b.integer()));
        case RingKind::Modular: {
            std::uint64_t s = a.residue() + b.residue();  // moduli fit in 63 bits
            if (s >= r.modulus()) s -= r.modulus();
            return Value(r, ModularValue{s});
        }
        case RingKind::Complex: return Value(r, a.complex_value() + b.complex_value());
        case RingKind::Poly: {
            PolyValue p;
            const auto& ca = a.poly_coeff();
            const auto& cb = b.poly_coeff();
            p.coeff.resize(std::max(ca.size(), cb.size()), {0.0, 0.0});
            for (std::size_t i = 0; i < ca.size(); ++i) p.coeff[i] += ca[i];
            for (std::size_t i = 0; i < cb.size(); ++i) p.coeff[i] += cb[i];
            return Value(r, std::move(p));
        }
    }
    throw Error("unreachable ring kind");
}

Value operator-(const Value& a) {
    const Ring& r = a.ring();
    switch (r.kind()) {
        case RingKind::Rational: return Value(r, mpq_class(-a.rational()));
        case RingKind::Integer: return Value(r, mpz_class(-a.integer()));
        case RingKind::Modular: {
            std::uint64_t v = a.residue();
            return Value(r, ModularValue{v == 0 ? 0 : r.modulus() - v});
        }
        case RingKind::Complex: return Value(r, -a.complex_value());
        case RingKind::Poly: {
            PolyValue p{a.poly_coeff()};
            for (auto& c : p.coeff) c = -c;
            return Value(r, std::move(p));
        }
    }
    throw Error("unreachable ring kind");
}

Value operator-(const Value& a, const Value& b) { return a + (-b); }

Value operator*(const Value& a, const Value& b) {
    require_same_ring(a, b, "multiplication");
    const Ring& r = a.ring();
    switch (r.kind()) {
        case RingKind::Rational: return Value(r, mpq_class(a.rational() * b.rational()));
        case RingKind::Integer: return Value(r, mpz_class(a.integer() * b.integer()));
        case RingKind::Modular:
            return Value(r, ModularValue{mod_mul(a.residue(), b.residue(), r.modulus())});
        case RingKind::Complex: return Value(r, a.complex_value() * b.complex_value());
        case RingKind::Poly: {
            const auto& ca = a.poly_coeff();
            const auto& cb = b.poly_coeff();
            PolyValue p;
            if (ca.empty() || cb.empty()) return Value(r, std::move(p));
            std::size_t cap = static_cast<std::size_t>(r.degree_cap());
            p.coeff.assign(std::min(ca.size() + cb.size() - 1, cap + 1), {0.0, 0.0});
            for (std::size_t i = 0; i < ca.size(); ++i)
                for (std::size_t j = 0; j < cb.size() && i + j <= cap; ++j)
                    p.coeff[i + j] += ca[i] * cb[j];
            return Value(r, std::move(p));
        }
    }
    throw Error("unreachable ring kind");
}

bool operator==(const Value& a, const Value& b) {
    require_same_ring(a, b, "comparison");
    const Ring& r = a.ring();
    switch (r.kind()) {
        case RingKind::Rational: return a.rational() == b.rational();
        case RingKind::Integer: return a.integer() == b.integer();
        case RingKind::Modular: return a.residue() == b.residue();
        case RingKind::Complex: return std::abs(a.complex_value() - b.complex_value()) <= r.tolerance();
        case RingKind::Poly: {
            const auto& ca = a.poly_coeff();
            const auto& cb = b.poly_coeff();
            std::size_t n = std::max(ca.size(), cb.size());
            for (std::size_t i = 0; i < n; ++i) {
                std::complex<double> x = i < ca.size() ? ca[i] : std::complex<double>(0, 0);
                std::complex<double> y = i < cb.size() ? cb[i] : std::complex<double>(0, 0);
                if (std::abs(x - y) > r.tolerance()) return false;
            }
            return true;
        }
    }
    return false;
}

bool exactly_zero(const Value& a) {
    switch (a.ring().kind()) {
        case RingKind::Rational: return sgn(a.rational()) == 0;
        case RingKind::Integer: return sgn(a.integer()) == 0;
        case RingKind::Modular: return a.residue() == 0;
        case RingKind::Complex: return a.complex_value() == std::complex<double>(0.0, 0.0);
        case RingKind::Poly: return a.poly_coeff().empty();
    }
    return false;
}

std::optional<Value> ring_inverse(const Value& a) {
    const Ring& r = a.ring();
    switch (r.kind()) {
        case RingKind::Rational: {
            if (sgn(a.rational()) == 0) return std::nullopt;
            return Value(r, mpq_class(1 / a.rational()));
        }
        case RingKind::Integer: {
            if (a.integer() == 1 || a.integer() == -1) return a;
            return std::nullopt;
        }
        case RingKind::Modular: {
            auto inv = mod_inverse(a.residue(), r.modulus());
            if (!inv) return std::nullopt;
            return Value(r, ModularValue{*inv});
        }
        case RingKind::Complex: {
            if (a.is_zero()) return std::nullopt;
            return Value(r, 1.0 / a.complex_value());
        }
        case RingKind::Poly: {
            // Truncated power series: a unit iff the constant term is one.
            const auto& c = a.poly_coeff();
            if (c.empty() || std::abs(c[0]) <= r.tolerance()) return std::nullopt;
            std::size_t cap = static_cast<std::size_t>(r.degree_cap());
            std::vector<std::complex<double>> b(cap + 1, {0.0, 0.0});
            b[0] = 1.0 / c[0];
            for (std::size_t k = 1; k <= cap; ++k) {
                std::complex<double> s{0.0, 0.0};
                for (std::size_t j = 1; j <= k; ++j)
                    if (j < c.size()) s += c[j] * b[k - j];
                b[k] = -s / c[0];
            }
            return Value(r, PolyValue{std::move(b)});
        }
    }
    return std::nullopt;
}

Value poly_derivative(const Value& a) {
    const Ring& r = a.ring();
    if (r.kind() != RingKind::Poly)
        throw WrongRing("poly_derivative requires a Poly ring, got " + r.name());
    const auto& c = a.poly_coeff();
    PolyValue p;
    for (std::size_t i = 1; i < c.size(); ++i) p.coeff.push_back(static_cast<double>(i) * c[i]);
    return Value(r, std::move(p));
}

std::complex<double> eval_at(const Value& a, std::complex<double> z) {
    switch (a.ring().kind()) {
        case RingKind::Complex: return a.complex_value();
        case RingKind::Poly: {
            const auto& c = a.poly_coeff();
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
            return acc;
        }
        default:
            throw WrongRing("eval_at requires C or Poly, got " + a.ring().name());
    }
}

Value Ring::parse(std::string_view literal) const {
    std::string s(literal);
    // strip surrounding whitespace
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty ring literal");

    switch (kind_) {
        case RingKind::Rational: {
            mpq_class q;
            if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
            if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
            q.canonicalize();
            return Value(*this, std::move(q));
        }
        case RingKind::Integer: {
            mpz_class z;
            if (z.set_str(s, 10) != 0) throw ParseError("bad integer '" + s + "'");
            return Value(*this, std::move(z));
        }
        case RingKind::Modular: {
            std::istringstream is(s);
            long long n;
            if (!(is >> n)) throw ParseError("bad modular literal '" + s + "'");
            std::string word;
            if (is >> word) {
                std::uint64_t m;
                if (word != "mod" || !(is >> m) || (is >> word))
                    throw ParseError("bad modular literal '" + s + "'");
                if (m != modulus_)
                    throw ParseError("literal modulus " + std::to_string(m) +
                                     " does not match ring " + name());
            }
            return Value(*this, ModularValue{mod_reduce_ll(n, modulus_)});
        }
        case RingKind::Complex:
            return Value(*this, parse_complex(s));
        case RingKind::Poly: {
            PolyValue p;
            std::size_t start = 0;
            while (start <= s.size()) {
                std::size_t comma = s.find(',', start);
                std::string_view piece = std::string_view(s).substr(
                    start, comma == std::string::npos ? std::string::npos : comma - start);
                p.coeff.push_back(parse_complex(piece));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            if (static_cast<int>(p.coeff.size()) > degree_cap_ + 1)
                throw ParseError("polynomial literal exceeds degree cap " + std::to_string(degree_cap_));
            return Value(*this, std::move(p));
        }
    }
    throw Error("unreachable ring kind");
}

std::string Ring::format(const Value& v) const {
    if (v.ring() != *this) throw MixedRings("formatting value from " + v.ring().name() + " as " + name());
    switch (kind_) {
        case RingKind::Rational: return v.rational().get_str();
        case RingKind::Integer: return v.integer().get_str();
        case RingKind::Modular: return std::to_string(v.residue()) + " mod " + std::to_string(modulus_);
        case RingKind::Complex: return format_complex(v.complex_value(), tolerance_);
        case RingKind::Poly: {
            const auto& c = v.poly_coeff();
            if (c.empty()) return "0";
            std::string out;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) out += ",";
                out += format_complex(c[i], tolerance_);
            }
            return out;
        }
    }
    throw Error("unreachable ring kind");
}

std::string Ring::name() const {
    switch (kind_) {
        case RingKind::Rational: return "Q";
        case RingKind::Integer: return "Z";
        case RingKind::Modular: return "Zmod:" + std::to_string(modulus_);
        case RingKind::Complex:
            if (tolerance_ == kDefaultTolerance) return "C";
            return "C:" + format_double(tolerance_);
        case RingKind::Poly:
            if (tolerance_ == kDefaultTolerance) return "Poly:" + std::to_string(degree_cap_);
            return "Poly:" + std::to_string(degree_cap_) + ":" + format_double(tolerance_);
    }
    throw Error("unreachable ring kind");
}

Ring Ring::parse_name(std::string_view name) {
    std::string s(name);
    if (s == "Q") return rationals();
    if (s == "Z") return integers();
    if (s == "C") return complex_floats();
    if (s.rfind("C:", 0) == 0) return complex_floats(parse_double_strict(s.substr(2)));
    if (s.rfind("Zmod:", 0) == 0) {
        char* end = nullptr;
        unsigned long long m = std::strtoull(s.c_str() + 5, &end, 10);
        if (end != s.c_str() + s.size() || m < 2) throw ParseError("bad ring name '" + s + "'");
        return modular(m);
    }
    if (s.rfind("Poly:", 0) == 0) {
        std::string rest = s.substr(5);
        std::size_t colon = rest.find(':');
        double tol = kDefaultTolerance;
        if (colon != std::string::npos) {
            tol = parse_double_strict(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        char* end = nullptr;
        long k = std::strtol(rest.c_str(), &end, 10);
        if (end != rest.c_str() + rest.size() || k < 0) throw ParseError("bad ring name '" + s + "'");
        return poly(static_cast<int>(k), tol);
    }
    throw ParseError("unknown ring '" + s + "'");
}

}  // namespace dirconv
