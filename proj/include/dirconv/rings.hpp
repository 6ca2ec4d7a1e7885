#pragma once

// Pluggable coefficient rings. A Ring describes one concrete commutative
// ring with unity; a Value is an element tagged with its ring. Operations
// only combine values from equal rings and throw MixedRings otherwise.
//
// Available rings:
//   Q        exact rationals (arbitrary precision)
//   Z        exact integers (arbitrary precision)
//   Zmod:m   integers modulo m, m >= 2
//   C        complex doubles, equality up to an absolute tolerance
//   Poly:k   polynomials over C truncated at degree k (products drop
//            higher terms), modelling germs of holomorphic functions

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "dirconv/errors.hpp"

namespace dirconv {

inline constexpr double kDefaultTolerance = 1e-9;

enum class RingKind { Rational, Integer, Modular, Complex, Poly };

class Value;

class Ring {
public:
    Ring() : kind_(RingKind::Rational) {}

    static Ring rationals() { return Ring(RingKind::Rational, 0, 0.0, 0); }
    static Ring integers() { return Ring(RingKind::Integer, 0, 0.0, 0); }
    static Ring modular(std::uint64_t modulus);
    static Ring complex_floats(double tolerance = kDefaultTolerance);
    static Ring poly(int degree_cap, double tolerance = kDefaultTolerance);

    RingKind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    double tolerance() const { return tolerance_; }
    int degree_cap() const { return degree_cap_; }

    bool exact() const {
        return kind_ == RingKind::Rational || kind_ == RingKind::Integer ||
               kind_ == RingKind::Modular;
    }
    // Rings guaranteed to be integral domains (used by the norm laws).
    bool domain() const {
        return kind_ == RingKind::Rational || kind_ == RingKind::Integer;
    }

    Value zero() const;
    Value one() const;
    Value from_int(long long n) const;
    // Complex and Poly rings only; constant value.
    Value from_complex(std::complex<double> z) const;

    Value parse(std::string_view literal) const;
    std::string format(const Value& v) const;

    // Descriptor syntax: Q, Z, Zmod:7, C, C:1e-06, Poly:4.
    std::string name() const;
    static Ring parse_name(std::string_view name);

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ &&
               a.tolerance_ == b.tolerance_ && a.degree_cap_ == b.degree_cap_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    Ring(RingKind kind, std::uint64_t modulus, double tolerance, int degree_cap)
        : kind_(kind), modulus_(modulus), tolerance_(tolerance), degree_cap_(degree_cap) {}

    RingKind kind_;
    std::uint64_t modulus_ = 0;
    double tolerance_ = 0.0;
    int degree_cap_ = 0;
};

struct ModularValue {
    std::uint64_t residue;
};

// Coefficients c[0] + c[1] z + ... ; trailing exact zeros are trimmed so the
// representation is canonical.
struct PolyValue {
    std::vector<std::complex<double>> coeff;
};

class Value {
public:
    using Payload = std::variant<mpq_class, mpz_class, ModularValue, std::complex<double>, PolyValue>;

    Value() : ring_(Ring::rationals()), payload_(mpq_class(0)) {}
    Value(Ring ring, Payload payload);

    const Ring& ring() const { return ring_; }
    bool is_zero() const;

    const mpq_class& rational() const { return std::get<mpq_class>(payload_); }
    const mpz_class& integer() const { return std::get<mpz_class>(payload_); }
    std::uint64_t residue() const { return std::get<ModularValue>(payload_).residue; }
    std::complex<double> complex_value() const { return std::get<std::complex<double>>(payload_); }
    const std::vector<std::complex<double>>& poly_coeff() const {
        return std::get<PolyValue>(payload_).coeff;
    }

    friend Value operator+(const Value& a, const Value& b);
    friend Value operator-(const Value& a, const Value& b);
    friend Value operator*(const Value& a, const Value& b);
    friend Value operator-(const Value& a);
    friend bool operator==(const Value& a, const Value& b);
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

    Value& operator+=(const Value& b) { return *this = *this + b; }
    Value& operator*=(const Value& b) { return *this = *this * b; }

    std::string str() const { return ring_.format(*this); }

private:
    friend class Ring;
    Ring ring_;
    Payload payload_;
};

// Returns b with a*b = 1 when a is a unit of its ring, nullopt otherwise.
std::optional<Value> ring_inverse(const Value& a);

// Zero payload bit for bit, ignoring tolerances. Sparse containers drop
// exactly-zero entries; is_zero() stays the tolerance-aware test.
bool exactly_zero(const Value& a);

// Formal derivative with respect to the polynomial variable. The degree cap
// of the ring is kept. Throws WrongRing for non-Poly rings.
Value poly_derivative(const Value& a);

// Value of a Poly element at a point, or the element itself for C.
std::complex<double> eval_at(const Value& a, std::complex<double> z);

}  // namespace dirconv
