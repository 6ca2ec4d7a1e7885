#pragma once

#include <stdexcept>
#include <string>

namespace dirconv {

// Base class for all library errors. Parse failures and semantic failures
// are kept separate so the CLI can map them to distinct exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

class MixedRings : public Error {
public:
    explicit MixedRings(const std::string& msg) : Error("mixed rings: " + msg) {}
};

class WrongRing : public Error {
public:
    explicit WrongRing(const std::string& msg) : Error("wrong ring: " + msg) {}
};

class NotInMonoid : public Error {
public:
    explicit NotInMonoid(const std::string& msg) : Error("not in monoid: " + msg) {}
};

class MonoidMismatch : public Error {
public:
    explicit MonoidMismatch(const std::string& msg) : Error("monoid mismatch: " + msg) {}
};

class NotASubmonoid : public Error {
public:
    explicit NotASubmonoid(const std::string& msg) : Error("not a submonoid: " + msg) {}
};

class NotAUnit : public Error {
public:
    explicit NotAUnit(const std::string& msg) : Error("not a unit: " + msg) {}
};

class RankMismatch : public Error {
public:
    explicit RankMismatch(const std::string& msg) : Error("rank mismatch: " + msg) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& msg) : Error("shape mismatch: " + msg) {}
};

class MissingPrimeValue : public Error {
public:
    explicit MissingPrimeValue(const std::string& msg) : Error("missing prime value: " + msg) {}
};

class BoundTooSmall : public Error {
public:
    explicit BoundTooSmall(const std::string& msg) : Error("bound too small: " + msg) {}
};

class SpecMismatch : public Error {
public:
    explicit SpecMismatch(const std::string& msg) : Error("spec mismatch: " + msg) {}
};

class DenominatorOutsideVariables : public Error {
public:
    explicit DenominatorOutsideVariables(const std::string& msg)
        : Error("denominator outside variables: " + msg) {}
};

}  // namespace dirconv
