#pragma once

#include <stdexcept>
#include <string>

namespace k3iso {

enum class ErrorKind {
    NotDivisible,
    ZeroDivisor,
    ZeroConstantTerm,
    NotSymmetricEven,
    NotSymmetric,
    NotPrime,
    NotIsolated,
    SamePolynomial,
    OddDegree,
    SignatureMismatch,
    BadConstantTerm,
    InvalidMilnorIndex,
    EpsilonFiniteMayVary,
    InvalidQuery,
    NotSalem,
    PowerDegenerate,
    NotUnramifiedDeg18,
    ParseError,
    NegativeExponent,
    NonIntegerCoefficient,
    FactorizationIncomplete,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failures carry the byte offset into the input text.
class ParseFailure : public Error {
public:
    ParseFailure(ErrorKind kind, const std::string& msg, std::size_t offset)
        : Error(kind, msg + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace k3iso
