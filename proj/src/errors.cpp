#include "k3iso/errors.hpp"

namespace k3iso {

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NotSymmetricEven: return "NotSymmetricEven";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::SamePolynomial: return "SamePolynomial";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::InvalidMilnorIndex: return "InvalidMilnorIndex";
    case ErrorKind::EpsilonFiniteMayVary: return "EpsilonFiniteMayVary";
    case ErrorKind::InvalidQuery: return "InvalidQuery";
    case ErrorKind::NotSalem: return "NotSalem";
    case ErrorKind::PowerDegenerate: return "PowerDegenerate";
    case ErrorKind::NotUnramifiedDeg18: return "NotUnramifiedDeg18";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorKind::FactorizationIncomplete: return "FactorizationIncomplete";
    }
    return "Unknown";
}

}  // namespace k3iso
