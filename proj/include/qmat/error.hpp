#pragma once

#include <stdexcept>
#include <string>

namespace qmat {

enum class ErrorKind {
    NonPrimeModulus,
    DegreeTooLarge,
    DimensionMismatch,
    LatticeTooLarge,
    NotAMember,
    NotTotal,
    AxiomViolation,
    BadRank,
    RankDeficientG,
    NotCoprime,
    BadDivisibility,
    ZeroSpace,
    EmptyList,
    UnknownFixture,
    PathEdgeMissing,
    ParseError,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::LatticeTooLarge: return "LatticeTooLarge";
        case ErrorKind::NotAMember: return "NotAMember";
        case ErrorKind::NotTotal: return "NotTotal";
        case ErrorKind::AxiomViolation: return "AxiomViolation";
        case ErrorKind::BadRank: return "BadRank";
        case ErrorKind::RankDeficientG: return "RankDeficientG";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::BadDivisibility: return "BadDivisibility";
        case ErrorKind::ZeroSpace: return "ZeroSpace";
        case ErrorKind::EmptyList: return "EmptyList";
        case ErrorKind::UnknownFixture: return "UnknownFixture";
        case ErrorKind::PathEdgeMissing: return "PathEdgeMissing";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace qmat
