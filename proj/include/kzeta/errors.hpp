#pragma once

#include <stdexcept>
#include <string>

namespace kzeta {

// Base class for all contract violations raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

struct NotCoprime : Error {
    explicit NotCoprime(const std::string& what) : Error(what) {}
};

struct NotPrimePowerConductor : Error {
    explicit NotPrimePowerConductor(const std::string& what) : Error(what) {}
};

struct NotIntegral : Error {
    explicit NotIntegral(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct UnsupportedType : Error {
    explicit UnsupportedType(const std::string& what) : Error(what) {}
};

struct UnsupportedFamily : Error {
    explicit UnsupportedFamily(const std::string& what) : Error(what) {}
};

struct OddHirzebruchIndex : Error {
    explicit OddHirzebruchIndex(const std::string& what) : Error(what) {}
};

struct SpinWeightWithoutSpinCoordinate : Error {
    explicit SpinWeightWithoutSpinCoordinate(const std::string& what) : Error(what) {}
};

struct MalformedSolution : Error {
    explicit MalformedSolution(const std::string& what) : Error(what) {}
};

struct SingularLocalization : Error {
    explicit SingularLocalization(const std::string& what) : Error(what) {}
};

struct SpaceMismatch : Error {
    explicit SpaceMismatch(const std::string& what) : Error(what) {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what) : Error(what) {}
};

struct UnsupportedTwist : Error {
    explicit UnsupportedTwist(const std::string& what) : Error(what) {}
};

struct NormalizationFailure : Error {
    explicit NormalizationFailure(const std::string& what) : Error(what) {}
};

struct NotOrthonormalBasis : Error {
    explicit NotOrthonormalBasis(const std::string& what) : Error(what) {}
};

struct NonInvertibleRank : Error {
    explicit NonInvertibleRank(const std::string& what) : Error(what) {}
};

struct AmbiguousMatch : Error {
    explicit AmbiguousMatch(const std::string& what) : Error(what) {}
};

struct NotProportional : Error {
    explicit NotProportional(const std::string& what) : Error(what) {}
};

struct NotInteger : Error {
    explicit NotInteger(const std::string& what) : Error(what) {}
};

}  // namespace kzeta
