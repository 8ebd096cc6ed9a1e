#pragma once

#include <stdexcept>
#include <string>

namespace coh {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& what = "matrix is not Hermitian within tolerance")
        : Error(what) {}
};

struct NotPSD : Error {
    explicit NotPSD(const std::string& what = "matrix has an eigenvalue below -1e-10")
        : Error(what) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what = "iteration budget exhausted")
        : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what = "operand dimensions differ")
        : Error(what) {}
};

struct WrongDimension : Error {
    explicit WrongDimension(const std::string& what = "operation requires a different dimension")
        : Error(what) {}
};

struct BadDimension : Error {
    explicit BadDimension(const std::string& what = "dimension out of range") : Error(what) {}
};

struct BadParameter : Error {
    explicit BadParameter(const std::string& what = "parameter out of range") : Error(what) {}
};

struct BadRank : Error {
    explicit BadRank(const std::string& what = "rank must satisfy 1 <= rank <= dim")
        : Error(what) {}
};

struct BlochOutOfBall : Error {
    explicit BlochOutOfBall(const std::string& what = "Bloch vector lies outside the unit ball")
        : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what = "index out of range") : Error(what) {}
};

struct NotIncoherent : Error {
    explicit NotIncoherent(const std::string& what = "channel is not incoherent") : Error(what) {}
};

struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& what = "dimension too large for this oracle")
        : Error(what) {}
};

/// Thrown when a matrix fails density-matrix validation; the message names
/// the violated invariant (hermiticity, trace, positivity).
struct InvalidDensityMatrix : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace coh
