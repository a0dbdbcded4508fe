#ifndef QUARTIC_ERRORS_HPP
#define QUARTIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quartic {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial") {}
};

struct SingularCurve : Error {
    SingularCurve() : Error("curve is singular") {}
};

struct ChartFailure : Error {
    explicit ChartFailure(const std::string& what) : Error(what) {}
};

struct CertificationFailure : Error {
    explicit CertificationFailure(const std::string& what) : Error(what) {}
};

struct InconsistentCount : Error {
    explicit InconsistentCount(const std::string& what) : Error(what) {}
};

struct PointNotOnCurve : Error {
    PointNotOnCurve() : Error("point does not lie on the curve") {}
};

struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& what) : Error(what) {}
};

struct GrateUndefined : Error {
    explicit GrateUndefined(const std::string& what) : Error(what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct EmptyViewport : Error {
    EmptyViewport() : Error("viewport is empty") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A sign could not be decided because the configuration is exactly
// degenerate across independent algebraic extensions. Never raised for
// generic inputs; reported loudly rather than guessed.
struct DegenerateConfiguration : Error {
    explicit DegenerateConfiguration(const std::string& what) : Error(what) {}
};

}  // namespace quartic

#endif
