#pragma once

#include <stdexcept>
#include <string>

namespace sl2heat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A matrix that cannot be mapped to cylindric coordinates.
struct NonCylindric : Error {
    explicit NonCylindric(const std::string& what) : Error(what) {}
};

/// Evaluation requested below the axis cutoff where 1/sinh-type
/// coefficients blow up.
struct SingularAtAxis : Error {
    explicit SingularAtAxis(const std::string& what) : Error(what) {}
};

/// Adaptive quadrature exhausted its subdivision budget above tolerance.
struct QuadratureNoConvergence : Error {
    explicit QuadratureNoConvergence(const std::string& what) : Error(what) {}
};

/// Root finding failed to reach the target residual.
struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& what) : Error(what) {}
};

/// Analytic continuation requested outside its justified domain (u <= -1).
struct ContinuationAmbiguous : Error {
    explicit ContinuationAmbiguous(const std::string& what) : Error(what) {}
};

/// Richardson extrapolation produced diverging estimates.
struct ExtrapolationUnstable : Error {
    explicit ExtrapolationUnstable(const std::string& what) : Error(what) {}
};

/// Density fell below the representable floor inside an integral.
struct DegenerateDensity : Error {
    explicit DegenerateDensity(const std::string& what) : Error(what) {}
};

} // namespace sl2heat
