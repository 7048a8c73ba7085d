#pragma once

#include <stdexcept>
#include <string>

namespace aqmtune {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or arguments (CLI exit code 2).
class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Equilibrium would require a marking probability above 1 (w0 < sqrt(2)).
class InfeasibleOperatingPoint : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

/// Integration step too large relative to the round-trip delay.
class StepTooLarge : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

/// Requested result set is empty (CLI exit code 3).
class EmptyRegion : public Error {
public:
    using Error::Error;
};

/// Numerical failure (CLI exit code 4).
class NumericError : public Error {
public:
    using Error::Error;
};

/// A quasi-polynomial zero sits on (or numerically on) the imaginary axis;
/// the tested point is a stability boundary, not classifiable.
class ImaginaryAxisZero : public NumericError {
public:
    using NumericError::NumericError;
};

/// Winding-number accumulation did not converge under refinement.
class ContourResolutionExceeded : public NumericError {
public:
    using NumericError::NumericError;
};

/// 1 + P*C vanishes on the evaluation grid.
class UnstableLoop : public NumericError {
public:
    using NumericError::NumericError;
};

/// Transfer-function denominator vanishes at a requested frequency.
class DenominatorVanishes : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace aqmtune
