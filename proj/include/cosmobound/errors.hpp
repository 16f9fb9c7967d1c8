#pragma once

#include <stdexcept>
#include <string>

namespace cosmobound {

// Base class for all library errors. Subclasses carry the contract name of
// the violated precondition so callers can dispatch on type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// units
struct DimensionMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct NonIntegerPowerOfDimensioned : Error { using Error::Error; };
struct NonFiniteValue : Error { using Error::Error; };

// cosmology / quadrature
struct NonPositiveScaleFactor : Error { using Error::Error; };
struct NegativeRadicand : Error { using Error::Error; };
struct DivergentIntegral : Error { using Error::Error; };
struct QuadratureError : Error { using Error::Error; };
struct NonPositiveDensity : Error { using Error::Error; };
struct NonPositiveRadius : Error { using Error::Error; };

// bounds
struct NonPositiveMass : Error { using Error::Error; };
struct NegativeEntropy : Error { using Error::Error; };
struct NonPositiveArea : Error { using Error::Error; };
struct NonPositiveTime : Error { using Error::Error; };
struct BoundBelowOneBit : Error { using Error::Error; };

// vacuum
struct ModeBudgetTooLarge : Error { using Error::Error; };
struct NonPositiveCutoff : Error { using Error::Error; };
struct NonPositiveInputs : Error { using Error::Error; };
struct NonPositiveLength : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct NonMonotoneTimes : Error { using Error::Error; };

// quantum
struct QubitCountOutOfRange : Error { using Error::Error; };
struct BasisIndexOutOfRange : Error { using Error::Error; };
struct InvalidTargets : Error { using Error::Error; };
struct NonUnitaryMatrix : Error { using Error::Error; };
struct PrecisionOutOfRange : Error { using Error::Error; };

// predictability
struct AmplificationNotAboveOne : Error { using Error::Error; };
struct NonPositiveLyapunov : Error { using Error::Error; };

// config
struct ParseError : Error { using Error::Error; };
struct UnknownKey : Error { using Error::Error; };
struct RangeViolation : Error { using Error::Error; };

}  // namespace cosmobound
