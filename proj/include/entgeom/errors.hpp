#pragma once

#include <stdexcept>
#include <string>

namespace entgeom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct BadPartyIndex : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct IncompatibleDims : Error { using Error::Error; };
struct EmptyKeepSet : Error { using Error::Error; };
struct NegativeRadicand : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NotQubits : Error { using Error::Error; };
struct NotThreeQubits : Error { using Error::Error; };
struct NotProbabilityVector : Error { using Error::Error; };
struct BadDimension : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct InvalidAllocation : Error { using Error::Error; };
struct BadGroup : Error { using Error::Error; };
struct UnknownRegion : Error { using Error::Error; };
struct IncompatibleConstraintSet : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace entgeom
