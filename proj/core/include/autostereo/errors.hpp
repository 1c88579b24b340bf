#pragma once

#include <stdexcept>
#include <string>

namespace astereo {

// Base for everything this library throws. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// imgcore
struct FileNotFoundError : Error { using Error::Error; };
struct UnsupportedFormatError : Error { using Error::Error; };
struct CorruptDataError : Error { using Error::Error; };
struct ZeroDimensionError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct TooSmallError : Error { using Error::Error; };
struct InvalidSpecError : Error { using Error::Error; };

// stereogram
struct DepthOutOfRangeError : Error { using Error::Error; };
struct DisparityOutOfRangeError : Error { using Error::Error; };
struct TextureTooNarrowError : Error { using Error::Error; };
struct GeometryInvalidError : Error { using Error::Error; };
struct AlphaOutOfRangeError : Error { using Error::Error; };

// classic
struct NoPeriodError : Error { using Error::Error; };
struct SearchRangeInvalidError : Error { using Error::Error; };

// autograd
struct ShiftBoundInvalidError : Error { using Error::Error; };
struct ShapeMismatchError : Error { using Error::Error; };
struct EvalBeforeTrainError : Error { using Error::Error; };
struct NotScalarError : Error { using Error::Error; };
struct DisconnectedGraphError : Error { using Error::Error; };
struct MissingGradError : Error { using Error::Error; };

// neural
struct ConfigInvalidError : Error { using Error::Error; };
struct DivergedLossError : Error { using Error::Error; };
struct SizeMismatchError : Error { using Error::Error; };
struct EmptyDatabaseError : Error { using Error::Error; };

// cli
struct UsageError : Error { using Error::Error; };

}  // namespace astereo
