#pragma once

#include <stdexcept>
#include <string>

namespace genmat {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tree construction.
struct CycleDetected : Error { using Error::Error; };
struct MultipleRoots : Error { using Error::Error; };
struct OrphanNode : Error { using Error::Error; };
struct KTooLarge : Error { using Error::Error; };
struct InvalidParam : Error { using Error::Error; };

// Linear algebra.
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroWeight : Error { using Error::Error; };
struct NonPositiveWeight : Error { using Error::Error; };
struct EigenvectorNotGuaranteed : Error { using Error::Error; };
struct SizeCapExceeded : Error { using Error::Error; };
struct ZeroPivotColumn : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };

// Release pipeline and metrics.
struct NonPositiveEpsilon : Error { using Error::Error; };
struct QTooLarge : Error { using Error::Error; };

// File ingestion.
struct ParseError : Error { using Error::Error; };
struct InconsistentLeafSet : Error { using Error::Error; };

}  // namespace genmat
