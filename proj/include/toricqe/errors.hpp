#pragma once

#include <stdexcept>
#include <string>

namespace toricqe {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// numerics
struct NonConvergence : Error { using Error::Error; };
struct NoSignChange : Error { using Error::Error; };
struct DegenerateLeadingCoefficient : Error { using Error::Error; };
struct SingularJacobian : Error { using Error::Error; };

// polytope / geometry
struct OutOfRangeClassParameter : Error { using Error::Error; };
struct BoundaryEvaluation : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NonPositiveProfile : Error { using Error::Error; };

// families
struct PositivityViolation : Error { using Error::Error; };
struct PoleEvaluation : Error { using Error::Error; };
struct NoAdmissibleRoot : Error { using Error::Error; };
struct InadmissibleSolution : Error { using Error::Error; };

// bundles
struct InvalidTopology : Error { using Error::Error; };
struct NonPositiveBeta : Error { using Error::Error; };
struct ConformalFactorPole : Error { using Error::Error; };
struct SingularHessian : Error { using Error::Error; };

// documents
struct InvalidDocument : Error { using Error::Error; };

}  // namespace toricqe
