#pragma once
// Error taxonomy shared by the library and the CLI exit-code mapping.

#include <stdexcept>

namespace bnov {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid user input or out-of-domain evaluation points.
struct NonPositiveParameter : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct AmplitudeTooLarge : Error { using Error::Error; };
struct TruncationTooSmall : Error { using Error::Error; };
struct DegenerateScaling : Error { using Error::Error; };

// Solver-side failures.
struct NoMinimum : Error { using Error::Error; };
struct BifurcationInvalid : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct ValidityViolated : Error { using Error::Error; };

// Backend failure in the dense eigensolver.
struct EigensolverFailure : Error { using Error::Error; };

}  // namespace bnov
