#ifndef EXACTLA_ERRORS_HPP
#define EXACTLA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exactla {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ring-level errors.
struct DivisionByZero : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };   // always an upstream bug in exact algorithms
struct BothZero : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };
struct ExhaustedCandidates : Error { using Error::Error; };

// Matrix-level errors.
struct DimensionMismatch : Error { using Error::Error; };
struct BadCut : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };

// Solver-level errors.
struct RetryLimit : Error { using Error::Error; };
struct InconsistentSystem : Error { using Error::Error; };
struct ZeroRhs : Error { using Error::Error; };
struct WitnessInvalid : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

// Input handling.
struct ParseError : Error { using Error::Error; };

}  // namespace exactla

#endif  // EXACTLA_ERRORS_HPP
