#pragma once

#include <stdexcept>
#include <string>

namespace pencil {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PENCIL_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    explicit Name(const std::string& msg)  \
        : Error(#Name ": " + msg) {}       \
  };

// numeric kernel
PENCIL_DEFINE_ERROR(NumericFailure)
PENCIL_DEFINE_ERROR(RootCollision)
PENCIL_DEFINE_ERROR(MatchFailure)

// curve family
PENCIL_DEFINE_ERROR(InvalidSpec)
PENCIL_DEFINE_ERROR(DegenerateSpec)
PENCIL_DEFINE_ERROR(OrderViolation)
PENCIL_DEFINE_ERROR(ExactArithmeticOverflow)

// braids and monodromy
PENCIL_DEFINE_ERROR(InconsistentEvents)
PENCIL_DEFINE_ERROR(PathClearanceFailure)
PENCIL_DEFINE_ERROR(CheckFailed)

// presentations
PENCIL_DEFINE_ERROR(BudgetExceeded)
PENCIL_DEFINE_ERROR(ReductionMismatch)
PENCIL_DEFINE_ERROR(InconsistentWeights)
PENCIL_DEFINE_ERROR(InexactDivision)

#undef PENCIL_DEFINE_ERROR

}  // namespace pencil
