#pragma once

#include <stdexcept>
#include <string>

namespace dp4 {

/// Base of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DP4_DEFINE_ERROR(Name)            \
  class Name : public error {             \
   public:                                \
    using error::error;                   \
  };

DP4_DEFINE_ERROR(ZeroVector)
DP4_DEFINE_ERROR(NotOnSurface)
DP4_DEFINE_ERROR(BoundTooLarge)
DP4_DEFINE_ERROR(BadInput)
DP4_DEFINE_ERROR(NotADivisor)
DP4_DEFINE_ERROR(SingularForm)
DP4_DEFINE_ERROR(DegenerateModulus)
DP4_DEFINE_ERROR(BadForm)
DP4_DEFINE_ERROR(ZeroValue)

#undef DP4_DEFINE_ERROR

}  // namespace dp4
