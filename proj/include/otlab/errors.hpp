#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace otlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotGeneralPosition : public Error {
 public:
  NotGeneralPosition(const std::string& what, std::array<std::size_t, 3> witness)
      : Error(what), witness_(witness) {}
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<std::size_t, 3> witness_;
};

#define OTLAB_DECLARE_ERROR(Name)   \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  };

OTLAB_DECLARE_ERROR(InvalidArgument)
OTLAB_DECLARE_ERROR(DegenerateAnchor)
OTLAB_DECLARE_ERROR(NotAffine)
OTLAB_DECLARE_ERROR(TooSmall)
OTLAB_DECLARE_ERROR(SizeMismatch)
OTLAB_DECLARE_ERROR(NotSimple)
OTLAB_DECLARE_ERROR(PoleCountViolation)
OTLAB_DECLARE_ERROR(TrivialGroup)
OTLAB_DECLARE_ERROR(UnclassifiableGroup)
OTLAB_DECLARE_ERROR(RetriesExhausted)
OTLAB_DECLARE_ERROR(SupportTooLarge)
OTLAB_DECLARE_ERROR(UnknownName)
OTLAB_DECLARE_ERROR(ConstructionDegenerate)
OTLAB_DECLARE_ERROR(ParseError)

#undef OTLAB_DECLARE_ERROR

}  // namespace otlab
