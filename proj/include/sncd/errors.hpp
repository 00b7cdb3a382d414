#pragma once

#include <stdexcept>
#include <string>

namespace sncd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SNCD_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  };

SNCD_DEFINE_ERROR(ParseError)
SNCD_DEFINE_ERROR(MalformedFiber)
SNCD_DEFINE_ERROR(DimensionMismatch)
SNCD_DEFINE_ERROR(BadFraction)
SNCD_DEFINE_ERROR(BadLocalData)
SNCD_DEFINE_ERROR(PreconditionError)
SNCD_DEFINE_ERROR(InternalError)
SNCD_DEFINE_ERROR(ProviderIncomplete)
SNCD_DEFINE_ERROR(NonIntegralAssembly)
SNCD_DEFINE_ERROR(NonReducible)
SNCD_DEFINE_ERROR(NotContained)
SNCD_DEFINE_ERROR(MissingField)
SNCD_DEFINE_ERROR(InconsistentData)
SNCD_DEFINE_ERROR(NegativeConductor)
SNCD_DEFINE_ERROR(BadFiltration)

#undef SNCD_DEFINE_ERROR

}  // namespace sncd
