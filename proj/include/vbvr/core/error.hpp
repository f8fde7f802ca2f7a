#pragma once

#include <stdexcept>
#include <string>

namespace vbvr {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Hard failures keep their own types so callers can branch on them.
#define VBVR_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what_arg) : Error(what_arg) {}  \
  }

VBVR_DEFINE_ERROR(RangeError);         // seed index space exhausted
VBVR_DEFINE_ERROR(InvalidParamError);  // non-canonicalizable parameter value
VBVR_DEFINE_ERROR(StorageError);
VBVR_DEFINE_ERROR(ConflictError);     // existing sample dir with different digest
VBVR_DEFINE_ERROR(NoPathError);       // goal unreachable
VBVR_DEFINE_ERROR(UnsolvableError);   // sliding-puzzle parity violation
VBVR_DEFINE_ERROR(InvalidInputError); // malformed solver input
VBVR_DEFINE_ERROR(RenderError);
VBVR_DEFINE_ERROR(CodecError);
VBVR_DEFINE_ERROR(InfeasibleError);  // parameter sampling exhausted its attempt budget
VBVR_DEFINE_ERROR(TemplateError);    // unfilled prompt placeholder
VBVR_DEFINE_ERROR(PlanError);
VBVR_DEFINE_ERROR(ConfigError);
VBVR_DEFINE_ERROR(UndefinedAverageError);
VBVR_DEFINE_ERROR(UndefinedRatioError);
VBVR_DEFINE_ERROR(UndefinedCorrelationError);
VBVR_DEFINE_ERROR(DegenerateFitError);

#undef VBVR_DEFINE_ERROR

}  // namespace vbvr
