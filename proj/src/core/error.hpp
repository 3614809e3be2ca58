#pragma once

#include <stdexcept>
#include <string>

namespace fhs {

// Mirrors the status codes of the public C header (include/fhs.h).
enum class Err {
    Ok = 0,
    InvalidArgument = 1,
    UnboundedBody = 2,
    ResolutionTooCoarse = 3,
    NormalDegenerate = 4,
    BetaOutOfRange = 5,
    OriginOnSurface = 6,
    DegenerateMesh = 7,
    NegativeCurvature = 8,
    AlphaMismatch = 9,
    NumericalNonconvergence = 10,
    NonnegativityViolation = 11,
    DivergentSeries = 12,
    ExponentViolation = 13,
    ExponentOrder = 14,
    NonpositiveTau = 15,
    InconsistentParams = 16,
    SplitNotFound = 17,
    ZeroDenominator = 18,
    InvalidField = 19,
    DegenerateScaling = 20,
    SupportTooLarge = 21,
    Io = 22,
    Parse = 23,
    Internal = 24,
};

class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

  private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace fhs
