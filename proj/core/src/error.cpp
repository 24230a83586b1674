#include "chowlab/error.hpp"

namespace chowlab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadRange: return "BadRange";
    case Errc::BadDegree: return "BadDegree";
    case Errc::BadShape: return "BadShape";
    case Errc::NotStandard: return "NotStandard";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::IntegralityViolated: return "IntegralityViolated";
    case Errc::SingularM: return "SingularM";
    case Errc::ZeroForm: return "ZeroForm";
    case Errc::CheckFailed: return "CheckFailed";
    case Errc::NegativeHomology: return "NegativeHomology";
    case Errc::NoStabilization: return "NoStabilization";
    case Errc::RelationReductionUnsupported: return "RelationReductionUnsupported";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace chowlab
