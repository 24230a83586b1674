#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chowlab {

enum class Errc {
  NonPrime,
  Inconsistent,
  TooLarge,
  BadRange,
  BadDegree,
  BadShape,
  NotStandard,
  NotSymmetric,
  NotHomogeneous,
  IntegralityViolated,
  SingularM,
  ZeroForm,
  CheckFailed,
  NegativeHomology,
  NoStabilization,
  RelationReductionUnsupported,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// command-line front end can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace chowlab
