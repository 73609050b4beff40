#pragma once

#include <stdexcept>
#include <string>

namespace rsl {

// Domain-level failure codes. These are part of the stable contract: the CLI
// maps them to exit code 2 and reports the enumerator name in its JSON error
// body. Precondition violations that indicate caller bugs (not data) throw
// std::invalid_argument instead.
enum class Err {
  EndpointIsRoot,
  DegreeCapExceeded,
  DomainMismatch,
  OutOfDomain,
  SideNotAdmissible,
  NotInIdeal,
  NotPositive,
  MinimalPrimeNotPrincipal,
  NotAMember,
  NotDisjoint,
  NoWitnessInterval,
  UnsupportedForMinimal,
  ZeroFunction,
  SyntaxError,
  DiscontinuousPiecewise,
  SchemaError,
  InvalidDescriptor,
  UnsupportedAlgebraicPoint,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& detail)
      : std::runtime_error(std::string(err_name(code)) + ": " + detail),
        code_(code), detail_(detail) {}

  Err code() const { return code_; }
  const std::string& detail() const { return detail_; }

private:
  Err code_;
  std::string detail_;
};

}  // namespace rsl
