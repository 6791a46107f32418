#pragma once

#include <stdexcept>
#include <string>

namespace qhr {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct VariableCountMismatch : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct ContainmentViolation : Error {
  using Error::Error;
};
struct NotAffine : Error {
  using Error::Error;
};
struct StabilityViolation : Error {
  using Error::Error;
};
struct NotUnimodular : Error {
  using Error::Error;
};
struct RankDeficient : Error {
  using Error::Error;
};
struct ZeroDimensionVector : Error {
  using Error::Error;
};
struct NoUnitBlock : Error {
  using Error::Error;
};
struct NonabelianInvariants : Error {
  using Error::Error;
};
struct NotBihomogeneous : Error {
  using Error::Error;
};
struct UnknownFamily : Error {
  using Error::Error;
};
struct ParseError : Error {
  int line = 0;
  ParseError(const std::string& what, int line_no)
      : Error("parse error at line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};
struct ValidationFailure : Error {
  using Error::Error;
};

}  // namespace qhr
