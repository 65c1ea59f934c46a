#ifndef ROOTPOLY_ERRORS_HPP
#define ROOTPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rp {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what = "division by zero scalar") : Error(what) {}
};

struct ParameterDegeneracy : Error {
  explicit ParameterDegeneracy(const std::string& what = "denominator vanishes under parameter binding")
      : Error(what) {}
};

struct RegularityViolation : Error {
  explicit RegularityViolation(const std::string& what = "coinciding eigenvalues on comparable weights")
      : Error(what) {}
};

struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& what = "weight arity does not match root system rank")
      : Error(what) {}
};

struct RankGuardExceeded : Error {
  explicit RankGuardExceeded(const std::string& what = "rank guard exceeded") : Error(what) {}
};

struct NotInvariant : Error {
  explicit NotInvariant(const std::string& what = "lattice element is not Weyl invariant") : Error(what) {}
};

struct NonIntegerParams : Error {
  explicit NonIntegerParams(const std::string& what = "weight function expansion needs nonnegative integer parameters")
      : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace rp

#endif
