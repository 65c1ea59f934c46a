#ifndef ROOTPOLY_SCALAR_HPP
#define ROOTPOLY_SCALAR_HPP

#include <map>
#include <string>
#include <variant>

#include "rootpoly/laurent.hpp"
#include "rootpoly/rational.hpp"

namespace rp {

// Ratio of Laurent polynomials. Canonical form: den nonzero, common
// monomial and integer content removed, integer coefficients with
// gcd(content(num), content(den)) = 1, and den's leading term (graded lex)
// positive.
struct RatFunc {
  LaurentPoly num;
  LaurentPoly den;
};

// Exact field element: a big rational, or a reduced ratio of sparse
// Laurent polynomials in formal symbols.
class Scalar {
 public:
  Scalar() : v_(Rat(0)) {}
  Scalar(const Rat& r) : v_(r) {}
  Scalar(long n) : v_(Rat(n)) {}
  Scalar(const RatFunc& rf);
  Scalar(const LaurentPoly& p);

  static Scalar variable(const std::string& name, int half_units = 2);

  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rational() const { return std::get<Rat>(v_); }
  const RatFunc& ratfunc() const { return std::get<RatFunc>(v_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Equality by cross-multiplication num_a*den_b = num_b*den_a.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Removes the full multivariate polynomial GCD of num and den
  // (monomial/content reduction is always applied by construction).
  Scalar reduced_full() const;

  // Exact substitution of symbols; remaining symbols pass through.
  // Throws ParameterDegeneracy if a denominator vanishes.
  Scalar substituted(const std::map<std::string, Scalar>& bindings) const;

  // Square root of a monomial (or rational square) scalar.
  Scalar sqrt() const;

  std::string to_string() const;

 private:
  std::variant<Rat, RatFunc> v_;
  RatFunc as_ratfunc() const;
};

// Reduction entry point used by the Scalar constructor; exposed for tests.
RatFunc reduce_ratfunc(const RatFunc& r, bool full_gcd = false);

Scalar scalar_pow(const Scalar& base, long power);

Scalar parse_scalar(const std::string& text);

}  // namespace rp

#endif
