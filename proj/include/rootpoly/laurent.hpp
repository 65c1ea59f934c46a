#ifndef ROOTPOLY_LAURENT_HPP
#define ROOTPOLY_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "rootpoly/rational.hpp"

namespace rp {

// Exponent vector over the declared variable list. Exponents live in
// half-units: a stored exponent of 2 is the first power, a stored exponent
// of 1 is the power 1/2 (so q^{1/2} and t^{N+1-j} q^{mu_j/2} need no
// separate representation).
using Expo = std::vector<int>;

// Graded lexicographic order; ties on total degree broken by lex.
struct GrLex {
  bool operator()(const Expo& a, const Expo& b) const;
};

// Sparse multivariate Laurent polynomial with rational coefficients.
// Invariant: no stored term has a zero coefficient; all exponent vectors
// have arity vars.size().
class LaurentPoly {
 public:
  std::vector<std::string> vars;
  std::map<Expo, Rat, GrLex> terms;

  LaurentPoly() = default;

  static LaurentPoly constant(const Rat& c);
  // power given in half-units (2 = first power).
  static LaurentPoly variable(const std::string& name, int half_units = 2);
  static LaurentPoly monomial(const std::vector<std::string>& vars, const Expo& e, const Rat& c);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms.size() == 1; }
  // Constant value; poly must be constant.
  Rat constant_value() const;

  void insert_term(const Expo& e, const Rat& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rat& c) const;
  LaurentPoly pow(unsigned long k) const;

  bool operator==(const LaurentPoly& o) const;

  // Drop variables that appear in no term (keeps canonical var order).
  LaurentPoly pruned() const;

  std::string to_string() const;
};

// Fixed precedence of the formal symbols used throughout; unknown names
// sort after the known ones, alphabetically.
int var_rank(const std::string& name);

// Rewrites both polynomials over the union of their variable lists.
void align_vars(LaurentPoly& a, LaurentPoly& b);
LaurentPoly on_vars(const LaurentPoly& p, const std::vector<std::string>& vars);
std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Multivariate polynomial GCD over Q (primitive PRS, recursing on the
// variable count). Inputs are treated as ordinary polynomials after the
// Laurent shift; the result is primitive with positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact division p/g (throws if the division does not terminate exactly).
LaurentPoly poly_divexact(const LaurentPoly& p, const LaurentPoly& g);

// Exact division that reports failure instead of throwing; quot is written
// only on success.  Divisibility probe for known candidate factors.
bool poly_try_divexact(const LaurentPoly& p, const LaurentPoly& g, LaurentPoly& quot);

}  // namespace rp

#endif
