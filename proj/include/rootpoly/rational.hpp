#ifndef ROOTPOLY_RATIONAL_HPP
#define ROOTPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace rp {

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator (GMP canonical form).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// Exact square root; throws rp::Error if r is not a perfect square.
Rat rat_sqrt(const Rat& r);

}  // namespace rp

#endif
