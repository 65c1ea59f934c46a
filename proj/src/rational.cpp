#include "rootpoly/rational.hpp"

#include "rootpoly/errors.hpp"

namespace rp {

std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

Rat rat_sqrt(const Rat& r) {
  if (sgn(r) < 0) throw Error("square root of negative rational");
  mpz_class n = r.get_num(), d = r.get_den();
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  if (sn * sn != n || sd * sd != d) throw Error("rational is not a perfect square");
  return Rat(sn, sd);
}

}  // namespace rp
