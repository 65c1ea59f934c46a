#include "rootpoly/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "rootpoly/errors.hpp"

namespace rp {

namespace {

// Divide both num and den by their common monomial content and rescale to
// coprime integer contents; make den's leading coefficient positive.
RatFunc canonicalize(RatFunc r) {
  if (r.den.is_zero()) throw DivisionByZero("zero denominator in rational function");
  align_vars(r.num, r.den);
  if (r.num.is_zero()) {
    RatFunc z;
    z.num = LaurentPoly();
    z.den = LaurentPoly::constant(Rat(1));
    return z;
  }
  const size_t n = r.num.vars.size();
  // monomial content across num and den together
  Expo mins(n, 0);
  bool first = true;
  auto scan = [&](const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms) {
      for (size_t i = 0; i < n; ++i) mins[i] = first ? e[i] : std::min(mins[i], e[i]);
      first = false;
    }
  };
  scan(r.num);
  scan(r.den);
  auto shift = [&](LaurentPoly& p) {
    if (std::all_of(mins.begin(), mins.end(), [](int x) { return x == 0; })) return;
    std::map<Expo, Rat, GrLex> terms;
    for (const auto& [e, c] : p.terms) {
      Expo ne(n);
      for (size_t i = 0; i < n; ++i) ne[i] = e[i] - mins[i];
      terms.emplace(std::move(ne), c);
    }
    p.terms = std::move(terms);
  };
  shift(r.num);
  shift(r.den);
  // integer content: scale so both polynomials are integral and jointly primitive
  mpz_class num_gcd = 0, den_lcm = 1;
  auto content_scan = [&](const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  };
  content_scan(r.num);
  content_scan(r.den);
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(r.den.terms.rbegin()->second) < 0) scale = -scale;
  r.num = r.num * scale;
  r.den = r.den * scale;
  r.num = r.num.pruned();
  r.den = r.den.pruned();
  align_vars(r.num, r.den);
  return r;
}

}  // namespace

RatFunc reduce_ratfunc(const RatFunc& r, bool full_gcd) {
  RatFunc out = canonicalize(r);
  if (full_gcd && !out.num.is_zero() && !out.den.is_constant()) {
    LaurentPoly g = poly_gcd(out.num, out.den);
    if (!g.is_constant()) {
      out = canonicalize({poly_divexact(out.num, g), poly_divexact(out.den, g)});
    }
  }
  return out;
}

Scalar::Scalar(const RatFunc& rf) {
  RatFunc c = reduce_ratfunc(rf);
  if (c.num.is_constant() && c.den.is_constant()) {
    v_ = c.num.constant_value() / c.den.constant_value();
  } else {
    v_ = std::move(c);
  }
}

Scalar::Scalar(const LaurentPoly& p) {
  if (p.is_constant()) {
    v_ = p.constant_value();
  } else {
    RatFunc rf;
    rf.num = p;
    rf.den = LaurentPoly::constant(Rat(1));
    v_ = reduce_ratfunc(rf);
  }
}

Scalar Scalar::variable(const std::string& name, int half_units) {
  return Scalar(LaurentPoly::variable(name, half_units));
}

RatFunc Scalar::as_ratfunc() const {
  if (is_rational()) {
    RatFunc rf;
    rf.num = LaurentPoly::constant(rational());
    rf.den = LaurentPoly::constant(Rat(1));
    return rf;
  }
  return ratfunc();
}

bool Scalar::is_zero() const {
  if (is_rational()) return rational() == 0;
  return ratfunc().num.is_zero();
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == 1;
  return ratfunc().num == ratfunc().den;
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rat(-rational()));
  RatFunc rf = ratfunc();
  rf.num = -rf.num;
  return Scalar(rf);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return Scalar(Rat(rational() + o.rational()));
  RatFunc a = as_ratfunc(), b = o.as_ratfunc();
  RatFunc r;
  r.num = a.num * b.den + b.num * a.den;
  r.den = a.den * b.den;
  return Scalar(r);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return Scalar(Rat(rational() * o.rational()));
  RatFunc a = as_ratfunc(), b = o.as_ratfunc();
  RatFunc r;
  r.num = a.num * b.num;
  r.den = a.den * b.den;
  return Scalar(r);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw DivisionByZero();
  if (is_rational() && o.is_rational()) return Scalar(Rat(rational() / o.rational()));
  RatFunc a = as_ratfunc(), b = o.as_ratfunc();
  RatFunc r;
  r.num = a.num * b.den;
  r.den = a.den * b.num;
  return Scalar(r);
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return rational() == o.rational();
  RatFunc a = as_ratfunc(), b = o.as_ratfunc();
  return a.num * b.den == b.num * a.den;
}

Scalar Scalar::reduced_full() const {
  if (is_rational()) return *this;
  return Scalar(reduce_ratfunc(ratfunc(), /*full_gcd=*/true));
}

Scalar Scalar::sqrt() const {
  if (is_rational()) return Scalar(rat_sqrt(rational()));
  const RatFunc& rf = ratfunc();
  if (!rf.num.is_monomial() || !rf.den.is_monomial())
    throw Error("square root supported for monomial scalars only");
  auto half = [](const LaurentPoly& p) {
    const auto& [e, c] = *p.terms.begin();
    Expo h(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] % 2 != 0) throw Error("monomial exponent not even in half-units; square root not representable");
      h[i] = e[i] / 2;
    }
    return LaurentPoly::monomial(p.vars, h, rat_sqrt(c));
  };
  RatFunc out;
  out.num = half(rf.num);
  out.den = half(rf.den);
  return Scalar(out);
}

Scalar scalar_pow(const Scalar& base, long p) {
  Scalar out{Rat(1)};
  Scalar b = base;
  unsigned long k = static_cast<unsigned long>(p < 0 ? -p : p);
  while (k) {
    if (k & 1) out = out * b;
    k >>= 1;
    if (k) b = b * b;
  }
  if (p < 0) out = Scalar{Rat(1)} / out;
  return out;
}

namespace {

Scalar substitute_poly(const LaurentPoly& p, const std::map<std::string, Scalar>& bindings) {
  Scalar acc(Rat(0));
  for (const auto& [e, c] : p.terms) {
    Scalar term{Rat(c)};
    for (size_t i = 0; i < e.size(); ++i) {
      int he = e[i];  // half-unit exponent
      if (he == 0) continue;
      auto it = bindings.find(p.vars[i]);
      Scalar powed;
      if (it == bindings.end()) {
        powed = Scalar::variable(p.vars[i], he);
      } else if (he % 2 == 0) {
        powed = scalar_pow(it->second, he / 2);
      } else {
        powed = scalar_pow(it->second.sqrt(), he);
      }
      term = term * powed;
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

Scalar Scalar::substituted(const std::map<std::string, Scalar>& bindings) const {
  if (is_rational()) return *this;
  const RatFunc& rf = ratfunc();
  Scalar num = substitute_poly(rf.num, bindings);
  Scalar den = substitute_poly(rf.den, bindings);
  if (den.is_zero()) throw ParameterDegeneracy();
  return num / den;
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  const RatFunc& rf = ratfunc();
  if (rf.den.is_constant() && rf.den.constant_value() == 1) return rf.num.to_string();
  std::ostringstream os;
  os << "(" << rf.num.to_string() << ")/(" << rf.den.to_string() << ")";
  return os.str();
}

}  // namespace rp
