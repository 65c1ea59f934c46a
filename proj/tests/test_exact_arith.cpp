#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootpoly/errors.hpp"
#include "rootpoly/scalar.hpp"

using namespace rp;

static Scalar S(const std::string& s) { return parse_scalar(s); }

TEST_CASE("rational basics") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat_to_string(rat(-3, 6)) == "-1/2");
  CHECK(rat_from_string("7/3") == rat(7, 3));
  CHECK(rat_sqrt(rat(9, 4)) == rat(3, 2));
  CHECK_THROWS_AS(rat_sqrt(rat(2)), Error);
}

TEST_CASE("laurent ring axioms on small polys") {
  auto q = LaurentPoly::variable("q");
  auto t = LaurentPoly::variable("t");
  auto one = LaurentPoly::constant(1);
  LaurentPoly a = q + t * rat(2) - one;
  LaurentPoly b = q * q - t;
  LaurentPoly c = t.pow(3) + q * t;
  CHECK(a + b == b + a);
  CHECK((a + b) + c == a + (b + c));
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * one == a);
  CHECK((a - a).is_zero());
}

TEST_CASE("laurent negative and half exponents") {
  auto qinv = LaurentPoly::variable("q", -2);
  auto qhalf = LaurentPoly::variable("q", 1);
  CHECK(qhalf * qhalf == LaurentPoly::variable("q"));
  CHECK(qinv * LaurentPoly::variable("q") == LaurentPoly::constant(1));
  CHECK(qhalf.to_string() == "q^(1/2)");
  CHECK(qinv.to_string() == "q^(-1)");
}

TEST_CASE("factor cancellation to polynomial") {
  // (1-q^2)/(1-q) = 1+q
  CHECK(S("(1-q^2)/(1-q)") == S("1+q"));
  // long quotient exercises the exact-division loop
  CHECK(S("(1-q^40)/(1-q)") * S("1-q") == S("1-q^40"));
}

TEST_CASE("additive identity keeps reduced form") {
  Scalar x = S("2*g/(1+g)");
  CHECK(x + Scalar(0) == x);
  CHECK((x + Scalar(0)).to_string() == x.to_string());
}

TEST_CASE("cross-multiplied equality of distinct representations") {
  CHECK(S("((1-t)*(1-q^2))/((1-q)*(1-t*q))") == S("((1+q)*(1-t))/(1-t*q)"));
  CHECK(S("(q*t - q*t^2)/(q - q*t)") == S("t"));
}

TEST_CASE("zero numerator and constant ratio") {
  CHECK(S("0/(1-q)").is_zero());
  CHECK(S("0/(1-q)").is_rational());
  Scalar c = S("(2+2*g)/(4+4*g)").reduced_full();
  CHECK(c.is_rational());
  CHECK(c.rational() == rat(1, 2));
}

TEST_CASE("full gcd reduction") {
  Scalar r = S("((1-t)*(1-q^2))/((1-q)*(1-t*q))").reduced_full();
  CHECK(r == S("((1+q)*(1-t))/(1-t*q)"));
  // num degree dropped: (1-t)(1-q^2) has 6 terms, (1+q)(1-t) only 4
  CHECK(r.ratfunc().num.terms.size() == 4);
}

TEST_CASE("substitution") {
  std::map<std::string, Scalar> tq{{"t", Scalar::variable("q")}};
  CHECK(S("((1+q)*(1-t))/(1-q*t)").substituted(tq) == Scalar(1));
  std::map<std::string, Scalar> g1{{"g", Scalar(1)}};
  CHECK(S("2*g/(1+g)").substituted(g1) == Scalar(1));
  std::map<std::string, Scalar> ones{{"q", Scalar(1)}, {"t", Scalar(1)}};
  CHECK_THROWS_AS(S("1/(1-q*t)").substituted(ones), ParameterDegeneracy);
}

TEST_CASE("scalar field ops") {
  Scalar a = S("g/(1+g)"), b = S("(1-g)/(2+g)");
  CHECK(a - a == Scalar(0));
  CHECK(a / a == Scalar(1));
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK_THROWS_AS(a / Scalar(0), DivisionByZero);
}

TEST_CASE("sqrt of monomials") {
  CHECK(Scalar::variable("q").sqrt() * Scalar::variable("q").sqrt() ==
        Scalar::variable("q"));
  CHECK(Scalar(rat(9, 4)).sqrt() == Scalar(rat(3, 2)));
  CHECK_THROWS_AS(S("1+q").sqrt(), Error);
}

TEST_CASE("parser grammar") {
  CHECK(S("q^(1/2)*q^(1/2)") == S("q"));
  CHECK(S("q^(-1)*q^2") == S("q"));
  CHECK(S("-3/2") == Scalar(rat(-3, 2)));
  CHECK(S("2*g*(1+g)^2/(1+g)") == S("2*g*(1+g)"));
  CHECK_THROWS_AS(S("q^(1/3)"), ParseError);
  CHECK_THROWS_AS(S("(1+q"), ParseError);
}

TEST_CASE("to_string round trip") {
  for (const char* txt : {"(1+q)*(1-t)/(1-q*t)", "2*g/(1+g)", "-5/3", "q^(1/2)+t^(-1)"}) {
    Scalar s = S(txt);
    CHECK(parse_scalar(s.to_string()) == s);
  }
}
