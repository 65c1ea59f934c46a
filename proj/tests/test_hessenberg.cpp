#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootpoly/errors.hpp"
#include "rootpoly/hessenberg.hpp"

using namespace rp;

static Scalar S(const std::string& s) { return parse_scalar(s); }

// interval weights are only labels for the engine; use 1-coordinate tags
static std::vector<Weight> tags(int n) {
  std::vector<Weight> v;
  for (int i = 0; i < n; ++i) v.push_back({2 * i});
  return v;
}

static bool same_expansion(const MonomialExpansion& a, const MonomialExpansion& b) {
  if (a.leading != b.leading || a.coeffs.size() != b.coeffs.size()) return false;
  for (const auto& [w, c] : a.coeffs) {
    auto it = b.coeffs.find(w);
    if (it == b.coeffs.end() || c != it->second) return false;
  }
  return true;
}

TEST_CASE("singleton interval") {
  TriangularData td;
  td.interval = tags(1);
  td.eps = {S("5")};
  for (auto* f : {solve_recurrence, solve_closed_form, expand_determinant}) {
    auto p = f(td);
    CHECK(p.coeffs.size() == 1);
    CHECK(p.coeffs.at(td.interval[0]).is_one());
  }
}

TEST_CASE("all-zero d gives the bare leading term") {
  TriangularData td;
  td.interval = tags(4);
  td.eps = {S("0"), S("1"), S("2"), S("7")};
  auto p = solve_closed_form(td);
  CHECK(p.coeffs.size() == 1);
  CHECK(p.coeffs.count(td.interval[3]) == 1);
}

TEST_CASE("two by two case by hand") {
  TriangularData td;
  td.interval = tags(2);
  Scalar e1 = S("1+g"), e2 = S("3");
  td.eps = {e1, e2};
  td.d[{1, 0}] = S("4*g");
  auto p = expand_determinant(td);
  CHECK(p.coeffs.at(td.interval[0]) == S("4*g") / (e2 - e1));
  CHECK(p.coeffs.at(td.interval[1]).is_one());
}

TEST_CASE("one recurrence step: rank-one differential data") {
  // eps = (2(2+g), 2) with single subdiagonal entry 4g gives 2g/(1+g)
  TriangularData td;
  td.interval = tags(2);
  td.eps = {S("2"), S("2*(2+g)")};
  td.d[{1, 0}] = S("4*g");
  auto p = solve_recurrence(td);
  CHECK(p.coeffs.at(td.interval[0]) == S("2*g/(1+g)"));
}

TEST_CASE("regularity violation is detected") {
  TriangularData td;
  td.interval = tags(3);
  td.eps = {S("1"), S("2"), S("1")};  // eps[0] == eps[2]
  td.d[{2, 0}] = S("1");
  CHECK_THROWS_AS(solve_recurrence(td), RegularityViolation);
  CHECK_THROWS_AS(solve_closed_form(td), RegularityViolation);
  CHECK_THROWS_AS(expand_determinant(td), RegularityViolation);
}

TEST_CASE("normalization factors") {
  TriangularData td;
  td.interval = tags(3);
  td.eps = {S("0"), S("1"), S("4")};
  auto fs = normalization_factors(td);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == S("4"));
  CHECK(fs[1] == S("3"));
}

static TriangularData random_td(std::mt19937& rng, bool symbolic) {
  std::uniform_int_distribution<int> nd(1, 8), cd(-4, 4), bd(0, 1);
  TriangularData td;
  int n = nd(rng);
  td.interval = tags(n);
  Scalar g = Scalar::variable("g");
  for (int j = 0; j < n; ++j) {
    // strictly increasing rationals (plus optional symbol) keep it regular
    Scalar e(Rat(static_cast<long>(3 * j)));
    if (symbolic && bd(rng)) e += g * Scalar(Rat(static_cast<long>(j + 1)));
    td.eps.push_back(e);
  }
  for (int j = 1; j < n; ++j)
    for (int k = 0; k < j; ++k) {
      if (bd(rng)) continue;  // keep it sparse
      int c = cd(rng);
      if (c == 0) continue;
      Scalar v(Rat(static_cast<long>(c)));
      if (symbolic && bd(rng)) v *= g;
      td.d[{j, k}] = v;
    }
  return td;
}

TEST_CASE("three-way agreement on random sparse data") {
  std::mt19937 rng(20240817);
  for (int it = 0; it < 100; ++it) {
    TriangularData td = random_td(rng, it % 2 == 1);
    auto pr = solve_recurrence(td);
    auto pc = solve_closed_form(td);
    auto pd = expand_determinant(td);
    CHECK(same_expansion(pr, pc));
    CHECK(same_expansion(pr, pd));
  }
}
