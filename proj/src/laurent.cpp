#include "rootpoly/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "rootpoly/errors.hpp"

namespace rp {

bool GrLex::operator()(const Expo& a, const Expo& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

int var_rank(const std::string& name) {
  static const std::vector<std::string> known = {"q", "t", "qg", "qgs", "qgl", "g", "g_s", "g_l"};
  for (size_t i = 0; i < known.size(); ++i)
    if (known[i] == name) return static_cast<int>(i);
  return static_cast<int>(known.size());
}

static bool var_less(const std::string& a, const std::string& b) {
  int ra = var_rank(a), rb = var_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end(), var_less);
  return out;
}

LaurentPoly on_vars(const LaurentPoly& p, const std::vector<std::string>& vars) {
  if (p.vars == vars) return p;
  std::vector<int> pos(p.vars.size());
  for (size_t i = 0; i < p.vars.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), p.vars[i]);
    assert(it != vars.end());
    pos[i] = static_cast<int>(it - vars.begin());
  }
  LaurentPoly out;
  out.vars = vars;
  for (const auto& [e, c] : p.terms) {
    Expo ne(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.terms.emplace(std::move(ne), c);
  }
  return out;
}

void align_vars(LaurentPoly& a, LaurentPoly& b) {
  if (a.vars == b.vars) return;
  auto u = merge_vars(a.vars, b.vars);
  a = on_vars(a, u);
  b = on_vars(b, u);
}

LaurentPoly LaurentPoly::constant(const Rat& c) {
  LaurentPoly p;
  if (c != 0) p.terms.emplace(Expo{}, c);
  return p;
}

LaurentPoly LaurentPoly::variable(const std::string& name, int half_units) {
  LaurentPoly p;
  p.vars = {name};
  p.terms.emplace(Expo{half_units}, Rat(1));
  return p;
}

LaurentPoly LaurentPoly::monomial(const std::vector<std::string>& vars, const Expo& e, const Rat& c) {
  LaurentPoly p;
  p.vars = vars;
  if (c != 0) p.terms.emplace(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms.empty()) return true;
  if (terms.size() != 1) return false;
  const Expo& e = terms.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat LaurentPoly::constant_value() const {
  if (terms.empty()) return Rat(0);
  assert(is_constant());
  return terms.begin()->second;
}

void LaurentPoly::insert_term(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  out.vars = vars;
  for (const auto& [e, c] : terms) out.terms.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly a = *this, b = o;
  align_vars(a, b);
  for (const auto& [e, c] : b.terms) a.insert_term(e, c);
  return a;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly a = *this, b = o;
  align_vars(a, b);
  LaurentPoly out;
  out.vars = a.vars;
  const size_t n = a.vars.size();
  Expo e(n);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.insert_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
  LaurentPoly out;
  out.vars = vars;
  if (c == 0) return out;
  for (const auto& [e, k] : terms) out.terms.emplace(e, k * c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
  LaurentPoly out = constant(Rat(1));
  LaurentPoly base = *this;
  while (k) {
    if (k & 1) out = out * base;
    base = (k >>= 1) ? base * base : base;
  }
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  LaurentPoly a = *this, b = o;
  align_vars(a, b);
  return a.terms == b.terms;
}

LaurentPoly LaurentPoly::pruned() const {
  std::vector<bool> used(vars.size(), false);
  for (const auto& [e, c] : terms)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  std::vector<std::string> keep;
  for (size_t i = 0; i < vars.size(); ++i)
    if (used[i]) keep.push_back(vars[i]);
  if (keep.size() == vars.size()) return *this;
  LaurentPoly out;
  out.vars = keep;
  for (const auto& [e, c] : terms) {
    Expo ne;
    ne.reserve(keep.size());
    for (size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    out.terms.emplace(std::move(ne), c);
  }
  return out;
}

static void print_power(std::ostream& os, const std::string& var, int half_units) {
  os << var;
  if (half_units == 2) return;
  if (half_units % 2 == 0) {
    int p = half_units / 2;
    if (p < 0)
      os << "^(" << p << ")";
    else
      os << "^" << p;
  } else {
    os << "^(" << half_units << "/2)";
  }
}

std::string LaurentPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest term first.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Expo& e = it->first;
    Rat c = it->second;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    Rat ac = abs(c);
    bool trivial_mono = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (ac != 1 || trivial_mono) {
      os << ac.get_str();
      if (!trivial_mono) os << "*";
    }
    bool started = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (started) os << "*";
      print_power(os, vars[i], e[i]);
      started = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Multivariate GCD over Q via primitive pseudo-remainder sequences.
//
// Polynomials are handled in a dense-in-main-variable recursive view: a
// vector of coefficient polynomials in the remaining variables, indexed by
// the degree in the main variable (in half-unit steps, which behaves like an
// ordinary variable).

namespace {

using Coeffs = std::vector<LaurentPoly>;  // coeffs[k] multiplies main_var^(k half-units)

// Shift Laurent exponents up so every exponent is nonnegative.
LaurentPoly laurent_to_poly(const LaurentPoly& p) {
  if (p.terms.empty()) return p;
  size_t n = p.vars.size();
  Expo mins(n, 0);
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    for (size_t i = 0; i < n; ++i) mins[i] = first ? e[i] : std::min(mins[i], e[i]);
    first = false;
  }
  LaurentPoly out;
  out.vars = p.vars;
  for (const auto& [e, c] : p.terms) {
    Expo ne(n);
    for (size_t i = 0; i < n; ++i) ne[i] = e[i] - std::min(mins[i], 0);
    out.terms.emplace(std::move(ne), c);
  }
  return out;
}

Coeffs split_main(const LaurentPoly& p, size_t vi) {
  Coeffs out;
  std::vector<std::string> rest;
  for (size_t i = 0; i < p.vars.size(); ++i)
    if (i != vi) rest.push_back(p.vars[i]);
  for (const auto& [e, c] : p.terms) {
    int d = e[vi];
    assert(d >= 0);
    if (static_cast<size_t>(d) >= out.size()) {
      LaurentPoly zero;
      zero.vars = rest;
      out.resize(d + 1, zero);
    }
    Expo ne;
    ne.reserve(rest.size());
    for (size_t i = 0; i < e.size(); ++i)
      if (i != vi) ne.push_back(e[i]);
    out[d].insert_term(ne, c);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

LaurentPoly join_main(const Coeffs& cs, const std::string& main_var) {
  LaurentPoly out;
  for (size_t d = 0; d < cs.size(); ++d) {
    if (cs[d].is_zero()) continue;
    LaurentPoly m = LaurentPoly::variable(main_var, static_cast<int>(d));
    out = out + cs[d] * m;
  }
  // Degree-zero-only case keeps the remaining vars.
  if (out.vars.empty() && !cs.empty()) out.vars = cs[0].vars;
  return out;
}

int degree(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

Coeffs coeffs_mul(const Coeffs& a, const LaurentPoly& f) {
  Coeffs out = a;
  for (auto& c : out) c = c * f;
  return out;
}

Coeffs coeffs_sub(const Coeffs& a, const Coeffs& b, int shift) {
  // a - b * x^shift
  Coeffs out = a;
  if (out.size() < b.size() + shift) {
    LaurentPoly zero;
    if (!out.empty())
      zero.vars = out[0].vars;
    else if (!b.empty())
      zero.vars = b[0].vars;
    out.resize(b.size() + shift, zero);
  }
  for (size_t i = 0; i < b.size(); ++i) out[i + shift] = out[i + shift] - b[i];
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

LaurentPoly gcd_poly_rec(LaurentPoly a, LaurentPoly b);

// gcd of the coefficient list (the content), recursively.
LaurentPoly coeffs_content(const Coeffs& cs) {
  LaurentPoly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_poly_rec(g, c);
    if (g.is_constant()) break;
  }
  if (g.is_zero()) return LaurentPoly::constant(Rat(1));
  return g;
}

Coeffs pseudo_rem(Coeffs u, const Coeffs& v) {
  // prem(u, v) in the main variable.
  assert(!v.empty());
  const LaurentPoly& lv = v.back();
  while (degree(u) >= degree(v) && !u.empty()) {
    int k = degree(u) - degree(v);
    LaurentPoly lu = u.back();
    u = coeffs_mul(u, lv);
    u = coeffs_sub(u, coeffs_mul(v, lu), k);
  }
  return u;
}

// Normalize: primitive part with positive leading rational coefficient.
LaurentPoly primitive_positive(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  // rational content
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  LaurentPoly out = p * scale;
  if (sgn(out.terms.rbegin()->second) < 0) out = -out;
  return out;
}

LaurentPoly gcd_poly_rec(LaurentPoly a, LaurentPoly b) {
  align_vars(a, b);
  a = laurent_to_poly(a);
  b = laurent_to_poly(b);
  if (a.is_zero()) return primitive_positive(b);
  if (b.is_zero()) return primitive_positive(a);
  if (a.is_constant() || b.is_constant()) return LaurentPoly::constant(Rat(1));
  // Pick the last variable actually appearing in either as main variable.
  size_t vi = a.vars.size();
  for (size_t i = a.vars.size(); i-- > 0;) {
    bool appears = false;
    for (const auto& [e, c] : a.terms) appears |= e[i] != 0;
    for (const auto& [e, c] : b.terms) appears |= e[i] != 0;
    if (appears) {
      vi = i;
      break;
    }
  }
  assert(vi < a.vars.size());
  std::string main_var = a.vars[vi];
  Coeffs u = split_main(a, vi), v = split_main(b, vi);
  LaurentPoly cu = coeffs_content(u), cv = coeffs_content(v);
  LaurentPoly cont = gcd_poly_rec(cu, cv);
  for (auto& c : u) c = poly_divexact(c, cu);
  for (auto& c : v) c = poly_divexact(c, cv);
  if (degree(u) < degree(v)) std::swap(u, v);
  while (!v.empty()) {
    Coeffs r = pseudo_rem(u, v);
    u = std::move(v);
    v = std::move(r);
    if (!v.empty()) {
      LaurentPoly c = coeffs_content(v);
      for (auto& x : v) x = poly_divexact(x, c);
    }
  }
  LaurentPoly pp = join_main(u, main_var);
  return primitive_positive(cont * primitive_positive(pp)).pruned();
}

// --- Heuristic gcd -------------------------------------------------------
// Evaluate one variable at a large integer xi, take the gcd of the images
// (recursively, down to integers), and lift the result back by xi-adic
// expansion of its coefficients.  The candidate is only accepted after an
// exact-division check, so a bad evaluation point merely costs a retry; a
// handful of failures falls back to the pseudo-remainder sequence.  On the
// sparse high-degree operands produced by the recurrence solver this runs in
// pure integer arithmetic and avoids the coefficient blowup of the
// pseudo-remainder route entirely.

mpz_class poly_height(const LaurentPoly& p) {
  mpz_class h = 0;
  for (const auto& [e, c] : p.terms) {
    mpz_class a = abs(c.get_num());
    if (a > h) h = a;
  }
  return h;
}

// Substitute vars[vi] = xi; exponents stay in stored units, which just means
// the gcd is computed in the image ring of that substitution -- the lift
// returns the same stored units, so the result is consistent.
LaurentPoly eval_var(const LaurentPoly& p, size_t vi, const mpz_class& xi) {
  LaurentPoly out;
  out.vars = p.vars;
  std::map<int, mpz_class> powers;
  for (const auto& [e, c] : p.terms) {
    auto it = powers.find(e[vi]);
    if (it == powers.end()) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), e[vi]);
      it = powers.emplace(e[vi], std::move(pw)).first;
    }
    Expo ne = e;
    ne[vi] = 0;
    out.insert_term(ne, c * Rat(it->second));
  }
  return out;
}

// Inverse of eval_var for polynomials of height < xi/2: peel off the
// symmetric residue mod xi as the coefficient of vars[vi]^i, divide by xi,
// repeat.  dmax bounds the degree the true gcd could have; exceeding it means
// the evaluation point was bad.
LaurentPoly lift_var(LaurentPoly g, size_t vi, const mpz_class& xi, int dmax) {
  LaurentPoly out;
  out.vars = g.vars;
  for (int i = 0; !g.is_zero(); ++i) {
    if (i > dmax) return LaurentPoly();
    LaurentPoly next;
    next.vars = g.vars;
    for (const auto& [e, c] : g.terms) {
      mpz_class z = c.get_num();
      mpz_class r = z % xi;
      if (r * 2 >= xi)
        r -= xi;
      else if (r * 2 < -xi)
        r += xi;
      if (r != 0) {
        Expo ne = e;
        ne[vi] = i;
        out.insert_term(ne, Rat(r));
      }
      mpz_class q = (z - r) / xi;
      if (q != 0) next.insert_term(e, Rat(q));
    }
    g = std::move(next);
  }
  return out;
}

mpz_class int_content(const LaurentPoly& p) {
  mpz_class g = 0;
  for (const auto& [e, c] : p.terms)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  return g;
}

// Gcd over the integers of integer-coefficient polynomials in shifted
// polynomial form (nonnegative exponents) with a shared vars vector.  The
// integer content must be carried through the recursion: the lift at the
// level above reads the xi-adic digits of the full result, content included,
// so stripping it there would reconstruct a proper divisor.  Returns the
// zero polynomial on failure.
LaurentPoly gcd_heu_rec(const LaurentPoly& A, const LaurentPoly& B, int depth) {
  if (depth > 8) return LaurentPoly();
  mpz_class ca = int_content(A), cb = int_content(B);
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  LaurentPoly a = A * Rat(mpz_class(1), ca);
  LaurentPoly b = B * Rat(mpz_class(1), cb);
  if (sgn(a.terms.rbegin()->second) < 0) a = -a;
  if (sgn(b.terms.rbegin()->second) < 0) b = -b;
  if (a.is_constant() || b.is_constant())
    return LaurentPoly::monomial(A.vars, Expo(A.vars.size(), 0), Rat(cg));
  // keep the shared vars vector intact throughout: vi indexes into it, and
  // the recursive result feeds lift_var under the same indexing
  size_t vi = a.vars.size();
  for (size_t i = a.vars.size(); i-- > 0;) {
    bool appears = false;
    for (const auto& [e, c] : a.terms) appears |= e[i] != 0;
    for (const auto& [e, c] : b.terms) appears |= e[i] != 0;
    if (appears) {
      vi = i;
      break;
    }
  }
  if (vi == a.vars.size())
    return LaurentPoly::monomial(A.vars, Expo(A.vars.size(), 0), Rat(cg));
  int dmax = 0;
  for (const auto& [e, c] : a.terms) dmax = std::max(dmax, e[vi]);
  for (const auto& [e, c] : b.terms) dmax = std::max(dmax, e[vi]);
  mpz_class xi = 2 * std::min(poly_height(a), poly_height(b)) + 29;
  for (int tries = 0; tries < 6; ++tries) {
    // the lifted integers reach roughly dmax * bits(xi) bits; bail out before
    // a deep recursion can make that explode
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<size_t>(dmax + 1) >
        400000)
      return LaurentPoly();
    LaurentPoly ea = eval_var(a, vi, xi), eb = eval_var(b, vi, xi);
    LaurentPoly g;
    if (!ea.is_zero() && !eb.is_zero()) {
      if (ea.is_constant() && eb.is_constant()) {
        mpz_class z;
        mpz_gcd(z.get_mpz_t(), ea.terms.begin()->second.get_num().get_mpz_t(),
                eb.terms.begin()->second.get_num().get_mpz_t());
        g = LaurentPoly::monomial(a.vars, Expo(a.vars.size(), 0), Rat(z));
      } else {
        g = gcd_heu_rec(ea, eb, depth + 1);
      }
    }
    if (!g.is_zero()) {
      LaurentPoly cand = lift_var(std::move(g), vi, xi, dmax);
      if (!cand.is_zero()) {
        // divisibility over the rationals only depends on the primitive part;
        // reattach the content gcd for the caller's lift
        cand = primitive_positive(cand);
        LaurentPoly q;
        if (poly_try_divexact(a, cand, q) && poly_try_divexact(b, cand, q))
          return cand * Rat(cg);
      }
    }
    // grow the evaluation point by an awkward ratio so retries do not land
    // on related bad points
    xi = xi * 73794 / 27011;
  }
  return LaurentPoly();
}

}  // namespace

// Long division in the GrLex order; exact by contract.
LaurentPoly poly_divexact(const LaurentPoly& p, const LaurentPoly& g) {
  if (p.is_zero()) return p;
  LaurentPoly a = p, d = g;
  align_vars(a, d);
  assert(!d.is_zero());
  LaurentPoly q;
  q.vars = a.vars;
  size_t guard = 1u << 22;  // quotients can be much longer than the inputs
  const auto& lead = *d.terms.rbegin();
  while (!a.is_zero()) {
    if (guard-- == 0) throw Error("inexact polynomial division");
    const auto& la = *a.terms.rbegin();
    Expo e(la.first.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = la.first[i] - lead.first[i];
    Rat c = la.second / lead.second;
    LaurentPoly m = LaurentPoly::monomial(a.vars, e, c);
    q.insert_term(e, c);
    a = a - m * d;
  }
  return q;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly u = a, v = b;
  align_vars(u, v);
  u = laurent_to_poly(u);
  v = laurent_to_poly(v);
  if (u.is_zero()) return primitive_positive(v);
  if (v.is_zero()) return primitive_positive(u);
  if (u.is_constant() || v.is_constant()) return LaurentPoly::constant(Rat(1));
  // Compress common exponent strides per variable (x^(k*s) -> x^k) before
  // the heuristic gcd: the evaluation-point integers grow with the degree in
  // each variable, so halving the stored exponents (they are half-units, so
  // a factor of 2 is typical) quarters the big-integer sizes.  The result
  // re-expands to the true gcd up to a monomial unit, which is a unit of the
  // Laurent ring anyway.
  std::vector<int> stride(u.vars.size(), 0);
  for (const LaurentPoly* p : {&u, &v})
    for (const auto& [e, c] : p->terms)
      for (size_t i = 0; i < e.size(); ++i)
        stride[i] = std::gcd(stride[i], e[i]);
  for (int& s : stride)
    if (s == 0) s = 1;
  auto compress = [&](const LaurentPoly& p) {
    LaurentPoly out;
    out.vars = p.vars;
    for (const auto& [e, c] : p.terms) {
      Expo ne = e;
      for (size_t i = 0; i < ne.size(); ++i) ne[i] /= stride[i];
      out.terms.emplace(std::move(ne), c);
    }
    return out;
  };
  LaurentPoly g = gcd_heu_rec(primitive_positive(compress(u)),
                              primitive_positive(compress(v)), 0);
  if (!g.is_zero()) {
    LaurentPoly ge;
    ge.vars = g.vars;
    for (const auto& [e, c] : g.terms) {
      Expo ne = e;
      for (size_t i = 0; i < ne.size(); ++i) ne[i] *= stride[i];
      ge.terms.emplace(std::move(ne), c);
    }
    g = primitive_positive(ge);
  }
  if (!g.is_zero()) return g.pruned();
  return gcd_poly_rec(u, v);
}

bool poly_try_divexact(const LaurentPoly& p, const LaurentPoly& g, LaurentPoly& quot) {
  if (p.is_zero()) {
    quot = p;
    return true;
  }
  if (g.is_zero()) return false;
  LaurentPoly a = p, d = g;
  align_vars(a, d);
  LaurentPoly q;
  q.vars = a.vars;
  // Inexact division never terminates over Laurent monomial orders: it
  // either inflates the running remainder or (as a formal series) keeps it
  // small while the quotient grows without bound.  Exact division satisfies
  // newton(a) = newton(q) + newton(d) (Minkowski), so the quotient's exponent
  // box is exactly the per-variable difference of the operands' boxes; any
  // quotient term outside it, a negative box, or more quotient terms than the
  // box holds proves inexactness cheaply.  A width cap on the remainder
  // handles the inflating mode.
  size_t n = a.vars.size();
  Expo alo(n), ahi(n), dlo(n), dhi(n);
  auto box = [n](const LaurentPoly& p, Expo& lo, Expo& hi) {
    bool first = true;
    for (const auto& [e, c] : p.terms) {
      for (size_t i = 0; i < n; ++i) {
        lo[i] = first ? e[i] : std::min(lo[i], e[i]);
        hi[i] = first ? e[i] : std::max(hi[i], e[i]);
      }
      first = false;
    }
  };
  box(a, alo, ahi);
  box(d, dlo, dhi);
  size_t qcap = 1;
  for (size_t i = 0; i < n; ++i) {
    long long span = (long long)ahi[i] - dhi[i] - alo[i] + dlo[i] + 1;
    if (span <= 0) return false;
    qcap = (size_t)std::min<long long>((long long)qcap * span, 1 << 22);
  }
  size_t width = p.terms.size() + 4 * g.terms.size() + 64;
  const auto& lead = *d.terms.rbegin();
  while (!a.is_zero()) {
    if (a.terms.size() > width || q.terms.size() > qcap) return false;
    const auto& la = *a.terms.rbegin();
    Expo e(la.first.size());
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] = la.first[i] - lead.first[i];
      if (e[i] < alo[i] - dlo[i] || e[i] > ahi[i] - dhi[i]) return false;
    }
    Rat c = la.second / lead.second;
    LaurentPoly m = LaurentPoly::monomial(a.vars, e, c);
    q.insert_term(e, c);
    a = a - m * d;
  }
  quot = std::move(q);
  return true;
}

}  // namespace rp
