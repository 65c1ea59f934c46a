#include "rootpoly/oracles.hpp"

#include <utility>

#include "rootpoly/errors.hpp"

namespace rp {

void LatticeElement::add(const Weight& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

bool LatticeElement::operator==(const LatticeElement& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (const auto& [w, c] : terms) {
    auto it = o.terms.find(w);
    if (it == o.terms.end() || it->second != c) return false;
  }
  return true;
}

LatticeElement lattice_mul(const LatticeElement& a, const LatticeElement& b) {
  LatticeElement out;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      Weight w(wa.size());
      for (size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
      out.add(w, ca * cb);
    }
  return out;
}

LatticeElement lattice_scale(const LatticeElement& a, const Scalar& c) {
  LatticeElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, ca] : a.terms) out.add(w, ca * c);
  return out;
}

LatticeElement lattice_sub(const LatticeElement& a, const LatticeElement& b) {
  LatticeElement out = a;
  for (const auto& [w, c] : b.terms) out.add(w, -c);
  return out;
}

LatticeElement lattice_conj(const LatticeElement& a) {
  LatticeElement out;
  for (const auto& [w, c] : a.terms) {
    Weight neg(w.size());
    for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    out.add(neg, c);
  }
  return out;
}

LatticeElement monomial_lattice(const RootSystemSpec& rs, const Weight& lam) {
  LatticeElement out;
  for (const Weight& w : weyl_orbit(rs, lam)) out.add(w, Scalar(1));
  return out;
}

LatticeElement expansion_lattice(const RootSystemSpec& rs, const MonomialExpansion& p) {
  LatticeElement out;
  for (const auto& [w, c] : p.coeffs)
    for (const Weight& v : weyl_orbit(rs, w)) out.add(v, c);
  return out;
}

namespace {

// q^h where h counts half-units (2 half-units = first power)
Scalar qpow(const Scalar& base, long long h) {
  if (h % 2 == 0) return scalar_pow(base, h / 2);
  return scalar_pow(base.sqrt(), h);
}

long long dotw(const Weight& a, const Weight& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Weight wsum(const Weight& a, const Weight& b) {
  Weight out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Weight wneg(const Weight& a) {
  Weight out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

// Clears fraction-valued coefficients: returns {D, D*f} with polynomial
// coefficients, D the lcm of the denominators.  The recurrence denominators
// are nested products of eigenvalue gaps, so the lcm stays close to the
// largest of them while a plain product would square the operand sizes in
// the accumulation loops of the operator applications.
std::pair<Scalar, LatticeElement> clear_denominators(const LatticeElement& f) {
  std::map<std::string, LaurentPoly> dens;
  for (const auto& [w, c] : f.terms)
    if (!c.is_rational() && !c.ratfunc().den.is_constant())
      dens.emplace(c.ratfunc().den.to_string(), c.ratfunc().den);
  LaurentPoly d = LaurentPoly::constant(Rat(1));
  for (const auto& [k, v] : dens) {
    // the denominators mostly divide one another, so probe divisibility
    // both ways before paying for a general gcd
    LaurentPoly q;
    if (poly_try_divexact(v, d, q)) {
      d = v;
    } else if (!poly_try_divexact(d, v, q)) {
      d = poly_divexact(d * v, poly_gcd(d, v));
    }
  }
  LatticeElement out;
  for (const auto& [w, c] : f.terms) {
    if (c.is_rational() || c.ratfunc().den.is_constant()) {
      out.add(w, c * Scalar(d));
    } else {
      out.add(w, Scalar(c.ratfunc().num * poly_divexact(d, c.ratfunc().den)));
    }
  }
  return {Scalar(d), out};
}

LatticeElement alternant(const RootSystemSpec& rs, const Weight& v) {
  LatticeElement out;
  for (const WeylElement& w : weyl_elements(rs))
    out.add(apply_weyl(w, v), Scalar(static_cast<long>(w.det)));
  return out;
}

// Exact division by the denominator alternant sum_w det(w) e^{w(rho)};
// the lex-greatest numerator term is always divisible by e^rho.
LatticeElement divide_by_denominator(const RootSystemSpec& rs, LatticeElement num) {
  LatticeElement delta = alternant(rs, rho(rs));
  Weight r = rho(rs);
  LatticeElement quot;
  size_t guard = num.terms.size() * delta.terms.size() * 64 + 1024;
  while (!num.terms.empty()) {
    if (guard-- == 0) throw Error("denominator division does not terminate");
    auto lead = *num.terms.rbegin();  // lex-greatest
    Weight shift(lead.first.size());
    for (size_t i = 0; i < shift.size(); ++i) shift[i] = lead.first[i] - r[i];
    quot.add(shift, lead.second);
    for (const auto& [w, c] : delta.terms) num.add(wsum(w, shift), -(c * lead.second));
  }
  return quot;
}

long rat_to_long(const Rat& r, const char* what) {
  if (r.get_den() != 1) throw Error(std::string("expected an integer in ") + what);
  if (!r.get_num().fits_slong_p()) throw Error(std::string("overflow in ") + what);
  return r.get_num().get_si();
}

Weight minuscule_pi_for(const RootSystemSpec& rs, const MinusculeChoice& choice) {
  Weight pi(rs.rank, 0);
  switch (rs.family) {
    case Family::A: {
      int r = (choice.kind == MinusculeChoice::AFundamental) ? choice.r : 1;
      if (r < 1 || r >= rs.rank) throw Error("fundamental index out of range");
      for (int i = 0; i < r; ++i) pi[i] = 2;
      return pi;
    }
    case Family::B:
      pi[0] = 2;
      return pi;
    case Family::C:
      for (int i = 0; i < rs.rank; ++i) pi[i] = 1;
      return pi;
    case Family::D:
      switch (choice.kind) {
        case MinusculeChoice::FamilyDefault:
        case MinusculeChoice::DVector: pi[0] = 2; return pi;
        case MinusculeChoice::DSpinPlus:
          for (int i = 0; i < rs.rank; ++i) pi[i] = 1;
          return pi;
        case MinusculeChoice::DSpinMinus:
          for (int i = 0; i < rs.rank; ++i) pi[i] = 1;
          pi[rs.rank - 1] = -1;
          return pi;
        default:
          throw Error("the combined operator has no single minuscule coweight");
      }
    case Family::BC: throw Error("the doubled family admits no minuscule coweight");
  }
  throw Error("unreachable");
}

}  // namespace

LatticeElement weight_function_expand(const RootSystemSpec& rs, WeightFunctionKind kind,
                                      const IntegerMultiplicities& mult, const Scalar& q) {
  LatticeElement out;
  out.add(Weight(rs.rank, 0), Scalar(1));
  for (const Root& a : positive_roots(rs)) {
    long g;
    switch (root_norm2(a)) {
      case 1: g = mult.g_s; break;
      case 4: g = mult.g_l; break;
      default: g = mult.g; break;
    }
    if (g < 0) throw NonIntegerParams("negative multiplicity");
    Weight ad(rs.rank);
    for (int i = 0; i < rs.rank; ++i) ad[i] = 2 * a[i];
    for (int sgn : {+1, -1}) {
      Weight root = (sgn > 0) ? ad : wneg(ad);
      for (long m = 0; m < g; ++m) {
        LatticeElement factor;
        factor.add(Weight(rs.rank, 0), Scalar(1));
        Scalar coef = (kind == WeightFunctionKind::HO) ? Scalar(-1)
                                                       : -scalar_pow(q, m);
        factor.add(root, coef);
        out = lattice_mul(out, factor);
      }
    }
  }
  return out;
}

Scalar constant_term_inner_product(const LatticeElement& f, const LatticeElement& h,
                                   const LatticeElement& delta) {
  // constant coefficient of f * conj(h) * delta: only delta[b - a] survives
  Scalar acc(0);
  for (const auto& [a, ca] : f.terms)
    for (const auto& [b, cb] : h.terms) {
      Weight w(a.size());
      for (size_t i = 0; i < a.size(); ++i) w[i] = b[i] - a[i];
      auto it = delta.terms.find(w);
      if (it != delta.terms.end()) acc += ca * cb * it->second;
    }
  return acc;
}

std::map<Weight, Scalar> monomial_decompose(const RootSystemSpec& rs,
                                            const LatticeElement& f) {
  std::map<Weight, Scalar> out;
  LatticeElement rest = f;
  while (!rest.terms.empty()) {
    auto lead = *rest.terms.rbegin();
    Dominantized dom = dominantize(rs, lead.first);
    if (dom.weight != lead.first)
      throw NotInvariant("lex-greatest remaining weight is not dominant");
    out.emplace(dom.weight, lead.second);
    for (const Weight& w : weyl_orbit(rs, dom.weight)) rest.add(w, -lead.second);
  }
  for (const auto& [w, c] : out)
    if (!is_dominant(rs, w)) throw NotInvariant("non-dominant residue");
  return out;
}

LatticeElement apply_hypergeometric_operator(const RootSystemSpec& rs, const HOParams& p,
                                             const LatticeElement& f) {
  auto [den, fc] = clear_denominators(f);
  auto parts = monomial_decompose(rs, fc);
  auto roots = positive_roots(rs);
  Rat order = weyl_group_order(rs);
  LatticeElement out;
  for (const auto& [lam, c] : parts) {
    // <lam,lam> + sum_a g_a <lam,a>
    Scalar eps = Scalar(Rat(static_cast<long>(dotw(lam, lam))) / 4);
    for (const Root& a : roots)
      eps += ho_param_for_root(rs, p, a) * Scalar(Rat(static_cast<long>(dot2(lam, a))) / 2);
    for (const Weight& w : weyl_orbit(rs, lam)) out.add(w, c * eps);
    Rat stab_lam = stabilizer_order(rs, lam);
    for (const Root& a : roots) {
      long k = rat_to_long(coroot_pairing(lam, a), "coroot pairing");
      Scalar base = ho_param_for_root(rs, p, a) * Scalar(Rat(static_cast<long>(dot2(lam, a))) / 2) * c;
      for (long ell = 1; 2 * ell <= k; ++ell) {
        Weight mu(lam.size());
        for (size_t i = 0; i < mu.size(); ++i)
          mu[i] = lam[i] - 2 * ell * a[i];  // doubled
        long refl = (2 * ell == k) ? 1 : 2;
        Scalar coef = base * Scalar(stabilizer_order(rs, mu) * refl / stab_lam);
        Weight dom = dominantize(rs, mu).weight;
        for (const Weight& w : weyl_orbit(rs, dom)) out.add(w, coef);
      }
    }
  }
  return lattice_scale(out, Scalar(1) / den);
}

LatticeElement apply_macdonald_operator(const RootSystemSpec& rs,
                                        const MinusculeChoice& choice, const MacParams& p,
                                        const LatticeElement& f) {
  auto [den, fc] = clear_denominators(f);
  auto parts = monomial_decompose(rs, fc);
  Weight pi = minuscule_pi_for(rs, choice);
  Weight r = rho(rs);
  auto pi_orbit = weyl_orbit(rs, pi);
  Scalar pref = qpow(p.t, dotw(pi, r) / 2);
  LatticeElement num;
  for (const WeylElement& w : weyl_elements(rs)) {
    Weight wr = apply_weyl(w, r);
    for (const Weight& tau : pi_orbit) {
      Scalar tfac = qpow(p.t, dotw(tau, wr) / 2) * Scalar(static_cast<long>(w.det));
      for (const auto& [lam, c] : parts)
        for (const Weight& nu : weyl_orbit(rs, lam))
          num.add(wsum(nu, wr), c * tfac * qpow(p.q, dotw(tau, nu) / 2));
    }
  }
  return lattice_scale(divide_by_denominator(rs, std::move(num)), pref / den);
}

LatticeElement apply_macdonald_operator_general(const RootSystemSpec& rs,
                                                const GeneralTParams& p,
                                                const LatticeElement& f) {
  auto [den, fc] = clear_denominators(f);
  monomial_decompose(rs, fc);  // invariance check
  Weight pi = minuscule_pi_for(rs, MinusculeChoice::family_default());
  Weight r = rho(rs);
  auto roots = positive_roots(rs);
  int sign_all = (roots.size() % 2) ? -1 : 1;  // (-1)^{#positive roots}
  LatticeElement num;
  for (const WeylElement& w : weyl_elements(rs)) {
    // prod_{a>0} (1 - t_a^{<pi,a>} e^{w(a)}), with 1/(1-e^{w(a)})
    // rewritten through the denominator formula as +-e^{-w(rho)}/delta
    LatticeElement nw;
    nw.add(Weight(rs.rank, 0), Scalar(1));
    for (const Root& a : roots) {
      Weight ad(rs.rank);
      for (int i = 0; i < rs.rank; ++i) ad[i] = 2 * a[i];
      long long pairing = dotw(pi, ad) / 4;  // <pi, a> in {0, 1}
      Scalar ta(1);
      if (pairing == 1) {
        switch (root_norm2(a)) {
          case 1: ta = p.qgs; break;
          case 4: ta = p.qgl; break;
          default: ta = p.qg; break;
        }
      }
      LatticeElement factor;
      factor.add(Weight(rs.rank, 0), Scalar(1));
      factor.add(apply_weyl(w, ad), -ta);
      nw = lattice_mul(nw, factor);
    }
    Weight wpi = apply_weyl(w, pi);
    Weight shift = wneg(apply_weyl(w, r));
    Scalar sgn(static_cast<long>(sign_all * w.det));
    for (const auto& [v, cv] : fc.terms) {
      Scalar translated = cv * qpow(p.q, dotw(v, wpi) / 2) * sgn;
      for (const auto& [u, cu] : nw.terms) num.add(wsum(wsum(u, v), shift), cu * translated);
    }
  }
  LatticeElement quot = divide_by_denominator(rs, std::move(num));
  return lattice_scale(quot, Scalar(1) / (den * Scalar(stabilizer_order(rs, pi))));
}

MonomialExpansion weyl_character(const RootSystemSpec& rs, const Weight& lam) {
  if (!is_dominant(rs, lam)) throw Error("character of a non-dominant weight");
  LatticeElement quot = divide_by_denominator(rs, alternant(rs, wsum(lam, rho(rs))));
  MonomialExpansion out;
  out.leading = lam;
  for (const auto& [w, c] : quot.terms)
    if (is_dominant(rs, w)) out.coeffs[w] = c;
  return out;
}

OrbitStabilizer orbit_stabilizer_bruteforce(const RootSystemSpec& rs, const Weight& lam) {
  if (rs.rank > 5) throw RankGuardExceeded("brute-force group scan limited to rank 5");
  OrbitStabilizer out;
  out.stabilizer_order = 0;
  for (const WeylElement& w : weyl_elements(rs)) {
    Weight img = apply_weyl(w, lam);
    if (img == lam) ++out.stabilizer_order;
    out.orbit.insert(std::move(img));
  }
  return out;
}

}  // namespace rp
