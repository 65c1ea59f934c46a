#ifndef ROOTPOLY_ORACLES_HPP
#define ROOTPOLY_ORACLES_HPP

#include <map>
#include <set>
#include <vector>

#include "rootpoly/heckman_opdam.hpp"
#include "rootpoly/hessenberg.hpp"
#include "rootpoly/macdonald.hpp"
#include "rootpoly/rootsystem.hpp"
#include "rootpoly/scalar.hpp"

namespace rp {

// Group-algebra element: finite Scalar-linear combination of formal
// exponentials e^w (weights in doubled coordinates, not necessarily
// dominant).  No zero coefficients are stored.
struct LatticeElement {
  std::map<Weight, Scalar> terms;

  void add(const Weight& w, const Scalar& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const LatticeElement& o) const;
};

LatticeElement lattice_mul(const LatticeElement& a, const LatticeElement& b);
LatticeElement lattice_scale(const LatticeElement& a, const Scalar& c);
LatticeElement lattice_sub(const LatticeElement& a, const LatticeElement& b);
// conjugation on the torus = weight negation
LatticeElement lattice_conj(const LatticeElement& a);

// m_lambda as a lattice element (sum over the orbit, coefficient 1), and
// the embedding of a monomial expansion.
LatticeElement monomial_lattice(const RootSystemSpec& rs, const Weight& lam);
LatticeElement expansion_lattice(const RootSystemSpec& rs, const MonomialExpansion& p);

// Integer multiplicities for the weight-function expansions; entries for
// orbits absent from the family are ignored.
struct IntegerMultiplicities {
  long g = 1;
  long g_s = 1;
  long g_l = 1;
};

enum class WeightFunctionKind { HO, M };

// HO: prod_{alpha in R} (1 - e^alpha)^{g_alpha};
// M with t_alpha = q^{g_alpha}: prod_{alpha in R} prod_{m=0}^{g_alpha-1}
// (1 - q^m e^alpha).  Requires g_alpha >= 0.
LatticeElement weight_function_expand(const RootSystemSpec& rs, WeightFunctionKind kind,
                                      const IntegerMultiplicities& mult,
                                      const Scalar& q = Scalar::variable("q"));

// Constant Fourier coefficient of f * conj(h) * delta.  Normalized so
// that <1, 1> = 1 when delta = 1.
Scalar constant_term_inner_product(const LatticeElement& f, const LatticeElement& h,
                                   const LatticeElement& delta);

// Throws NotInvariant unless f is W-invariant; returns the decomposition
// into monomials (dominant weight -> coefficient).
std::map<Weight, Scalar> monomial_decompose(const RootSystemSpec& rs,
                                            const LatticeElement& f);

// Second-order differential operator sum_j d_j^2 +
// sum_{alpha>0} g_alpha (1+e^-alpha)/(1-e^-alpha) d_alpha applied to a
// W-invariant element, via the alpha-string action on each monomial.
LatticeElement apply_hypergeometric_operator(const RootSystemSpec& rs, const HOParams& p,
                                             const LatticeElement& f);

// q-difference operator attached to a minuscule coweight, applied via the
// character expansion of its action on monomials and exact division by
// the Weyl denominator.
LatticeElement apply_macdonald_operator(const RootSystemSpec& rs,
                                        const MinusculeChoice& choice, const MacParams& p,
                                        const LatticeElement& f);

// Same operator with independent parameters per root length (qg = q^g,
// etc.), expanded directly from the product form of its coefficients.
LatticeElement apply_macdonald_operator_general(const RootSystemSpec& rs,
                                                const GeneralTParams& p,
                                                const LatticeElement& f);

// chi_lambda in the monomial basis via exact alternant division; the
// coefficients are the weight multiplicities (Kostka numbers).
MonomialExpansion weyl_character(const RootSystemSpec& rs, const Weight& lam);

struct OrbitStabilizer {
  std::set<Weight> orbit;
  long stabilizer_order;
};

// Exhaustive scan over the full Weyl group; rank <= 5.
OrbitStabilizer orbit_stabilizer_bruteforce(const RootSystemSpec& rs, const Weight& lam);

}  // namespace rp

#endif
