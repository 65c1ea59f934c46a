#ifndef ROOTPOLY_MACDONALD_HPP
#define ROOTPOLY_MACDONALD_HPP

#include <map>

#include "rootpoly/hessenberg.hpp"
#include "rootpoly/rootsystem.hpp"
#include "rootpoly/scalar.hpp"

namespace rp {

// Selector for the minuscule coweight driving the difference operator.
// A admits any fundamental index r in 1..N-1; B and C have a unique
// choice; D has the vector choice, the two spin choices, and the combined
// "sum" operator whose eigenvalue is the plus-product.
struct MinusculeChoice {
  enum Kind { FamilyDefault, AFundamental, DVector, DSpinMinus, DSpinPlus, DSum } kind =
      FamilyDefault;
  int r = 1;  // for AFundamental

  static MinusculeChoice family_default() { return {}; }
  static MinusculeChoice a_fundamental(int r) { return {AFundamental, r}; }
};

struct MacParams {
  Scalar q = Scalar::variable("q");
  Scalar t = Scalar::variable("t");
};

// rho in the coordinates of the published eigenvalue tables (the A family
// uses the partition-shifted representative (N-1, ..., 1, 0)).
Weight mac_rho(const RootSystemSpec& rs);

Scalar mac_eigenvalue(const RootSystemSpec& rs, const MinusculeChoice& choice,
                      const MacParams& p, const Weight& mu);

// Row of the operator matrix for row weight mu against leading weight
// eigenvalue eps_lam: scans the translated orbit rho + W(mu), keeping the
// regular points; returns column weight -> accumulated det * (eps_k - eps_lam).
std::map<Weight, Scalar> mac_matrix_row(const RootSystemSpec& rs,
                                        const MinusculeChoice& choice,
                                        const MacParams& p, const Weight& mu,
                                        const Scalar& eps_lam);

// Coefficients of m_lambda in the Weyl-character basis (signed counts).
std::map<Weight, long> inverse_kostka(const RootSystemSpec& rs, const Weight& lam);

TriangularData mac_triangular_data(const RootSystemSpec& rs, const MinusculeChoice& choice,
                                   const MacParams& p, const Weight& lam);

MonomialExpansion compute_macdonald(const RootSystemSpec& rs, const MinusculeChoice& choice,
                                    const MacParams& p, const Weight& lam);

// Same pipeline with the eigenvalue replaced by <mu+g rho, mu+g rho>;
// yields the equal-parameter differential-operator polynomials.
MonomialExpansion ho_via_macdonald(const RootSystemSpec& rs, const Scalar& g,
                                   const Weight& lam);

// Per-length parameters t_alpha = q^{g_alpha}, carried as the Laurent
// symbols qg, qgs, qgl (qg stands for q^g, and so on).
struct GeneralTParams {
  Scalar q = Scalar::variable("q");
  Scalar qg = Scalar::variable("qg");
  Scalar qgs = Scalar::variable("qgs");
  Scalar qgl = Scalar::variable("qgl");
};

TriangularData mac_general_t_triangular_data(const RootSystemSpec& rs,
                                             const GeneralTParams& p, const Weight& lam);

MonomialExpansion compute_macdonald_general_t(const RootSystemSpec& rs,
                                              const GeneralTParams& p, const Weight& lam);

}  // namespace rp

#endif
