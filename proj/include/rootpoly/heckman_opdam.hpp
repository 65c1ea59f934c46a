#ifndef ROOTPOLY_HECKMAN_OPDAM_HPP
#define ROOTPOLY_HECKMAN_OPDAM_HPP

#include <map>
#include <string>
#include <vector>

#include "rootpoly/hessenberg.hpp"
#include "rootpoly/rootsystem.hpp"
#include "rootpoly/scalar.hpp"

namespace rp {

// Root multiplicity parameters of the hypergeometric operator.  Slots are
// per root length: g for the generic slot, g_s for short roots (B, BC),
// g_l for the doubled roots of BC.  Unused slots are ignored.
struct HOParams {
  Scalar g = Scalar::variable("g");
  Scalar g_s = Scalar::variable("g_s");
  Scalar g_l = Scalar::variable("g_l");
};

// Parameter attached to one root by squared length.
Scalar ho_param_for_root(const RootSystemSpec& rs, const HOParams& p, const Root& a);

// Eigenvalue <mu + rho_g, mu + rho_g> - <rho_g, rho_g> in per-family
// closed form.
Scalar ho_eigenvalue(const RootSystemSpec& rs, const HOParams& p, const Weight& mu);

// Matrix element d_{mu,nu} from the explicit per-family tables.
Scalar ho_matrix_element(const RootSystemSpec& rs, const HOParams& p, const Weight& mu,
                         const Weight& nu);

// Root data for the generic path: explicit positive roots with a parameter
// symbol per squared length.
struct GenericRootData {
  std::vector<std::vector<Rat>> positive_roots;
  std::map<Rat, Scalar> g_by_norm2;  // squared length -> parameter
};

// (|W_nu|/|W_mu|) sum over roots alpha and string steps l with
// mu - l*alpha in the orbit of nu of g_alpha <mu,alpha> n_{mu,nu}(alpha).
// The Weyl group is generated by the reflections of the supplied roots.
Scalar ho_matrix_element_generic(const GenericRootData& rd, const Weight& mu,
                                 const Weight& nu);

// Convenience: generic path on a built-in family.
GenericRootData generic_root_data(const RootSystemSpec& rs, const HOParams& p);

GenericRootData load_root_data_json(const std::string& path);

// Assembled triangular data (exposed for inspection and tests).
TriangularData ho_triangular_data(const RootSystemSpec& rs, const HOParams& p,
                                  const Weight& lam, bool prune_cn = false);

MonomialExpansion compute_ho(const RootSystemSpec& rs, const HOParams& p,
                             const Weight& lam, bool prune_cn = false);

}  // namespace rp

#endif
