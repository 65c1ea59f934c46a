#ifndef ROOTPOLY_ROOTSYSTEM_HPP
#define ROOTPOLY_ROOTSYSTEM_HPP

#include <string>
#include <utility>
#include <vector>

#include "rootpoly/rational.hpp"
#include "rootpoly/weight.hpp"

namespace rp {

enum class Family { A, B, C, D, BC };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

struct RootSystemSpec {
  Family family;
  int rank;  // N: number of coordinates

  bool operator==(const RootSystemSpec&) const = default;
};

// Roots live in unit (not doubled) coordinates.
using Root = std::vector<int>;

// Positive roots, in a fixed deterministic order.
std::vector<Root> positive_roots(const RootSystemSpec& rs);

// Squared length of a root.
int root_norm2(const Root& a);

// 2*<w, a>: exact integer since w is doubled.
long long dot2(const Weight& w, const Root& a);

// <w, a_check> = 2<w,a>/<a,a>, exact rational.
Rat coroot_pairing(const Weight& w, const Root& a);

// rho = half-sum of positive roots, doubled coordinates.
Weight rho(const RootSystemSpec& rs);

// Weyl group element: coordinate permutation then sign flips.
// maps e_i -> signs[perm[i]] * e_{perm[i]}.
struct WeylElement {
  std::vector<int> perm;   // image positions
  std::vector<int> signs;  // +-1, applied after permuting
  int det;                 // determinant of the matrix
};

// Full Weyl group (cached per spec).  A: S_N; B/C/BC: signed perms;
// D: signed perms with an even number of flips.
const std::vector<WeylElement>& weyl_elements(const RootSystemSpec& rs);

Weight apply_weyl(const WeylElement& w, const Weight& v);
Root apply_weyl_root(const WeylElement& w, const Root& a);

bool is_dominant(const RootSystemSpec& rs, const Weight& w);

// Partial order: mu <= lam iff lam - mu is a nonnegative integer
// combination of positive roots.  Requires equal rank.
bool dominance_leq(const RootSystemSpec& rs, const Weight& mu, const Weight& lam);

// All dominant mu <= lam, sorted by descending height of lam - mu
// (so lam itself comes last), ties broken colexicographically.
std::vector<Weight> dominant_interval(const RootSystemSpec& rs, const Weight& lam);

// 2 * height(v) where v = sum over simple roots; v given doubled.
long long height2(const RootSystemSpec& rs, const Weight& v_doubled);

struct Dominantized {
  Weight weight;        // dominant representative
  int sign;             // det of a group element carrying w to the input
  bool stabilized;      // true if the input has a nontrivial stabilizer
};

Dominantized dominantize(const RootSystemSpec& rs, const Weight& w);

// Orbit of w under the full Weyl group (distinct points).
std::vector<Weight> weyl_orbit(const RootSystemSpec& rs, const Weight& w);

// |W|, |W_w| (stabilizer), |W w| (orbit) by closed formula.
Rat weyl_group_order(const RootSystemSpec& rs);
Rat stabilizer_order(const RootSystemSpec& rs, const Weight& w);
Rat orbit_size(const RootSystemSpec& rs, const Weight& w);

// Multiset helpers on doubled coordinates (used by the explicit
// Heckman-Opdam matrix-element tables).

// Multiset difference mu+ \ nu+ : removes common values with multiplicity.
std::vector<long long> multiset_diff(const Weight& a, const Weight& b);

// (mu+ \ nu+, (nu+ \ mu+)^eps) with eps = sign(mu_N)sign(nu_N), sign(0)=+1;
// eps multiplies the last (smallest) element of the second multiset.
std::pair<std::vector<long long>, std::vector<long long>> skew_parts(const Weight& mu,
                                                                     const Weight& nu);

// eta_nu(n) = #{ j : |nu_j| = |n| }.
int eta(const Weight& nu, long long n_doubled);

// bar(mu): flip sign of the last coordinate.
Weight bar_last(const Weight& mu);

long long weight_sum(const Weight& w);  // doubled sum

}  // namespace rp

#endif
