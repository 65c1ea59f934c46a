#ifndef ROOTPOLY_HESSENBERG_HPP
#define ROOTPOLY_HESSENBERG_HPP

#include <map>
#include <vector>

#include "rootpoly/scalar.hpp"
#include "rootpoly/weight.hpp"

namespace rp {

// Input for the determinantal engine: an ordered interval of weights ending
// at the leading weight, eigenvalues on the interval, and the sparse
// strictly-lower-triangular matrix elements d[{j,k}] with j > k (indices
// into the interval).  The engine never looks at root-system structure.
struct TriangularData {
  std::vector<Weight> interval;            // interval.back() is the target
  std::vector<Scalar> eps;                 // eps[j] belongs to interval[j]
  std::map<std::pair<int, int>, Scalar> d; // (j,k), j > k, nonzero entries
};

struct MonomialExpansion {
  Weight leading;
  std::map<Weight, Scalar> coeffs;  // coeffs[leading] == 1
};

// Back-substitution: c_n = 1, then
// c_{l-1} = (eps_n - eps_{l-1})^{-1} sum_{k=l..n} c_k d_{k,l-1}.
MonomialExpansion solve_recurrence(const TriangularData& td);

// Sum over strictly increasing index chains of products of d over products
// of eigenvalue differences; the empty chain gives the monic leading 1.
MonomialExpansion solve_closed_form(const TriangularData& td);

// First-column cofactor expansion of the Hessenberg matrix, divided by the
// normalization prod_j (eps_n - eps_j).  Exponential in n; tests only.
MonomialExpansion expand_determinant(const TriangularData& td);

// The normalization factors eps_n - eps_j, j < n, in interval order.
std::vector<Scalar> normalization_factors(const TriangularData& td);

}  // namespace rp

#endif
