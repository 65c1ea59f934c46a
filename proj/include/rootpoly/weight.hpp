#ifndef ROOTPOLY_WEIGHT_HPP
#define ROOTPOLY_WEIGHT_HPP

#include <string>
#include <vector>

namespace rp {

// Weight in doubled coordinates: the stored integer is twice the actual
// coordinate, so half-integral weights (rho of B_N, spin weights of D_N)
// stay on one integer lattice.
using Weight = std::vector<long long>;

// "2,1,0" or "3/2,1/2,1/2" -> doubled coordinates.
Weight weight_from_string(const std::string& text);
std::string weight_to_string(const Weight& w);

// Single doubled coordinate as "p" or "p/2".
std::string coord_to_string(long long doubled);

}  // namespace rp

#endif
