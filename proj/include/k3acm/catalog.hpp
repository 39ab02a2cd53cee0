#pragma once

#include <vector>

#include "k3acm/lattice.hpp"

// Rank <= 2 lattices used throughout the tests and shipped under data/lattices.
// Basis vector 0 is H in every entry.
namespace k3acm::catalog {

/// Gram [[4]]: Picard number one.
inline PolarizedK3Lattice rank1() { return {"rank1", {{4}}, DivisorClass{1}}; }

/// H and a line L: L^2 = -2, H.L = 1.
inline PolarizedK3Lattice line() { return {"line", {{4, 1}, {1, -2}}, DivisorClass{1, 0}}; }

/// H and a conic Q: Q^2 = -2, H.Q = 2.
inline PolarizedK3Lattice conic() { return {"conic", {{4, 2}, {2, -2}}, DivisorClass{1, 0}}; }

/// H and a twisted cubic T: T^2 = -2, H.T = 3.
inline PolarizedK3Lattice cubic() { return {"cubic", {{4, 3}, {3, -2}}, DivisorClass{1, 0}}; }

/// H and a genus-3 sextic D6: D6^2 = 4, H.D6 = 6. Root-free and isotropic-free.
inline PolarizedK3Lattice gen6() { return {"gen6", {{4, 6}, {6, 4}}, DivisorClass{1, 0}}; }

/// H and an elliptic quartic E: E^2 = 0, H.E = 4.
inline PolarizedK3Lattice quartel() { return {"quartel", {{4, 4}, {4, 0}}, DivisorClass{1, 0}}; }

inline std::vector<PolarizedK3Lattice> all() { return {rank1(), line(), conic(), cubic(), gen6(), quartel()}; }

}  // namespace k3acm::catalog
