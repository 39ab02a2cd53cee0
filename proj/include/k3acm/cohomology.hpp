#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "k3acm/effective_cone.hpp"

namespace k3acm {

struct FixedComponent {
  DivisorClass root;
  Int multiplicity = 0;
  friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

/// D = nef_part + sum of multiplicity * root over fixed_part.
struct ZariskiDecomposition {
  DivisorClass nef_part;
  std::vector<FixedComponent> fixed_part;  // sorted by (degree, coords)

  DivisorClass fixed_sum() const {
    DivisorClass sum = DivisorClass::zero(nef_part.rank());
    for (const auto& c : fixed_part) sum += c.multiplicity * c.root;
    return sum;
  }

  friend bool operator==(const ZariskiDecomposition&, const ZariskiDecomposition&) = default;
};

enum class RootOrder { ascending, descending };

/// Peels off irreducible roots R with current.R < 0 until none is left. Each
/// such R lies in every member of the current linear system, so sections are
/// preserved; the degree drops at every step.
inline ZariskiDecomposition zariski_reduce(const EffectiveCone& cone, const DivisorClass& d,
                                           RootOrder order = RootOrder::ascending) {
  const auto& lat = cone.lattice();
  if (!cone.is_effective(d)) throw InputError("zariski_reduce needs an effective class, got " + d.to_string());
  DivisorClass current = d;
  std::map<DivisorClass, Int> fixed;
  while (true) {
    const Int deg = lat.degree(current);
    if (deg <= 0) break;
    const auto roots = cone.irreducible_roots(deg);
    const DivisorClass* hit = nullptr;
    auto test = [&](const DivisorClass& r) { return lat.intersect(current, r) < 0; };
    if (order == RootOrder::ascending) {
      auto it = std::find_if(roots.begin(), roots.end(), test);
      if (it != roots.end()) hit = &*it;
    } else {
      auto it = std::find_if(roots.rbegin(), roots.rend(), test);
      if (it != roots.rend()) hit = &*it;
    }
    if (!hit) break;
    fixed[*hit] += 1;
    current -= *hit;
  }
  ZariskiDecomposition z{current, {}};
  for (auto& [root, mult] : fixed) z.fixed_part.push_back(FixedComponent{root, mult});
  std::sort(z.fixed_part.begin(), z.fixed_part.end(), [&](const FixedComponent& a, const FixedComponent& b) {
    return ByDegreeThenCoords{&lat}(a.root, b.root);
  });
  return z;
}

struct CohomologySignature {
  Int h0 = 0;
  Int h1 = 0;
  Int h2 = 0;

  Int euler_char() const { return checked::add(checked::sub(h0, h1), h2); }
  friend bool operator==(const CohomologySignature&, const CohomologySignature&) = default;
};

/// h^0(O(D)) from the class alone.
///
/// After removing the fixed part the residual M is nef, and on a K3
/// (Saint-Donat): M = 0 has one section; M^2 > 0 is nef and big, so h^1 = 0
/// and h^0 = chi; M^2 = 0 is k times a primitive elliptic pencil E with
/// h^0 = k + 1.
inline Int h0(const EffectiveCone& cone, const DivisorClass& d) {
  if (!cone.is_effective(d)) return 0;
  const auto& lat = cone.lattice();
  const DivisorClass m = zariski_reduce(cone, d).nef_part;
  if (m.is_zero()) return 1;
  const Int sq = lat.square(m);
  if (sq > 0) return lat.euler_char(m);
  if (sq == 0) return checked::add(m.content(), 1);
  throw InternalError("nef part " + m.to_string() + " of " + d.to_string() + " has negative square");
}

/// (h^0, h^1, h^2) with h^2(D) = h^0(-D) (trivial canonical class) and h^1
/// read off from chi.
inline CohomologySignature cohomology(const EffectiveCone& cone, const DivisorClass& d) {
  CohomologySignature s;
  s.h0 = h0(cone, d);
  s.h2 = h0(cone, -d);
  s.h1 = checked::sub(checked::add(s.h0, s.h2), cone.lattice().euler_char(d));
  if (s.h1 < 0)
    throw InternalError("negative h^1 for class " + d.to_string() + ": (" + std::to_string(s.h0) + ", " +
                        std::to_string(s.h1) + ", " + std::to_string(s.h2) + ")");
  return s;
}

/// Certifies nefness of effective (or zero) classes only; any other class
/// returns false. Roots of degree above D.H cannot be components of D, so
/// they pair non-negatively with it.
inline bool is_nef(const EffectiveCone& cone, const DivisorClass& d) {
  if (d.is_zero()) return true;
  if (!cone.is_effective(d)) return false;
  const auto& lat = cone.lattice();
  if (lat.square(d) < 0) return false;
  for (const auto& r : cone.irreducible_roots(lat.degree(d)))
    if (lat.intersect(d, r) < 0) return false;
  return true;
}

inline void require_nonzero_effective(const EffectiveCone& cone, const DivisorClass& d, const char* op) {
  if (d.is_zero() || !cone.is_effective(d))
    throw InputError(std::string(op) + " needs a non-zero effective class, got " + d.to_string());
}

/// Nef with D^2 = 0 is a multiple of an elliptic pencil. Nef and big has a
/// base point iff some elliptic E has D.E = 1; any effective isotropic E with
/// D.E = 1 reflects down to such a nef one, so the search runs over all of them.
inline bool is_base_point_free(const EffectiveCone& cone, const DivisorClass& d) {
  require_nonzero_effective(cone, d, "is_base_point_free");
  const auto& lat = cone.lattice();
  if (!zariski_reduce(cone, d).fixed_part.empty()) return false;
  if (lat.square(d) == 0) return true;
  for (const auto& e : cone.isotropic_primitives(lat.degree(d)))
    if (lat.intersect(d, e) == 1) return false;
  return true;
}

/// Every splitting D = A + B into non-zero effective classes has A.B >= k.
inline bool is_k_connected(const EffectiveCone& cone, const DivisorClass& d, Int k) {
  require_nonzero_effective(cone, d, "is_k_connected");
  if (k < 0) throw InputError("is_k_connected needs k >= 0");
  const auto& lat = cone.lattice();
  const Int deg = lat.degree(d);
  for (const auto& a : cone.effective_classes(1, deg - 1)) {
    const DivisorClass b = d - a;
    if (cone.is_effective(b) && lat.intersect(a, b) < k) return false;
  }
  return true;
}

}  // namespace k3acm
