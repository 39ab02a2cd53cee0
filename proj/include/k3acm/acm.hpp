#pragma once

#include <optional>
#include <string>

#include "k3acm/cohomology.hpp"

namespace k3acm {

enum class CaseTag { CaseA, CaseB, CaseC, CaseD, None };

enum class NoneReason { not_effective, zero_class, numeric_mismatch, emptiness_violated };

inline const char* to_string(NoneReason r) {
  switch (r) {
    case NoneReason::not_effective: return "not-effective";
    case NoneReason::zero_class: return "zero-class";
    case NoneReason::numeric_mismatch: return "numeric-mismatch";
    case NoneReason::emptiness_violated: return "emptiness-violated";
  }
  return "?";
}

/// Outcome of the numeric classification of an initialized ACM line bundle.
struct TheoremCase {
  CaseTag tag = CaseTag::None;
  std::optional<NoneReason> reason;

  static TheoremCase matched(CaseTag t) { return TheoremCase{t, std::nullopt}; }
  static TheoremCase none(NoneReason r) { return TheoremCase{CaseTag::None, r}; }

  bool is_match() const noexcept { return tag != CaseTag::None; }

  std::string to_string() const {
    switch (tag) {
      case CaseTag::CaseA: return "CaseA";
      case CaseTag::CaseB: return "CaseB";
      case CaseTag::CaseC: return "CaseC";
      case CaseTag::CaseD: return "CaseD";
      case CaseTag::None: break;
    }
    return std::string("None(") + (reason ? k3acm::to_string(*reason) : "?") + ")";
  }

  friend bool operator==(const TheoremCase&, const TheoremCase&) = default;
};

/// h^0(D) > 0 and h^0(D - H) = 0.
inline bool is_initialized(const EffectiveCone& cone, const DivisorClass& d) {
  const auto& lat = cone.lattice();
  return h0(cone, d) > 0 && h0(cone, d - lat.polarization()) == 0;
}

/// Matches (D^2, D.H) of a non-zero effective class against the four
/// numeric patterns:
///   A: D^2 = -2, 1 <= D.H <= 3     B: D^2 = 0, 3 <= D.H <= 4
///   C: D^2 = 2,  D.H = 5           D: D^2 = 4, D.H = 6, D-H and 2H-D not effective
inline TheoremCase classify_numeric(const EffectiveCone& cone, const DivisorClass& d) {
  const auto& lat = cone.lattice();
  if (d.is_zero()) return TheoremCase::none(NoneReason::zero_class);
  if (!cone.is_effective(d)) return TheoremCase::none(NoneReason::not_effective);
  const Int sq = lat.square(d);
  const Int deg = lat.degree(d);
  const DivisorClass& h = lat.polarization();
  if (sq == -2 && deg >= 1 && deg <= 3) return TheoremCase::matched(CaseTag::CaseA);
  if (sq == 0 && deg >= 3 && deg <= 4) return TheoremCase::matched(CaseTag::CaseB);
  if (sq == 2 && deg == 5) return TheoremCase::matched(CaseTag::CaseC);
  if (sq == 4 && deg == 6) {
    if (cone.is_effective(d - h) || cone.is_effective(2 * h - d)) return TheoremCase::none(NoneReason::emptiness_violated);
    return TheoremCase::matched(CaseTag::CaseD);
  }
  return TheoremCase::none(NoneReason::numeric_mismatch);
}

/// Outside the open interval (l_minus, l_plus) every twist D + lH is, up to
/// sign, nef and big, so its h^1 vanishes.
struct TwistWindow {
  Int l_minus = 0;
  Int l_plus = 0;
  friend bool operator==(const TwistWindow&, const TwistWindow&) = default;
};

inline constexpr Int kDefaultTwistCap = 64;

inline bool is_nef_and_big(const EffectiveCone& cone, const DivisorClass& d) {
  return !d.is_zero() && cone.is_effective(d) && cone.lattice().square(d) > 0 && is_nef(cone, d);
}

/// The starting points are only a guess; termination and correctness come
/// from the nef-and-big stopping rule.
inline TwistWindow twist_window(const EffectiveCone& cone, const DivisorClass& d, Int safety_cap = kDefaultTwistCap) {
  const auto& lat = cone.lattice();
  const DivisorClass& h = lat.polarization();
  const Int deg = lat.degree(d);
  TwistWindow w;

  Int l = ceil_div(2 - deg, 4);
  while (!is_nef_and_big(cone, d + l * h)) {
    if (++l > safety_cap)
      throw InternalError("twist window: no nef and big twist of " + d.to_string() + " with l <= " +
                          std::to_string(safety_cap) + " on lattice '" + lat.name() + "'");
  }
  w.l_plus = l;

  l = floor_div(-2 - deg, 4);
  while (!is_nef_and_big(cone, -(d + l * h))) {
    if (--l < -safety_cap)
      throw InternalError("twist window: no anti-nef and big twist of " + d.to_string() + " with l >= " +
                          std::to_string(-safety_cap) + " on lattice '" + lat.name() + "'");
  }
  w.l_minus = l;
  return w;
}

/// h^1(D + lH) = 0 for every integer l, decided by scanning the finite twist
/// window. Never looks at the numeric classification.
inline bool is_acm_oracle(const EffectiveCone& cone, const DivisorClass& d, Int safety_cap = kDefaultTwistCap) {
  const auto& h = cone.lattice().polarization();
  const TwistWindow w = twist_window(cone, d, safety_cap);
  for (Int l = w.l_minus + 1; l < w.l_plus; ++l)
    if (cohomology(cone, d + l * h).h1 != 0) return false;
  return true;
}

enum class Lemma22Branch { small_degree, medium_degree };

/// Which sufficient vanishing condition certifies O(D) as ACM:
///   small_degree:  h^1(D) = h^1(H - D) = 0 and D.H <= 3
///   medium_degree: h^1(D) = h^1(H - D) = h^1(2H - D) = 0 and D.H <= 7
inline std::optional<Lemma22Branch> lemma22_branch(const EffectiveCone& cone, const DivisorClass& d) {
  if (!cone.is_effective(d)) throw InputError("lemma22_sufficient needs an effective class, got " + d.to_string());
  const auto& lat = cone.lattice();
  const auto& h = lat.polarization();
  const Int deg = lat.degree(d);
  if (deg > 7 || cohomology(cone, d).h1 != 0 || cohomology(cone, h - d).h1 != 0) return std::nullopt;
  if (deg <= 3) return Lemma22Branch::small_degree;
  if (cohomology(cone, 2 * h - d).h1 == 0) return Lemma22Branch::medium_degree;
  return std::nullopt;
}

inline bool lemma22_sufficient(const EffectiveCone& cone, const DivisorClass& d) {
  return lemma22_branch(cone, d).has_value();
}

}  // namespace k3acm
