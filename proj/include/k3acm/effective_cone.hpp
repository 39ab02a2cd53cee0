#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "k3acm/lattice.hpp"

namespace k3acm {

/// A (-2)-class on the effective side (degree >= 1).
struct Root {
  DivisorClass divisor;
  Int degree = 0;
  bool irreducible = false;
  friend bool operator==(const Root&, const Root&) = default;
};

/// Orders classes by (degree, lexicographic coordinates).
struct ByDegreeThenCoords {
  const PolarizedK3Lattice* lattice;
  bool operator()(const DivisorClass& a, const DivisorClass& b) const {
    const Int da = lattice->degree(a);
    const Int db = lattice->degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Effectivity and root/isotropic enumeration over one polarized lattice.
///
/// Holds transparent caches (root table, effective-class table, effectivity
/// memo) behind a mutex; results never depend on cache state, so one
/// instance may be shared across threads.
class EffectiveCone {
 public:
  explicit EffectiveCone(PolarizedK3Lattice lattice) : lattice_(std::move(lattice)) {}

  EffectiveCone(const EffectiveCone&) = delete;
  EffectiveCone& operator=(const EffectiveCone&) = delete;

  const PolarizedK3Lattice& lattice() const noexcept { return lattice_; }

  /// h^0(D) > 0, with the zero class counted as effective.
  ///
  /// Positive degree and D^2 >= -2 gives chi >= 1 with h^2 = 0. For D^2 <= -4
  /// some component C has D.C < 0, which forces C to be a (-2)-curve; the
  /// recursion peels such curves off.
  bool is_effective(const DivisorClass& d) const {
    lattice_.require_rank(d);
    if (d.is_zero()) return true;
    const Int deg = lattice_.degree(d);
    if (deg <= 0) return false;
    if (lattice_.square(d) >= -2) return true;
    {
      std::lock_guard lock(mutex_);
      if (auto it = effective_memo_.find(d); it != effective_memo_.end()) return it->second;
    }
    bool result = false;
    const auto table = root_table(deg);
    for (const auto& r : table->irreducible) {
      if (lattice_.degree(r) > deg) break;
      if (lattice_.intersect(d, r) < 0 && is_effective(d - r)) {
        result = true;
        break;
      }
    }
    std::lock_guard lock(mutex_);
    effective_memo_.emplace(d, result);
    return result;
  }

  /// All (-2)-classes with 1 <= R.H <= max_degree, sorted by (degree, coords).
  std::vector<Root> roots_up_to_degree(Int max_degree) const {
    if (max_degree < 1) throw InputError("roots_up_to_degree needs a positive degree");
    const auto table = root_table(max_degree);
    std::vector<Root> out;
    for (const auto& r : table->roots) {
      if (r.degree > max_degree) break;
      out.push_back(r);
    }
    return out;
  }

  /// Irreducible (-2)-classes of degree <= max_degree, sorted by (degree, coords).
  std::vector<DivisorClass> irreducible_roots(Int max_degree) const {
    std::vector<DivisorClass> out;
    if (max_degree < 1) return out;
    const auto table = root_table(max_degree);
    for (const auto& r : table->irreducible) {
      if (lattice_.degree(r) > max_degree) break;
      out.push_back(r);
    }
    return out;
  }

  /// True iff D admits no splitting D = A + B into non-zero effective classes.
  bool is_irreducible_class(const DivisorClass& d) const {
    if (d.is_zero() || !is_effective(d))
      throw InputError("is_irreducible_class needs a non-zero effective class, got " + d.to_string());
    const Int deg = lattice_.degree(d);
    if (deg <= 1) return true;
    const auto table = effective_table(deg - 1);
    for (const auto& a : *table) {
      if (lattice_.degree(a) >= deg) break;
      if (is_effective(d - a)) return false;
    }
    return true;
  }

  /// Primitive classes E with E^2 = 0 and 1 <= E.H <= max_degree. All of them
  /// are effective by Riemann-Roch.
  std::vector<DivisorClass> isotropic_primitives(Int max_degree) const {
    if (max_degree < 1) throw InputError("isotropic_primitives needs a positive degree");
    std::vector<DivisorClass> out;
    for (auto& x : classes_in_ellipsoid(lattice_, checked::mul(max_degree, max_degree))) {
      const Int e = lattice_.degree(x);
      if (e >= 1 && e <= max_degree && lattice_.square(x) == 0 && x.content() == 1) out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end(), ByDegreeThenCoords{&lattice_});
    return out;
  }

  /// Non-zero effective classes with min_degree <= D.H <= max_degree, sorted
  /// by (degree, coords). Complete: every effective class of degree e lies in
  /// the box q(x) <= 5e^2.
  std::vector<DivisorClass> effective_classes(Int min_degree, Int max_degree) const {
    std::vector<DivisorClass> out;
    if (max_degree < 1) return out;
    const auto table = effective_table(max_degree);
    for (const auto& x : *table) {
      const Int e = lattice_.degree(x);
      if (e > max_degree) break;
      if (e >= min_degree) out.push_back(x);
    }
    return out;
  }

 private:
  struct RootTable {
    Int max_degree = 0;
    std::vector<Root> roots;
    std::vector<DivisorClass> irreducible;
  };

  struct EffectiveTable {
    Int max_degree = 0;
    std::shared_ptr<const std::vector<DivisorClass>> classes;
  };

  // A root R is reducible iff some irreducible root R' of smaller degree has
  // R.R' < 0: such R' is a fixed component of |R|, and conversely the
  // decomposition of a reducible root has a component meeting it negatively.
  std::shared_ptr<const RootTable> root_table(Int max_degree) const {
    std::lock_guard lock(mutex_);
    if (roots_ && roots_->max_degree >= max_degree) return roots_;
    const Int target = std::max<Int>({max_degree, roots_ ? 2 * roots_->max_degree : 0, 8});
    auto table = std::make_shared<RootTable>();
    table->max_degree = target;
    const Int bound = checked::add(checked::mul(target, target), 4);
    std::vector<DivisorClass> found;
    for (auto& x : classes_in_ellipsoid(lattice_, bound)) {
      const Int e = lattice_.degree(x);
      if (e >= 1 && e <= target && lattice_.square(x) == -2) found.push_back(std::move(x));
    }
    std::sort(found.begin(), found.end(), ByDegreeThenCoords{&lattice_});
    for (auto& r : found) {
      const Int e = lattice_.degree(r);
      bool irreducible = true;
      for (const auto& s : table->irreducible) {
        if (lattice_.degree(s) >= e) break;
        if (lattice_.intersect(r, s) < 0) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) table->irreducible.push_back(r);
      table->roots.push_back(Root{std::move(r), e, irreducible});
    }
    roots_ = table;
    return roots_;
  }

  std::shared_ptr<const std::vector<DivisorClass>> effective_table(Int max_degree) const {
    {
      std::lock_guard lock(mutex_);
      if (effective_.classes && effective_.max_degree >= max_degree) return effective_.classes;
    }
    std::vector<DivisorClass> found;
    for (auto& x : classes_in_ellipsoid(lattice_, effective_box_bound(max_degree))) {
      const Int e = lattice_.degree(x);
      if (e < 1 || e > max_degree) continue;
      if (lattice_.square(x) < checked::mul(-2, checked::mul(e, e))) continue;
      if (is_effective(x)) found.push_back(std::move(x));
    }
    std::sort(found.begin(), found.end(), ByDegreeThenCoords{&lattice_});
    auto shared = std::make_shared<const std::vector<DivisorClass>>(std::move(found));
    std::lock_guard lock(mutex_);
    if (!effective_.classes || effective_.max_degree < max_degree) effective_ = EffectiveTable{max_degree, shared};
    return shared;
  }

  PolarizedK3Lattice lattice_;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const RootTable> roots_;
  mutable EffectiveTable effective_;
  mutable std::unordered_map<DivisorClass, bool, DivisorClassHash> effective_memo_;
};

}  // namespace k3acm
