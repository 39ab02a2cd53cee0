#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "k3acm/divisor_class.hpp"
#include "k3acm/integer.hpp"

namespace k3acm {

using IntMatrix = std::vector<std::vector<Int>>;

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t i = k + 1;
      while (i < n && a[i][k] == 0) ++i;
      if (i == n) return 0;
      std::swap(a[i], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = checked::sub(checked::mul(a[i][j], a[k][k]), checked::mul(a[i][k], a[k][j])) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Principal minor with row and column i removed.
inline IntMatrix principal_minor(const IntMatrix& a, std::size_t i) {
  IntMatrix m;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r == i) continue;
    std::vector<Int> row;
    for (std::size_t c = 0; c < a.size(); ++c)
      if (c != i) row.push_back(a[r][c]);
    m.push_back(std::move(row));
  }
  return m;
}

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Signature of a symmetric integer form by integer congruence diagonalization.
/// Each step scales rows by the pivot and divides the trailing block by its
/// content; both are congruences up to a positive factor.
inline Signature signature(IntMatrix a) {
  const std::size_t n = a.size();
  Signature s;
  auto add_row_col = [&](std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] = checked::add(a[dst][j], a[src][j]);
    for (std::size_t j = 0; j < n; ++j) a[j][dst] = checked::add(a[j][dst], a[j][src]);
  };
  auto swap_row_col = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a[i], a[k]);
    for (auto& row : a) std::swap(row[i], row[k]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][piv] == 0) ++piv;
    if (piv == n) {
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (a[i][j] != 0) {
            add_row_col(i, j);
            piv = i;
            found = true;
          }
      if (!found) {
        s.zero += static_cast<int>(n - k);
        return s;
      }
    }
    swap_row_col(piv, k);
    const Int p = a[k][k];
    (p > 0 ? s.positive : s.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Int f = a[i][k];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) a[i][j] = checked::sub(checked::mul(p, a[i][j]), checked::mul(f, a[k][j]));
      for (std::size_t j = 0; j < n; ++j) a[j][i] = checked::sub(checked::mul(p, a[j][i]), checked::mul(f, a[j][k]));
    }
    Int g = 0;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) g = std::gcd(g, a[i][j]);
    if (g > 1)
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) a[i][j] /= g;
  }
  return s;
}

/// Even lattice of signature (1, rank-1) with a distinguished degree-4
/// polarization H. The Gram matrix is given in a fixed basis that is never
/// reduced. Construction only checks structure (square, symmetric, matching
/// ranks); admissibility is decided by validate_admissible.
class PolarizedK3Lattice {
 public:
  static constexpr Int kDefaultSearchBound = 32;

  PolarizedK3Lattice(std::string name, IntMatrix gram, DivisorClass polarization,
                     Int search_bound_degree = kDefaultSearchBound)
      : name_(std::move(name)),
        gram_(std::move(gram)),
        polarization_(std::move(polarization)),
        search_bound_degree_(search_bound_degree) {
    const std::size_t n = gram_.size();
    if (n == 0) throw InputError("gram matrix must be non-empty");
    for (const auto& row : gram_)
      if (row.size() != n) throw InputError("gram matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (gram_[i][j] != gram_[j][i]) throw InputError("gram matrix must be symmetric");
    if (polarization_.rank() != n)
      throw InputError("polarization has length " + std::to_string(polarization_.rank()) +
                       ", lattice rank is " + std::to_string(n));
    if (search_bound_degree_ < 1) throw InputError("search_bound_degree must be positive");
    h_image_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        h_image_[i] = checked::add(h_image_[i], checked::mul(gram_[i][j], polarization_[j]));
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return gram_.size(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const DivisorClass& polarization() const noexcept { return polarization_; }
  Int search_bound_degree() const noexcept { return search_bound_degree_; }

  DivisorClass zero() const { return DivisorClass::zero(rank()); }

  /// x^T * gram * y.
  Int intersect(const DivisorClass& x, const DivisorClass& y) const {
    require_rank(x);
    require_rank(y);
    Int total = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      Int row = 0;
      for (std::size_t j = 0; j < rank(); ++j) row = checked::add(row, checked::mul(gram_[i][j], y[j]));
      total = checked::add(total, checked::mul(x[i], row));
    }
    return total;
  }

  Int square(const DivisorClass& x) const { return intersect(x, x); }

  /// x.H
  Int degree(const DivisorClass& x) const {
    require_rank(x);
    Int total = 0;
    for (std::size_t i = 0; i < rank(); ++i) total = checked::add(total, checked::mul(x[i], h_image_[i]));
    return total;
  }

  /// Riemann-Roch on a K3: chi(O(D)) = 2 + D^2/2.
  Int euler_char(const DivisorClass& d) const { return checked::add(2, square(d) / 2); }

  void require_rank(const DivisorClass& x) const {
    if (x.rank() != rank())
      throw InputError("class " + x.to_string() + " has length " + std::to_string(x.rank()) +
                       ", lattice rank is " + std::to_string(rank()));
  }

 private:
  std::string name_;
  IntMatrix gram_;
  DivisorClass polarization_;
  Int search_bound_degree_;
  std::vector<Int> h_image_;
};

/// All classes x with (x.H)^2 - 2 x^2 <= bound.
///
/// With H^2 = 4 the form q(x) = (x.H)^2 - 2x^2 equals e^2/2 - 2y^2 for
/// x = (e/4)H + y, y orthogonal to H, so it is positive definite on a
/// hyperbolic lattice. Coordinates are bounded by |x_i|^2 <= bound * (Q^-1)_ii,
/// taken exactly from the adjugate.
inline std::vector<DivisorClass> classes_in_ellipsoid(const PolarizedK3Lattice& lattice, Int bound) {
  if (lattice.square(lattice.polarization()) != 4)
    throw InternalError("ellipsoid enumeration needs H^2 = 4");
  const std::size_t n = lattice.rank();
  std::vector<DivisorClass> out;
  if (bound < 0) return out;
  std::vector<Int> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = lattice.degree(DivisorClass::basis(n, i));
  IntMatrix q(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      q[i][j] = checked::sub(checked::mul(h[i], h[j]), checked::mul(2, lattice.gram()[i][j]));
  const Int det = determinant(q);
  if (det <= 0) throw InternalError("degree form is not positive definite; lattice is not hyperbolic");
  std::vector<Int> box(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Int adj = n == 1 ? 1 : determinant(principal_minor(q, i));
    box[i] = checked::isqrt(checked::mul(bound, adj) / det);
  }
  std::vector<Int> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -box[i];
  while (true) {
    DivisorClass c(x);
    const Int e = lattice.degree(c);
    const Int value = checked::sub(checked::mul(e, e), checked::mul(2, lattice.square(c)));
    if (value <= bound) out.push_back(std::move(c));
    std::size_t i = 0;
    while (i < n && x[i] == box[i]) {
      x[i] = -box[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  return out;
}

/// Candidate bound for effective classes of degree <= e: an effective class
/// of degree e is a sum of at most e irreducible curves, so x^2 >= -2e^2 and
/// q(x) <= 5e^2.
inline Int effective_box_bound(Int max_degree) { return checked::mul(5, checked::mul(max_degree, max_degree)); }

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool ok() const noexcept { return violations.empty(); }

  std::string to_string() const {
    std::string s = ok() ? "ok\n" : "rejected\n";
    for (const auto& v : violations) s += "violation: " + v + "\n";
    for (const auto& n : notes) s += "note: " + n + "\n";
    return s;
  }
};

/// Checks, in order: even diagonal, hyperbolic signature, H^2 = 4, no
/// (-2)-class orthogonal to H (so H is ample for the effective side fixed by
/// positive degree), and no isotropic class of degree 1 or 2. The last two
/// sets live in a bounded ellipsoid, so both checks are exact in every rank.
inline ValidationReport validate_admissible(const PolarizedK3Lattice& lattice) {
  ValidationReport report;
  const std::size_t n = lattice.rank();
  for (std::size_t i = 0; i < n; ++i)
    if (lattice.gram()[i][i] % 2 != 0)
      report.violations.push_back("diagonal entry " + std::to_string(i) + " is odd; lattice is not even");

  const Signature sig = signature(lattice.gram());
  const bool hyperbolic = sig.positive == 1 && sig.zero == 0;
  if (!hyperbolic)
    report.violations.push_back("signature (" + std::to_string(sig.positive) + "," + std::to_string(sig.negative) +
                                ") with " + std::to_string(sig.zero) + " null directions, expected (1," +
                                std::to_string(n - 1) + ")");

  const Int h2 = lattice.square(lattice.polarization());
  if (h2 != 4) report.violations.push_back("H^2 = " + std::to_string(h2) + ", expected 4");

  if (!hyperbolic || h2 != 4) {
    report.notes.push_back("root and isotropic checks skipped");
    return report;
  }

  // q(x) = (x.H)^2 - 2x^2 is 4 for degree-0 roots and e^2 for isotropic classes.
  const auto small = classes_in_ellipsoid(lattice, 4);
  for (const auto& x : small) {
    const Int e = lattice.degree(x);
    const Int sq = lattice.square(x);
    if (e == 0 && sq == -2 && x > -x)
      report.violations.push_back("(-2)-class " + x.to_string() + " is orthogonal to H; H is not ample");
    if (e >= 1 && e <= 2 && sq == 0)
      report.violations.push_back("effective isotropic class " + x.to_string() + " has degree " +
                                  std::to_string(e) + " <= 2");
  }
  report.notes.push_back("ampleness and low-degree isotropic checks are exact (finite ellipsoid)");
  report.notes.push_back("search_bound_degree = " + std::to_string(lattice.search_bound_degree()));
  return report;
}

/// Throws InputError carrying the validator's report unless the lattice is admissible.
inline void require_admissible(const PolarizedK3Lattice& lattice) {
  auto report = validate_admissible(lattice);
  if (!report.ok()) throw InputError("lattice '" + lattice.name() + "' is not admissible:\n" + report.to_string());
}

}  // namespace k3acm
