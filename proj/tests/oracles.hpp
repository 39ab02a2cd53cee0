#pragma once

// Test-only brute-force oracles. Nothing here calls into the effective-cone
// or cohomology code; they only use the Gram pairing.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "k3acm/lattice.hpp"

namespace k3acm::oracle {

/// Every class with all |coords| <= radius.
inline std::vector<DivisorClass> coordinate_box(std::size_t rank, Int radius) {
  std::vector<DivisorClass> out;
  std::vector<Int> x(rank, -radius);
  while (true) {
    out.emplace_back(x);
    std::size_t i = 0;
    while (i < rank && x[i] == radius) x[i++] = -radius;
    if (i == rank) break;
    ++x[i];
  }
  return out;
}

/// Classes with given square and 1 <= degree <= max_degree inside a
/// coordinate box, sorted by (degree, coords).
inline std::vector<DivisorClass> classes_with_square(const PolarizedK3Lattice& lat, Int sq, Int max_degree,
                                                      Int radius) {
  std::vector<std::pair<Int, DivisorClass>> hits;
  for (auto& x : coordinate_box(lat.rank(), radius)) {
    const Int e = lat.degree(x);
    if (e >= 1 && e <= max_degree && lat.square(x) == sq) hits.emplace_back(e, std::move(x));
  }
  std::sort(hits.begin(), hits.end());
  std::vector<DivisorClass> out;
  for (auto& [e, x] : hits) out.push_back(std::move(x));
  return out;
}

/// Effective classes by degree, as the additive monoid generated by classes
/// with positive degree and square >= -2 (each is effective by Riemann-Roch,
/// and every irreducible curve is one of them). Index e holds degree-e classes.
inline std::vector<std::set<DivisorClass>> effective_monoid(const PolarizedK3Lattice& lat, Int max_degree,
                                                            Int radius) {
  std::vector<std::set<DivisorClass>> by_degree(static_cast<std::size_t>(max_degree + 1));
  for (auto& x : coordinate_box(lat.rank(), radius)) {
    const Int e = lat.degree(x);
    if (e >= 1 && e <= max_degree && lat.square(x) >= -2) by_degree[static_cast<std::size_t>(e)].insert(std::move(x));
  }
  for (Int e = 2; e <= max_degree; ++e)
    for (Int a = 1; 2 * a <= e; ++a)
      for (const auto& x : by_degree[static_cast<std::size_t>(a)])
        for (const auto& y : by_degree[static_cast<std::size_t>(e - a)]) by_degree[static_cast<std::size_t>(e)].insert(x + y);
  return by_degree;
}

/// Coordinate radius generous enough for generators up to max_degree on the
/// rank <= 2 catalog (checked by the tests that use it).
inline constexpr Int kCatalogRadius = 48;

class ClassGenerator {
 public:
  explicit ClassGenerator(std::uint64_t seed) : rng_(seed) {}

  DivisorClass operator()(std::size_t rank, Int radius) {
    std::uniform_int_distribution<Int> dist(-radius, radius);
    std::vector<Int> c(rank);
    for (auto& v : c) v = dist(rng_);
    return DivisorClass(std::move(c));
  }

  Int integer(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace k3acm::oracle
