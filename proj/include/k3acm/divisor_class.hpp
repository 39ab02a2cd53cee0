#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "k3acm/integer.hpp"

namespace k3acm {

/// Integer coordinate vector of a divisor class in the fixed basis of the
/// ambient lattice. Ordering is lexicographic on coordinates.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Int> coords) : coords_(std::move(coords)) {}
  DivisorClass(std::initializer_list<Int> coords) : coords_(coords) {}

  static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<Int>(rank, 0)); }

  static DivisorClass basis(std::size_t rank, std::size_t i) {
    std::vector<Int> c(rank, 0);
    c.at(i) = 1;
    return DivisorClass(std::move(c));
  }

  std::size_t rank() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Int> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept {
    for (Int c : coords_)
      if (c != 0) return false;
    return true;
  }

  /// gcd of the coordinates; 0 for the zero class.
  Int content() const noexcept {
    Int g = 0;
    for (Int c : coords_) g = std::gcd(g, c);
    return g;
  }

  DivisorClass primitive() const {
    Int g = content();
    if (g == 0) return *this;
    std::vector<Int> c(coords_);
    for (Int& x : c) x /= g;
    return DivisorClass(std::move(c));
  }

  DivisorClass& operator+=(const DivisorClass& o) {
    require_same_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::add(coords_[i], o.coords_[i]);
    return *this;
  }

  DivisorClass& operator-=(const DivisorClass& o) {
    require_same_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked::sub(coords_[i], o.coords_[i]);
    return *this;
  }

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }

  friend DivisorClass operator-(DivisorClass a) {
    for (Int& x : a.coords_) x = checked::neg(x);
    return a;
  }

  friend DivisorClass operator*(Int k, DivisorClass a) {
    for (Int& x : a.coords_) x = checked::mul(k, x);
    return a;
  }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  /// Comma-separated coordinates, e.g. "1,-2".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords_[i]);
    }
    return s;
  }

 private:
  void require_same_rank(const DivisorClass& o) const {
    if (o.rank() != rank())
      throw InputError("divisor class rank mismatch: " + std::to_string(rank()) + " vs " +
                       std::to_string(o.rank()));
  }

  std::vector<Int> coords_;
};

struct DivisorClassHash {
  std::size_t operator()(const DivisorClass& d) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Int c : d.coords()) h ^= std::hash<Int>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Parses "a,b,c" (whitespace tolerated) into a class.
inline DivisorClass parse_divisor_class(const std::string& text) {
  std::vector<Int> coords;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("malformed class coordinate '" + item + "' in '" + text + "'");
    }
    for (std::size_t i = used; i < item.size(); ++i)
      if (item[i] != ' ' && item[i] != '\t')
        throw InputError("malformed class coordinate '" + item + "' in '" + text + "'");
    coords.push_back(static_cast<Int>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return DivisorClass(std::move(coords));
}

}  // namespace k3acm
