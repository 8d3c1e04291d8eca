// Permutations of {1..n} for small fixed degree, stored by image tuple.
//
// Conventions used throughout the library:
//   * composition is left to right: (p * q) maps x to q(p(x)),
//   * conjugation p^g = g^-1 * p * g relabels the points of p through g,
//   * points are 1-based in the public interface and in cycle notation,
//   * the identity prints as "()".
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace indgen {

inline constexpr int kMaxDegree = 8;

// Index of a permutation in the lexicographic order of image tuples,
// in the range [0, degree!).
using Rank = std::uint32_t;

// Multiset of cycle lengths (fixed points included), kept sorted descending.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const;
  std::string to_string() const; // e.g. "2+2+1"

  auto operator<=>(const CycleType&) const = default;

private:
  std::vector<int> parts_;
};

namespace internal {
struct PermRaw;
}

class Perm {
public:
  // Identity permutation of the given degree (1 <= degree <= kMaxDegree).
  explicit Perm(int degree);

  static Perm identity(int degree) { return Perm(degree); }

  // Builds a permutation from its 1-based image tuple; the tuple length is
  // the degree. Throws std::invalid_argument unless it is a bijection.
  static Perm from_images(std::span<const int> images);
  static Perm from_images(std::initializer_list<int> images);

  int degree() const { return degree_; }

  // Image of a 1-based point.
  int image(int point) const;

  // 1-based image tuple.
  std::vector<int> images() const;

  bool is_identity() const;
  int order() const;
  CycleType cycle_type() const;

  // Cycles of length >= 2, ordered by least moved point, each cycle
  // starting at its least point. 1-based.
  std::vector<std::vector<int>> cycles() const;

  // Left-to-right composition: result maps x to then(this(x)).
  Perm compose(const Perm& then) const;
  Perm operator*(const Perm& then) const { return compose(then); }

  Perm inverse() const;

  // g^-1 * this * g.
  Perm conjugated(const Perm& g) const;

  // Same mapping viewed in S_m for m >= degree; new points are fixed.
  Perm embedded(int m) const;

  // Total order: degree first, then the image tuple lexicographically.
  // Within one degree this agrees with comparing ranks.
  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

private:
  Perm(int degree, const std::array<std::uint8_t, kMaxDegree>& img)
      : degree_(static_cast<std::uint8_t>(degree)), img_(img) {}

  friend struct internal::PermRaw;

  std::uint8_t degree_ = 1;
  std::array<std::uint8_t, kMaxDegree> img_{}; // 0-based; unused slots zero
};

// Lexicographic rank of the image tuple among all degree! permutations.
Rank rank(const Perm& p);

// Inverse of rank(); throws std::out_of_range for index >= degree!.
Perm unrank(Rank index, int degree);

// Disjoint cycle notation, fixed points omitted, identity rendered "()".
std::string format_cycles(const Perm& p);

// Parses disjoint cycle notation such as "(1,2)(3,4)" or "(1 2 3)".
// Points may be separated by commas or spaces; "()" is the identity.
// Throws std::invalid_argument on malformed input, points outside 1..degree,
// or a point repeated across cycles.
Perm parse_cycles(std::string_view text, int degree);

namespace internal {
// Low-level escape hatch for the engine: raw 0-based image bytes.
struct PermRaw {
  static Perm make(int degree, const std::uint8_t* img) {
    std::array<std::uint8_t, kMaxDegree> a{};
    for (int i = 0; i < degree; ++i) a[static_cast<std::size_t>(i)] = img[i];
    return Perm(degree, a);
  }
  static const std::uint8_t* bytes(const Perm& p) { return p.img_.data(); }
};
} // namespace internal

} // namespace indgen
