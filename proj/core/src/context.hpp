// Per-degree lookup tables shared by everything that works on ranks:
// the image tuple of every group element, inverses, element orders, cycle
// types, and for each type its least representative together with that
// representative's centralizer (which is exactly the set of conjugators
// fixing it). Built once per degree and cached.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "indgen/perm.hpp"

namespace indgen::internal {

inline constexpr Rank kNoRank = 0xffffffffu;

struct TypeInfo {
  CycleType type;
  Rank min_rank = 0;                // least element of this conjugacy class
  std::uint32_t element_count = 0;  // size of the class
  std::vector<Rank> centralizer;    // {g : min_rank^g = min_rank}
};

class DegreeContext {
public:
  static const DegreeContext& get(int degree);

  int degree = 0;
  std::uint32_t group_order = 0; // degree!
  std::array<std::uint32_t, kMaxDegree + 1> factorial{};

  std::vector<std::uint8_t> images;        // group_order * degree, 0-based
  std::vector<Rank> inverse;               // group_order
  std::vector<std::uint8_t> element_order; // group_order
  std::vector<std::uint8_t> parity;        // group_order, 1 = odd
  std::vector<std::uint8_t> type_index;    // group_order -> index into types
  std::vector<TypeInfo> types;

  // All products, indexed [right * group_order + left] so a closure scan
  // multiplying by one fixed generator walks a single contiguous row.
  // Quadratic in the group order, so degree 8 (3.3 GB) goes without and
  // composes image tuples instead.
  std::vector<std::uint16_t> product_by_right;

  const std::uint8_t* images_of(Rank r) const {
    return images.data() + static_cast<std::size_t>(r) * degree;
  }

  Rank rank_of_images(const std::uint8_t* img) const {
    std::uint32_t r = 0;
    unsigned used = 0;
    for (int i = 0; i < degree; ++i) {
      const unsigned v = img[i];
      r += static_cast<std::uint32_t>(
               __builtin_popcount(((1u << v) - 1u) & ~used)) *
           factorial[static_cast<std::size_t>(degree - 1 - i)];
      used |= 1u << v;
    }
    return r;
  }

  // rank of a * b (apply a, then b)
  Rank mul(Rank a, Rank b) const {
    if (!product_by_right.empty())
      return product_by_right[static_cast<std::size_t>(b) * group_order + a];
    const std::uint8_t* pa = images_of(a);
    const std::uint8_t* pb = images_of(b);
    std::uint8_t out[kMaxDegree];
    for (int i = 0; i < degree; ++i) out[i] = pb[pa[i]];
    return rank_of_images(out);
  }

  // rank of g^-1 p g
  Rank conj(Rank p, Rank g) const {
    if (!product_by_right.empty()) return mul(mul(inverse[g], p), g);
    const std::uint8_t* pp = images_of(p);
    const std::uint8_t* pg = images_of(g);
    std::uint8_t out[kMaxDegree];
    for (int i = 0; i < degree; ++i) out[pg[i]] = pg[pp[i]];
    return rank_of_images(out);
  }

  const TypeInfo& type_of(Rank r) const { return types[type_index[r]]; }

  // Some g0 with a^g0 = type_of(a).min_rank.
  Rank conjugator_to_min(Rank a) const;

private:
  void build(int degree);
};

} // namespace indgen::internal
