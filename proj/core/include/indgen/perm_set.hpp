#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "indgen/perm.hpp"

namespace indgen {

// A finite set of permutations of one symmetric group. Members are kept
// sorted (image-tuple order, which equals rank order) and deduplicated.
// The degree is explicit so the empty set still belongs to a group.
class PermSet {
public:
  explicit PermSet(int degree);
  PermSet(int degree, std::vector<Perm> members);

  static PermSet from_cycles(int degree, std::span<const std::string> cycles);
  static PermSet from_cycles(int degree, std::initializer_list<std::string_view> cycles);

  int degree() const { return degree_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Perm>& members() const { return members_; }
  const Perm& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const Perm& p) const;

  // Copy with p inserted (no-op if already present).
  PermSet with(const Perm& p) const;

  // Copy with the i-th member removed.
  PermSet without(std::size_t i) const;

  // {m^g : m in this}.
  PermSet conjugated(const Perm& g) const;

  std::vector<std::string> cycle_strings() const;

  auto operator<=>(const PermSet&) const = default;
  bool operator==(const PermSet&) const = default;

private:
  int degree_;
  std::vector<Perm> members_;
};

} // namespace indgen
