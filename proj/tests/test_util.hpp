// Reference implementations used as oracles. Deliberately written in the
// most obvious way possible, independent of the engine's data layout:
// saturation instead of BFS, full n! scans instead of pruned candidate
// lists. Slow but trustworthy for degree <= 5.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "indgen/perm.hpp"
#include "indgen/perm_set.hpp"

namespace testutil {

inline std::vector<indgen::Perm> all_perms(int degree) {
  std::uint32_t order = 1;
  for (int i = 2; i <= degree; ++i) order *= static_cast<std::uint32_t>(i);
  std::vector<indgen::Perm> out;
  out.reserve(order);
  for (indgen::Rank r = 0; r < order; ++r)
    out.push_back(indgen::unrank(r, degree));
  return out;
}

// Semigroup closure by product saturation: no identity element is assumed,
// nothing enters the set except members and their products.
inline std::set<indgen::Perm> naive_close(const indgen::PermSet& a) {
  std::set<indgen::Perm> s(a.members().begin(), a.members().end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<indgen::Perm> snapshot(s.begin(), s.end());
    for (const auto& x : snapshot)
      for (const auto& y : snapshot)
        if (s.insert(x * y).second) grew = true;
  }
  return s;
}

// Lex-least conjugate, by trying every g in the full symmetric group.
inline indgen::PermSet naive_canonical(const indgen::PermSet& a) {
  indgen::PermSet best = a;
  for (const auto& g : all_perms(a.degree())) {
    indgen::PermSet c = a.conjugated(g);
    if (c < best) best = c;
  }
  return best;
}

inline std::uint64_t naive_stabilizer_order(const indgen::PermSet& a) {
  std::uint64_t n = 0;
  for (const auto& g : all_perms(a.degree()))
    if (a.conjugated(g) == a) ++n;
  return n;
}

// Shortest factorization over the members, identity = empty word.
inline std::map<indgen::Perm, int> naive_word_lengths(
    const indgen::PermSet& a) {
  std::map<indgen::Perm, int> dist;
  dist[indgen::Perm::identity(a.degree())] = 0;
  std::vector<indgen::Perm> frontier{indgen::Perm::identity(a.degree())};
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    std::vector<indgen::Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : a.members()) {
        indgen::Perm y = x * g;
        if (dist.emplace(y, d).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return dist;
}

// Deterministic sample of distinct-rank sets, sizes 1..max_size.
inline std::vector<indgen::PermSet> sample_sets(int degree, int max_size,
                                                int count,
                                                unsigned seed = 20260816) {
  std::uint32_t order = 1;
  for (int i = 2; i <= degree; ++i) order *= static_cast<std::uint32_t>(i);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, order - 1);
  std::uniform_int_distribution<int> size_of(1, max_size);
  std::vector<indgen::PermSet> out;
  while (static_cast<int>(out.size()) < count) {
    std::set<indgen::Rank> ranks;
    const int want = size_of(rng);
    while (static_cast<int>(ranks.size()) < want) ranks.insert(pick(rng));
    std::vector<indgen::Perm> members;
    for (indgen::Rank r : ranks) members.push_back(indgen::unrank(r, degree));
    out.emplace_back(degree, std::move(members));
  }
  return out;
}

// All subsets of the full symmetric group of this degree, every size.
// Only callable for degree <= 3 (2^6 sets).
inline std::vector<indgen::PermSet> all_subsets(int degree) {
  const auto elems = all_perms(degree);
  std::vector<indgen::PermSet> out;
  for (std::uint32_t bits = 0; bits < (1u << elems.size()); ++bits) {
    std::vector<indgen::Perm> members;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (bits & (1u << i)) members.push_back(elems[i]);
    out.emplace_back(degree, std::move(members));
  }
  return out;
}

} // namespace testutil
