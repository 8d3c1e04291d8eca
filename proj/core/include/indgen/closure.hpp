// Composition closure of permutation sets, i.e. the subsemigroup generated
// by a set. No inverses are taken: close(A) is the set of all nonempty
// products of members of A. For nonempty A inside a finite group this is
// the subgroup <A>; close({}) is empty, not the trivial group.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "indgen/perm.hpp"
#include "indgen/perm_set.hpp"

namespace indgen {

// Dense bitmap over all degree! group elements, indexed by rank.
class ElementMask {
public:
  ElementMask() = default;
  explicit ElementMask(int degree);

  int degree() const { return degree_; }
  std::uint32_t universe() const { return universe_; } // degree!

  bool test(Rank r) const {
    return (words_[r >> 6] >> (r & 63u)) & 1u;
  }
  void set(Rank r) { words_[r >> 6] |= std::uint64_t{1} << (r & 63u); }
  void clear();

  std::size_t count() const;
  bool empty() const;

  std::span<const std::uint64_t> words() const { return words_; }

  template <class F>
  void for_each(F f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        bits &= bits - 1;
        f(static_cast<Rank>(w * 64 + b));
      }
    }
  }

  bool operator==(const ElementMask&) const = default;

private:
  int degree_ = 0;
  std::uint32_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Composition closure of the members of a.
ElementMask close(const PermSet& a);

bool contains(const ElementMask& m, const Perm& p);
std::size_t order(const ElementMask& m);
bool is_full(const ElementMask& m);

// Order, commutativity and element-order histogram of a subgroup given as a
// mask. Distinguishes every pair of groups this library needs to tell apart.
struct GroupSignature {
  std::uint32_t order = 0;
  bool abelian = false;
  std::map<int, int> order_histogram;

  bool operator==(const GroupSignature&) const = default;
};

// Throws std::invalid_argument if m is empty or not composition-closed.
GroupSignature signature(const ElementMask& m);

// Shortest factorization lengths over the generators a (a nonempty):
// identity has length 0 (empty word), generators length 1, and so on.
// Domain is close(a), which always contains the identity.
std::map<Perm, int> word_lengths(const PermSet& a);

} // namespace indgen
