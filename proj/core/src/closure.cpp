#include "indgen/closure.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "engine.hpp"

namespace indgen {

ElementMask::ElementMask(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("mask degree out of supported range: " +
                                std::to_string(degree));
  universe_ = 1;
  for (int i = 2; i <= degree; ++i) universe_ *= static_cast<std::uint32_t>(i);
  words_.assign((universe_ + 63) / 64, 0);
}

void ElementMask::clear() {
  std::fill(words_.begin(), words_.end(), 0);
}

std::size_t ElementMask::count() const {
  std::size_t n = 0;
  for (const std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementMask::empty() const {
  for (const std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

ElementMask close(const PermSet& a) {
  const auto& ctx = internal::DegreeContext::get(a.degree());
  ElementMask mask(a.degree());
  internal::CloseScratch scratch;
  internal::close_set(ctx, internal::ranks_of(ctx, a), mask, scratch);
  return mask;
}

bool contains(const ElementMask& m, const Perm& p) {
  if (p.degree() != m.degree())
    throw std::invalid_argument("degree mismatch between mask and element");
  return m.test(rank(p));
}

std::size_t order(const ElementMask& m) { return m.count(); }

bool is_full(const ElementMask& m) { return m.count() == m.universe(); }

GroupSignature signature(const ElementMask& m) {
  if (m.degree() == 0) throw std::invalid_argument("signature: empty mask");
  const auto& ctx = internal::DegreeContext::get(m.degree());
  return internal::signature_of_mask(ctx, m);
}

std::map<Perm, int> word_lengths(const PermSet& a) {
  if (a.empty())
    throw std::invalid_argument("word lengths need at least one generator");
  const auto& ctx = internal::DegreeContext::get(a.degree());
  const auto dist = internal::word_length_table(ctx, internal::ranks_of(ctx, a));
  std::map<Perm, int> out;
  for (Rank r = 0; r < ctx.group_order; ++r)
    if (dist[r] >= 0)
      out.emplace(unrank(r, a.degree()), dist[r]);
  return out;
}

} // namespace indgen
