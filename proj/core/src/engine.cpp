#include "engine.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <stdexcept>

namespace indgen::internal {

namespace {

void reset_mask(const DegreeContext& ctx, ElementMask& mask) {
  if (mask.degree() == ctx.degree)
    mask.clear();
  else
    mask = ElementMask(ctx.degree);
}

} // namespace

CloseStatus close_set(const DegreeContext& ctx, std::span<const Rank> gens,
                      ElementMask& mask, CloseScratch& scratch, Rank watch,
                      std::uint32_t limit) {
  reset_mask(ctx, mask);
  if (gens.empty()) return CloseStatus::Closed;

  auto& work = scratch.work;
  work.clear();
  for (const Rank g : gens) {
    if (mask.test(g)) continue;
    if (g == watch) return CloseStatus::WatchFound;
    mask.set(g);
    work.push_back(g);
  }
  std::uint32_t count = static_cast<std::uint32_t>(work.size());
  if (limit != 0 && count > limit) return CloseStatus::LimitExceeded;

  // Right-multiplication BFS. Every product g1*...*gk is reached through its
  // prefixes, each one previous-prefix * generator.
  for (std::size_t head = 0; head < work.size(); ++head) {
    const Rank x = work[head];
    for (const Rank g : gens) {
      const Rank y = ctx.mul(x, g);
      if (mask.test(y)) continue;
      if (y == watch) return CloseStatus::WatchFound;
      mask.set(y);
      work.push_back(y);
      if (limit != 0 && ++count > limit) return CloseStatus::LimitExceeded;
    }
  }
  return CloseStatus::Closed;
}

CloseStatus extend_set(const DegreeContext& ctx, ElementMask& mask,
                       std::span<const Rank> old_gens, Rank added,
                       CloseScratch& scratch, Rank watch, std::uint32_t limit) {
  assert(!mask.test(added));
  if (added == watch) return CloseStatus::WatchFound;

  auto& work = scratch.work;
  auto& snapshot = scratch.snapshot;
  auto& gens = scratch.gens;
  work.clear();
  snapshot.clear();
  mask.for_each([&](Rank r) { snapshot.push_back(r); });

  gens.assign(old_gens.begin(), old_gens.end());
  gens.push_back(added);

  std::uint32_t count = static_cast<std::uint32_t>(snapshot.size());
  auto push = [&](Rank y) -> CloseStatus {
    if (mask.test(y)) return CloseStatus::Closed;
    if (y == watch) return CloseStatus::WatchFound;
    mask.set(y);
    work.push_back(y);
    if (limit != 0 && ++count > limit) return CloseStatus::LimitExceeded;
    return CloseStatus::Closed;
  };

  // Seed with added and old*added: a word over the extended generator list
  // that escapes the old closure does so at an occurrence of the new
  // generator, so its first escaping prefix is one of these seeds and
  // right-multiplication BFS reaches the rest.
  if (auto s = push(added); s != CloseStatus::Closed) return s;
  for (const Rank x : snapshot)
    if (auto s = push(ctx.mul(x, added)); s != CloseStatus::Closed) return s;
  for (std::size_t head = 0; head < work.size(); ++head) {
    const Rank x = work[head];
    for (const Rank g : gens)
      if (auto s = push(ctx.mul(x, g)); s != CloseStatus::Closed) return s;
  }
  return CloseStatus::Closed;
}

std::vector<std::int16_t> word_length_table(const DegreeContext& ctx,
                                            std::span<const Rank> gens) {
  assert(!gens.empty());
  std::vector<std::int16_t> dist(ctx.group_order, -1);
  dist[0] = 0; // identity: empty word
  std::vector<Rank> frontier{0};
  std::vector<Rank> next;
  std::int16_t d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (const Rank x : frontier) {
      for (const Rank g : gens) {
        const Rank y = ctx.mul(x, g);
        if (dist[y] < 0) {
          dist[y] = d;
          next.push_back(y);
        }
      }
    }
    std::swap(frontier, next);
  }
  return dist;
}

std::vector<Rank> set_stabilizer(const DegreeContext& ctx,
                                 std::span<const Rank> members) {
  assert(std::is_sorted(members.begin(), members.end()));
  std::vector<Rank> stab;
  for (Rank g = 0; g < ctx.group_order; ++g) {
    // conjugation by g is injective, so mapping every member into the set
    // already means the set is fixed
    bool fixes = true;
    for (const Rank m : members) {
      if (!std::binary_search(members.begin(), members.end(),
                              ctx.conj(m, g))) {
        fixes = false;
        break;
      }
    }
    if (fixes) stab.push_back(g);
  }
  return stab;
}

std::vector<Rank> canonical_key(const DegreeContext& ctx,
                                std::span<const Rank> members) {
  assert(std::is_sorted(members.begin(), members.end()));
  if (members.empty()) return {};
  std::vector<Rank> best(members.begin(), members.end());
  std::vector<Rank> image(members.size());
  for_each_conjugator_candidate(ctx, members, [&](Rank g) {
    for (std::size_t i = 0; i < members.size(); ++i)
      image[i] = ctx.conj(members[i], g);
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
    return true;
  });
  return best;
}

bool is_canonical_key(const DegreeContext& ctx,
                      std::span<const Rank> members) {
  assert(std::is_sorted(members.begin(), members.end()));
  if (members.empty()) return true;
  std::vector<Rank> image(members.size());
  bool canonical = true;
  for_each_conjugator_candidate(ctx, members, [&](Rank g) {
    for (std::size_t i = 0; i < members.size(); ++i)
      image[i] = ctx.conj(members[i], g);
    std::sort(image.begin(), image.end());
    if (std::lexicographical_compare(image.begin(), image.end(),
                                     members.begin(), members.end())) {
      canonical = false;
      return false;
    }
    return true;
  });
  return canonical;
}

GroupSignature signature_of_mask(const DegreeContext& ctx,
                                 const ElementMask& mask) {
  if (mask.count() == 0)
    throw std::invalid_argument("signature: empty element set");
  if (!mask.test(0))
    throw std::invalid_argument("signature: set lacks the identity");
  std::vector<Rank> elems;
  mask.for_each([&](Rank r) { elems.push_back(r); });
  for (const Rank x : elems)
    for (const Rank y : elems)
      if (!mask.test(ctx.mul(x, y)))
        throw std::invalid_argument("signature: set is not closed");
  return signature_of_closed_mask(ctx, mask);
}

GroupSignature signature_of_closed_mask(const DegreeContext& ctx,
                                        const ElementMask& mask) {
  GroupSignature sig;
  sig.order = static_cast<std::uint32_t>(mask.count());
  if (sig.order == 0)
    throw std::invalid_argument("signature: empty element set");
  if (!mask.test(0))
    throw std::invalid_argument("signature: set lacks the identity");

  std::vector<Rank> elems;
  elems.reserve(sig.order);
  mask.for_each([&](Rank r) {
    elems.push_back(r);
    ++sig.order_histogram[ctx.element_order[r]];
  });

  // Commutativity against a greedy generating sequence: repeatedly adjoin
  // the least element outside the running closure.
  std::vector<Rank> gens;
  ElementMask have(ctx.degree);
  have.set(0);
  std::uint32_t have_count = 1;
  CloseScratch scratch;
  std::size_t scan = 0;
  while (have_count < sig.order) {
    while (scan < elems.size() && have.test(elems[scan])) ++scan;
    assert(scan < elems.size());
    const Rank g = elems[scan];
    extend_set(ctx, have, gens, g, scratch);
    gens.push_back(g);
    have_count = static_cast<std::uint32_t>(have.count());
  }
  sig.abelian = true;
  for (std::size_t i = 0; i < gens.size() && sig.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (ctx.mul(gens[i], gens[j]) != ctx.mul(gens[j], gens[i])) {
        sig.abelian = false;
        break;
      }
  return sig;
}

const GroupSignature& symmetric_group_signature(int degree) {
  const DegreeContext& ctx = DegreeContext::get(degree); // validates degree
  static std::mutex mutex;
  static GroupSignature cache[kMaxDegree + 1];
  static bool ready[kMaxDegree + 1] = {};
  std::lock_guard<std::mutex> lock(mutex);
  if (!ready[degree]) {
    GroupSignature sig;
    sig.order = ctx.group_order;
    sig.abelian = degree <= 2;
    for (Rank r = 0; r < ctx.group_order; ++r)
      ++sig.order_histogram[ctx.element_order[r]];
    cache[degree] = std::move(sig);
    ready[degree] = true;
  }
  return cache[degree];
}

std::vector<Rank> ranks_of(const DegreeContext& ctx, const PermSet& a) {
  std::vector<Rank> out;
  out.reserve(a.size());
  for (const Perm& p : a.members())
    out.push_back(ctx.rank_of_images(PermRaw::bytes(p)));
  return out; // PermSet sorts by image tuple, which is rank order
}

PermSet set_from_ranks(const DegreeContext& ctx,
                       std::span<const Rank> members) {
  std::vector<Perm> out;
  out.reserve(members.size());
  for (const Rank r : members)
    out.push_back(PermRaw::make(ctx.degree, ctx.images_of(r)));
  return PermSet(ctx.degree, std::move(out));
}

} // namespace indgen::internal
