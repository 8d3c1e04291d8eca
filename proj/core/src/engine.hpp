// Rank-level primitives behind the public operations: closure BFS with
// early exit, closure extension by one generator, word-length BFS, set
// stabilizers, and the candidate scan that computes canonical keys.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "context.hpp"
#include "indgen/closure.hpp"
#include "indgen/perm_set.hpp"

namespace indgen::internal {

enum class CloseStatus {
  Closed,        // closure complete
  WatchFound,    // aborted: the watched element appeared
  LimitExceeded, // aborted: more than `limit` elements
};

// Reusable buffers for the closure routines.
struct CloseScratch {
  std::vector<Rank> work;
  std::vector<Rank> snapshot;
  std::vector<Rank> gens;
};

// Closure of gens into mask (mask is reset first). watch = kNoRank to
// disable; limit = 0 to disable.
CloseStatus close_set(const DegreeContext& ctx, std::span<const Rank> gens,
                      ElementMask& mask, CloseScratch& scratch,
                      Rank watch = kNoRank, std::uint32_t limit = 0);

// mask must be closed under right-multiplication by old_gens; extends it to
// the closure of (its elements + added). The watched element must not
// already be in mask.
CloseStatus extend_set(const DegreeContext& ctx, ElementMask& mask,
                       std::span<const Rank> old_gens, Rank added,
                       CloseScratch& scratch, Rank watch = kNoRank,
                       std::uint32_t limit = 0);

// Shortest factorization length per rank (-1 = not generated); gens nonempty.
std::vector<std::int16_t> word_length_table(const DegreeContext& ctx,
                                            std::span<const Rank> gens);

// All g with {m^g} = members (members sorted ascending).
std::vector<Rank> set_stabilizer(const DegreeContext& ctx,
                                 std::span<const Rank> members);

// members sorted ascending and nonempty. Calls f(g) for every candidate
// conjugator; stops early if f returns false.
template <class F>
void for_each_conjugator_candidate(const DegreeContext& ctx,
                                   std::span<const Rank> members, F f) {
  Rank mu_star = kNoRank;
  for (const Rank m : members) {
    const Rank mu = ctx.type_of(m).min_rank;
    if (mu < mu_star) mu_star = mu;
  }
  for (const Rank m : members) {
    const TypeInfo& t = ctx.type_of(m);
    if (t.min_rank != mu_star) continue;
    const Rank g0 = (m == mu_star) ? 0 : ctx.conjugator_to_min(m);
    for (const Rank z : t.centralizer) {
      const Rank g = (g0 == 0) ? z : ctx.mul(g0, z);
      if (!f(g)) return;
    }
  }
}

// Lex-least sorted conjugate of members over the candidate conjugators.
std::vector<Rank> canonical_key(const DegreeContext& ctx,
                                std::span<const Rank> members);

// members == canonical_key(members), decided with early exit.
bool is_canonical_key(const DegreeContext& ctx, std::span<const Rank> members);

// Signature of a composition-closed mask; throws std::invalid_argument if
// the mask is empty or not closed. Commutativity is decided against a small
// greedily chosen generating set.
GroupSignature signature_of_mask(const DegreeContext& ctx,
                                 const ElementMask& m);

// Same, for masks closed by construction: skips the quadratic closedness
// scan. Still requires the identity bit.
GroupSignature signature_of_closed_mask(const DegreeContext& ctx,
                                        const ElementMask& m);

// Cached full-group signature of S_degree.
const GroupSignature& symmetric_group_signature(int degree);

std::vector<Rank> ranks_of(const DegreeContext& ctx, const PermSet& a);
PermSet set_from_ranks(const DegreeContext& ctx, std::span<const Rank> members);

struct SetKeyHash {
  std::size_t operator()(const std::vector<Rank>& key) const {
    std::size_t h = 1469598103934665603ull;
    for (const Rank r : key) {
      h ^= r;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace indgen::internal
