#include "indgen/canon.hpp"

#include <stdexcept>

#include "engine.hpp"

namespace indgen {

SetKey set_key(const PermSet& a) {
  const auto& ctx = internal::DegreeContext::get(a.degree());
  return internal::ranks_of(ctx, a);
}

CanonicalRep canonical_rep(const PermSet& a) {
  const auto& ctx = internal::DegreeContext::get(a.degree());
  const auto key = internal::canonical_key(ctx, internal::ranks_of(ctx, a));
  CanonicalRep out{internal::set_from_ranks(ctx, key), 0};
  out.stabilizer_order =
      internal::set_stabilizer(ctx, internal::ranks_of(ctx, a)).size();
  return out;
}

std::vector<Perm> conjugator_candidates(const PermSet& a) {
  if (a.empty())
    throw std::invalid_argument("candidate conjugators need a nonempty set");
  const auto& ctx = internal::DegreeContext::get(a.degree());
  std::vector<Perm> out;
  internal::for_each_conjugator_candidate(
      ctx, internal::ranks_of(ctx, a), [&](Rank g) {
        out.push_back(internal::PermRaw::make(ctx.degree, ctx.images_of(g)));
        return true;
      });
  return out;
}

std::uint64_t class_size(const PermSet& a) {
  const auto& ctx = internal::DegreeContext::get(a.degree());
  const auto stab = internal::set_stabilizer(ctx, internal::ranks_of(ctx, a));
  return ctx.group_order / stab.size();
}

bool is_canonical(const PermSet& a) {
  if (a.empty()) return true;
  const auto& ctx = internal::DegreeContext::get(a.degree());
  return internal::is_canonical_key(ctx, internal::ranks_of(ctx, a));
}

} // namespace indgen
