#include "indgen/indep.hpp"

#include <stdexcept>

#include "engine.hpp"
#include "indgen/closure.hpp"

namespace indgen {

namespace {

using internal::CloseScratch;
using internal::CloseStatus;
using internal::DegreeContext;

bool independent_ranks(const DegreeContext& ctx, const std::vector<Rank>& ranks,
                       CloseScratch& scratch, ElementMask& mask) {
  std::vector<Rank> rest;
  rest.reserve(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < ranks.size(); ++j)
      if (j != i) rest.push_back(ranks[j]);
    if (internal::close_set(ctx, rest, mask, scratch, ranks[i]) ==
        CloseStatus::WatchFound)
      return false;
  }
  return true;
}

} // namespace

bool is_independent(const PermSet& a) {
  const auto& ctx = DegreeContext::get(a.degree());
  CloseScratch scratch;
  ElementMask mask(a.degree());
  return independent_ranks(ctx, internal::ranks_of(ctx, a), scratch, mask);
}

bool is_generating(const PermSet& a) {
  return is_full(close(a));
}

bool is_maximal_independent(const PermSet& a) {
  const auto& ctx = DegreeContext::get(a.degree());
  const auto ranks = internal::ranks_of(ctx, a);
  CloseScratch scratch;
  ElementMask mask(a.degree());
  if (!independent_ranks(ctx, ranks, scratch, mask))
    throw std::invalid_argument("maximality is defined for independent sets");

  // cofactors: closure of a minus each single member
  std::vector<ElementMask> cofactor(ranks.size(), ElementMask(a.degree()));
  std::vector<std::vector<Rank>> rests(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    for (std::size_t j = 0; j < ranks.size(); ++j)
      if (j != i) rests[i].push_back(ranks[j]);
    internal::close_set(ctx, rests[i], cofactor[i], scratch);
  }
  internal::close_set(ctx, ranks, mask, scratch);

  for (Rank b = 0; b < ctx.group_order; ++b) {
    if (mask.test(b)) continue; // b in close(a): a+b is dependent
    // a+b independent iff every member stays outside its cofactor closure
    // extended by b, and b itself stays outside close(a). The latter holds.
    bool ok = true;
    for (std::size_t i = 0; i < ranks.size() && ok; ++i) {
      ElementMask grown = cofactor[i];
      if (internal::extend_set(ctx, grown, rests[i], b, scratch, ranks[i]) ==
          CloseStatus::WatchFound)
        ok = false;
    }
    if (ok) return false;
  }
  return true;
}

SetClassification classify(const PermSet& a) {
  SetClassification c;
  c.independent = is_independent(a);
  c.generating = is_generating(a);
  if (!c.independent) return c; // maximality is an independent-set notion
  c.maximal = is_maximal_independent(a);
  c.dead_end = c.maximal && !c.generating;
  return c;
}

} // namespace indgen
