#include "indgen/analyze.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "engine.hpp"
#include "indgen/canon.hpp"
#include "indgen/indep.hpp"
#include "records.hpp"

namespace indgen {

namespace {

using internal::CloseScratch;
using internal::DegreeContext;

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Trivial: return "trivial";
    case GroupKind::Z2: return "Z2";
    case GroupKind::Z3: return "Z3";
    case GroupKind::Z2xZ2: return "Z2xZ2";
    case GroupKind::D4: return "D4";
    case GroupKind::D6: return "D6";
    case GroupKind::S3: return "S3";
    case GroupKind::S4: return "S4";
    case GroupKind::S5: return "S5";
    case GroupKind::S6: return "S6";
    case GroupKind::Unidentified: return "unknown";
  }
  return "unknown";
}

// Signatures realized from concrete subgroups; signatures are intrinsic
// (order, commutativity, element orders), so the ambient degree of the
// realization does not matter.
const std::vector<std::pair<GroupSignature, GroupKind>>& known_groups() {
  static const auto table = [] {
    std::vector<std::pair<GroupSignature, GroupKind>> t;
    auto realized = [](int degree, std::initializer_list<std::string_view> cycles) {
      return signature(close(PermSet::from_cycles(degree, cycles)));
    };
    t.emplace_back(realized(1, {"()"}), GroupKind::Trivial);
    t.emplace_back(realized(2, {"(1,2)"}), GroupKind::Z2);
    t.emplace_back(realized(3, {"(1,2,3)"}), GroupKind::Z3);
    t.emplace_back(realized(4, {"(1,2)", "(3,4)"}), GroupKind::Z2xZ2);
    t.emplace_back(realized(4, {"(1,3)", "(1,2,3,4)"}), GroupKind::D4);
    t.emplace_back(realized(6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"}), GroupKind::D6);
    t.emplace_back(internal::symmetric_group_signature(3), GroupKind::S3);
    t.emplace_back(internal::symmetric_group_signature(4), GroupKind::S4);
    t.emplace_back(internal::symmetric_group_signature(5), GroupKind::S5);
    t.emplace_back(internal::symmetric_group_signature(6), GroupKind::S6);
    return t;
  }();
  return table;
}

// close(a minus member i) matches S_{degree-1}; the empty remainder counts
// as the trivial subgroup.
bool remainder_is_previous_symmetric(const DegreeContext& ctx,
                                     const ElementMask& remainder) {
  assert(ctx.degree >= 2);
  const std::size_t n = remainder.count();
  if (n == 0) return ctx.degree == 2;
  const GroupSignature& prev =
      internal::symmetric_group_signature(ctx.degree - 1);
  return n == prev.order &&
         internal::signature_of_closed_mask(ctx, remainder) == prev;
}

} // namespace

std::string GroupLabel::to_string() const {
  if (kind != GroupKind::Unidentified) return kind_name(kind);
  return "unknown(order=" + std::to_string(sig.order) + ")";
}

GroupLabel identify_group(const GroupSignature& sig) {
  for (const auto& [known, kind] : known_groups())
    if (known == sig) return GroupLabel{kind, sig};
  return GroupLabel{GroupKind::Unidentified, sig};
}

SymmetryInfo symmetry_group(const PermSet& a) {
  const auto& ctx = DegreeContext::get(a.degree());
  const auto stab = internal::set_stabilizer(ctx, internal::ranks_of(ctx, a));
  ElementMask mask(ctx.degree);
  for (const Rank g : stab) mask.set(g);
  return SymmetryInfo{stab.size(),
                      identify_group(internal::signature_of_closed_mask(ctx, mask))};
}

int diameter(const PermSet& a) {
  if (!is_generating(a))
    throw std::invalid_argument("diameter is defined for generating sets");
  const auto& ctx = DegreeContext::get(a.degree());
  const auto dist =
      internal::word_length_table(ctx, internal::ranks_of(ctx, a));
  int far = 0;
  for (const std::int16_t d : dist) far = std::max(far, static_cast<int>(d));
  return far;
}

DiameterExtremes diameter_extremes(const ClassDatabase& db) {
  DiameterExtremes ex;
  bool first = true;
  for (const ClassRecord& r : db.records) {
    if (!r.diameter) continue;
    const int d = *r.diameter;
    if (first) {
      ex.min = ex.max = d;
      first = false;
    } else {
      ex.min = std::min(ex.min, d);
      ex.max = std::max(ex.max, d);
    }
  }
  if (first) return ex; // no generating classes: zeros, empty extremes
  for (const ClassRecord& r : db.records) {
    if (!r.diameter) continue;
    if (*r.diameter == ex.min) ex.minimizers.push_back(r.representative);
    if (*r.diameter == ex.max) ex.maximizers.push_back(r.representative);
  }
  return ex;
}

bool is_incremental(const PermSet& a) {
  if (a.degree() < 2)
    throw std::invalid_argument("incremental structure needs degree >= 2");
  if (!is_generating(a))
    throw std::invalid_argument("incremental structure is defined for generating sets");
  const auto& ctx = DegreeContext::get(a.degree());
  const auto ranks = internal::ranks_of(ctx, a);
  CloseScratch scratch;
  ElementMask mask(ctx.degree);
  std::vector<Rank> rest;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < ranks.size(); ++j)
      if (j != i) rest.push_back(ranks[j]);
    internal::close_set(ctx, rest, mask, scratch);
    if (remainder_is_previous_symmetric(ctx, mask)) return true;
  }
  return false;
}

bool is_strongly_incremental(const PermSet& a) {
  if (a.degree() < 2)
    throw std::invalid_argument("incremental structure needs degree >= 2");
  if (!is_generating(a))
    throw std::invalid_argument("incremental structure is defined for generating sets");
  const auto& ctx = DegreeContext::get(a.degree());
  const auto ranks = internal::ranks_of(ctx, a);
  CloseScratch scratch;
  ElementMask mask(ctx.degree);
  std::vector<Rank> rest;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < ranks.size(); ++j)
      if (j != i) rest.push_back(ranks[j]);
    internal::close_set(ctx, rest, mask, scratch);
    if (!remainder_is_previous_symmetric(ctx, mask)) return false;
  }
  return true;
}

std::size_t incremental_class_count(const ClassDatabase& db) {
  if (db.degree < 2) return 0;
  std::size_t n = 0;
  for (const ClassRecord& r : db.records)
    if (r.classification.generating && r.incremental) ++n;
  return n;
}

PermSet folklore(FolkloreKind kind, int degree) {
  if (degree < 2)
    throw std::invalid_argument("the classical generating sets need degree >= 2");
  std::vector<Perm> members;
  auto transposition = [degree](int i, int j) {
    std::vector<int> img(degree);
    for (int p = 1; p <= degree; ++p) img[p - 1] = p;
    img[i - 1] = j;
    img[j - 1] = i;
    return Perm::from_images(img);
  };
  switch (kind) {
    case FolkloreKind::AllTranspositions:
      for (int i = 1; i <= degree; ++i)
        for (int j = i + 1; j <= degree; ++j)
          members.push_back(transposition(i, j));
      break;
    case FolkloreKind::BasePoint:
      for (int k = 2; k <= degree; ++k) members.push_back(transposition(1, k));
      break;
    case FolkloreKind::Chain:
      for (int i = 1; i < degree; ++i)
        members.push_back(transposition(i, i + 1));
      break;
    case FolkloreKind::CycleAndTransposition: {
      std::vector<int> img(degree);
      for (int p = 1; p <= degree; ++p) img[p - 1] = p % degree + 1;
      members.push_back(Perm::from_images(img));
      members.push_back(transposition(1, 2));
      break;
    }
  }
  return PermSet(degree, std::move(members));
}

bool lemma_extension_holds(const PermSet& a, const Perm& g) {
  const int n = g.degree();
  if (a.degree() != n - 1)
    throw std::invalid_argument("the set must live one degree below the new element");
  if (g.image(n) == n)
    throw std::invalid_argument("the new element must move the last point");
  if (!is_generating(a))
    throw std::invalid_argument("the set must generate its symmetric group");
  std::vector<Perm> members;
  members.reserve(a.size() + 1);
  for (const Perm& p : a.members()) members.push_back(p.embedded(n));
  members.push_back(g);
  return is_generating(PermSet(n, std::move(members)));
}

void refresh_analyses(ClassDatabase& db, int workers) {
  const auto& ctx = DegreeContext::get(db.degree);
  const int nw = internal::effective_workers(workers);
  std::atomic<std::size_t> cursor{0};
  internal::parallel_run(nw, [&](int) {
    CloseScratch scratch;
    std::vector<Rank> rest;
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= db.records.size()) break;
      ClassRecord& rec = db.records[i];
      const auto members = internal::ranks_of(ctx, rec.representative);
      ElementMask closure(ctx.degree);
      internal::close_set(ctx, members, closure, scratch);
      std::vector<ElementMask> cofactors(members.size(), ElementMask(ctx.degree));
      for (std::size_t k = 0; k < members.size(); ++k) {
        rest.clear();
        for (std::size_t j = 0; j < members.size(); ++j)
          if (j != k) rest.push_back(members[j]);
        internal::close_set(ctx, rest, cofactors[k], scratch);
      }
      rec = internal::make_class_record(ctx, members, closure, cofactors);
    }
  });
  internal::mark_maximality(ctx, db.records, nw);
}

} // namespace indgen
