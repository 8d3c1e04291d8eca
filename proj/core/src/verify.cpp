// Cross-checks. Everything here recomputes results by a second route (direct
// subset scan, the other strategy, per-record recomputation) and compares.
#include "indgen/verify.hpp"

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "indgen/analyze.hpp"
#include "indgen/canon.hpp"
#include "indgen/closure.hpp"
#include "indgen/indep.hpp"
#include "indgen/perm.hpp"

namespace indgen {

bool VerifyReport::ok() const {
  for (const VerifyCheck& c : checks)
    if (!c.ok) return false;
  return true;
}

namespace {

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::string set_str(const PermSet& s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& c : s.cycle_strings()) {
    if (!first) out += ", ";
    out += c;
    first = false;
  }
  return out + "}";
}

std::string triple(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

VerifyCheck check_brute_force(int degree, const ClassDatabase& db) {
  VerifyCheck c{"brute force", false, ""};
  BruteForceCounts bf = brute_force_count(degree);
  std::uint64_t total = db.total_independent_sets();
  std::uint64_t classes = db.class_count();
  std::uint64_t generating = db.generating_class_count();
  c.ok = bf.total_independent_sets == total && bf.class_count == classes &&
         bf.generating_class_count == generating;
  if (c.ok)
    c.detail = "totals " + triple(total, classes, generating) +
               " match the direct subset scan";
  else
    c.detail = "direct subset scan " +
               triple(bf.total_independent_sets, bf.class_count,
                      bf.generating_class_count) +
               " != enumeration " + triple(total, classes, generating);
  return c;
}

// No independent set of cap+1 members exists; with heredity this bounds
// every independent set, so the capped search misses nothing.
VerifyCheck check_size_bound(int degree) {
  VerifyCheck c{"size bound", false, ""};
  int cap = degree == 1 ? 1 : degree - 1;
  int k = cap + 1;
  std::uint32_t universe =
      static_cast<std::uint32_t>(factorial_u64(degree));
  std::uint64_t scanned = 0;
  if (static_cast<std::uint32_t>(k) <= universe) {
    std::vector<Rank> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), Rank{0});
    for (;;) {
      std::vector<Perm> members;
      members.reserve(idx.size());
      for (Rank r : idx) members.push_back(unrank(r, degree));
      PermSet candidate(degree, std::move(members));
      ++scanned;
      if (is_independent(candidate)) {
        c.detail = "independent set of " + std::to_string(k) +
                   " members found: " + set_str(candidate);
        return c;
      }
      int i = k - 1;
      while (i >= 0 &&
             idx[static_cast<std::size_t>(i)] == universe - static_cast<std::uint32_t>(k - i))
        --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  c.ok = true;
  c.detail = "no independent set of " + std::to_string(k) + " members among " +
             std::to_string(scanned) + " candidates";
  return c;
}

VerifyCheck check_strategies(int degree, const ClassDatabase& db) {
  VerifyCheck c{"strategy equivalence", false, ""};
  EnumerateOptions vo;
  vo.strategy = Strategy::VisitedDb;
  ClassDatabase other = enumerate_classes(degree, vo);
  if (other.records == db.records) {
    c.ok = true;
    c.detail = std::to_string(db.records.size()) +
               " identical classes from both strategies";
    return c;
  }
  std::size_t n = std::min(other.records.size(), db.records.size());
  std::size_t i = 0;
  while (i < n && other.records[i] == db.records[i]) ++i;
  if (i < n)
    c.detail = "record " + std::to_string(i) + " differs: " +
               set_str(db.records[i].representative) + " vs " +
               set_str(other.records[i].representative);
  else
    c.detail = "class counts differ: " + std::to_string(db.records.size()) +
               " vs " + std::to_string(other.records.size());
  return c;
}

VerifyCheck check_class_sizes(int degree, const ClassDatabase& db) {
  VerifyCheck c{"class sizes", false, ""};
  std::uint64_t fact = factorial_u64(degree);
  for (std::size_t i = 0; i < db.records.size(); ++i) {
    const ClassRecord& r = db.records[i];
    if (r.symmetry_order == 0 ||
        r.class_size * r.symmetry_order != fact) {
      c.detail = "record " + std::to_string(i) + " " +
                 set_str(r.representative) + ": class size " +
                 std::to_string(r.class_size) + " x symmetry order " +
                 std::to_string(r.symmetry_order) + " != " +
                 std::to_string(fact);
      return c;
    }
  }
  c.ok = true;
  c.detail = std::to_string(db.total_independent_sets()) + " sets in " +
             std::to_string(db.class_count()) + " classes (" +
             std::to_string(db.generating_class_count()) +
             " generating); class size x symmetry order = " +
             std::to_string(fact) + " throughout";
  return c;
}

VerifyCheck check_invariants(int degree, const ClassDatabase& db) {
  VerifyCheck c{"invariants", false, ""};
  auto fail = [&](std::size_t i, const std::string& what) {
    c.detail = "record " + std::to_string(i) + " " +
               set_str(db.records[i].representative) + ": " + what;
    return c;
  };
  for (std::size_t i = 0; i < db.records.size(); ++i) {
    const ClassRecord& r = db.records[i];
    if (r.representative.degree() != degree)
      return fail(i, "degree mismatch");
    if (!r.classification.independent)
      return fail(i, "not flagged independent");
    if (r.classification.generating && !r.classification.maximal)
      return fail(i, "generating but not maximal");
    if (r.classification.dead_end !=
        (r.classification.maximal && !r.classification.generating))
      return fail(i, "dead-end flag inconsistent");
    if (r.diameter.has_value() != r.classification.generating)
      return fail(i, "diameter present iff generating violated");
    if (!r.classification.generating && (r.incremental || r.strongly_incremental))
      return fail(i, "incremental flags on a non-generating class");
    if (r.strongly_incremental && !r.incremental)
      return fail(i, "strongly incremental but not incremental");
    if (!is_canonical(r.representative))
      return fail(i, "representative is not canonical");
    if (i > 0) {
      const ClassRecord& prev = db.records[i - 1];
      SetKey a = set_key(prev.representative);
      SetKey b = set_key(r.representative);
      bool ordered = prev.representative.size() < r.representative.size() ||
                     (prev.representative.size() == r.representative.size() &&
                      a < b);
      if (!ordered) return fail(i, "records out of (size, key) order");
    }
  }

  // Cheap degrees: recompute every analysis from the representative alone.
  if (degree <= 4) {
    for (std::size_t i = 0; i < db.records.size(); ++i) {
      const ClassRecord& r = db.records[i];
      if (classify(r.representative) != r.classification)
        return fail(i, "classification recomputation differs");
      CanonicalRep cr = canonical_rep(r.representative);
      if (cr.rep != r.representative)
        return fail(i, "canonical representative recomputation differs");
      if (cr.stabilizer_order != r.symmetry_order)
        return fail(i, "symmetry order recomputation differs");
      SymmetryInfo sym = symmetry_group(r.representative);
      if (sym.label.to_string() != r.symmetry_label)
        return fail(i, "symmetry label recomputation differs");
      if (r.classification.generating) {
        if (diameter(r.representative) != *r.diameter)
          return fail(i, "diameter recomputation differs");
        if (degree >= 2 &&
            (is_incremental(r.representative) != r.incremental ||
             is_strongly_incremental(r.representative) !=
                 r.strongly_incremental))
          return fail(i, "incremental recomputation differs");
      }
    }
  }
  c.ok = true;
  c.detail = "all " + std::to_string(db.records.size()) +
             " records canonical, ordered, and internally consistent" +
             (degree <= 4 ? "; analyses recomputed per record" : "");
  return c;
}

VerifyCheck check_labels() {
  VerifyCheck c{"group labels", false, ""};
  struct Probe {
    GroupKind kind;
    int degree;
    std::vector<std::string> gens;
  };
  const std::vector<Probe> probes = {
      {GroupKind::Trivial, 1, {"()"}},
      {GroupKind::Z2, 2, {"(1,2)"}},
      {GroupKind::Z3, 3, {"(1,2,3)"}},
      {GroupKind::Z2xZ2, 4, {"(1,2)", "(3,4)"}},
      {GroupKind::D4, 4, {"(1,3)", "(1,2,3,4)"}},
      {GroupKind::D6, 6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"}},
      {GroupKind::S3, 3, {"(1,2)", "(2,3)"}},
      {GroupKind::S4, 4, {"(1,2)", "(1,2,3,4)"}},
      {GroupKind::S5, 5, {"(1,2)", "(1,2,3,4,5)"}},
      {GroupKind::S6, 6, {"(1,2)", "(1,2,3,4,5,6)"}},
  };
  std::vector<GroupSignature> sigs;
  for (const Probe& p : probes) {
    GroupSignature sig = signature(close(PermSet::from_cycles(
        p.degree, std::span<const std::string>(p.gens))));
    if (identify_group(sig).kind != p.kind) {
      c.detail = "a known group was not recovered from its signature";
      return c;
    }
    sigs.push_back(sig);
  }
  for (std::size_t i = 0; i < sigs.size(); ++i)
    for (std::size_t j = i + 1; j < sigs.size(); ++j)
      if (sigs[i] == sigs[j]) {
        c.detail = "two known labels share a signature";
        return c;
      }
  // Groups off the list must stay unidentified, not get coerced.
  for (const PermSet& off :
       {PermSet::from_cycles(4, {"(1,2,3,4)"}),
        PermSet::from_cycles(4, {"(1,2,3)", "(2,3,4)"})}) {
    if (identify_group(signature(close(off))).kind != GroupKind::Unidentified) {
      c.detail = "an unlisted group was coerced to a known label";
      return c;
    }
  }
  c.ok = true;
  c.detail = "10 known signatures pairwise distinct; cyclic and alternating "
             "probes stay unidentified";
  return c;
}

VerifyCheck check_catalog(const ClassDatabase& db) {
  VerifyCheck c{"catalog", false, ""};
  const std::vector<CatalogEntry>& catalog = s4_generating_catalog();
  std::set<SetKey> want;
  for (const CatalogEntry& e : catalog) {
    if (!is_independent(e.set) || !is_generating(e.set)) {
      c.detail = "catalog entry " + set_str(e.set) +
                 " is not an independent generating set";
      return c;
    }
    if (!want.insert(set_key(canonical_rep(e.set).rep)).second) {
      c.detail = "catalog entry " + set_str(e.set) +
                 " is conjugate to an earlier entry";
      return c;
    }
  }
  std::set<SetKey> got;
  for (const ClassRecord& r : db.records)
    if (r.classification.generating) got.insert(set_key(r.representative));
  std::size_t matched = 0;
  for (const SetKey& k : want) matched += got.count(k);
  if (want != got) {
    c.detail = "catalog classes: " + std::to_string(matched) + "/" +
               std::to_string(catalog.size()) + " matched, enumeration has " +
               std::to_string(got.size()) + " generating classes";
    return c;
  }
  // The flagged entries are the classical sets, up to conjugacy.
  std::size_t well_known = 0;
  const std::vector<FolkloreKind> classical = {
      FolkloreKind::Chain, FolkloreKind::BasePoint,
      FolkloreKind::CycleAndTransposition};
  std::set<SetKey> classical_keys;
  for (FolkloreKind kind : classical)
    classical_keys.insert(set_key(canonical_rep(folklore(kind, 4)).rep));
  for (const CatalogEntry& e : catalog) {
    if (!e.well_known) continue;
    ++well_known;
    if (classical_keys.count(set_key(canonical_rep(e.set).rep)) == 0) {
      c.detail = "well-known entry " + set_str(e.set) +
                 " does not match a classical generating set";
      return c;
    }
  }
  c.ok = true;
  c.detail = "catalog classes: " + std::to_string(matched) + "/" +
             std::to_string(catalog.size()) + " matched, " +
             std::to_string(well_known) + " well known";
  return c;
}

VerifyCheck check_reference(const ClassDatabase& fresh,
                            const ClassDatabase& ref) {
  VerifyCheck c{"reference", false, ""};
  if (ref.degree != fresh.degree) {
    c.detail = "reference degree " + std::to_string(ref.degree) +
               " != " + std::to_string(fresh.degree);
    return c;
  }
  std::size_t n = std::min(fresh.records.size(), ref.records.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fresh.records[i] == ref.records[i]) continue;
    const PermSet& a = fresh.records[i].representative;
    const PermSet& b = ref.records[i].representative;
    c.detail = "record " + std::to_string(i) + " differs: " +
               (a == b ? set_str(a) + " (analyses changed)"
                       : set_str(a) + " vs " + set_str(b));
    return c;
  }
  if (fresh.records.size() != ref.records.size()) {
    c.detail = "class counts differ: " + std::to_string(fresh.records.size()) +
               " fresh vs " + std::to_string(ref.records.size()) +
               " stored";
    return c;
  }
  c.ok = true;
  c.detail = "all " + std::to_string(n) + " stored records match";
  return c;
}

} // namespace

VerifyReport run_verification(int degree, const VerifyOptions& options) {
  EnumerateOptions eo;
  eo.strategy = Strategy::CanonicalPath;
  eo.workers = options.workers;
  ClassDatabase db = enumerate_classes(degree, eo);

  VerifyReport report;
  if (degree <= 4) {
    report.checks.push_back(check_brute_force(degree, db));
    report.checks.push_back(check_size_bound(degree));
  }
  if (degree <= 5) report.checks.push_back(check_strategies(degree, db));
  report.checks.push_back(check_class_sizes(degree, db));
  report.checks.push_back(check_invariants(degree, db));
  report.checks.push_back(check_labels());
  if (degree == 4) report.checks.push_back(check_catalog(db));
  if (options.reference)
    report.checks.push_back(check_reference(db, *options.reference));
  return report;
}

const std::vector<CatalogEntry>& s4_generating_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    auto set = [](std::initializer_list<std::string_view> cycles) {
      return PermSet::from_cycles(4, cycles);
    };
    std::vector<CatalogEntry> c;
    c.push_back({set({"(3,4)", "(2,3)", "(1,2)"}), true});
    c.push_back({set({"(3,4)", "(2,3)", "(1,3)"}), true});
    c.push_back({set({"(3,4)", "(2,3)", "(1,2)(3,4)"}), false});
    c.push_back({set({"(3,4)", "(2,3)", "(1,3)(2,4)"}), false});
    c.push_back({set({"(3,4)", "(2,3,4)", "(1,2)(3,4)"}), false});
    c.push_back({set({"(3,4)", "(2,3,4)", "(1,3,4)"}), false});
    c.push_back({set({"(3,4)", "(2,3,4)", "(1,3)(2,4)"}), false});
    c.push_back({set({"(3,4)", "(2,3,4)", "(1,4,3)"}), false});
    c.push_back({set({"(3,4)", "(2,3,4)", "(1,4)(2,3)"}), false});
    c.push_back({set({"(3,4)", "(1,2,3)"}), false});
    c.push_back({set({"(3,4)", "(1,2,3,4)"}), true});
    c.push_back({set({"(2,3,4)", "(1,2,3,4)"}), false});
    c.push_back({set({"(2,3,4)", "(1,2,4,3)"}), false});
    c.push_back({set({"(1,2,3,4)", "(1,2,4,3)"}), false});
    return c;
  }();
  return catalog;
}

} // namespace indgen
