// Exhaustive classification of the independent subsets of S_n up to
// conjugacy. Both strategies walk the subset lattice extending sets only by
// larger-ranked elements; the removal of the largest member of a canonical
// independent set is again canonical, so every class is reached exactly once.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indgen/indep.hpp"
#include "indgen/perm_set.hpp"

namespace indgen {

enum class Strategy {
  CanonicalPath, // keep a child only if it is its own canonical representative
  VisitedDb,     // map every child to its representative, deduplicate in a store
};

std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from_string(std::string_view s);

// One conjugacy class of independent sets.
struct ClassRecord {
  PermSet representative{1};       // canonical: lex-least sorted rank sequence
  std::uint64_t class_size = 0;    // degree! / stabilizer order
  SetClassification classification;
  std::string symmetry_label;      // group label of the setwise stabilizer
  std::uint32_t symmetry_order = 0;
  std::optional<int> diameter;     // generating classes only
  bool incremental = false;            // some removal generates ~ S_{n-1}
  bool strongly_incremental = false;   // every removal does

  bool operator==(const ClassRecord&) const = default;
};

struct ClassDatabase {
  int degree = 0;
  Strategy strategy = Strategy::CanonicalPath;
  std::vector<ClassRecord> records; // sorted by (size, set key)

  std::uint64_t total_independent_sets() const;
  std::size_t class_count() const { return records.size(); }
  std::size_t generating_class_count() const;
  std::size_t dead_end_class_count() const;
  std::map<int, std::size_t> class_count_by_size() const;

  bool operator==(const ClassDatabase&) const = default;
};

struct EnumerateOptions {
  Strategy strategy = Strategy::CanonicalPath;
  // Worker threads for the canonical-path strategy; work is partitioned by
  // the first two set members, so subtrees are disjoint and the result is
  // independent of the worker count. 0 means hardware concurrency.
  // The visited-db strategy always runs single-threaded.
  int workers = 1;
};

// Full classification for 1 <= degree <= 7. Sets of more than degree-1
// members cannot be independent (checked for small degrees by the
// verification suite), so the search depth is capped there.
ClassDatabase enumerate_classes(int degree, const EnumerateOptions& options = {});

struct BruteForceCounts {
  std::uint64_t total_independent_sets = 0;
  std::uint64_t class_count = 0;
  std::uint64_t generating_class_count = 0;

  bool operator==(const BruteForceCounts&) const = default;
};

// Independence test applied to every subset of size <= degree-1 (plus {}
// and {()}), classes by explicit orbit partition. No canonicalization.
// Only feasible and allowed for degree <= 4.
BruteForceCounts brute_force_count(int degree);

std::size_t dead_end_classes(const ClassDatabase& db);

// size -> number of generating classes of that size.
std::map<int, std::size_t> size_distribution(const ClassDatabase& db);

// Conjugacy classes of independent 2-element generating sets, by
// canonical-path enumeration restricted to pairs. Supports 2 <= degree <= 8;
// degree 8 is supported only here, not by enumerate_classes.
std::uint64_t count_generating_pair_classes(int degree, int workers = 1);

} // namespace indgen
