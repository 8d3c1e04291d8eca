// Per-class analyses: symmetry groups of generating sets, Cayley-graph
// diameters, incremental structure, and a few well-known generating sets to
// compare against.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "indgen/closure.hpp"
#include "indgen/perm_set.hpp"
#include "indgen/search.hpp"

namespace indgen {

enum class GroupKind {
  Trivial,
  Z2,
  Z3,
  Z2xZ2,
  D4, // dihedral of order 8
  D6, // dihedral of order 12
  S3,
  S4,
  S5,
  S6,
  Unidentified,
};

struct GroupLabel {
  GroupKind kind = GroupKind::Unidentified;
  GroupSignature sig; // as observed; authoritative for Unidentified

  std::string to_string() const;
};

// Matches the signature against the known labels above; anything else is
// reported as Unidentified carrying its signature, never coerced.
GroupLabel identify_group(const GroupSignature& sig);

struct SymmetryInfo {
  std::uint64_t order = 0;
  GroupLabel label;
};

// Setwise conjugation stabilizer {g : A^g = A} of a, as a labeled group.
SymmetryInfo symmetry_group(const PermSet& a);

// Maximum over close(a) of the shortest factorization length.
// Throws std::invalid_argument unless a generates.
int diameter(const PermSet& a);

struct DiameterExtremes {
  int min = 0;
  int max = 0;
  std::vector<PermSet> minimizers; // representatives attaining min
  std::vector<PermSet> maximizers; // representatives attaining max
};

// Extremes over all generating classes of the database.
DiameterExtremes diameter_extremes(const ClassDatabase& db);

// A generating set A of S_n (n >= 2) is incremental if removing some member
// leaves a subgroup isomorphic to S_{n-1}, and strongly incremental if every
// removal does. Isomorphism is decided by signature match. Removing the only
// member of a generating singleton leaves the trivial subgroup.
bool is_incremental(const PermSet& a);
bool is_strongly_incremental(const PermSet& a);

// Number of incremental generating classes; 0 for degree 1.
std::size_t incremental_class_count(const ClassDatabase& db);

enum class FolkloreKind {
  AllTranspositions,      // { (i,j) : i < j }
  BasePoint,              // { (1,k) : k = 2..n }
  Chain,                  // { (i,i+1) : i = 1..n-1 }
  CycleAndTransposition,  // { (1,2,...,n), (1,2) }
};

// Classical generating sets of S_n, n >= 2.
PermSet folklore(FolkloreKind kind, int degree);

// For a generating a of S_{n-1} and g in S_n not fixing the point n,
// the embedded set together with g generates S_n. a.degree() must be
// g.degree()-1 and g must move the last point.
bool lemma_extension_holds(const PermSet& a, const Perm& g);

// Recomputes every analysis field of the database in place (class sizes,
// symmetry, diameters, incremental flags, maximality). Records are
// independent, so the work runs in parallel over them.
void refresh_analyses(ClassDatabase& db, int workers = 1);

} // namespace indgen
