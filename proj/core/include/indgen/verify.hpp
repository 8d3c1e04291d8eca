// Self-checks: brute force against the search, strategy cross-check, class
// size identities, invariant spot checks, and the catalog of the fourteen
// generating classes of S_4.
#pragma once

#include <string>
#include <vector>

#include "indgen/perm_set.hpp"
#include "indgen/search.hpp"

namespace indgen {

struct VerifyCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok() const;
};

struct VerifyOptions {
  int workers = 1;
  // When set, the freshly enumerated database is compared record by record
  // against this stored one.
  const ClassDatabase* reference = nullptr;
};

// Runs every check that applies at this degree: brute force comparison
// (degree <= 4, including an uncapped search), strategy equivalence
// (degree <= 5), class-size sum identity, database invariants, label
// distinctness, catalog comparison (degree 4), and the reference diff.
VerifyReport run_verification(int degree, const VerifyOptions& options = {});

struct CatalogEntry {
  PermSet set;
  bool well_known = false;
};

// The fourteen generating classes of S_4, as commonly listed; three of them
// (the transposition chain, the base-point star, and cycle-plus-
// transposition) are flagged as well known.
const std::vector<CatalogEntry>& s4_generating_catalog();

} // namespace indgen
