// Independence of permutation sets: A is independent when no member lies in
// the closure of the others. Subsets of independent sets are independent,
// and every singleton (including {()}) is independent because close({}) is
// empty. Every independent subset of S_n with n >= 2 has at most n-1
// members.
#pragma once

#include "indgen/perm_set.hpp"

namespace indgen {

bool is_independent(const PermSet& a);

// close(a) = S_n.
bool is_generating(const PermSet& a);

// No proper independent superset exists. Candidates b are tested in rank
// order; the scan short-circuits at the first independent extension.
// Throws std::invalid_argument when a is dependent.
bool is_maximal_independent(const PermSet& a);

struct SetClassification {
  bool independent = false;
  bool generating = false;
  bool maximal = false;  // maximal independent; false for dependent sets
  bool dead_end = false; // independent, maximal, not generating

  bool operator==(const SetClassification&) const = default;
};

SetClassification classify(const PermSet& a);

} // namespace indgen
