// Canonical representatives of permutation sets under simultaneous
// conjugation. Two sets are conjugate when some g maps one onto the other
// elementwise; the canonical representative of a class is the member whose
// sorted rank sequence is lexicographically least.
#pragma once

#include <cstdint>
#include <vector>

#include "indgen/perm.hpp"
#include "indgen/perm_set.hpp"

namespace indgen {

// Sorted rank sequence of a set; compares lexicographically.
using SetKey = std::vector<Rank>;

SetKey set_key(const PermSet& a);

struct CanonicalRep {
  PermSet rep;
  std::uint64_t stabilizer_order = 0; // |{g : A^g = A}|
};

// Lexicographically least conjugate of a, plus the setwise stabilizer order
// (computed by direct scan over all degree! conjugators).
CanonicalRep canonical_rep(const PermSet& a);

// A covering set of conjugators for the minimization: every g that could
// realize the least conjugate maps some member of a, of minimal attainable
// type minimum, to that minimum. a must be nonempty; for a = {()} this is
// all of S_n.
std::vector<Perm> conjugator_candidates(const PermSet& a);

// Orbit size of a under conjugation: degree! / stabilizer order.
std::uint64_t class_size(const PermSet& a);

// a equals the canonical representative of its class.
bool is_canonical(const PermSet& a);

} // namespace indgen
