#include <stdexcept>

#include "doctest.h"
#include "indgen/closure.hpp"
#include "indgen/indep.hpp"
#include "indgen/perm_set.hpp"
#include "test_util.hpp"

using namespace indgen;

namespace {

// Definition applied literally: no member lies in the closure of the others.
bool naive_independent(const PermSet& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto rest = testutil::naive_close(a.without(i));
    if (rest.count(a[i])) return false;
  }
  return true;
}

} // namespace

TEST_CASE("empty set is independent but neither maximal nor generating") {
  for (int n = 1; n <= 4; ++n) {
    const SetClassification c = classify(PermSet(n));
    CHECK(c.independent);
    CHECK_FALSE(c.generating);
    CHECK_FALSE(c.maximal);
    CHECK_FALSE(c.dead_end);
  }
}

TEST_CASE("identity singleton is independent") {
  CHECK(is_independent(PermSet::from_cycles(3, {"()"})));
  // and at degree 1 it generates the whole group
  const SetClassification c = classify(PermSet::from_cycles(1, {"()"}));
  CHECK(c.independent);
  CHECK(c.generating);
  CHECK(c.maximal);
  CHECK_FALSE(c.dead_end);
}

TEST_CASE("adding the identity to anything breaks independence") {
  // the identity is a product of the other member with itself enough times
  for (const auto& p : testutil::all_perms(3)) {
    if (p.is_identity()) continue;
    CHECK_FALSE(is_independent(PermSet(3, {Perm::identity(3), p})));
  }
}

TEST_CASE("every singleton is independent") {
  for (const auto& p : testutil::all_perms(4))
    CHECK(is_independent(PermSet(4, {p})));
}

TEST_CASE("a generator reachable from the others is dependent") {
  CHECK_FALSE(
      is_independent(PermSet::from_cycles(3, {"(1,2,3)", "(1,3,2)"})));
  CHECK_FALSE(is_independent(
      PermSet::from_cycles(4, {"(1,2)", "(2,3)", "(1,2,3)"})));
  CHECK(is_independent(PermSet::from_cycles(4, {"(1,2)", "(2,3)"})));
}

TEST_CASE("independence matches the definition on every subset of S3") {
  for (const auto& a : testutil::all_subsets(3))
    CHECK(is_independent(a) == naive_independent(a));
}

TEST_CASE("independence matches the definition on sampled S4 and S5 sets") {
  for (int degree : {4, 5})
    for (const auto& a : testutil::sample_sets(degree, 4, 40))
      CHECK(is_independent(a) == naive_independent(a));
}

TEST_CASE("independence is hereditary on every subset of S3") {
  for (const auto& a : testutil::all_subsets(3)) {
    if (!is_independent(a)) continue;
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(is_independent(a.without(i)));
  }
}

TEST_CASE("no independent set of S3 has three or more members") {
  for (const auto& a : testutil::all_subsets(3))
    if (a.size() >= 3) CHECK_FALSE(is_independent(a));
}

TEST_CASE("generating recognizes full closures only") {
  CHECK(is_generating(PermSet::from_cycles(3, {"(1,2)", "(2,3)"})));
  CHECK(is_generating(PermSet::from_cycles(4, {"(1,2)", "(1,2,3,4)"})));
  CHECK_FALSE(is_generating(PermSet::from_cycles(4, {"(1,2,3)", "(2,3,4)"})));
  CHECK_FALSE(is_generating(PermSet(3)));
  CHECK_FALSE(is_generating(PermSet::from_cycles(3, {"()"})));
}

TEST_CASE("maximal independent: extension scan") {
  // {(1,2)} in S3 extends to {(1,2),(2,3)}
  CHECK_FALSE(is_maximal_independent(PermSet::from_cycles(3, {"(1,2)"})));
  CHECK(is_maximal_independent(PermSet::from_cycles(3, {"(1,2)", "(2,3)"})));
  // {()} cannot be extended at all: any extension contains the identity
  CHECK(is_maximal_independent(PermSet::from_cycles(2, {"()"})));
  CHECK_THROWS_AS(
      is_maximal_independent(PermSet::from_cycles(3, {"(1,2,3)", "(1,3,2)"})),
      std::invalid_argument);
}

TEST_CASE("dead end flag means maximal and not generating") {
  // the identity singleton is the classic dead end at degree 2
  const SetClassification c = classify(PermSet::from_cycles(2, {"()"}));
  CHECK(c.independent);
  CHECK(c.maximal);
  CHECK_FALSE(c.generating);
  CHECK(c.dead_end);

  // a maximal generating set is not a dead end
  const SetClassification g =
      classify(PermSet::from_cycles(3, {"(1,2)", "(2,3)"}));
  CHECK(g.generating);
  CHECK(g.maximal);
  CHECK_FALSE(g.dead_end);
}

TEST_CASE("classification flags are consistent on every subset of S3") {
  for (const auto& a : testutil::all_subsets(3)) {
    const SetClassification c = classify(a);
    CHECK(c.independent == is_independent(a));
    CHECK(c.generating == is_generating(a));
    if (!c.independent) {
      CHECK_FALSE(c.maximal);
      CHECK_FALSE(c.dead_end);
    } else {
      CHECK(c.maximal == is_maximal_independent(a));
    }
    CHECK(c.dead_end == (c.independent && c.maximal && !c.generating));
    if (c.independent && c.generating && !a.empty()) CHECK(c.maximal);
  }
}

TEST_CASE("classification is conjugation invariant") {
  for (const auto& a : testutil::sample_sets(4, 3, 30)) {
    for (const auto& g : testutil::sample_sets(4, 1, 10, 7)) {
      CHECK(classify(a) == classify(a.conjugated(g[0])));
    }
  }
}
