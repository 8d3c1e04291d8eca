#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "indgen/canon.hpp"
#include "indgen/closure.hpp"
#include "indgen/indep.hpp"
#include "indgen/search.hpp"
#include "test_util.hpp"

using namespace indgen;

TEST_CASE("strategy names round trip") {
  CHECK(to_string(Strategy::CanonicalPath) == "canonical-path");
  CHECK(to_string(Strategy::VisitedDb) == "visited-db");
  CHECK(strategy_from_string("canonical-path") == Strategy::CanonicalPath);
  CHECK(strategy_from_string("visited-db") == Strategy::VisitedDb);
  CHECK_FALSE(strategy_from_string("nope").has_value());
}

TEST_CASE("enumeration rejects out of range degrees") {
  CHECK_THROWS_AS(enumerate_classes(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_classes(8), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_count(5), std::invalid_argument);
  CHECK_THROWS_AS(count_generating_pair_classes(1), std::invalid_argument);
  CHECK_THROWS_AS(count_generating_pair_classes(9), std::invalid_argument);
}

TEST_CASE("small degree class counts") {
  const ClassDatabase db1 = enumerate_classes(1);
  CHECK(db1.total_independent_sets() == 2); // {} and {()}
  CHECK(db1.class_count() == 2);
  CHECK(db1.generating_class_count() == 1);
  CHECK(db1.dead_end_class_count() == 0);

  const ClassDatabase db2 = enumerate_classes(2);
  CHECK(db2.total_independent_sets() == 3);
  CHECK(db2.class_count() == 3);
  CHECK(db2.generating_class_count() == 1);
  CHECK(db2.dead_end_class_count() == 1);

  const ClassDatabase db3 = enumerate_classes(3);
  CHECK(db3.total_independent_sets() == 16);
  CHECK(db3.class_count() == 6);
  CHECK(db3.generating_class_count() == 2);
  CHECK(db3.dead_end_class_count() == 1);

  const ClassDatabase db4 = enumerate_classes(4);
  CHECK(db4.total_independent_sets() == 413);
  CHECK(db4.class_count() == 31);
  CHECK(db4.generating_class_count() == 14);
  CHECK(db4.dead_end_class_count() == 4);
}

TEST_CASE("records are canonical, sorted and disjoint") {
  const ClassDatabase db = enumerate_classes(4);
  std::set<SetKey> keys;
  int prev_size = -1;
  SetKey prev_key;
  for (const auto& r : db.records) {
    CHECK(is_canonical(r.representative));
    CHECK(r.classification.independent);
    CHECK(r.class_size == class_size(r.representative));
    const SetKey key = set_key(r.representative);
    CHECK(keys.insert(key).second);
    const int size = static_cast<int>(r.representative.size());
    if (size == prev_size) CHECK(prev_key < key);
    else CHECK(prev_size < size);
    prev_size = size;
    prev_key = key;
  }
}

TEST_CASE("every independent class of S3 appears exactly once") {
  // collect canonical representatives by brute force over all subsets
  std::set<PermSet> expected;
  for (const auto& a : testutil::all_subsets(3))
    if (is_independent(a)) expected.insert(canonical_rep(a).rep);
  std::set<PermSet> got;
  for (const auto& r : enumerate_classes(3).records)
    got.insert(r.representative);
  CHECK(got == expected);
}

TEST_CASE("class sizes add up to the total") {
  for (int n = 1; n <= 4; ++n) {
    const ClassDatabase db = enumerate_classes(n);
    std::uint64_t sum = 0;
    for (const auto& r : db.records) sum += r.class_size;
    CHECK(sum == db.total_independent_sets());
  }
}

TEST_CASE("brute force counts agree with the search") {
  for (int n = 1; n <= 4; ++n) {
    const ClassDatabase db = enumerate_classes(n);
    const BruteForceCounts bf = brute_force_count(n);
    CHECK(bf.total_independent_sets == db.total_independent_sets());
    CHECK(bf.class_count == db.class_count());
    CHECK(bf.generating_class_count == db.generating_class_count());
  }
}

TEST_CASE("both strategies produce identical databases") {
  for (int n = 1; n <= 4; ++n) {
    const ClassDatabase a =
        enumerate_classes(n, {.strategy = Strategy::CanonicalPath});
    const ClassDatabase b =
        enumerate_classes(n, {.strategy = Strategy::VisitedDb});
    CHECK(a.records == b.records);
    CHECK(a.strategy == Strategy::CanonicalPath);
    CHECK(b.strategy == Strategy::VisitedDb);
  }
}

TEST_CASE("worker count does not change the result") {
  const ClassDatabase one = enumerate_classes(4, {.workers = 1});
  const ClassDatabase three = enumerate_classes(4, {.workers = 3});
  const ClassDatabase all = enumerate_classes(4, {.workers = 0});
  CHECK(one.records == three.records);
  CHECK(one.records == all.records);
}

TEST_CASE("set sizes never exceed degree minus one") {
  for (int n = 2; n <= 5; ++n) {
    const ClassDatabase db = enumerate_classes(n);
    std::size_t max_size = 0;
    for (const auto& r : db.records)
      max_size = std::max(max_size, r.representative.size());
    CHECK(max_size == static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("size distribution counts generating classes by size") {
  const ClassDatabase db = enumerate_classes(4);
  const auto dist = size_distribution(db);
  CHECK(dist == std::map<int, std::size_t>{{2, 5}, {3, 9}});
  std::size_t total = 0;
  for (const auto& [size, count] : dist) total += count;
  CHECK(total == db.generating_class_count());

  const auto by_size = db.class_count_by_size();
  std::size_t classes = 0;
  for (const auto& [size, count] : by_size) classes += count;
  CHECK(classes == db.class_count());
}

TEST_CASE("generating pair classes match the full enumeration") {
  for (int n = 3; n <= 5; ++n) {
    const auto dist = size_distribution(enumerate_classes(n));
    const auto it = dist.find(2);
    REQUIRE(it != dist.end());
    CHECK(count_generating_pair_classes(n) == it->second);
  }
  CHECK(count_generating_pair_classes(2) == 0); // a pair in S2 is dependent
}

TEST_CASE("dead end classes of S4 are the known four") {
  const ClassDatabase db = enumerate_classes(4);
  CHECK(dead_end_classes(db) == 4);
  std::multiset<std::size_t> closure_orders;
  for (const auto& r : db.records)
    if (r.classification.dead_end)
      closure_orders.insert(order(close(r.representative)));
  // identity singleton, two with closure of order 8, one of order 4
  CHECK(closure_orders == std::multiset<std::size_t>{1, 4, 8, 8});
}
