// Acceptance gate: one PASS/FAIL line per criterion, pinned to the
// reference values. Runs degrees 1..6 by default (seconds to minutes);
// --n-max 7 adds the large degree, --pairs8 the degree-8 pair count.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "indgen/analyze.hpp"
#include "indgen/canon.hpp"
#include "indgen/closure.hpp"
#include "indgen/database_io.hpp"
#include "indgen/indep.hpp"
#include "indgen/perm.hpp"
#include "indgen/perm_set.hpp"
#include "indgen/search.hpp"
#include "indgen/tables.hpp"
#include "indgen/verify.hpp"

using namespace indgen;

namespace {

struct Expected {
  std::uint64_t total = 0;
  std::uint64_t classes = 0;
  std::uint64_t generating = 0;
  std::uint64_t dead_ends = 0;
  std::map<int, std::size_t> sizes;           // generating classes by size
  std::map<std::string, std::size_t> symmetry; // over generating classes
  int dia_min = 0;
  int dia_max = 0;
};

// Reference values, degrees 2..7.
const std::map<int, Expected> kExpected = {
    {2, {3, 3, 1, 1, {{1, 1}}, {{"Z2", 1}}, 1, 1}},
    {3, {16, 6, 2, 1, {{2, 2}}, {{"trivial", 1}, {"Z2", 1}}, 2, 3}},
    {4,
     {413, 31, 14, 4, {{2, 5}, {3, 9}},
      {{"trivial", 8}, {"Z2", 5}, {"S3", 1}}, 4, 7}},
    {5,
     {25346, 258, 178, 19, {{2, 31}, {3, 138}, {4, 9}},
      {{"trivial", 150}, {"Z2", 25}, {"Z3", 1}, {"S3", 1}, {"S4", 1}}, 5, 14}},
    {6,
     {6825268, 10294, 8621, 278, {{2, 163}, {3, 6355}, {4, 2059}, {5, 44}},
      {{"trivial", 7931}, {"Z2", 645}, {"Z2xZ2", 11}, {"Z3", 6}, {"D4", 4},
       {"S3", 20}, {"S4", 2}, {"S5", 2}}, 7, 18}},
    {7,
     {750102585, 155305, 126515, 17591,
      {{2, 1576}, {3, 67078}, {4, 54398}, {5, 3415}, {6, 48}},
      {{"trivial", 121426}, {"Z2", 4846}, {"Z2xZ2", 78}, {"Z3", 7}, {"D4", 7},
       {"D6", 7}, {"S3", 134}, {"S4", 8}, {"S5", 1}, {"S6", 1}}, 8, 34}},
};

const std::map<int, std::size_t> kIncremental = {
    {2, 1}, {3, 2}, {4, 9}, {5, 92}, {6, 6907}};

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out.empty() ? "ok" : out;
}

} // namespace

int main(int argc, char** argv) {
  int n_max = 6;
  bool pairs8 = false;
  int workers = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--n-max") && i + 1 < argc)
      n_max = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--pairs8"))
      pairs8 = true;
    else if (!std::strcmp(argv[i], "--workers") && i + 1 < argc)
      workers = std::atoi(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--n-max N] [--pairs8] [--workers W]\n",
                   argv[0]);
      return 2;
    }
  }
  if (n_max < 6 || n_max > 7) {
    std::fprintf(stderr, "--n-max must be 6 or 7\n");
    return 2;
  }

  std::map<int, ClassDatabase> dbs;
  std::map<int, double> enum_seconds;
  for (int n = 1; n <= n_max; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    dbs[n] = enumerate_classes(n, {.workers = workers});
    enum_seconds[n] = seconds_since(t0);
  }

  // 1: set, class and generating-class counts
  {
    std::vector<std::string> bad;
    char buf[160];
    for (int n = 2; n <= n_max; ++n) {
      const Expected& e = kExpected.at(n);
      const ClassDatabase& db = dbs.at(n);
      if (db.total_independent_sets() != e.total ||
          db.class_count() != e.classes ||
          db.generating_class_count() != e.generating) {
        std::snprintf(buf, sizeof buf,
                      "n=%d got (%llu, %zu, %zu) want (%llu, %llu, %llu)", n,
                      static_cast<unsigned long long>(db.total_independent_sets()),
                      db.class_count(), db.generating_class_count(),
                      static_cast<unsigned long long>(e.total),
                      static_cast<unsigned long long>(e.classes),
                      static_cast<unsigned long long>(e.generating));
        bad.push_back(buf);
      }
    }
    // degree 1 follows the stated convention instead of the table
    if (dbs.at(1).total_independent_sets() != 2 ||
        dbs.at(1).class_count() != 2 ||
        dbs.at(1).generating_class_count() != 1)
      bad.push_back("n=1 convention broken");
    double upto5 = 0;
    for (int n = 1; n <= 5; ++n) upto5 += enum_seconds.at(n);
    if (upto5 > 60) bad.push_back("degrees 1..5 took over a minute");
    if (enum_seconds.at(6) > 600) bad.push_back("degree 6 took over ten minutes");
    std::snprintf(buf, sizeof buf,
                  "%s (degrees 1..5 in %.1fs, degree 6 in %.1fs%s)",
                  bad.empty() ? "counts match the reference table" : join(bad).c_str(),
                  upto5, enum_seconds.at(6),
                  n_max >= 7 ? (", degree 7 in " +
                                std::to_string(static_cast<int>(enum_seconds.at(7))) +
                                "s").c_str()
                             : "");
    report(1, bad.empty(), buf);
  }

  // 2: dead-end classes and the structure of the degree-4 ones
  {
    std::vector<std::string> bad;
    for (int n = 2; n <= n_max; ++n) {
      const std::size_t got = dbs.at(n).dead_end_class_count();
      if (got != kExpected.at(n).dead_ends)
        bad.push_back("n=" + std::to_string(n) + " got " + std::to_string(got) +
                      " want " + std::to_string(kExpected.at(n).dead_ends));
    }
    std::multiset<std::string> closure_labels;
    for (const auto& r : dbs.at(4).records)
      if (r.classification.dead_end)
        closure_labels.insert(
            identify_group(signature(close(r.representative))).to_string());
    const std::multiset<std::string> want = {"trivial", "D4", "D4", "Z2xZ2"};
    if (closure_labels != want) {
      std::string got;
      for (const auto& l : closure_labels) got += l + " ";
      bad.push_back("degree-4 dead ends close to: " + got);
    }
    report(2, bad.empty(),
           bad.empty()
               ? "dead ends are 1, 1, 4, 19, 278; the four at degree 4 close "
                 "to trivial, D4, D4, Z2xZ2"
               : join(bad));
  }

  // 3: generating-class sizes with rendered percentages
  {
    std::vector<std::string> bad;
    for (int n = 3; n <= n_max; ++n)
      if (size_distribution(dbs.at(n)) != kExpected.at(n).sizes)
        bad.push_back("size histogram differs at n=" + std::to_string(n));
    std::vector<const ClassDatabase*> views;
    for (int n = 1; n <= n_max; ++n) views.push_back(&dbs.at(n));
    const std::string text = render_tables(views, OutputFormat::Text);
    if (text.find("5 (35.71%)") == std::string::npos)
      bad.push_back("rendered table lacks the 35.71% cell");
    if (text.find("31 (17.41%)") == std::string::npos)
      bad.push_back("rendered table lacks the 17.41% cell");
    report(3, bad.empty(),
           bad.empty() ? "size histograms match; two-member shares render as "
                         "35.71% and 17.41%"
                       : join(bad));
  }

  // 4: diameter extremes and the slow classes
  {
    std::vector<std::string> bad;
    for (int n = 2; n <= n_max; ++n) {
      const DiameterExtremes ext = diameter_extremes(dbs.at(n));
      if (ext.min != kExpected.at(n).dia_min ||
          ext.max != kExpected.at(n).dia_max)
        bad.push_back("n=" + std::to_string(n) + " got (" +
                      std::to_string(ext.min) + ", " + std::to_string(ext.max) +
                      ")");
    }
    const auto slow = [&](int n) {
      std::set<PermSet> out;
      for (const auto& m : diameter_extremes(dbs.at(n)).maximizers)
        out.insert(m);
      return out;
    };
    if (slow(4) != std::set<PermSet>{canonical_rep(PermSet::from_cycles(
                       4, {"(1,2,3)", "(3,4)"})).rep})
      bad.push_back("degree-4 slow class is not {(1,2,3),(3,4)}");
    if (slow(5) != std::set<PermSet>{canonical_rep(PermSet::from_cycles(
                       5, {"(1,2,4,3)", "(2,3)(4,5)"})).rep})
      bad.push_back("degree-5 slow class is not {(1,2,4,3),(2,3)(4,5)}");
    if (slow(6) !=
        std::set<PermSet>{
            canonical_rep(PermSet::from_cycles(6, {"(2,3)(4,5,6)",
                                                   "(1,2)(3,4)(5,6)"})).rep,
            canonical_rep(PermSet::from_cycles(6, {"(5,6)", "(1,2,3,4,5,6)"}))
                .rep})
      bad.push_back("degree-6 slow classes are not the expected two");
    report(4, bad.empty(),
           bad.empty() ? "diameter extremes (1,1) (2,3) (4,7) (5,14) (7,18) "
                         "and the slow classes match"
                       : join(bad));
  }

  // 5: symmetry-group histograms
  {
    std::vector<std::string> bad;
    for (int n = 2; n <= n_max; ++n) {
      std::map<std::string, std::size_t> hist;
      std::size_t generating = 0;
      for (const auto& r : dbs.at(n).records) {
        if (!r.classification.generating) continue;
        ++generating;
        ++hist[r.symmetry_label];
      }
      if (hist != kExpected.at(n).symmetry)
        bad.push_back("histogram differs at n=" + std::to_string(n));
      std::size_t sum = 0;
      for (const auto& [label, count] : hist) sum += count;
      if (sum != generating)
        bad.push_back("histogram sum misses generating count at n=" +
                      std::to_string(n));
    }
    report(5, bad.empty(),
           bad.empty() ? "symmetry histograms match the reference table "
                         "through degree " + std::to_string(n_max)
                       : join(bad));
  }

  // 6: incremental counts
  {
    std::vector<std::string> bad;
    for (const auto& [n, want] : kIncremental) {
      const std::size_t got = incremental_class_count(dbs.at(n));
      if (got != want)
        bad.push_back("n=" + std::to_string(n) + " got " + std::to_string(got) +
                      " want " + std::to_string(want));
    }
    report(6, bad.empty(),
           bad.empty() ? "incremental classes are 1, 2, 9, 92, 6907" : join(bad));
  }

  // 7: the degree-4 catalog, class for class
  {
    std::set<PermSet> enumerated;
    for (const auto& r : dbs.at(4).records)
      if (r.classification.generating) enumerated.insert(r.representative);
    std::set<PermSet> catalog;
    bool entries_ok = true;
    for (const auto& entry : s4_generating_catalog()) {
      if (!is_independent(entry.set) || !is_generating(entry.set))
        entries_ok = false;
      catalog.insert(canonical_rep(entry.set).rep);
    }
    const bool ok = entries_ok && catalog.size() == 14 &&
                    enumerated == catalog;
    report(7, ok,
           ok ? "catalog classes: 14/14 matched one to one"
              : "catalog and enumeration disagree");
  }

  // 8: property suite
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> bad;

    // strategy equivalence, degrees 1..5
    for (int n = 1; n <= 5; ++n) {
      const ClassDatabase other = enumerate_classes(
          n, {.strategy = Strategy::VisitedDb, .workers = workers});
      if (other.records != dbs.at(n).records)
        bad.push_back("strategies disagree at n=" + std::to_string(n));
    }

    // brute-force oracle, degrees 1..4
    for (int n = 1; n <= 4; ++n) {
      const BruteForceCounts bf = brute_force_count(n);
      if (bf.total_independent_sets != dbs.at(n).total_independent_sets() ||
          bf.class_count != dbs.at(n).class_count() ||
          bf.generating_class_count != dbs.at(n).generating_class_count())
        bad.push_back("brute force disagrees at n=" + std::to_string(n));
    }

    // heredity and the size bound, degrees 2..4, no size cap
    for (int n = 2; n <= 4; ++n) {
      for (const auto& r : dbs.at(n).records)
        for (std::size_t i = 0; i < r.representative.size(); ++i)
          if (!is_independent(r.representative.without(i)))
            bad.push_back("heredity broken at n=" + std::to_string(n));
      // every size-n subset must be dependent
      std::uint32_t order = 1;
      for (int i = 2; i <= n; ++i) order *= static_cast<std::uint32_t>(i);
      std::vector<std::uint32_t> idx(n);
      for (int i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(i);
      bool done = false;
      while (!done) {
        std::vector<Perm> members;
        for (const std::uint32_t r : idx) members.push_back(unrank(r, n));
        if (is_independent(PermSet(n, std::move(members)))) {
          bad.push_back("size bound broken at n=" + std::to_string(n));
          break;
        }
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == order - static_cast<std::uint32_t>(n - pos))
          --pos;
        if (pos < 0) done = true;
        else {
          ++idx[pos];
          for (int j = pos + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
        }
      }
    }

    // conjugation invariance of the analyses, degree 4
    {
      const std::vector<PermSet> probes = {
          PermSet::from_cycles(4, {"(1,2)", "(1,2,3,4)"}),
          PermSet::from_cycles(4, {"(1,2,3)", "(3,4)"}),
          PermSet::from_cycles(4, {"(1,2)", "(2,3)", "(3,4)"}),
          PermSet::from_cycles(4, {"(1,2)", "(3,4)"}),
          PermSet::from_cycles(4, {"(1,2,3)", "(2,3,4)"}),
          PermSet::from_cycles(4, {"()"}),
      };
      for (const auto& a : probes) {
        const SetClassification c = classify(a);
        const SymmetryInfo sym = symmetry_group(a);
        for (std::uint32_t g = 0; g < 24; ++g) {
          const PermSet image = a.conjugated(unrank(g, 4));
          if (classify(image) != c)
            bad.push_back("classification not conjugation invariant");
          const SymmetryInfo sym2 = symmetry_group(image);
          if (sym2.order != sym.order ||
              sym2.label.to_string() != sym.label.to_string())
            bad.push_back("symmetry not conjugation invariant");
          if (c.generating && diameter(image) != diameter(a))
            bad.push_back("diameter not conjugation invariant");
        }
      }
    }

    // orbit sizes tile the sets, every degree
    for (int n = 1; n <= n_max; ++n) {
      std::uint64_t group_order = 1;
      for (int i = 2; i <= n; ++i) group_order *= static_cast<std::uint64_t>(i);
      std::uint64_t sum = 0;
      for (const auto& r : dbs.at(n).records) {
        sum += r.class_size;
        if (r.class_size * r.symmetry_order != group_order)
          bad.push_back("orbit-stabilizer identity broken at n=" +
                        std::to_string(n));
      }
      if (sum != dbs.at(n).total_independent_sets())
        bad.push_back("class sizes do not tile the total at n=" +
                      std::to_string(n));
    }

    // one-point extensions keep generating, degrees 3..5 exhaustively
    for (int m = 3; m <= 5; ++m) {
      std::uint32_t small_order = 1;
      for (int i = 2; i < m; ++i) small_order *= static_cast<std::uint32_t>(i);
      std::uint32_t big_order = small_order * static_cast<std::uint32_t>(m);
      for (const auto& r : dbs.at(m - 1).records) {
        if (!r.classification.generating) continue;
        std::set<PermSet> orbit;
        for (std::uint32_t h = 0; h < small_order; ++h)
          orbit.insert(r.representative.conjugated(unrank(h, m - 1)));
        for (const auto& a : orbit)
          for (std::uint32_t g = 0; g < big_order; ++g) {
            const Perm mover = unrank(g, m);
            if (mover.image(m) == m) continue;
            if (!lemma_extension_holds(a, mover)) {
              bad.push_back("extension fails at m=" + std::to_string(m));
              g = big_order;
            }
          }
      }
    }

    // closure laws: extensive, idempotent when fed back as generators
    for (const auto& r : dbs.at(4).records) {
      if (r.representative.empty()) continue;
      const ElementMask once = close(r.representative);
      std::vector<Perm> elems;
      once.for_each([&](Rank rk) { elems.push_back(unrank(rk, 4)); });
      for (const Perm& p : r.representative.members())
        if (!contains(once, p)) bad.push_back("closure lost a generator");
      if (close(PermSet(4, std::move(elems))) != once)
        bad.push_back("closure not idempotent");
    }

    // round-trip laws: ranks, cycle text, database files
    for (int n = 1; n <= 5; ++n) {
      std::uint32_t order = 1;
      for (int i = 2; i <= n; ++i) order *= static_cast<std::uint32_t>(i);
      for (std::uint32_t r = 0; r < order; ++r) {
        const Perm p = unrank(r, n);
        if (rank(p) != r) bad.push_back("rank round trip broken");
        if (parse_cycles(format_cycles(p), n) != p)
          bad.push_back("cycle text round trip broken");
      }
    }
    for (std::uint32_t r : {0u, 719u, 5039u})
      if (rank(unrank(r, 7)) != r) bad.push_back("rank round trip broken at 7");
    {
      const auto tmp = std::filesystem::temp_directory_path() /
                       "indgen-acceptance-roundtrip.jsonl";
      write_database(dbs.at(4), tmp);
      if (read_database(tmp) != dbs.at(4))
        bad.push_back("database round trip broken");
      std::filesystem::remove(tmp);
    }

    const double elapsed = seconds_since(t0);
    if (elapsed > 300) bad.push_back("property suite exceeded five minutes");
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s (%.1fs)",
                  bad.empty() ? "strategy, oracle, heredity, size-bound, "
                                "invariance, tiling, extension, closure and "
                                "round-trip properties hold"
                              : join(bad).c_str(),
                  elapsed);
    report(8, bad.empty(), buf);
  }

  // optional: the degree-8 pair count
  if (pairs8) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t got = count_generating_pair_classes(8, workers);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "degree-8 generating pair classes: got %llu, reference "
                  "21912 (%.0fs)",
                  static_cast<unsigned long long>(got), seconds_since(t0));
    report(3, got == 21912, buf);
  }

  std::printf("%s: %d criterion failure%s\n", failures ? "FAIL" : "OK",
              failures, failures == 1 ? "" : "s");
  return failures ? 1 : 0;
}
