#include "indgen/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "engine.hpp"
#include "indgen/analyze.hpp"
#include "indgen/canon.hpp"
#include "records.hpp"

namespace indgen {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::CanonicalPath: return "canonical-path";
    case Strategy::VisitedDb: return "visited-db";
  }
  return "?";
}

std::optional<Strategy> strategy_from_string(std::string_view s) {
  if (s == "canonical-path") return Strategy::CanonicalPath;
  if (s == "visited-db") return Strategy::VisitedDb;
  return std::nullopt;
}

std::uint64_t ClassDatabase::total_independent_sets() const {
  std::uint64_t total = 0;
  for (const ClassRecord& r : records) total += r.class_size;
  return total;
}

std::size_t ClassDatabase::generating_class_count() const {
  std::size_t n = 0;
  for (const ClassRecord& r : records)
    if (r.classification.generating) ++n;
  return n;
}

std::size_t ClassDatabase::dead_end_class_count() const {
  std::size_t n = 0;
  for (const ClassRecord& r : records)
    if (r.classification.dead_end) ++n;
  return n;
}

std::map<int, std::size_t> ClassDatabase::class_count_by_size() const {
  std::map<int, std::size_t> by_size;
  for (const ClassRecord& r : records)
    ++by_size[static_cast<int>(r.representative.size())];
  return by_size;
}

std::size_t dead_end_classes(const ClassDatabase& db) {
  return db.dead_end_class_count();
}

std::map<int, std::size_t> size_distribution(const ClassDatabase& db) {
  std::map<int, std::size_t> by_size;
  for (const ClassRecord& r : db.records)
    if (r.classification.generating)
      ++by_size[static_cast<int>(r.representative.size())];
  return by_size;
}

namespace internal {

int effective_workers(int requested) {
  if (requested < 0)
    throw std::invalid_argument("worker count must be >= 0");
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_run(int workers, const std::function<void(int)>& body) {
  if (workers <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> threads;
  std::mutex fail_mutex;
  std::exception_ptr failure;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(fail_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

ClassRecord make_class_record(const DegreeContext& ctx,
                              const std::vector<Rank>& members,
                              const ElementMask& closure,
                              const std::vector<ElementMask>& cofactors) {
  assert(members.size() == cofactors.size());
  ClassRecord rec;
  rec.representative = set_from_ranks(ctx, members);

  const auto stab = set_stabilizer(ctx, members);
  rec.class_size = ctx.group_order / stab.size();

  rec.classification.independent = true;
  rec.classification.generating =
      closure.count() == static_cast<std::size_t>(ctx.group_order);

  ElementMask stab_mask(ctx.degree);
  for (const Rank g : stab) stab_mask.set(g);
  const GroupLabel label =
      identify_group(signature_of_closed_mask(ctx, stab_mask));
  rec.symmetry_label = label.to_string();
  rec.symmetry_order = static_cast<std::uint32_t>(stab.size());

  if (rec.classification.generating) {
    const auto dist = word_length_table(ctx, members);
    int far = 0;
    for (const std::int16_t d : dist) {
      assert(d >= 0); // generating: everything is reachable
      far = std::max(far, static_cast<int>(d));
    }
    rec.diameter = far;

    if (ctx.degree >= 2) {
      const GroupSignature& prev = symmetric_group_signature(ctx.degree - 1);
      std::size_t hits = 0;
      for (const ElementMask& cof : cofactors) {
        const std::size_t n = cof.count();
        if (n == 0) {
          // removing the only member leaves the trivial subgroup
          if (ctx.degree == 2) ++hits;
        } else if (n == prev.order &&
                   signature_of_closed_mask(ctx, cof) == prev) {
          ++hits;
        }
      }
      rec.incremental = hits > 0;
      rec.strongly_incremental = !cofactors.empty() && hits == cofactors.size();
    }
  }
  return rec;
}

void mark_maximality(const DegreeContext& ctx,
                     std::vector<ClassRecord>& records, int workers) {
  std::vector<SetKey> keys(records.size());
  std::unordered_map<SetKey, std::size_t, SetKeyHash> index;
  index.reserve(records.size() * 2);
  for (std::size_t i = 0; i < records.size(); ++i) {
    keys[i] = ranks_of(ctx, records[i].representative);
    if (!index.emplace(keys[i], i).second)
      throw std::logic_error("duplicate class representative");
  }

  const int nw = std::min<int>(effective_workers(workers),
                               std::max<std::size_t>(records.size(), 1));
  std::vector<std::vector<char>> marks(
      nw, std::vector<char>(records.size(), 0));
  std::atomic<std::size_t> cursor{0};
  parallel_run(nw, [&](int w) {
    std::vector<Rank> sub;
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= records.size()) break;
      const SetKey& key = keys[i];
      for (std::size_t drop = 0; drop < key.size(); ++drop) {
        sub.clear();
        for (std::size_t j = 0; j < key.size(); ++j)
          if (j != drop) sub.push_back(key[j]);
        const auto it = index.find(canonical_key(ctx, sub));
        if (it == index.end())
          throw std::logic_error("class database is missing a removal class");
        marks[w][it->second] = 1;
      }
    }
  });

  for (std::size_t i = 0; i < records.size(); ++i) {
    bool extendable = false;
    for (int w = 0; w < nw && !extendable; ++w) extendable = marks[w][i] != 0;
    records[i].classification.maximal = !extendable;
    records[i].classification.dead_end =
        !extendable && !records[i].classification.generating;
  }
}

} // namespace internal

namespace {

using internal::CloseScratch;
using internal::CloseStatus;
using internal::DegreeContext;
using internal::TypeInfo;

// Node buffers for one depth of the canonical-path walk.
struct Slot {
  ElementMask closure;
  std::vector<ElementMask> cofactors;
};

struct DfsWork {
  const DegreeContext* ctx = nullptr;
  int cap = 0;
  std::vector<Slot> slots; // slots[d]: state of the path node at depth d
  std::vector<Rank> path;
  std::vector<Rank> rest;
  CloseScratch scratch;
  std::vector<ClassRecord> out;

  void init(const DegreeContext& c, int cap_) {
    ctx = &c;
    cap = cap_;
    slots.resize(cap + 1);
    for (int d = 0; d <= cap; ++d) {
      slots[d].closure = ElementMask(c.degree);
      slots[d].cofactors.assign(d, ElementMask(c.degree));
    }
    path.reserve(cap);
  }
};

// Extends path (at depth) by b into slots[depth + 1] when the result is an
// independent canonical set; on success b is pushed onto the path. The full
// closure is only grown for accepted children, after the cheaper tests.
bool try_child(DfsWork& w, int depth, Rank b) {
  const DegreeContext& ctx = *w.ctx;
  Slot& cur = w.slots[depth];
  Slot& child = w.slots[depth + 1];

  if (cur.closure.test(b)) return false; // dependent: b is a word in path
  // a canonical set starts with its orbit minimum, which b must not undercut
  if (ctx.type_of(b).min_rank < w.path[0]) return false;

  for (int i = 0; i < depth; ++i) {
    w.rest.clear();
    for (int j = 0; j < depth; ++j)
      if (j != i) w.rest.push_back(w.path[j]);
    child.cofactors[i] = cur.cofactors[i];
    if (internal::extend_set(ctx, child.cofactors[i], w.rest, b, w.scratch,
                             w.path[i]) != CloseStatus::Closed)
      return false; // path[i] became redundant
  }

  w.path.push_back(b);
  if (!internal::is_canonical_key(ctx, w.path)) {
    w.path.pop_back();
    return false;
  }

  child.cofactors[depth] = cur.closure;
  child.closure = cur.closure;
  internal::extend_set(ctx, child.closure,
                       std::span(w.path.data(), static_cast<std::size_t>(depth)),
                       b, w.scratch);
  return true;
}

void dfs(DfsWork& w, int depth) {
  w.out.push_back(internal::make_class_record(
      *w.ctx, w.path, w.slots[depth].closure, w.slots[depth].cofactors));
  if (depth == w.cap) return;
  for (Rank b = w.path.back() + 1; b < w.ctx->group_order; ++b) {
    if (try_child(w, depth, b)) {
      dfs(w, depth + 1);
      w.path.pop_back();
    }
  }
}

void sort_records(const DegreeContext& ctx, std::vector<ClassRecord>& records) {
  std::vector<std::pair<SetKey, ClassRecord>> keyed;
  keyed.reserve(records.size());
  for (ClassRecord& r : records)
    keyed.emplace_back(internal::ranks_of(ctx, r.representative), std::move(r));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size())
      return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  records.clear();
  for (auto& [key, rec] : keyed) records.push_back(std::move(rec));
}

std::vector<ClassRecord> canonical_path_records(const DegreeContext& ctx,
                                                int cap, int workers) {
  std::vector<ClassRecord> out;

  { // the empty set is its own class
    const ElementMask nothing(ctx.degree);
    out.push_back(internal::make_class_record(ctx, {}, nothing, {}));
  }

  // singleton classes: exactly the least element of each cycle type
  {
    DfsWork w;
    w.init(ctx, cap);
    for (const TypeInfo& t : ctx.types) {
      w.path.assign(1, t.min_rank);
      w.slots[1].cofactors[0].clear();
      internal::close_set(ctx, w.path, w.slots[1].closure, w.scratch);
      out.push_back(internal::make_class_record(ctx, w.path, w.slots[1].closure,
                                                w.slots[1].cofactors));
    }
  }
  if (cap < 2) return out;

  // subtree tasks, partitioned by the singleton and a block of second
  // members; subtrees are disjoint, so results merge without deduplication
  struct Task {
    Rank m;
    Rank lo, hi;
  };
  constexpr Rank kChunk = 512;
  std::vector<Task> tasks;
  for (const TypeInfo& t : ctx.types)
    for (Rank lo = t.min_rank + 1; lo < ctx.group_order; lo += kChunk)
      tasks.push_back(
          {t.min_rank, lo, std::min(ctx.group_order, lo + kChunk)});

  const int nw = static_cast<int>(std::min<std::size_t>(
      internal::effective_workers(workers), tasks.size()));
  std::vector<std::vector<ClassRecord>> results(nw);
  std::atomic<std::size_t> cursor{0};
  internal::parallel_run(nw, [&](int wi) {
    DfsWork w;
    w.init(ctx, cap);
    Rank have_singleton = internal::kNoRank;
    for (;;) {
      const std::size_t t = cursor.fetch_add(1);
      if (t >= tasks.size()) break;
      const Task& task = tasks[t];
      if (task.m != have_singleton) {
        w.path.assign(1, task.m);
        w.slots[1].cofactors[0].clear();
        internal::close_set(ctx, w.path, w.slots[1].closure, w.scratch);
        have_singleton = task.m;
      } else {
        w.path.assign(1, task.m);
      }
      for (Rank b = task.lo; b < task.hi; ++b) {
        if (try_child(w, 1, b)) {
          dfs(w, 2);
          w.path.pop_back();
        }
      }
    }
    results[wi] = std::move(w.out);
  });
  for (std::vector<ClassRecord>& part : results)
    for (ClassRecord& r : part) out.push_back(std::move(r));
  return out;
}

std::vector<ClassRecord> visited_db_records(const DegreeContext& ctx,
                                            int cap) {
  std::vector<ClassRecord> out;
  std::unordered_set<SetKey, internal::SetKeyHash> seen;
  std::vector<SetKey> queue;
  seen.insert({});
  queue.push_back({});

  CloseScratch scratch;
  std::vector<Rank> rest;
  SetKey child;
  ElementMask grown(ctx.degree);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const SetKey cur = queue[head]; // copy: queue grows while iterating
    const int k = static_cast<int>(cur.size());

    ElementMask closure(ctx.degree);
    internal::close_set(ctx, cur, closure, scratch);
    std::vector<ElementMask> cofactors(k, ElementMask(ctx.degree));
    for (int i = 0; i < k; ++i) {
      rest.clear();
      for (int j = 0; j < k; ++j)
        if (j != i) rest.push_back(cur[j]);
      internal::close_set(ctx, rest, cofactors[i], scratch);
    }
    out.push_back(internal::make_class_record(ctx, cur, closure, cofactors));
    if (k == cap) continue;

    const Rank start = cur.empty() ? 0 : cur.back() + 1;
    for (Rank b = start; b < ctx.group_order; ++b) {
      if (closure.test(b)) continue;
      bool independent = true;
      for (int i = 0; i < k && independent; ++i) {
        rest.clear();
        for (int j = 0; j < k; ++j)
          if (j != i) rest.push_back(cur[j]);
        grown = cofactors[i];
        if (internal::extend_set(ctx, grown, rest, b, scratch, cur[i]) !=
            CloseStatus::Closed)
          independent = false;
      }
      if (!independent) continue;
      child = cur;
      child.push_back(b);
      SetKey rep = internal::canonical_key(ctx, child);
      if (seen.insert(rep).second) queue.push_back(std::move(rep));
    }
  }
  return out;
}

} // namespace

ClassDatabase enumerate_classes(int degree, const EnumerateOptions& options) {
  if (degree < 1 || degree > 7)
    throw std::invalid_argument("class enumeration supports degrees 1..7");
  const auto& ctx = DegreeContext::get(degree);
  const int cap = degree == 1 ? 1 : degree - 1;
  const int workers = internal::effective_workers(options.workers);

  ClassDatabase db;
  db.degree = degree;
  db.strategy = options.strategy;
  db.records = options.strategy == Strategy::VisitedDb
                   ? visited_db_records(ctx, cap)
                   : canonical_path_records(ctx, cap, workers);
  sort_records(ctx, db.records);
  internal::mark_maximality(ctx, db.records, workers);
  return db;
}

BruteForceCounts brute_force_count(int degree) {
  if (degree < 1 || degree > 4)
    throw std::invalid_argument("brute force counting is limited to degrees 1..4");
  const auto& ctx = DegreeContext::get(degree);
  const int cap = degree == 1 ? 1 : degree - 1;

  // every subset of size <= cap, no pruning: this is the reference the
  // incremental searches are tested against
  std::vector<SetKey> all;
  SetKey cur;
  auto gen = [&](auto&& self, Rank start) -> void {
    all.push_back(cur);
    if (static_cast<int>(cur.size()) == cap) return;
    for (Rank b = start; b < ctx.group_order; ++b) {
      cur.push_back(b);
      self(self, b + 1);
      cur.pop_back();
    }
  };
  gen(gen, 0);

  CloseScratch scratch;
  ElementMask mask(ctx.degree);
  std::vector<Rank> rest;
  std::vector<SetKey> independent;
  for (const SetKey& s : all) {
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      rest.clear();
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) rest.push_back(s[j]);
      ok = internal::close_set(ctx, rest, mask, scratch, s[i]) ==
           CloseStatus::Closed;
    }
    if (ok) independent.push_back(s);
  }

  BruteForceCounts counts;
  counts.total_independent_sets = independent.size();

  std::unordered_set<SetKey, internal::SetKeyHash> pool(independent.begin(),
                                                        independent.end());
  SetKey image;
  for (const SetKey& s : independent) {
    if (!pool.contains(s)) continue; // orbit already consumed
    ++counts.class_count;
    internal::close_set(ctx, s, mask, scratch);
    if (mask.count() == ctx.group_order) ++counts.generating_class_count;
    for (Rank g = 0; g < ctx.group_order; ++g) {
      image.clear();
      for (const Rank m : s) image.push_back(ctx.conj(m, g));
      std::sort(image.begin(), image.end());
      pool.erase(image);
    }
  }
  return counts;
}

namespace {

// the two permutations move the points of one orbit
bool jointly_transitive(const DegreeContext& ctx, Rank a, Rank b) {
  const std::uint8_t* pa = ctx.images_of(a);
  const std::uint8_t* pb = ctx.images_of(b);
  int root[kMaxDegree];
  for (int i = 0; i < ctx.degree; ++i) root[i] = i;
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int i = 0; i < ctx.degree; ++i) {
    root[find(i)] = find(pa[i]);
    root[find(i)] = find(pb[i]);
  }
  int components = 0;
  for (int i = 0; i < ctx.degree; ++i)
    if (find(i) == i) ++components;
  return components == 1;
}

} // namespace

std::uint64_t count_generating_pair_classes(int degree, int workers) {
  if (degree < 2 || degree > kMaxDegree)
    throw std::invalid_argument("pair counting supports degrees 2..8");
  const auto& ctx = DegreeContext::get(degree);

  struct Task {
    Rank m;
    Rank lo, hi;
  };
  constexpr Rank kChunk = 2048;
  std::vector<Task> tasks;
  for (const TypeInfo& t : ctx.types) {
    if (t.min_rank == 0) continue; // pairs with the identity are dependent
    for (Rank lo = t.min_rank + 1; lo < ctx.group_order; lo += kChunk)
      tasks.push_back(
          {t.min_rank, lo, std::min(ctx.group_order, lo + kChunk)});
  }
  if (tasks.empty()) return 0;

  const int nw = static_cast<int>(std::min<std::size_t>(
      internal::effective_workers(workers), tasks.size()));
  std::atomic<std::uint64_t> found{0};
  std::atomic<std::size_t> cursor{0};
  internal::parallel_run(nw, [&](int) {
    CloseScratch scratch;
    ElementMask mono(ctx.degree);  // <m>
    ElementMask other(ctx.degree); // <b>, watched for m
    ElementMask full(ctx.degree);
    Rank have_m = internal::kNoRank;
    std::vector<Rank> pair(2);
    std::uint64_t local = 0;
    for (;;) {
      const std::size_t t = cursor.fetch_add(1);
      if (t >= tasks.size()) break;
      const Task& task = tasks[t];
      if (task.m != have_m) {
        pair[0] = task.m;
        internal::close_set(ctx, std::span(pair.data(), 1), mono, scratch);
        have_m = task.m;
      }
      for (Rank b = task.lo; b < task.hi; ++b) {
        if (mono.test(b)) continue;                     // b in <m>
        if (ctx.type_of(b).min_rank < task.m) continue; // never canonical
        pair[0] = b;
        if (internal::close_set(ctx, std::span(pair.data(), 1), other,
                                scratch, task.m) != CloseStatus::Closed)
          continue; // m in <b>
        pair[0] = task.m;
        pair[1] = b;
        if (!internal::is_canonical_key(ctx, pair)) continue;
        // generating needs odd parity somewhere and joint transitivity
        if (ctx.parity[task.m] == 0 && ctx.parity[b] == 0) continue;
        if (!jointly_transitive(ctx, task.m, b)) continue;
        internal::close_set(ctx, pair, full, scratch);
        if (full.count() == ctx.group_order) ++local;
      }
    }
    found.fetch_add(local);
  });
  return found.load();
}

} // namespace indgen
