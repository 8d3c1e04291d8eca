#include "context.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace indgen::internal {

namespace {

// Cycle decomposition of a raw image tuple; fixed points included.
std::vector<std::vector<std::uint8_t>> raw_cycles(const std::uint8_t* img, int n) {
  std::vector<std::vector<std::uint8_t>> out;
  bool done[kMaxDegree] = {};
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<std::uint8_t> cyc;
    int j = i;
    do {
      done[j] = true;
      cyc.push_back(static_cast<std::uint8_t>(j));
      j = img[j];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

} // namespace

void DegreeContext::build(int n) {
  degree = n;
  factorial[0] = 1;
  for (int i = 1; i <= kMaxDegree; ++i)
    factorial[static_cast<std::size_t>(i)] = factorial[static_cast<std::size_t>(i - 1)] * static_cast<std::uint32_t>(i);
  group_order = factorial[static_cast<std::size_t>(n)];

  images.resize(static_cast<std::size_t>(group_order) * static_cast<std::size_t>(n));
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(n));
  std::iota(cur.begin(), cur.end(), 0);
  Rank r = 0;
  do {
    std::copy(cur.begin(), cur.end(), images.begin() + static_cast<std::size_t>(r) * static_cast<std::size_t>(n));
    ++r;
  } while (std::next_permutation(cur.begin(), cur.end()));
  assert(r == group_order);

  inverse.resize(group_order);
  element_order.resize(group_order);
  parity.resize(group_order);
  type_index.resize(group_order);

  std::map<CycleType, std::size_t> type_ids;
  for (r = 0; r < group_order; ++r) {
    const std::uint8_t* img = images_of(r);
    assert(rank_of_images(img) == r);

    std::uint8_t inv[kMaxDegree];
    for (int i = 0; i < n; ++i) inv[img[i]] = static_cast<std::uint8_t>(i);
    inverse[r] = rank_of_images(inv);

    const auto cycs = raw_cycles(img, n);
    std::vector<int> parts;
    parts.reserve(cycs.size());
    int ord = 1;
    for (const auto& c : cycs) {
      parts.push_back(static_cast<int>(c.size()));
      ord = std::lcm(ord, static_cast<int>(c.size()));
    }
    element_order[r] = static_cast<std::uint8_t>(ord);
    parity[r] = static_cast<std::uint8_t>((n - cycs.size()) & 1);

    CycleType type(std::move(parts));
    auto [it, inserted] = type_ids.try_emplace(type, types.size());
    if (inserted) {
      TypeInfo info;
      info.type = type;
      info.min_rank = r; // ranks scanned ascending: first hit is least
      types.push_back(std::move(info));
    }
    type_index[r] = static_cast<std::uint8_t>(it->second);
    ++types[it->second].element_count;
  }

  for (TypeInfo& t : types) {
    for (Rank g = 0; g < group_order; ++g)
      if (conj(t.min_rank, g) == t.min_rank) t.centralizer.push_back(g);
    // orbit-stabilizer: |class| * |centralizer| = n!
    assert(t.centralizer.size() * t.element_count == group_order);
  }

  if (group_order <= 5040) {
    product_by_right.resize(static_cast<std::size_t>(group_order) * group_order);
    std::uint8_t out[kMaxDegree];
    for (Rank b = 0; b < group_order; ++b) {
      const std::uint8_t* pb = images_of(b);
      std::uint16_t* row =
          product_by_right.data() + static_cast<std::size_t>(b) * group_order;
      for (Rank a = 0; a < group_order; ++a) {
        const std::uint8_t* pa = images_of(a);
        for (int i = 0; i < n; ++i) out[i] = pb[pa[i]];
        row[a] = static_cast<std::uint16_t>(rank_of_images(out));
      }
    }
  }
}

Rank DegreeContext::conjugator_to_min(Rank a) const {
  const TypeInfo& t = type_of(a);
  if (a == t.min_rank) return 0;
  const auto ca = raw_cycles(images_of(a), degree);
  const auto cm = raw_cycles(images_of(t.min_rank), degree);
  // pair up cycles of equal length and map pointwise
  std::uint8_t g[kMaxDegree];
  bool used_m[kMaxDegree + 1] = {}; // cycle of cm already consumed
  for (const auto& cyc_a : ca) {
    for (std::size_t j = 0; j < cm.size(); ++j) {
      if (used_m[j] || cm[j].size() != cyc_a.size()) continue;
      used_m[j] = true;
      for (std::size_t i = 0; i < cyc_a.size(); ++i) g[cyc_a[i]] = cm[j][i];
      break;
    }
  }
  const Rank g0 = rank_of_images(g);
  assert(conj(a, g0) == t.min_rank);
  return g0;
}

const DegreeContext& DegreeContext::get(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("degree out of supported range: " +
                                std::to_string(degree));
  static std::mutex mutex;
  static std::unique_ptr<DegreeContext> cache[kMaxDegree + 1];
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[degree];
  if (!slot) {
    slot = std::make_unique<DegreeContext>();
    slot->build(degree);
  }
  return *slot;
}

} // namespace indgen::internal
