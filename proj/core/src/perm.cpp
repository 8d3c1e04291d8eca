#include "indgen/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace indgen {

namespace {

const std::uint32_t kFactorial[kMaxDegree + 1] = {1,    1,    2,     6,    24,
                                                  120,  720,  5040,  40320};

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("degree must be between 1 and 8, got " +
                                std::to_string(degree));
}

} // namespace

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (const int p : parts_)
    if (p < 1) throw std::invalid_argument("cycle lengths must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int CycleType::degree() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string CycleType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Perm::Perm(int degree) : degree_(0), img_{} {
  check_degree(degree);
  degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i)
    img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Perm Perm::from_images(std::span<const int> images) {
  check_degree(static_cast<int>(images.size()));
  const int n = static_cast<int>(images.size());
  std::array<std::uint8_t, kMaxDegree> img{};
  unsigned seen = 0;
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 1 || v > n)
      throw std::invalid_argument("image out of range: " + std::to_string(v));
    const unsigned bit = 1u << (v - 1);
    if (seen & bit)
      throw std::invalid_argument("image repeated: " + std::to_string(v));
    seen |= bit;
    img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
  }
  return Perm(n, img);
}

Perm Perm::from_images(std::initializer_list<int> images) {
  return from_images(std::span<const int>(images.begin(), images.size()));
}

int Perm::image(int point) const {
  if (point < 1 || point > degree_)
    throw std::out_of_range("point out of range: " + std::to_string(point));
  return img_[static_cast<std::size_t>(point - 1)] + 1;
}

std::vector<int> Perm::images() const {
  std::vector<int> out(degree_);
  for (int i = 0; i < degree_; ++i) out[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)] + 1;
  return out;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> done{};
  for (int i = 0; i < degree_; ++i) {
    if (done[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      done[static_cast<std::size_t>(j)] = true;
      cyc.push_back(j + 1);
      j = img_[static_cast<std::size_t>(j)];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

CycleType Perm::cycle_type() const {
  std::vector<int> parts;
  std::array<bool, kMaxDegree> done{};
  for (int i = 0; i < degree_; ++i) {
    if (done[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    int j = i;
    do {
      done[static_cast<std::size_t>(j)] = true;
      ++len;
      j = img_[static_cast<std::size_t>(j)];
    } while (j != i);
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

int Perm::order() const {
  const CycleType type = cycle_type(); // keep alive: parts() borrows from it
  int ord = 1;
  for (const int len : type.parts()) ord = std::lcm(ord, len);
  return ord;
}

Perm Perm::compose(const Perm& then) const {
  if (degree_ != then.degree_)
    throw std::invalid_argument("degree mismatch in compose");
  std::array<std::uint8_t, kMaxDegree> out{};
  for (int i = 0; i < degree_; ++i)
    out[static_cast<std::size_t>(i)] = then.img_[img_[static_cast<std::size_t>(i)]];
  return Perm(degree_, out);
}

Perm Perm::inverse() const {
  std::array<std::uint8_t, kMaxDegree> out{};
  for (int i = 0; i < degree_; ++i)
    out[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return Perm(degree_, out);
}

Perm Perm::conjugated(const Perm& g) const {
  if (degree_ != g.degree_)
    throw std::invalid_argument("degree mismatch in conjugation");
  std::array<std::uint8_t, kMaxDegree> out{};
  for (int i = 0; i < degree_; ++i)
    out[g.img_[static_cast<std::size_t>(i)]] = g.img_[img_[static_cast<std::size_t>(i)]];
  return Perm(degree_, out);
}

Perm Perm::embedded(int m) const {
  check_degree(m);
  if (m < degree_)
    throw std::invalid_argument("cannot embed into a smaller degree");
  std::array<std::uint8_t, kMaxDegree> out{};
  for (int i = 0; i < degree_; ++i) out[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)];
  for (int i = degree_; i < m; ++i) out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return Perm(m, out);
}

Rank rank(const Perm& p) {
  const std::uint8_t* img = internal::PermRaw::bytes(p);
  const int n = p.degree();
  std::uint32_t r = 0;
  unsigned used = 0;
  for (int i = 0; i < n; ++i) {
    const unsigned v = img[i];
    r += static_cast<std::uint32_t>(__builtin_popcount(((1u << v) - 1u) & ~used)) *
         kFactorial[n - 1 - i];
    used |= 1u << v;
  }
  return r;
}

Perm unrank(Rank index, int degree) {
  check_degree(degree);
  if (index >= kFactorial[degree])
    throw std::out_of_range("rank out of range: " + std::to_string(index));
  std::uint8_t img[kMaxDegree];
  bool used[kMaxDegree] = {};
  std::uint32_t rest = index;
  for (int i = 0; i < degree; ++i) {
    const std::uint32_t f = kFactorial[degree - 1 - i];
    std::uint32_t c = rest / f;
    rest %= f;
    for (int v = 0; v < degree; ++v) {
      if (used[v]) continue;
      if (c == 0) {
        img[i] = static_cast<std::uint8_t>(v);
        used[v] = true;
        break;
      }
      --c;
    }
  }
  return internal::PermRaw::make(degree, img);
}

std::string format_cycles(const Perm& p) {
  const auto cycs = p.cycles();
  if (cycs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycs) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

Perm parse_cycles(std::string_view text, int degree) {
  check_degree(degree);
  std::array<std::uint8_t, kMaxDegree> img{};
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  bool seen[kMaxDegree] = {};

  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("bad cycle notation \"" + std::string(text) +
                                "\": " + why);
  };

  bool any = false;
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> pts;
    bool after_comma = false;
    for (;;) {
      skip_ws();
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        if (after_comma) fail("trailing separator");
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected a point");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > kMaxDegree * 10) break;
        ++i;
      }
      if (v < 1 || v > degree) fail("point out of range: " + std::to_string(v));
      pts.push_back(v);
      after_comma = false;
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        after_comma = true;
      }
    }
    any = true;
    for (const int p : pts) {
      if (seen[p - 1]) fail("point repeated: " + std::to_string(p));
      seen[p - 1] = true;
    }
    if (pts.size() >= 2) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        const int from = pts[j] - 1;
        const int to = pts[(j + 1) % pts.size()] - 1;
        img[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(to);
      }
    }
    skip_ws();
  }
  if (!any) fail("no cycles found");
  return internal::PermRaw::make(degree, img.data());
}

} // namespace indgen
