#include "indgen/perm_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace indgen {

namespace {
void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("degree must be between 1 and 8, got " +
                                std::to_string(degree));
}
} // namespace

PermSet::PermSet(int degree) : degree_(degree) { check_degree(degree); }

PermSet::PermSet(int degree, std::vector<Perm> members)
    : degree_(degree), members_(std::move(members)) {
  check_degree(degree);
  for (const Perm& p : members_)
    if (p.degree() != degree_)
      throw std::invalid_argument("set member has degree " +
                                  std::to_string(p.degree()) + ", expected " +
                                  std::to_string(degree_));
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

PermSet PermSet::from_cycles(int degree, std::span<const std::string> cycles) {
  std::vector<Perm> members;
  members.reserve(cycles.size());
  for (const std::string& c : cycles) members.push_back(parse_cycles(c, degree));
  return PermSet(degree, std::move(members));
}

PermSet PermSet::from_cycles(int degree,
                             std::initializer_list<std::string_view> cycles) {
  std::vector<Perm> members;
  members.reserve(cycles.size());
  for (const std::string_view c : cycles) members.push_back(parse_cycles(c, degree));
  return PermSet(degree, std::move(members));
}

bool PermSet::contains(const Perm& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

PermSet PermSet::with(const Perm& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("degree mismatch in PermSet::with");
  if (contains(p)) return *this;
  PermSet out = *this;
  out.members_.insert(std::upper_bound(out.members_.begin(), out.members_.end(), p), p);
  return out;
}

PermSet PermSet::without(std::size_t i) const {
  if (i >= members_.size()) throw std::out_of_range("member index out of range");
  PermSet out = *this;
  out.members_.erase(out.members_.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

PermSet PermSet::conjugated(const Perm& g) const {
  std::vector<Perm> out;
  out.reserve(members_.size());
  for (const Perm& m : members_) out.push_back(m.conjugated(g));
  return PermSet(degree_, std::move(out));
}

std::vector<std::string> PermSet::cycle_strings() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (const Perm& m : members_) out.push_back(format_cycles(m));
  return out;
}

} // namespace indgen
