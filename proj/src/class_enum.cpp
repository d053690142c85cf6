#include "nsg/class_enum.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace nsg {

ClassMemberStream::ClassMemberStream(const KunzVector& x) {
  if (is_singleton_class(x)) {  // also rejects non-irreducible input
    representative_ = x;
    return;
  }
  desc_ = std::make_unique<ClassDescriptor>(describe_class(x));
  const std::size_t m = desc_->free_members.size();
  if (m > 63) {
    fail(errc::limit_exceeded,
         "free member set exceeds 63 positions; class is not materializable");
  }
  toggle_masks_.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::uint64_t mask = 0;
    for (int e : toggle_closure(desc_->free_members[k], *desc_)) {
      const auto pos = std::lower_bound(desc_->free_members.begin(),
                                        desc_->free_members.end(), e) -
                       desc_->free_members.begin();
      mask |= std::uint64_t{1} << pos;
    }
    toggle_masks_[k] = mask;
  }
  seen_.insert(0);
  frontier_.push_back(0);  // empty toggle set: the class minimum
}

KunzVector ClassMemberStream::make_member(std::uint64_t closed) const {
  BitVec bits = desc_->min_kunz.bits();
  for (std::size_t k = 0; k < desc_->free_members.size(); ++k) {
    if (closed >> k & 1) bits.reset(desc_->free_members[k]);
  }
  return detail::kunz_trusted(std::move(bits), desc_->frobenius);
}

std::optional<KunzVector> ClassMemberStream::next() {
  if (representative_) {
    if (emitted_ > 0) return std::nullopt;
    ++emitted_;
    return representative_;
  }
  if (frontier_.empty()) return std::nullopt;
  const std::uint64_t closed = frontier_.front();
  frontier_.pop_front();
  // A closed set absorbs the closure of each of its own elements, so only
  // extensions by elements outside it can produce something new.
  for (std::size_t k = 0; k < toggle_masks_.size(); ++k) {
    if (closed >> k & 1) continue;
    const std::uint64_t extended = closed | toggle_masks_[k];
    if (seen_.insert(extended).second) frontier_.push_back(extended);
  }
  ++emitted_;
  return make_member(closed);
}

bool for_each_class_member(const KunzVector& x,
                           const std::function<bool(const KunzVector&)>& yield) {
  ClassMemberStream stream(x);
  while (auto member = stream.next()) {
    if (!yield(*member)) return false;
  }
  return true;
}

std::vector<KunzVector> enumerate_class(const KunzVector& x,
                                        std::optional<std::uint64_t> cap) {
  std::vector<KunzVector> out;
  ClassMemberStream stream(x);
  while (auto member = stream.next()) {
    if (cap && out.size() >= *cap) {
      fail(errc::limit_exceeded,
           "class has more than " + std::to_string(*cap) + " members");
    }
    out.push_back(*std::move(member));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t class_size(const KunzVector& x) {
  if (is_singleton_class(x)) return 1;
  const ClassDescriptor desc = describe_class(x);
  const std::size_t m = desc.free_members.size();
  if (m > 63) {
    fail(errc::limit_exceeded, "free member set exceeds 63 positions");
  }
  std::vector<std::uint64_t> masks(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::uint64_t mask = 0;
    for (int e : toggle_closure(desc.free_members[k], desc)) {
      const auto pos = std::lower_bound(desc.free_members.begin(),
                                        desc.free_members.end(), e) -
                       desc.free_members.begin();
      mask |= std::uint64_t{1} << pos;
    }
    masks[k] = mask;
  }
  std::unordered_set<std::uint64_t> seen{0};
  std::deque<std::uint64_t> frontier{0};
  while (!frontier.empty()) {
    const std::uint64_t closed = frontier.front();
    frontier.pop_front();
    for (std::size_t k = 0; k < m; ++k) {
      if (closed >> k & 1) continue;
      const std::uint64_t extended = closed | masks[k];
      if (seen.insert(extended).second) frontier.push_back(extended);
    }
  }
  return seen.size();
}

std::vector<NumericalSemigroup> enumerate_class_setform(
    const NumericalSemigroup& s) {
  if (!is_irreducible(s)) {
    fail(errc::not_irreducible, "class is enumerated from its irreducible");
  }
  const int f = s.frobenius();
  const NumericalSemigroup minimum = class_min(s);

  std::set<int> min_members;  // members of the class minimum in [0, F]
  for (int i = 0; i <= f; ++i) {
    if (minimum.contains(i)) min_members.insert(i);
  }
  std::set<int> free_set;
  for (int i = 1; i <= f; ++i) {
    if (s.contains(i) && !minimum.contains(i)) free_set.insert(i);
  }

  std::map<int, std::set<int>> closure_of;
  for (int d : free_set) {
    std::set<int> shifted;
    for (int delta : min_members) {
      if (d + delta <= f) shifted.insert(d + delta);
    }
    std::set<int> t;
    std::set_intersection(shifted.begin(), shifted.end(), free_set.begin(),
                          free_set.end(), std::inserter(t, t.begin()));
    closure_of.emplace(d, std::move(t));
  }

  std::set<std::set<int>> seen{{}};
  std::deque<std::set<int>> frontier{{}};
  std::vector<NumericalSemigroup> out;
  while (!frontier.empty()) {
    const std::set<int> closed = frontier.front();
    frontier.pop_front();
    for (int d : free_set) {
      if (closed.count(d) != 0) continue;
      std::set<int> extended = closed;
      const auto& t = closure_of.at(d);
      extended.insert(t.begin(), t.end());
      if (seen.insert(extended).second) frontier.push_back(extended);
    }
    BitVec gaps = minimum.gaps();
    for (int d : closed) gaps.reset(d);
    out.push_back(NumericalSemigroup::from_gaps(std::move(gaps), f));
  }
  return out;
}

}  // namespace nsg
