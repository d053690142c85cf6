#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_set>

#include "nsg/partition.hpp"

namespace nsg {

/// Streams the members of the class of an irreducible vector, each exactly
/// once. The walk is breadth-first over distinct toggle closures, so the
/// first element is always the class minimum and the class maximum (the
/// input itself) appears exactly once. Order is deterministic.
///
/// A class whose representative already passes the singleton test is
/// emitted directly, with no descriptor computed at all.
class ClassMemberStream {
 public:
  explicit ClassMemberStream(const KunzVector& x);

  /// Next member, or nullopt when the class is exhausted. Safe to keep
  /// calling after exhaustion.
  std::optional<KunzVector> next();

  std::uint64_t emitted() const { return emitted_; }

  /// Null on the singleton fast path.
  const ClassDescriptor* descriptor() const { return desc_.get(); }

 private:
  KunzVector make_member(std::uint64_t closed) const;

  std::optional<KunzVector> representative_;  // singleton fast path only
  std::unique_ptr<ClassDescriptor> desc_;
  std::unordered_set<std::uint64_t> seen_;
  std::deque<std::uint64_t> frontier_;
  std::vector<std::uint64_t> toggle_masks_;  // closure of each free member
  std::uint64_t emitted_ = 0;
};

/// Streams the class of x through `yield`; stop early by returning false.
/// Returns true when the class was fully visited.
bool for_each_class_member(const KunzVector& x,
                           const std::function<bool(const KunzVector&)>& yield);

/// Materializes the class of x sorted ascending by bitstring. Throws
/// limit_exceeded when a cap is given and the class is larger.
std::vector<KunzVector> enumerate_class(const KunzVector& x,
                                        std::optional<std::uint64_t> cap = {});

/// Number of members of the class of x, without building the vectors.
std::uint64_t class_size(const KunzVector& x);

/// Reference implementation of the same walk over integer-set values:
/// the class minimum, the free set and the toggle closures are manipulated
/// as ordered integer sets and members materialize as gap-set semigroups.
/// Slower by construction; kept as the equivalence baseline.
std::vector<NumericalSemigroup> enumerate_class_setform(const NumericalSemigroup& s);

}  // namespace nsg
