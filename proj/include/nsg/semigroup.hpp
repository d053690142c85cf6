#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "nsg/bitvec.hpp"
#include "nsg/errors.hpp"

namespace nsg {

/// For a nonzero element n of a semigroup, the least member of each residue
/// class modulo n. elements[i] is congruent to i modulo `modulus` and
/// elements[0] == 0.
struct AperySet {
  int modulus = 0;
  std::vector<std::int64_t> elements;
};

/// A cofinite subset of the nonnegative integers that contains zero and is
/// closed under addition, identified by its finite gap set. The Frobenius
/// number F is the largest gap; every integer above F is a member.
///
/// Values are immutable after construction and safe to share across threads;
/// the minimal-generator cache is initialized exactly once.
class NumericalSemigroup {
 public:
  /// Builds from an explicit gap set. `gaps` has size frobenius + 1 with
  /// bit i set exactly when i is a gap; bit 0 must be clear and bit F set.
  /// Rejects gap sets whose complement is not closed under addition.
  static NumericalSemigroup from_gaps(BitVec gaps, int frobenius);

  int frobenius() const { return frobenius_; }
  int genus() const { return genus_; }
  const BitVec& gaps() const { return gaps_; }

  bool contains(std::int64_t s) const {
    if (s < 0) return false;
    if (s == 0 || s > frobenius_) return true;
    return !gaps_.test(static_cast<int>(s));
  }

  std::vector<int> gap_list() const;

  /// The unique minimal generating set, sorted ascending. Computed on first
  /// use and cached; concurrent first calls initialize it exactly once.
  const std::vector<int>& minimal_generators() const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.frobenius_ == b.frobenius_ && a.gaps_ == b.gaps_;
  }

 private:
  struct GeneratorCache {
    std::once_flag once;
    std::vector<int> generators;
  };

  NumericalSemigroup(BitVec gaps, int frobenius);

  int frobenius_ = 0;
  int genus_ = 0;
  BitVec gaps_;
  std::shared_ptr<GeneratorCache> cache_;
};

/// Closes a generating set into its semigroup, computing the gap set exactly.
/// Throws not_coprime when gcd != 1 and trivial_semigroup when the result
/// would be all of N (i.e. 1 is generated).
NumericalSemigroup closure_from_generators(std::span<const int> generators);
NumericalSemigroup closure_from_generators(std::initializer_list<int> generators);

/// Least member of each residue class modulo n. Requires n >= 1 and n in S.
AperySet apery_set(const NumericalSemigroup& s, int n);

/// Genus from an Apery set: (sum w)/n - (n-1)/2. Throws invalid_input when
/// the expression is not a nonnegative integer (corrupted set).
std::int64_t genus_selmer(const AperySet& ap);

/// Frobenius number from an Apery set: max(elements) - modulus. Throws
/// trivial_semigroup when that would be negative (the set describes N).
int frobenius_from_apery(const AperySet& ap);

/// True when no minimal generator lies strictly between F/2 and F.
bool is_homogeneous(const NumericalSemigroup& s);

/// True when the genus equals ceil((F+1)/2), the maximal-genus bound for
/// semigroups that are not an intersection of two strictly larger ones.
bool is_irreducible(const NumericalSemigroup& s);

/// Removes one minimal generator, yielding a semigroup again. The Frobenius
/// number becomes x when x > F and is unchanged otherwise.
NumericalSemigroup remove_minimal_generator(const NumericalSemigroup& s, int x);

}  // namespace nsg
