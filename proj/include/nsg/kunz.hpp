#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/bitvec.hpp"
#include "nsg/errors.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

class KunzVector;

namespace detail {
KunzVector kunz_trusted(BitVec bits, int frobenius);
}

/// The 0-1 coordinate vector (x_1, ..., x_F) of a semigroup with Frobenius
/// number F, taken with respect to F + 1. x_i = 1 exactly when i is a gap,
/// so the vector doubles as the gap indicator. A vector is valid when
/// x_F = 1 and its zero positions are closed under addition below F + 1.
class KunzVector {
 public:
  /// Validates and wraps. `bits` has size frobenius + 1 with bit i = x_i
  /// and bit 0 clear. Throws invalid_kunz otherwise.
  KunzVector(BitVec bits, int frobenius);

  /// Parses "x_1 x_2 ... x_F" written without separators, e.g. "10101".
  static KunzVector parse(std::string_view bitstring);

  int frobenius() const { return frobenius_; }
  const BitVec& bits() const { return bits_; }
  bool gap(int i) const { return bits_.test(i); }
  int genus() const { return bits_.count(); }
  std::string to_string() const;

  friend bool operator==(const KunzVector& a, const KunzVector& b) {
    return a.frobenius_ == b.frobenius_ && a.bits_ == b.bits_;
  }

  /// Lexicographic order on the written bitstring.
  friend bool operator<(const KunzVector& a, const KunzVector& b) {
    return BitVec::compare_lex(a.bits_, b.bits_) < 0;
  }

 private:
  struct trusted_t {};
  KunzVector(trusted_t, BitVec bits, int frobenius);
  friend KunzVector detail::kunz_trusted(BitVec, int);

  int frobenius_ = 0;
  BitVec bits_;
};

/// Membership test for the valid coordinate set with Frobenius number F.
bool is_valid_kunz(const BitVec& bits, int frobenius);

KunzVector from_semigroup(const NumericalSemigroup& s);
NumericalSemigroup to_semigroup(const KunzVector& x);

/// The generating set {F+1} followed by i + (F+1) x_i for i = 1..F, whose
/// closure recovers the encoded semigroup.
std::vector<int> generator_image(const KunzVector& x);

/// Componentwise maximum; encodes the intersection of the two semigroups.
/// Always lands back in the valid set.
KunzVector meet(const KunzVector& a, const KunzVector& b);

/// Componentwise minimum; encodes the union, which is a semigroup only for
/// operands in the same class. Throws not_same_class otherwise.
KunzVector join(const KunzVector& a, const KunzVector& b);

/// True when the coordinate sum equals ceil((F+1)/2).
bool is_irreducible(const KunzVector& x);

/// True when no index in ]F/2, F[ passes the minimal-generator test.
bool is_homogeneous(const KunzVector& x);

/// True when i is a minimal generator of the encoded semigroup: x_i = 0 and
/// no split i = j + (i-j) has both parts at zero.
bool is_minimal_generator(const KunzVector& x, int i);

/// True when the class of x contains no other vector, decidable from x
/// alone. Requires x irreducible (throws not_irreducible).
bool is_singleton_class(const KunzVector& x);

}  // namespace nsg
