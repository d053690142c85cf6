#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nsg/kunz.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// The nonzero members below F/2. Two semigroups with the same Frobenius
/// number belong to the same enumeration class exactly when their keys
/// coincide; intersections of semigroups intersect their keys.
struct ClassKey {
  int frobenius = 0;
  std::vector<int> members;  // sorted ascending; none divides F

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

ClassKey class_key(const NumericalSemigroup& s);
ClassKey class_key(const KunzVector& x);

/// Largest member of the class of S: adjoin every non-member x > F/2 whose
/// complement F - x is also missing. The result is the unique irreducible
/// semigroup in the class.
NumericalSemigroup class_max(const NumericalSemigroup& s);

/// Smallest member of the class of S: the closure of the key together with
/// everything above F. The result is the unique homogeneous semigroup in
/// the class.
NumericalSemigroup class_min(const NumericalSemigroup& s);

/// class_min restricted to irreducible inputs; one half of the bijection
/// between irreducible and homogeneous semigroups with the same F.
NumericalSemigroup homogeneous_partner(const NumericalSemigroup& s);

/// class_max restricted to homogeneous inputs; the inverse half.
NumericalSemigroup irreducible_partner(const NumericalSemigroup& s);

/// Coordinate vector of the class minimum, computed directly: position i is
/// a member exactly when i is a sum of key elements. Requires x irreducible.
KunzVector class_min_kunz(const KunzVector& x);

/// Sparse 0-1 constraint system over variables x_1..x_dimension, restricted
/// to the constraint shapes the enumeration needs.
struct BinarySystem {
  struct SuperAdd {
    int i, j, sum;  // x_i + x_j - x_sum >= 0
  };
  struct TwiceLe {
    int a, b, i;  // x_a + x_b - 2 x_i <= 0
  };

  int dimension = 0;
  std::vector<SuperAdd> superadditive;
  std::vector<TwiceLe> twice_bounded;
  std::vector<std::pair<int, int>> pins;  // (index, forced value)
  std::optional<int> popcount_eq;         // sum over all variables
  bool maximize_popcount = false;
};

/// The 0-1 maximization problem whose unique optimum is class_min_kunz(x):
/// superadditivity, zeros pinned on the key, x_F pinned to one, coordinate
/// sum maximized. Kept as an independent cross-check of the direct closure.
BinarySystem class_min_program(const KunzVector& x);

/// Depth-first branch and bound with constraint propagation. Variables are
/// branched in ascending index, value 1 first when maximizing. Throws
/// infeasible when no assignment satisfies the system.
BitVec solve_binary_program(const BinarySystem& sys);

/// Visits every feasible assignment (no objective pruning) in ascending
/// lexicographic order. The callback returns false to stop early.
void for_each_feasible(const BinarySystem& sys,
                       const std::function<bool(const BitVec&)>& fn);

/// Everything the class enumerator needs about one class, precomputed from
/// its irreducible representative and shared read-only.
struct ClassDescriptor {
  int frobenius = 0;
  ClassKey key;
  KunzVector max_kunz;            // irreducible member; componentwise least
  KunzVector min_kunz;            // homogeneous member; componentwise greatest
  std::vector<int> free_members;  // members of the max missing from the min
};

ClassDescriptor describe_class(const KunzVector& x);

/// Positions that are members in x but gaps in min_kunz; all exceed F/2.
std::vector<int> free_member_set(const KunzVector& x, const KunzVector& min_kunz);

/// Elements of the free set forced in once d is adopted: every d + delta
/// that lands back in the free set, delta ranging over the class minimum
/// (including zero). Throws not_in_free_set when d is not free.
std::vector<int> toggle_closure(int d, const ClassDescriptor& desc);

/// Union of toggle closures over a subset of the free set.
std::vector<int> toggle_closure_union(std::span<const int> subset,
                                      const ClassDescriptor& desc);

}  // namespace nsg
