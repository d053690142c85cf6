#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "nsg/class_enum.hpp"

namespace nsg {

/// Streams every irreducible coordinate vector with Frobenius number F in
/// ascending bitstring order, by backtracking over the constraint system:
/// paired positions (i, F-i) carry exactly one gap, the middle position of
/// an even F is forced to a gap, and partial assignments are pruned on the
/// superadditivity inequalities. Returns false when `yield` stopped early.
bool for_each_irreducible(int frobenius,
                          const std::function<bool(const KunzVector&)>& yield);

std::vector<KunzVector> enumerate_irreducible(int frobenius);

/// Streams the homogeneous vectors as the image of the irreducibles under
/// the class-minimum map; `yield` receives the image and its irreducible
/// source, in source order. Every image is re-checked against the direct
/// homogeneity predicate.
bool for_each_homogeneous(
    int frobenius,
    const std::function<bool(const KunzVector&, const KunzVector&)>& yield);

/// Materialized and sorted ascending.
std::vector<KunzVector> enumerate_homogeneous(int frobenius);

struct EnumerateOptions {
  int jobs = 1;
  bool sorted = false;
  std::optional<std::uint64_t> limit;
};

/// Streams all of Sem(F) as coordinate vectors, class by class in ascending
/// order of the irreducible representative, members in class-stream order.
/// With `sorted` the whole set is materialized and emitted ascending. The
/// second callback argument is the representative of the member's class.
/// Parallel runs produce exactly the serial order. Returns false when the
/// limit or the callback stopped the stream.
bool for_each_semigroup(
    int frobenius, const EnumerateOptions& options,
    const std::function<bool(const KunzVector&, const KunzVector&)>& yield);

std::vector<KunzVector> enumerate_all(int frobenius,
                                      const EnumerateOptions& options = {});

struct CountReport {
  std::uint64_t total = 0;
  std::uint64_t irreducible_count = 0;
  std::map<std::uint64_t, std::uint64_t> class_size_histogram;
};

/// Totals per class without materializing members.
CountReport count_all(int frobenius, int jobs = 1);

}  // namespace nsg
