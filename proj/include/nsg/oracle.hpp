#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsg/kunz.hpp"

namespace nsg {

/// Default cap on the exhaustive scan; 2^(F-1) candidates are checked.
inline constexpr int default_oracle_ceiling = 22;

/// Hard cap imposed by the single-word candidate representation.
inline constexpr int oracle_hard_limit = 31;

struct OracleResult {
  int frobenius = 0;
  std::vector<KunzVector> members;  // strictly ascending by bitstring
  std::uint64_t total = 0;
};

/// Ground-truth enumeration of every valid coordinate vector with Frobenius
/// number F: all 2^(F-1) bit patterns with x_F = 1 are tested against the
/// pairwise closure condition. Exact, deterministic, and independent of the
/// partition machinery. Throws too_large above min(ceiling, hard limit).
OracleResult oracle_enumerate(int frobenius, int ceiling = default_oracle_ceiling,
                              int jobs = 1);

struct VerifyCheck {
  std::string name;
  bool pass = true;
  std::string detail;  // first counterexample, empty when passing
};

struct VerifyReport {
  int frobenius = 0;
  std::uint64_t total = 0;
  std::uint64_t class_count = 0;
  std::vector<VerifyCheck> checks;
  bool pass = true;

  std::string to_string() const;
};

/// Groups the oracle's output by class key and asserts, per group: exactly
/// one irreducible member equal to the componentwise minimum vector, exactly
/// one homogeneous member equal to the componentwise maximum, closure of the
/// group under meet and join, and exact reproduction of the group by the
/// class enumerator seeded with its irreducible.
VerifyReport verify_partition(int frobenius, int ceiling = default_oracle_ceiling,
                              int jobs = 1);

}  // namespace nsg
