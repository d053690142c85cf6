#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

/// Machine-checkable failure categories for the domain operations.
enum class errc {
  not_coprime,            // generators with gcd != 1
  trivial_semigroup,      // the operation would produce or consume all of N
  not_member,             // element required to lie in the semigroup
  not_minimal_generator,  // element fails the minimal-generator test
  invalid_kunz,           // 0-1 vector outside the valid coordinate set
  frobenius_mismatch,     // operands encode different Frobenius numbers
  not_same_class,         // lattice join requested across classes
  not_irreducible,        // operation restricted to irreducible inputs
  not_homogeneous,        // operation restricted to homogeneous inputs
  infeasible,             // binary program has no feasible point
  not_in_free_set,        // toggle closure of an element outside D
  limit_exceeded,         // caller-supplied cap hit while materializing
  too_large,              // instance beyond the configured ceiling
  invalid_input,          // malformed argument (nonpositive generator, ...)
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_coprime: return "not_coprime";
    case errc::trivial_semigroup: return "trivial_semigroup";
    case errc::not_member: return "not_member";
    case errc::not_minimal_generator: return "not_minimal_generator";
    case errc::invalid_kunz: return "invalid_kunz";
    case errc::frobenius_mismatch: return "frobenius_mismatch";
    case errc::not_same_class: return "not_same_class";
    case errc::not_irreducible: return "not_irreducible";
    case errc::not_homogeneous: return "not_homogeneous";
    case errc::infeasible: return "infeasible";
    case errc::not_in_free_set: return "not_in_free_set";
    case errc::limit_exceeded: return "limit_exceeded";
    case errc::too_large: return "too_large";
    case errc::invalid_input: return "invalid_input";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace nsg
