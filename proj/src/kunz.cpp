#include "nsg/kunz.hpp"

#include <cassert>
#include <string>

namespace nsg {
namespace {

BitVec complement_members(const BitVec& bits, int frobenius) {
  BitVec members(frobenius + 1);
  for (std::size_t k = 0; k < members.word_count(); ++k) {
    members.data()[k] = ~bits.data()[k];
  }
  members.reset(0);
  members.normalize();
  return members;
}

// Shared scan: does any index in ]F/2, F[ pass the minimal-generator test?
bool has_upper_half_generator(const KunzVector& x) {
  const int f = x.frobenius();
  for (int i = f / 2 + 1; i < f; ++i) {
    if (is_minimal_generator(x, i)) return true;
  }
  return false;
}

}  // namespace

namespace detail {
KunzVector kunz_trusted(BitVec bits, int frobenius) {
  return KunzVector(KunzVector::trusted_t{}, std::move(bits), frobenius);
}
}  // namespace detail

KunzVector::KunzVector(BitVec bits, int frobenius)
    : frobenius_(frobenius), bits_(std::move(bits)) {
  if (!is_valid_kunz(bits_, frobenius_)) {
    fail(errc::invalid_kunz, "vector is not a valid coordinate vector");
  }
}

KunzVector::KunzVector(trusted_t, BitVec bits, int frobenius)
    : frobenius_(frobenius), bits_(std::move(bits)) {
  assert(is_valid_kunz(bits_, frobenius_));
}

KunzVector KunzVector::parse(std::string_view bitstring) {
  if (bitstring.empty()) fail(errc::invalid_kunz, "empty bitstring");
  const int f = static_cast<int>(bitstring.size());
  BitVec bits(f + 1);
  for (int i = 1; i <= f; ++i) {
    const char c = bitstring[static_cast<std::size_t>(i - 1)];
    if (c == '1') {
      bits.set(i);
    } else if (c != '0') {
      fail(errc::invalid_kunz, "bitstring may contain only 0 and 1");
    }
  }
  return KunzVector(std::move(bits), f);
}

std::string KunzVector::to_string() const {
  std::string out(static_cast<std::size_t>(frobenius_), '0');
  for (int i = 1; i <= frobenius_; ++i) {
    if (bits_.test(i)) out[static_cast<std::size_t>(i - 1)] = '1';
  }
  return out;
}

bool is_valid_kunz(const BitVec& bits, int frobenius) {
  if (frobenius < 1 || bits.size() != frobenius + 1) return false;
  if (bits.test(0) || !bits.test(frobenius)) return false;
  const BitVec members = complement_members(bits, frobenius);
  return kernels::active().closure_ok(members.data(), bits.data(),
                                      bits.word_count(), frobenius);
}

KunzVector from_semigroup(const NumericalSemigroup& s) {
  return detail::kunz_trusted(s.gaps(), s.frobenius());
}

NumericalSemigroup to_semigroup(const KunzVector& x) {
  return NumericalSemigroup::from_gaps(x.bits(), x.frobenius());
}

std::vector<int> generator_image(const KunzVector& x) {
  const int f = x.frobenius();
  std::vector<int> gens;
  gens.reserve(static_cast<std::size_t>(f) + 1);
  gens.push_back(f + 1);
  for (int i = 1; i <= f; ++i) {
    gens.push_back(x.gap(i) ? f + 1 + i : i);
  }
  return gens;
}

KunzVector meet(const KunzVector& a, const KunzVector& b) {
  if (a.frobenius() != b.frobenius()) {
    fail(errc::frobenius_mismatch, "meet of vectors with different F");
  }
  BitVec out(a.frobenius() + 1);
  kernels::active().bit_or(a.bits().data(), b.bits().data(), out.data(),
                           out.word_count());
  return detail::kunz_trusted(std::move(out), a.frobenius());
}

KunzVector join(const KunzVector& a, const KunzVector& b) {
  if (a.frobenius() != b.frobenius()) {
    fail(errc::frobenius_mismatch, "join of vectors with different F");
  }
  // The union of two semigroups is a semigroup only when their members
  // below F/2 agree, i.e. the vectors lie in the same class.
  const int f = a.frobenius();
  for (int i = 1; 2 * i < f; ++i) {
    if (a.gap(i) != b.gap(i)) {
      fail(errc::not_same_class, "join across classes leaves the valid set");
    }
  }
  BitVec out(f + 1);
  kernels::active().bit_and(a.bits().data(), b.bits().data(), out.data(),
                            out.word_count());
  return detail::kunz_trusted(std::move(out), f);
}

bool is_irreducible(const KunzVector& x) {
  return x.genus() == (x.frobenius() + 2) / 2;
}

bool is_homogeneous(const KunzVector& x) { return !has_upper_half_generator(x); }

bool is_minimal_generator(const KunzVector& x, int i) {
  if (i < 1 || i > x.frobenius() || x.gap(i)) return false;
  for (int j = 1; 2 * j <= i; ++j) {
    if (!x.gap(j) && !x.gap(i - j)) return false;
  }
  return true;
}

bool is_singleton_class(const KunzVector& x) {
  if (!is_irreducible(x)) {
    fail(errc::not_irreducible, "singleton test requires an irreducible vector");
  }
  return !has_upper_half_generator(x);
}

}  // namespace nsg
