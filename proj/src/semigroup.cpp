#include "nsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nsg {
namespace {

// Bitmask of all pairwise sums a + b <= limit with a, b nonzero members.
BitVec pair_sums(const BitVec& members, int limit) {
  BitVec sums(limit + 1);
  const std::size_t n = sums.word_count();
  for (int i = 1; 2 * i <= limit; ++i) {
    if (!members.test(i)) continue;
    const std::size_t w = static_cast<std::size_t>(i) >> 6;
    const int r = i & 63;
    for (std::size_t k = w; k < n; ++k) {
      std::uint64_t sh = members.data()[k - w] << r;
      if (r != 0 && k > w) sh |= members.data()[k - w - 1] >> (64 - r);
      sums.data()[k] |= sh;
    }
  }
  sums.normalize();
  return sums;
}

BitVec members_below(const BitVec& gaps, int frobenius) {
  BitVec members(frobenius + 1);
  for (std::size_t k = 0; k < members.word_count(); ++k) {
    members.data()[k] = ~gaps.data()[k];
  }
  members.reset(0);  // only nonzero members participate in sums
  members.normalize();
  return members;
}

std::vector<int> compute_minimal_generators(const NumericalSemigroup& s) {
  const int f = s.frobenius();
  const BitVec members = members_below(s.gaps(), f);
  const BitVec sums = pair_sums(members, f);

  std::vector<int> gens;
  for (int i = 1; i <= f; ++i) {
    if (members.test(i) && !sums.test(i)) gens.push_back(i);
  }
  // Members above F decompose only through parts <= F or two parts > F;
  // nothing above 2F + 1 can be minimal.
  for (int i = f + 1; i <= 2 * f + 1; ++i) {
    bool minimal = true;
    for (int a = 1; 2 * a <= i; ++a) {
      if (s.contains(a) && s.contains(i - a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) gens.push_back(i);
  }
  return gens;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(BitVec gaps, int frobenius)
    : frobenius_(frobenius),
      genus_(gaps.count()),
      gaps_(std::move(gaps)),
      cache_(std::make_shared<GeneratorCache>()) {}

NumericalSemigroup NumericalSemigroup::from_gaps(BitVec gaps, int frobenius) {
  if (frobenius < 1 || gaps.size() != frobenius + 1) {
    fail(errc::invalid_input, "gap set must span [0, F] with F >= 1");
  }
  if (gaps.test(0) || !gaps.test(frobenius)) {
    fail(errc::invalid_kunz, "bit 0 must be clear and bit F set");
  }
  const BitVec members = members_below(gaps, frobenius);
  if (!kernels::active().closure_ok(members.data(), gaps.data(),
                                    gaps.word_count(), frobenius)) {
    fail(errc::invalid_kunz, "complement of the gap set is not closed");
  }
  return NumericalSemigroup(std::move(gaps), frobenius);
}

std::vector<int> NumericalSemigroup::gap_list() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (int i = 1; i <= frobenius_; ++i) {
    if (gaps_.test(i)) out.push_back(i);
  }
  return out;
}

const std::vector<int>& NumericalSemigroup::minimal_generators() const {
  std::call_once(cache_->once, [this] {
    cache_->generators = compute_minimal_generators(*this);
  });
  return cache_->generators;
}

NumericalSemigroup closure_from_generators(std::span<const int> generators) {
  if (generators.empty()) fail(errc::invalid_input, "empty generating set");
  int g = 0;
  for (int a : generators) {
    if (a < 1) fail(errc::invalid_input, "generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) {
    fail(errc::not_coprime, "gcd of generators is " + std::to_string(g));
  }
  for (int a : generators) {
    if (a == 1) fail(errc::trivial_semigroup, "<1> is all of N");
  }

  const int max_gen = *std::max_element(generators.begin(), generators.end());
  int cap = 2 * max_gen + 64;
  for (;;) {
    BitVec member(cap + 1);
    member.set(0);
    for (int s = 0; s <= cap; ++s) {
      if (!member.test(s)) continue;
      for (int a : generators) {
        if (s + a <= cap) member.set(s + a);
      }
    }
    // A run of max_gen consecutive members makes everything beyond it
    // reachable, so the largest non-member before the run is F.
    int run = 0;
    for (int s = 0; s <= cap; ++s) {
      run = member.test(s) ? run + 1 : 0;
      if (run == max_gen) {
        int f = s - max_gen;
        while (f >= 1 && member.test(f)) --f;
        if (f < 1) fail(errc::trivial_semigroup, "<1> is all of N");
        BitVec gaps(f + 1);
        for (int i = 1; i <= f; ++i) {
          if (!member.test(i)) gaps.set(i);
        }
        return NumericalSemigroup::from_gaps(std::move(gaps), f);
      }
    }
    cap *= 2;
  }
}

NumericalSemigroup closure_from_generators(std::initializer_list<int> generators) {
  return closure_from_generators(std::span<const int>(generators.begin(), generators.size()));
}

AperySet apery_set(const NumericalSemigroup& s, int n) {
  if (n < 1 || !s.contains(n)) {
    fail(errc::not_member, std::to_string(n) + " is not a nonzero member");
  }
  AperySet ap;
  ap.modulus = n;
  ap.elements.resize(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    std::int64_t w = r;
    while (!s.contains(w)) w += n;
    ap.elements[static_cast<std::size_t>(r)] = w;
  }
  return ap;
}

std::int64_t genus_selmer(const AperySet& ap) {
  const std::int64_t n = ap.modulus;
  if (n < 1 || ap.elements.size() != static_cast<std::size_t>(n)) {
    fail(errc::invalid_input, "malformed Apery set");
  }
  std::int64_t sum = 0;
  for (std::int64_t w : ap.elements) sum += w;
  const std::int64_t numerator = 2 * sum - n * (n - 1);
  if (numerator < 0 || numerator % (2 * n) != 0) {
    fail(errc::invalid_input, "Apery sum is not consistent with any genus");
  }
  return numerator / (2 * n);
}

int frobenius_from_apery(const AperySet& ap) {
  if (ap.modulus < 1 || ap.elements.empty()) {
    fail(errc::invalid_input, "malformed Apery set");
  }
  const std::int64_t top =
      *std::max_element(ap.elements.begin(), ap.elements.end());
  const std::int64_t f = top - ap.modulus;
  if (f < 0) {
    fail(errc::trivial_semigroup,
         "set describes all of N (Frobenius number -1)");
  }
  return static_cast<int>(f);
}

bool is_homogeneous(const NumericalSemigroup& s) {
  const int f = s.frobenius();
  for (int g : s.minimal_generators()) {
    if (2 * g > f && g < f) return false;
  }
  return true;
}

bool is_irreducible(const NumericalSemigroup& s) {
  return s.genus() == (s.frobenius() + 2) / 2;
}

NumericalSemigroup remove_minimal_generator(const NumericalSemigroup& s, int x) {
  const auto& gens = s.minimal_generators();
  if (!std::binary_search(gens.begin(), gens.end(), x)) {
    fail(errc::not_minimal_generator,
         std::to_string(x) + " is not a minimal generator");
  }
  const int f = s.frobenius();
  if (x < f) {
    BitVec gaps = s.gaps();
    gaps.set(x);
    return NumericalSemigroup::from_gaps(std::move(gaps), f);
  }
  // x > F (x == F is impossible for a member): x becomes the new Frobenius
  // number and everything strictly between F and x stays a member.
  BitVec gaps(x + 1);
  for (int i = 1; i <= f; ++i) {
    if (s.gaps().test(i)) gaps.set(i);
  }
  gaps.set(x);
  return NumericalSemigroup::from_gaps(std::move(gaps), x);
}

}  // namespace nsg
