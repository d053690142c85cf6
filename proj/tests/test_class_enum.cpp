#include <algorithm>
#include <set>

#include "doctest.h"
#include "nsg/class_enum.hpp"
#include "nsg/oracle.hpp"
#include "support.hpp"

using nsg::ClassMemberStream;
using nsg::KunzVector;

namespace {

std::set<std::string> as_strings(const std::vector<KunzVector>& vs) {
  std::set<std::string> out;
  for (const auto& v : vs) out.insert(v.to_string());
  return out;
}

}  // namespace

TEST_CASE("class of 11001 (four members)") {
  const auto x = KunzVector::parse("11001");
  const auto members = nsg::enumerate_class(x);
  CHECK(as_strings(members) ==
        std::set<std::string>{"11111", "11011", "11101", "11001"});
  CHECK(std::is_sorted(members.begin(), members.end()));

  // Stream order: the class minimum first, breadth-first afterwards.
  ClassMemberStream stream(x);
  CHECK(stream.next()->to_string() == "11111");
  CHECK(stream.descriptor() != nullptr);
  std::vector<std::string> rest;
  while (auto m = stream.next()) rest.push_back(m->to_string());
  CHECK(rest == std::vector<std::string>{"11011", "11101", "11001"});
  CHECK(stream.next() == std::nullopt);
}

TEST_CASE("singleton class short-circuits") {
  const auto x = KunzVector::parse("10101");
  ClassMemberStream stream(x);
  CHECK(stream.descriptor() == nullptr);  // fast path, no descriptor built
  CHECK(stream.next()->to_string() == "10101");
  CHECK(stream.next() == std::nullopt);
  CHECK(nsg::enumerate_class(x).size() == 1);
  CHECK(nsg::class_size(x) == 1);
}

TEST_CASE("class of the F = 7 irreducible") {
  const auto x = KunzVector::parse("1101001");
  const auto members = nsg::enumerate_class(x);
  CHECK(as_strings(members) == std::set<std::string>{"1101101", "1101001"});
  CHECK(nsg::class_size(x) == 2);
}

TEST_CASE("set-form walk produces the same classes") {
  const auto s35 = nsg::closure_from_generators({3, 5});
  const auto class35 = nsg::enumerate_class_setform(s35);
  REQUIRE(class35.size() == 2);
  CHECK(class35[0] == nsg::class_min(s35));  // minimum first
  CHECK(class35[1] == s35);

  const auto s27 = nsg::closure_from_generators({2, 7});
  const auto class27 = nsg::enumerate_class_setform(s27);
  REQUIRE(class27.size() == 1);
  CHECK(class27[0] == s27);

  const auto s34 = nsg::closure_from_generators({3, 4});
  CHECK(nsg::enumerate_class_setform(s34).size() == 4);

  CHECK_THROWS_AS(
      nsg::enumerate_class_setform(
          nsg::NumericalSemigroup::from_gaps(bits_of("11111"), 5)),
      nsg::Error);
}

TEST_CASE("set-form and coordinate walks agree for every irreducible") {
  for (int f = 1; f <= 12; ++f) {
    for (const auto& x : nsg::oracle_enumerate(f).members) {
      if (!nsg::is_irreducible(x)) continue;
      std::set<std::string> from_sets;
      for (const auto& s : nsg::enumerate_class_setform(nsg::to_semigroup(x))) {
        from_sets.insert(nsg::from_semigroup(s).to_string());
      }
      CHECK(from_sets == as_strings(nsg::enumerate_class(x)));
    }
  }
}

TEST_CASE("every streamed member is valid, shares the key, and is sandwiched") {
  for (int f = 1; f <= 12; ++f) {
    for (const auto& x : nsg::oracle_enumerate(f).members) {
      if (!nsg::is_irreducible(x)) continue;
      const auto minimum = nsg::class_min_kunz(x);
      std::set<std::string> seen;
      nsg::for_each_class_member(x, [&](const KunzVector& m) {
        CHECK(nsg::is_valid_kunz(m.bits(), f));
        CHECK(nsg::class_key(m) == nsg::class_key(x));
        for (int i = 1; i <= f; ++i) {
          CHECK(m.gap(i) <= minimum.gap(i));
          CHECK(m.gap(i) >= x.gap(i));
        }
        CHECK(seen.insert(m.to_string()).second);  // no duplicates
        return true;
      });
      // The class maximum (the input) shows up exactly once.
      CHECK(seen.count(x.to_string()) == 1);
    }
  }
}

TEST_CASE("classes are closed under meet and join") {
  for (int f = 1; f <= 12; ++f) {
    for (const auto& x : nsg::oracle_enumerate(f).members) {
      if (!nsg::is_irreducible(x)) continue;
      const auto members = nsg::enumerate_class(x);
      const auto in_class = as_strings(members);
      for (const auto& a : members) {
        for (const auto& b : members) {
          CHECK(in_class.count(nsg::meet(a, b).to_string()) == 1);
          CHECK(in_class.count(nsg::join(a, b).to_string()) == 1);
        }
      }
    }
  }
}

TEST_CASE("toggle closure is idempotent and extensive over every subset") {
  for (int f = 1; f <= 12; ++f) {
    for (const auto& x : nsg::oracle_enumerate(f).members) {
      if (!nsg::is_irreducible(x) || nsg::is_singleton_class(x)) continue;
      const auto desc = nsg::describe_class(x);
      const auto& free = desc.free_members;
      REQUIRE(free.size() <= 16);
      for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
        std::vector<int> subset;
        for (std::size_t k = 0; k < free.size(); ++k) {
          if (mask >> k & 1) subset.push_back(free[k]);
        }
        const auto closed = nsg::toggle_closure_union(subset, desc);
        CHECK(std::includes(closed.begin(), closed.end(), subset.begin(),
                            subset.end()));
        CHECK(nsg::toggle_closure_union(closed, desc) == closed);
      }
    }
  }
}

TEST_CASE("class sizes add up to the oracle total") {
  for (int f = 1; f <= 14; ++f) {
    const auto oracle = nsg::oracle_enumerate(f);
    std::uint64_t total = 0;
    for (const auto& x : oracle.members) {
      if (nsg::is_irreducible(x)) total += nsg::class_size(x);
    }
    CHECK(total == oracle.total);
  }
}

TEST_CASE("materializing cap") {
  const auto x = KunzVector::parse("11001");
  try {
    nsg::enumerate_class(x, 2);
    FAIL("expected limit_exceeded");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::errc::limit_exceeded);
  }
  CHECK(nsg::enumerate_class(x, 4).size() == 4);

  // Streaming can stop early without an error and the stream stays usable.
  int taken = 0;
  const bool completed = nsg::for_each_class_member(x, [&](const KunzVector&) {
    return ++taken < 2;
  });
  CHECK_FALSE(completed);
  CHECK(taken == 2);
}

TEST_CASE("non-irreducible input is rejected") {
  CHECK_THROWS_AS(nsg::enumerate_class(KunzVector::parse("11111")), nsg::Error);
  CHECK_THROWS_AS(nsg::class_size(KunzVector::parse("11011")), nsg::Error);
}
