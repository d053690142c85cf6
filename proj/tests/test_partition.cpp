#include <algorithm>
#include <set>

#include "doctest.h"
#include "nsg/oracle.hpp"
#include "nsg/partition.hpp"
#include "support.hpp"

using nsg::BinarySystem;
using nsg::KunzVector;
using nsg::NumericalSemigroup;

TEST_CASE("class key") {
  CHECK(nsg::class_key(nsg::closure_from_generators({3, 5})).members ==
        std::vector<int>{3});
  CHECK(nsg::class_key(nsg::closure_from_generators({3, 4})).members.empty());
  CHECK(nsg::class_key(nsg::closure_from_generators({2, 7})).members ==
        std::vector<int>{2});
  CHECK(nsg::class_key(KunzVector::parse("1101001")).members ==
        std::vector<int>{3});
}

TEST_CASE("class maximum") {
  const auto s3810 = NumericalSemigroup::from_gaps(bits_of("1101101"), 7);
  CHECK(nsg::class_max(s3810) == nsg::closure_from_generators({3, 5}));

  const auto s35 = nsg::closure_from_generators({3, 5});
  CHECK(nsg::class_max(s35) == s35);

  const auto full5 = NumericalSemigroup::from_gaps(bits_of("11111"), 5);
  CHECK(nsg::class_max(full5) == nsg::closure_from_generators({3, 4}));
}

TEST_CASE("class minimum") {
  const auto s35 = nsg::closure_from_generators({3, 5});
  CHECK(nsg::class_min(s35) ==
        NumericalSemigroup::from_gaps(bits_of("1101101"), 7));

  const auto s34 = nsg::closure_from_generators({3, 4});
  CHECK(nsg::class_min(s34) ==
        NumericalSemigroup::from_gaps(bits_of("11111"), 5));

  const auto s27 = nsg::closure_from_generators({2, 7});
  CHECK(nsg::class_min(s27) == s27);  // homogeneous fixed point
}

TEST_CASE("partner bijection on the extremes") {
  const auto s35 = nsg::closure_from_generators({3, 5});
  const auto partner = nsg::homogeneous_partner(s35);
  CHECK(partner == NumericalSemigroup::from_gaps(bits_of("1101101"), 7));
  CHECK(nsg::irreducible_partner(partner) == s35);

  const auto s27 = nsg::closure_from_generators({2, 7});
  CHECK(nsg::homogeneous_partner(s27) == s27);

  try {
    nsg::homogeneous_partner(NumericalSemigroup::from_gaps(bits_of("11111"), 5));
    FAIL("expected not_irreducible");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::errc::not_irreducible);
  }
  try {
    nsg::irreducible_partner(nsg::closure_from_generators({3, 5}));
    FAIL("expected not_homogeneous");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::errc::not_homogeneous);
  }
}

TEST_CASE("class minimum on coordinates") {
  CHECK(nsg::class_min_kunz(KunzVector::parse("11001")).to_string() == "11111");
  CHECK(nsg::class_min_kunz(KunzVector::parse("10101")).to_string() == "10101");
  CHECK(nsg::class_min_kunz(KunzVector::parse("1101001")).to_string() ==
        "1101101");
  CHECK_THROWS_AS(nsg::class_min_kunz(KunzVector::parse("11111")), nsg::Error);
}

TEST_CASE("binary program reproduces the class minimum") {
  const auto x2 = KunzVector::parse("11001");
  const nsg::BitVec best2 = nsg::solve_binary_program(nsg::class_min_program(x2));
  CHECK(best2 == bits_of("11111"));
  CHECK(best2.count() == 5);  // objective value

  const auto x1 = KunzVector::parse("10101");
  const nsg::BitVec best1 = nsg::solve_binary_program(nsg::class_min_program(x1));
  CHECK(best1 == bits_of("10101"));
  CHECK(best1.count() == 3);
}

TEST_CASE("binary program agrees with the direct closure everywhere small") {
  for (int f = 1; f <= 12; ++f) {
    for (const auto& x : nsg::oracle_enumerate(f).members) {
      if (!nsg::is_irreducible(x)) continue;
      const auto direct = nsg::class_min_kunz(x);
      const auto solved = nsg::solve_binary_program(nsg::class_min_program(x));
      CHECK(solved == direct.bits());
    }
  }
}

TEST_CASE("infeasible guard system") {
  // Pinning position 1 to zero collides with the forced run of zeros it
  // propagates up to position F, which is pinned to one.
  BinarySystem sys;
  sys.dimension = 2;
  sys.superadditive.push_back({1, 1, 2});
  sys.pins = {{1, 0}, {2, 1}};
  sys.maximize_popcount = true;
  try {
    nsg::solve_binary_program(sys);
    FAIL("expected infeasible");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::errc::infeasible);
  }
}

TEST_CASE("solver handles the two auxiliary constraint families") {
  BinarySystem sys;
  sys.dimension = 4;
  sys.popcount_eq = 2;
  sys.twice_bounded.push_back({1, 2, 3});  // x1 + x2 <= 2 x3
  sys.pins = {{4, 0}};

  std::vector<std::string> seen;
  nsg::for_each_feasible(sys, [&](const nsg::BitVec& v) {
    std::string s;
    for (int i = 1; i <= 4; ++i) s += v.test(i) ? '1' : '0';
    seen.push_back(s);
    return true;
  });
  // Brute force: choose 2 of x1..x3 (x4 = 0) subject to the bound.
  // 1100 violates (1 + 1 > 0), 1010 and 0110 satisfy (<= 2), 0011 needs
  // popcount 2 with x4 = 0 -> x3 = 1 plus one of x1, x2.
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<std::string>{"0110", "1010"});
}

TEST_CASE("feasible enumeration matches the oracle members under pins") {
  // The feasible region of the class-minimum program is exactly the set of
  // valid vectors whose key positions are members.
  for (int f = 4; f <= 9; ++f) {
    for (const auto& x : nsg::oracle_enumerate(f).members) {
      if (!nsg::is_irreducible(x)) continue;
      const auto sys = nsg::class_min_program(x);
      std::set<std::string> feasible;
      nsg::for_each_feasible(sys, [&](const nsg::BitVec& v) {
        std::string s;
        for (int i = 1; i <= f; ++i) s += v.test(i) ? '1' : '0';
        feasible.insert(s);
        return true;
      });
      std::set<std::string> expected;
      const auto key = nsg::class_key(x).members;
      for (const auto& m : nsg::oracle_enumerate(f).members) {
        bool pinned_ok = true;
        for (int i : key) pinned_ok = pinned_ok && !m.gap(i);
        if (pinned_ok) expected.insert(m.to_string());
      }
      CHECK(feasible == expected);
    }
  }
}

TEST_CASE("free member set and toggle closures") {
  const auto x2 = KunzVector::parse("11001");
  const auto desc2 = nsg::describe_class(x2);
  CHECK(desc2.free_members == std::vector<int>{3, 4});
  CHECK(nsg::toggle_closure(3, desc2) == std::vector<int>{3});
  CHECK(nsg::toggle_closure(4, desc2) == std::vector<int>{4});
  CHECK(nsg::toggle_closure_union(std::vector<int>{3, 4}, desc2) ==
        std::vector<int>{3, 4});
  CHECK(nsg::toggle_closure_union(std::vector<int>{}, desc2).empty());

  const auto x35 = KunzVector::parse("1101001");
  const auto desc35 = nsg::describe_class(x35);
  CHECK(desc35.free_members == std::vector<int>{5});
  CHECK(nsg::toggle_closure(5, desc35) == std::vector<int>{5});
  try {
    nsg::toggle_closure(3, desc35);
    FAIL("expected not_in_free_set");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::errc::not_in_free_set);
  }

  // Descriptor invariants: the minimum dominates the maximum and both share
  // the key.
  CHECK(nsg::class_key(desc35.min_kunz) == nsg::class_key(desc35.max_kunz));
  for (int i = 1; i <= 7; ++i) {
    CHECK(desc35.min_kunz.gap(i) >= desc35.max_kunz.gap(i));
  }
  for (int d : desc35.free_members) CHECK(2 * d > 7);
}

TEST_CASE("key map turns intersections into intersections") {
  for (int f = 1; f <= 10; ++f) {
    const auto members = nsg::oracle_enumerate(f).members;
    for (const auto& a : members) {
      for (const auto& b : members) {
        const auto met = nsg::meet(a, b);
        std::vector<int> expect;
        const auto ka = nsg::class_key(a).members;
        const auto kb = nsg::class_key(b).members;
        std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(),
                              std::back_inserter(expect));
        CHECK(nsg::class_key(met).members == expect);
      }
    }
  }
}

TEST_CASE("membership in a class is the sandwich condition") {
  for (int f = 1; f <= 12; ++f) {
    const auto members = nsg::oracle_enumerate(f).members;
    for (const auto& x : members) {
      if (!nsg::is_irreducible(x)) continue;
      const auto minimum = nsg::class_min_kunz(x);
      for (const auto& other : members) {
        const bool same_class =
            nsg::class_key(other) == nsg::class_key(x);
        bool sandwiched = true;
        for (int i = 1; i <= f; ++i) {
          // between the minimum (most gaps) and x (fewest gaps)
          if (other.gap(i) > minimum.gap(i) || other.gap(i) < x.gap(i)) {
            sandwiched = false;
            break;
          }
        }
        CHECK(same_class == sandwiched);
      }
    }
  }
}
