#include "doctest.h"
#include "hilbk3/perm.hpp"

#include <numeric>
#include <set>

using namespace hilbk3;

TEST_CASE("orbit decomposition") {
  const auto id4 = Perm::identity(4);
  CHECK(orbits(id4).size() == 4);
  const auto t12 = Perm::transposition(4, 0, 1);
  const auto o = orbits(t12);
  REQUIRE(o.size() == 3);
  CHECK(o.blocks[0] == std::vector<uint8_t>{0, 1});
  const auto c = Perm::from_cycles(4, {{0, 1, 2}});
  const auto oc = orbits(c);
  REQUIRE(oc.size() == 2);
  CHECK(oc.blocks[0] == std::vector<uint8_t>{0, 1, 2});
  CHECK(oc.blocks[1] == std::vector<uint8_t>{3});
}

TEST_CASE("join") {
  const auto a = orbits(Perm::transposition(4, 0, 1));
  const auto b = orbits(Perm::transposition(4, 1, 2));
  const auto j = join(a, b);
  REQUIRE(j.size() == 2);
  CHECK(j.blocks[0] == std::vector<uint8_t>{0, 1, 2});
  CHECK(join(a, a) == a);
  CHECK(join(a, OrbitPartition::singletons(4)) == a);
  // union-find oracle: two elements share a join block iff connected via
  // alternating blocks; brute-force closure check.
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      bool connected = false;
      std::set<int> reach = {x};
      for (int steps = 0; steps < 4; ++steps)
        for (const auto& part : {a, b})
          for (const auto& blk : part.blocks) {
            bool touches = false;
            for (uint8_t e : blk) touches |= reach.count(e) > 0;
            if (touches)
              for (uint8_t e : blk) reach.insert(e);
          }
      connected = reach.count(y) > 0;
      CHECK(connected == (j.block_of[x] == j.block_of[y]));
    }
}

TEST_CASE("graph defect examples") {
  const int n = 4;
  const auto id = Perm::identity(n);
  for (const auto& blk : orbits(id).blocks)
    CHECK(graph_defect_block(id, id, blk) == 0);
  const auto t12 = Perm::transposition(n, 0, 1);
  CHECK(graph_defect_block(t12, t12, {0, 1}) == 0);
  const auto t13 = Perm::transposition(n, 0, 2);
  CHECK(graph_defect_block(t12, t13, {0, 1, 2}) == 0);
}

TEST_CASE("graph defect is a nonnegative integer across all of S4 x S4") {
  const auto perms = all_perms(4);
  REQUIRE(perms.size() == 24);
  for (const auto& s : perms)
    for (const auto& t : perms)
      for (int g : graph_defect(s, t)) CHECK(g >= 0);  // throws if fractional
}

TEST_CASE("composition, inverse, conjugation") {
  const auto s = Perm::from_cycles(4, {{0, 1, 2}});
  const auto t = Perm::transposition(4, 2, 3);
  CHECK(s.compose(s.inverse()).is_identity());
  CHECK(s.conjugated_by(t).cycle_type() == s.cycle_type());
  // (01) . (02): apply (02) first, then (01): 0->2, 2->1, 1->0.
  const auto u = Perm::transposition(3, 0, 1).compose(Perm::transposition(3, 0, 2));
  CHECK(u == Perm::from_cycles(3, {{0, 2, 1}}));
}

TEST_CASE("cycle type enumeration") {
  CHECK(perms_of_cycle_type(4, {2, 1, 1}).size() == 6);
  CHECK(perms_of_cycle_type(4, {2, 2}).size() == 3);
  CHECK(perms_of_cycle_type(4, {3, 1}).size() == 8);
  CHECK(perms_of_cycle_type(4, {4}).size() == 6);
  CHECK(perms_of_cycle_type(4, {1, 1, 1, 1}).size() == 1);
}
