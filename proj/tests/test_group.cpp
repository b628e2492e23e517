#include <doctest.h>

#include "regrade/error.hpp"
#include "regrade/group.hpp"

using namespace regrade;

namespace {
const std::vector<GroupSpec> small_groups() {
  return {GroupSpec{std::vector<long>{}}, GroupSpec({2}),    GroupSpec({4, 2}),
          GroupSpec({3, 3}),              GroupSpec({2, 2, 2}), GroupSpec({12}),
          GroupSpec({16})};
}
}  // namespace

TEST_SUITE("group") {

TEST_CASE("addition examples") {
  GroupSpec z2({2});
  CHECK(z2.add(GroupElement{{1}}, GroupElement{{1}}) == z2.zero());
  GroupSpec z33({3, 3});
  CHECK(z33.add(GroupElement{{1, 2}}, GroupElement{{2, 2}}) == GroupElement{{0, 1}});
  GroupSpec z42({4, 2});
  for (const auto& g : z42.enumerate()) CHECK(z42.add(g, z42.zero()) == g);
}

TEST_CASE("addition is associative and commutative on small groups") {
  for (const auto& g : small_groups()) {
    if (g.order() > 16) continue;
    const auto elems = g.enumerate();
    for (const auto& a : elems)
      for (const auto& b : elems) {
        CHECK(g.add(a, b) == g.add(b, a));
        for (const auto& c : elems) CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
      }
  }
}

TEST_CASE("order annihilates every element") {
  for (const auto& g : small_groups()) {
    if (g.order() > 16) continue;
    for (const auto& a : g.enumerate()) {
      GroupElement acc = g.zero();
      for (long i = 0; i < g.order(); ++i) acc = g.add(acc, a);
      CHECK(acc == g.zero());
    }
  }
}

TEST_CASE("enumeration is lexicographic with zero first") {
  CHECK(GroupSpec({2}).enumerate() ==
        std::vector<GroupElement>{GroupElement{{0}}, GroupElement{{1}}});
  CHECK(GroupSpec({2, 2}).enumerate() ==
        std::vector<GroupElement>{GroupElement{{0, 0}}, GroupElement{{0, 1}},
                                  GroupElement{{1, 0}}, GroupElement{{1, 1}}});
  CHECK(GroupSpec{std::vector<long>{}}.enumerate() ==
        std::vector<GroupElement>{GroupElement{}});
}

TEST_CASE("index round trip") {
  for (const auto& g : small_groups()) {
    const auto elems = g.enumerate();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      CHECK(g.index_of(elems[i]) == i);
      CHECK(g.element_at(i) == elems[i]);
    }
  }
}

TEST_CASE("exponent is the lcm of the moduli") {
  CHECK(GroupSpec({2, 2}).exponent() == 2);
  CHECK(GroupSpec({4, 2}).exponent() == 4);
  CHECK(GroupSpec({3, 3}).exponent() == 3);
  CHECK(GroupSpec{std::vector<long>{}}.exponent() == 1);
}

TEST_CASE("miller sum closed form") {
  const MillerSum z2 = miller_sum(GroupSpec({2}));
  CHECK(z2.sum == GroupElement{{1}});
  CHECK(z2.order2_count == 1);
  const MillerSum z22 = miller_sum(GroupSpec({2, 2}));
  CHECK(z22.sum == GroupElement{{0, 0}});
  CHECK(z22.order2_count == 3);
  const MillerSum z33 = miller_sum(GroupSpec({3, 3}));
  CHECK(z33.sum == GroupElement{{0, 0}});
  CHECK(z33.order2_count == 0);
}

TEST_CASE("miller sum agrees with the fold over the enumeration") {
  for (const auto& g : small_groups()) {
    const MillerSum m = miller_sum(g);
    GroupElement fold = g.zero();
    long involutions = 0;
    for (const auto& e : g.enumerate()) {
      fold = g.add(fold, e);
      if (!e.is_zero() && g.add(e, e) == g.zero()) ++involutions;
    }
    CHECK(m.sum == fold);
    CHECK(m.order2_count == involutions);
    CHECK((m.sum.is_zero()) == (involutions != 1));
  }
}

TEST_CASE("shape errors") {
  GroupSpec z2({2});
  CHECK_THROWS_AS(z2.add(GroupElement{{1, 0}}, GroupElement{{1}}), ShapeError);
  CHECK_THROWS_AS(z2.index_of(GroupElement{{5}}), ShapeError);
  CHECK_THROWS_AS(GroupSpec({0}), DomainError);
}

}  // TEST_SUITE
