#include <doctest.h>

#include "regrade/error.hpp"
#include "regrade/io.hpp"
#include "regrade/pairing.hpp"

using namespace regrade;

namespace {

// Independent exhaustive law check, kept separate from the validating
// constructors on purpose.
void check_bicharacter_laws(const Bicharacter& b) {
  const GroupSpec& g = b.group();
  const auto elems = g.enumerate();
  for (const auto& x : elems)
    for (const auto& y : elems) {
      CHECK(b.at(x, y) * b.at(y, x) == Cyclotomic(1));
      for (const auto& z : elems) {
        CHECK(b.at(x, g.add(y, z)) == b.at(x, y) * b.at(x, z));
        CHECK(b.at(g.add(x, z), y) == b.at(x, y) * b.at(z, y));
      }
    }
}

std::vector<Cocycle> cocycle_family() {
  std::vector<Cocycle> out;
  out.push_back(trivial_cocycle(GroupSpec({2})));
  out.push_back(trivial_cocycle(GroupSpec({2, 2})));
  out.push_back(cyclic_cocycle(2));
  out.push_back(cyclic_cocycle(3));
  out.push_back(standard_cocycle(2));
  out.push_back(standard_cocycle(3));
  out.push_back(standard_cocycle(4, 2));
  std::vector<Cyclotomic> f = {Cyclotomic(1), Cyclotomic(3), Cyclotomic::zeta(4), Cyclotomic(-2)};
  out.push_back(coboundary_twist(standard_cocycle(2), f));
  return out;
}

}  // namespace

TEST_SUITE("pairing") {

TEST_CASE("grassmann bicharacter table") {
  const Bicharacter b = grassmann_bicharacter();
  const GroupElement z{{0}}, o{{1}};
  CHECK(b.at(z, z) == Cyclotomic(1));
  CHECK(b.at(z, o) == Cyclotomic(1));
  CHECK(b.at(o, z) == Cyclotomic(1));
  CHECK(b.at(o, o) == Cyclotomic(-1));
}

TEST_CASE("generator extension on Z3xZ3") {
  const Cyclotomic w = Cyclotomic::zeta(3);
  const Bicharacter b = bicharacter_from_generators(
      GroupSpec({3, 3}), Mat{{Cyclotomic(1), w}, {w * w, Cyclotomic(1)}});
  check_bicharacter_laws(b);
  const auto ord = b.at(GroupElement{{0, 1}}, GroupElement{{1, 0}}).root_of_unity_order();
  REQUIRE(ord.has_value());
  CHECK(*ord == 3);  // primitive cube root
}

TEST_CASE("trivial bicharacter on any group") {
  check_bicharacter_laws(trivial_bicharacter(GroupSpec({4, 2})));
  check_bicharacter_laws(trivial_bicharacter(GroupSpec{std::vector<long>{}}));
}

TEST_CASE("generator compatibility failures name the offending pair") {
  CHECK_THROWS_WITH_AS(
      bicharacter_from_generators(GroupSpec({2}), Mat{{Cyclotomic::zeta(3)}}),
      doctest::Contains("(0,0)"), ValidationError);
  CHECK_THROWS_AS(bicharacter_from_generators(GroupSpec({2, 2}),
                                              Mat{{Cyclotomic(1), Cyclotomic(2)},
                                                  {Cyclotomic(1), Cyclotomic(1)}}),
                  ValidationError);
}

TEST_CASE("doctored tables are rejected, deterministically across policies") {
  const Bicharacter good = grassmann_bicharacter();
  std::vector<Cyclotomic> t = good.table();
  t[3] = Cyclotomic(1);  // break beta(1,1)
  std::string serial_msg, parallel_msg;
  try {
    Bicharacter(good.group(), t, Exec::serial);
  } catch (const ValidationError& e) {
    serial_msg = e.what();
  }
  try {
    Bicharacter(good.group(), t, Exec::parallel);
  } catch (const ValidationError& e) {
    parallel_msg = e.what();
  }
  CHECK(!serial_msg.empty());
  CHECK(serial_msg == parallel_msg);

  std::vector<Cyclotomic> zero_table(4, Cyclotomic(1));
  zero_table[0] = Cyclotomic(0);
  CHECK_THROWS_AS(Bicharacter(GroupSpec({2}), zero_table), ValidationError);

  const Cocycle std2 = standard_cocycle(2);
  std::vector<Cyclotomic> ct = std2.table();
  ct[5] = -ct[5];
  CHECK_THROWS_AS(Cocycle(std2.group(), ct), ValidationError);
}

TEST_CASE("induced bicharacter of the standard cocycle") {
  for (long n : {2L, 3L}) {
    const Cocycle tau = standard_cocycle(n);
    const Bicharacter b = induced_bicharacter(tau);
    const Cyclotomic xi = Cyclotomic::zeta(n);
    const GroupSpec& g = tau.group();
    for (const auto& x : g.enumerate())
      for (const auto& y : g.enumerate())
        CHECK(b.at(x, y) == xi.pow(x.r[1] * y.r[0] - x.r[0] * y.r[1]));
  }
}

TEST_CASE("symmetric cocycles induce the trivial bicharacter") {
  const Cocycle c2 = cyclic_cocycle(2);
  const Bicharacter b = induced_bicharacter(c2);
  for (const auto& v : b.table()) CHECK(v == Cyclotomic(1));
  std::vector<Cyclotomic> f = {Cyclotomic(1), Cyclotomic(5)};
  const Bicharacter bt = induced_bicharacter(coboundary_twist(trivial_cocycle(GroupSpec({2})), f));
  for (const auto& v : bt.table()) CHECK(v == Cyclotomic(1));
}

TEST_CASE("coboundary twists induce the same bicharacter") {
  const Cocycle tau = standard_cocycle(2);
  std::vector<Cyclotomic> f = {Cyclotomic(2), Cyclotomic(-1), Cyclotomic::zeta(4), Cyclotomic(7)};
  const Cocycle twisted = coboundary_twist(tau, f);
  CHECK(induced_bicharacter(twisted).table() == induced_bicharacter(tau).table());
}

TEST_CASE("radical examples with a brute oracle") {
  CHECK(radical(trivial_bicharacter(GroupSpec({2, 2}))).size() == 4);
  CHECK(radical(grassmann_bicharacter()) == std::vector<GroupElement>{GroupElement{{0}}});
  const Bicharacter pauli = pauli_bicharacter(2);
  CHECK(radical(pauli) == std::vector<GroupElement>{GroupElement{{0, 0}}});
  // oracle: scan all (x, k) pairs directly
  for (const Cocycle& tau : cocycle_family()) {
    const Bicharacter b = induced_bicharacter(tau);
    std::vector<GroupElement> brute;
    for (const auto& k : b.group().enumerate()) {
      bool all_one = true;
      for (const auto& x : b.group().enumerate())
        if (!b.at(x, k).is_one()) all_one = false;
      if (all_one) brute.push_back(k);
    }
    CHECK(radical(b) == brute);
  }
}

TEST_CASE("radical is a subgroup") {
  for (const Cocycle& tau : cocycle_family()) {
    const Bicharacter b = induced_bicharacter(tau);
    const auto rad = radical(b);
    auto contains = [&](const GroupElement& e) {
      for (const auto& r : rad)
        if (r == e) return true;
      return false;
    };
    CHECK(contains(b.group().zero()));
    for (const auto& x : rad)
      for (const auto& y : rad) CHECK(contains(b.group().add(x, y)));
  }
}

TEST_CASE("regular elements equal the radical of the induced bicharacter") {
  for (const Cocycle& tau : cocycle_family()) {
    CHECK(regular_elements(tau) == radical(induced_bicharacter(tau)));
    // brute oracle for Q0 itself
    std::vector<GroupElement> brute;
    for (const auto& x : tau.group().enumerate()) {
      bool reg = true;
      for (const auto& s : tau.group().enumerate())
        if (tau.at(x, s) != tau.at(s, x)) reg = false;
      if (reg) brute.push_back(x);
    }
    CHECK(regular_elements(tau) == brute);
  }
}

TEST_CASE("minimality frozen values") {
  const MinimalityReport grass = is_minimal(grassmann_bicharacter());
  CHECK(grass.det == Cyclotomic(-2));
  CHECK(grass.minimal());
  CHECK(!grass.has_equal_columns);

  const MinimalityReport triv = is_minimal(trivial_bicharacter(GroupSpec({2})));
  CHECK(triv.det == Cyclotomic(0));
  CHECK(!triv.minimal());
  REQUIRE(triv.equal_columns_witness.has_value());
  CHECK(triv.equal_columns_witness->first == GroupElement{{0}});
  CHECK(triv.equal_columns_witness->second == GroupElement{{1}});

  for (long n : {2L, 3L}) {
    const MinimalityReport rep = is_minimal(pauli_bicharacter(n));
    CHECK(rep.minimal());
    BigInt expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(2 * n * n));
    CHECK(rep.det * rep.det.conj() == Cyclotomic(Rational(expect)));
  }
}

TEST_CASE("determinant degenerate and magnitude cases") {
  CHECK(det_decomposition_matrix(trivial_bicharacter(GroupSpec{std::vector<long>{}})) ==
        Cyclotomic(1));
  const Bicharacter p2 = pauli_bicharacter(2);
  const Cyclotomic d = det_decomposition_matrix(p2);
  CHECK(d * d.conj() == Cyclotomic(256));
}

TEST_CASE("minimality triple equivalence over a generated family") {
  // beta(e_i, e_j) drawn from small root-of-unity grids
  struct Probe {
    GroupSpec g;
    std::vector<Mat> gens;
  };
  std::vector<Probe> probes;
  probes.push_back({GroupSpec({2}), {Mat{{Cyclotomic(1)}}, Mat{{Cyclotomic(-1)}}}});
  probes.push_back({GroupSpec({3}), {Mat{{Cyclotomic(1)}}}});
  probes.push_back({GroupSpec({4}), {Mat{{Cyclotomic(1)}}, Mat{{Cyclotomic(-1)}}}});
  Probe z22{GroupSpec({2, 2}), {}};
  for (long d00 : {1L, -1L})
    for (long d11 : {1L, -1L})
      for (long off : {1L, -1L})
        z22.gens.push_back(Mat{{Cyclotomic(d00), Cyclotomic(off)},
                               {Cyclotomic(off), Cyclotomic(d11)}});
  probes.push_back(std::move(z22));
  for (const auto& probe : probes)
    for (const auto& gen : probe.gens) {
      const Bicharacter beta = bicharacter_from_generators(probe.g, gen);
      const MinimalityReport rep = is_minimal(beta);  // raises on any disagreement
      CHECK(rep.radical_trivial == !rep.has_equal_columns);
      CHECK(rep.radical_trivial == !rep.det.is_zero());
    }
}

TEST_CASE("pairing json round trip") {
  const Bicharacter b = pauli_bicharacter(3);
  const json j = bicharacter_to_json(b);
  const Pairing p = pairing_from_json(j);
  REQUIRE(std::holds_alternative<Bicharacter>(p));
  CHECK(std::get<Bicharacter>(p).table() == b.table());
  CHECK(bicharacter_to_json(std::get<Bicharacter>(p)) == j);

  const Cocycle c = standard_cocycle(4, 2);
  const Pairing pc = pairing_from_json(cocycle_to_json(c));
  REQUIRE(std::holds_alternative<Cocycle>(pc));
  CHECK(std::get<Cocycle>(pc).table() == c.table());

  // generator shorthand
  const json gj = json::parse(R"({"group":{"moduli":[2]},"kind":"bicharacter",
                                  "generators":[[-1]]})");
  const Pairing pg = pairing_from_json(gj);
  CHECK(std::get<Bicharacter>(pg).table() == grassmann_bicharacter().table());
}

TEST_CASE("builtin pairing specs") {
  CHECK(std::get<Bicharacter>(pairing_from_spec("grassmann")).table() ==
        grassmann_bicharacter().table());
  CHECK(std::get<Bicharacter>(pairing_from_spec("pauli:2")).table() ==
        pauli_bicharacter(2).table());
  CHECK(std::get<Bicharacter>(pairing_from_spec("trivial@2x2")).group().order() == 4);
  CHECK(std::get<Cocycle>(pairing_from_spec("cocycle:standard:4^2")).table() ==
        standard_cocycle(4, 2).table());
  CHECK_THROWS_AS(pairing_from_spec("no-such-pairing"), ParseError);
}

}  // TEST_SUITE
