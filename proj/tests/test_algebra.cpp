#include <doctest.h>

#include "regrade/algebra.hpp"
#include "regrade/error.hpp"
#include "regrade/io.hpp"

using namespace regrade;

namespace {

bool same_structure(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto &ta = a.terms(i, j), &tb = b.terms(i, j);
      if (ta.size() != tb.size()) return false;
      for (std::size_t t = 0; t < ta.size(); ++t)
        if (ta[t].k != tb[t].k || ta[t].c != tb[t].c) return false;
    }
  return true;
}

Mat coordinate_subspace(const GradedAlgebra& a, std::initializer_list<std::size_t> idx) {
  Mat m;
  for (std::size_t i : idx) m.push_back(a.basis_vec(i));
  rref(m);
  return m;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("twisted group algebras") {
  const GradedAlgebra kz2 = twisted_group_algebra(trivial_cocycle(GroupSpec({2})));
  CHECK(kz2.dim() == 2);
  CHECK(kz2.multiply(kz2.basis_vec(1), kz2.basis_vec(1)) == kz2.basis_vec(0));

  const GradedAlgebra d = twisted_group_algebra(standard_cocycle(2));
  const std::size_t i01 = 1, i10 = 2;  // enumeration order (0,0),(0,1),(1,0),(1,1)
  const Vec xy = d.multiply(d.basis_vec(i01), d.basis_vec(i10));
  const Vec yx = d.multiply(d.basis_vec(i10), d.basis_vec(i01));
  Vec neg_yx = yx;
  for (auto& v : neg_yx) v = -v;
  CHECK(xy == neg_yx);

  CHECK(twisted_group_algebra(standard_cocycle(3)).dim() == 9);
}

TEST_CASE("non-normalized cocycles still give a unital algebra") {
  std::vector<Cyclotomic> f = {Cyclotomic(2), Cyclotomic(3)};
  const Cocycle tau = coboundary_twist(trivial_cocycle(GroupSpec({2})), f);
  CHECK(tau.at(std::size_t{0}, std::size_t{0}) == Cyclotomic(2));
  const GradedAlgebra a = twisted_group_algebra(tau);  // unit law checked at construction
  CHECK(a.unit()[0] == Cyclotomic(Rational(1, 2)));
}

TEST_CASE("pauli matrix algebra") {
  CHECK_THROWS_AS(pauli_matrix_algebra(1), DomainError);
  const GradedAlgebra p2 = pauli_matrix_algebra(2);
  CHECK(p2.dim() == 4);
  for (std::size_t gi = 0; gi < 4; ++gi) CHECK(p2.component(gi).size() == 1);
  // X Y = -Y X via the structure constants (the constructor derived them
  // from explicit matrix products)
  const std::size_t x = p2.group().index_of(GroupElement{{1, 0}});
  const std::size_t y = p2.group().index_of(GroupElement{{0, 1}});
  const Vec xy = p2.multiply(p2.basis_vec(x), p2.basis_vec(y));
  const Vec yx = p2.multiply(p2.basis_vec(y), p2.basis_vec(x));
  for (std::size_t c = 0; c < 4; ++c) CHECK(xy[c] == -yx[c]);

  const GradedAlgebra p3 = pauli_matrix_algebra(3);
  const std::size_t x3 = p3.group().index_of(GroupElement{{1, 0}});
  const std::size_t y3 = p3.group().index_of(GroupElement{{0, 1}});
  Vec xv = p3.basis_vec(x3), yv = p3.basis_vec(y3);
  Vec x_cubed = p3.multiply(p3.multiply(xv, xv), xv);
  Vec y_cubed = p3.multiply(p3.multiply(yv, yv), yv);
  CHECK(x_cubed == p3.unit());
  CHECK(y_cubed == p3.unit());
}

TEST_CASE("pauli algebra matches the standard twisted group algebra") {
  // basis matching X^i Y^j <-> X_(i, n-j)
  for (long n : {2L, 3L}) {
    const GradedAlgebra p = pauli_matrix_algebra(n);
    const GradedAlgebra t = twisted_group_algebra(standard_cocycle(n));
    const std::size_t un = static_cast<std::size_t>(n);
    auto match = [&](std::size_t pauli_idx) {
      const long i = static_cast<long>(pauli_idx / un);
      const long j = static_cast<long>(pauli_idx % un);
      return t.group().index_of(GroupElement{{i, (n - j) % n}});
    };
    for (std::size_t a = 0; a < p.dim(); ++a)
      for (std::size_t b = 0; b < p.dim(); ++b) {
        const auto& cell = p.terms(a, b);
        REQUIRE(cell.size() == 1);
        const auto& tcell = t.terms(match(a), match(b));
        REQUIRE(tcell.size() == 1);
        CHECK(match(cell[0].k) == tcell[0].k);
        CHECK(cell[0].c == tcell[0].c);
      }
  }
}

TEST_CASE("truncated grassmann") {
  const GradedAlgebra e1 = truncated_grassmann(1);
  CHECK(e1.dim() == 2);
  CHECK(vec_is_zero(e1.multiply(e1.basis_vec(1), e1.basis_vec(1))));

  const GradedAlgebra e2 = truncated_grassmann(2);
  const Vec e12 = e2.multiply(e2.basis_vec(1), e2.basis_vec(2));
  CHECK(!vec_is_zero(e12));
  Vec e21 = e2.multiply(e2.basis_vec(2), e2.basis_vec(1));
  for (auto& v : e21) v = -v;
  CHECK(e12 == e21);

  // every product of four odd elements vanishes in E(3)
  const GradedAlgebra e3 = truncated_grassmann(3);
  const auto& odd = e3.component(1);
  for (std::size_t a : odd)
    for (std::size_t b : odd)
      for (std::size_t c : odd)
        for (std::size_t d : odd) {
          const Vec p = e3.multiply(e3.multiply(e3.basis_vec(a), e3.basis_vec(b)),
                                    e3.multiply(e3.basis_vec(c), e3.basis_vec(d)));
          CHECK(vec_is_zero(p));
        }
}

TEST_CASE("truncated polynomial locals") {
  const GradedAlgebra a = truncated_polynomial_local(1, 1);
  CHECK(a.dim() == 2);
  CHECK(same_subspace(jacobson_radical(a), coordinate_subspace(a, {1})));

  const GradedAlgebra b = truncated_polynomial_local(1, 2);
  CHECK(b.dim() == 3);
  const Mat j = jacobson_radical(b);
  CHECK(j.size() == 2);
  // J^2 = span{z^2} != 0, J^3 = 0
  Mat j2;
  for (const auto& u : j)
    for (const auto& v : j) j2.push_back(b.multiply(u, v));
  rref(j2);
  CHECK(j2.size() == 1);
  Mat j3;
  for (const auto& u : j2)
    for (const auto& v : j) j3.push_back(b.multiply(u, v));
  rref(j3);
  CHECK(j3.empty());

  const GradedAlgebra c = truncated_polynomial_local(2, 1);
  CHECK(c.dim() == 3);
  Mat jc = jacobson_radical(c);
  CHECK(jc.size() == 2);
  Mat jc2;
  for (const auto& u : jc)
    for (const auto& v : jc) jc2.push_back(c.multiply(u, v));
  rref(jc2);
  CHECK(jc2.empty());
}

TEST_CASE("tensor products") {
  const GradedAlgebra d = twisted_group_algebra(standard_cocycle(2));
  const GradedAlgebra a = tensor_product(d, truncated_polynomial_local(1, 1));
  CHECK(a.dim() == d.dim() * 2);
  CHECK(a.group() == d.group());  // trivial factor collapses

  // A (x) K is A again, on the nose
  GroupSpec trivial{std::vector<long>{}};
  ProductTable one_prod(1, std::vector<std::vector<SparseTerm>>(1));
  one_prod[0][0] = {{0, Cyclotomic(1)}};
  const GradedAlgebra k(trivial, {"1"}, {trivial.zero()}, one_prod, Vec{Cyclotomic(1)});
  CHECK(same_structure(tensor_product(d, k), d));
  CHECK(tensor_product(d, k).degrees() == d.degrees());

  // dim J(K^aZ2 (x) K[z]/(z^2)) = 2
  const GradedAlgebra t =
      tensor_product(twisted_group_algebra(cyclic_cocycle(2)), truncated_polynomial_local(1, 1));
  CHECK(jacobson_radical(t).size() == 2);
}

TEST_CASE("direct sums") {
  const GradedAlgebra d = twisted_group_algebra(standard_cocycle(2));
  const GradedAlgebra s = direct_sum(d, d);
  CHECK(s.dim() == 2 * d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j)
      CHECK(vec_is_zero(s.multiply(s.basis_vec(i), s.basis_vec(d.dim() + j))));
  CHECK(jacobson_radical(s).empty());
  CHECK_THROWS_AS(direct_sum(d, twisted_group_algebra(trivial_cocycle(GroupSpec({2})))),
                  ShapeError);
}

TEST_CASE("paper examples") {
  const GradedAlgebra b = paper_example('B');
  // t^2 = 1, z^2 = 0, commutative
  CHECK(b.multiply(b.basis_vec(2), b.basis_vec(2)) == b.basis_vec(0));
  CHECK(vec_is_zero(b.multiply(b.basis_vec(1), b.basis_vec(1))));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(b.multiply(b.basis_vec(i), b.basis_vec(j)) ==
            b.multiply(b.basis_vec(j), b.basis_vec(i)));
  CHECK(b.component(0) == std::vector<std::size_t>{0, 1});  // B_0 = span{1, z}
  CHECK(b.component(1) == std::vector<std::size_t>{2, 3});  // B_1 = span{t, zt}

  const GradedAlgebra a2 = paper_example('A');
  CHECK(a2.component(0) == std::vector<std::size_t>{0, 3});  // A_0 = span{1, zt}
  CHECK(a2.component(1) == std::vector<std::size_t>{1, 2});  // A_1 = span{z, t}
  // zt = -tz
  Vec tz = a2.multiply(a2.basis_vec(2), a2.basis_vec(1));
  for (auto& v : tz) v = -v;
  CHECK(a2.multiply(a2.basis_vec(1), a2.basis_vec(2)) == tz);
  CHECK_THROWS_AS(paper_example('X'), DomainError);
}

TEST_CASE("multiplication basics") {
  const GradedAlgebra p2 = pauli_matrix_algebra(2);
  for (std::size_t i = 0; i < p2.dim(); ++i)
    CHECK(p2.multiply(p2.unit(), p2.basis_vec(i)) == p2.basis_vec(i));
  const GradedAlgebra e2 = truncated_grassmann(2);
  CHECK(vec_is_zero(e2.multiply(e2.basis_vec(1), e2.basis_vec(1))));
  CHECK_THROWS_AS(p2.multiply(Vec(3, Cyclotomic(0)), p2.unit()), ShapeError);
}

TEST_CASE("homogeneous inversion") {
  const GradedAlgebra d = twisted_group_algebra(standard_cocycle(2));
  for (std::size_t i = 0; i < d.dim(); ++i) {
    const auto inv = d.invert_homogeneous(d.basis_vec(i));
    REQUIRE(inv.has_value());
    CHECK(d.multiply(*inv, d.basis_vec(i)) == d.unit());
    // inverse of X_g is supported on X_(-g)
    const GroupElement neg = d.group().neg(d.degrees()[i]);
    for (std::size_t c = 0; c < d.dim(); ++c)
      if (!(*inv)[c].is_zero()) CHECK(d.degrees()[c] == neg);
  }
  const GradedAlgebra e2 = truncated_grassmann(2);
  CHECK(!e2.invert_homogeneous(e2.basis_vec(1)).has_value());
  CHECK(e2.invert_homogeneous(e2.basis_vec(0)).value() == e2.basis_vec(0));
  Vec mixed(e2.dim(), Cyclotomic(0));
  mixed[0] = Cyclotomic(1);
  mixed[1] = Cyclotomic(1);
  CHECK_THROWS_AS(e2.invert_homogeneous(mixed), DomainError);
}

TEST_CASE("jacobson radical frozen values") {
  for (const Cocycle& tau :
       {trivial_cocycle(GroupSpec({2})), cyclic_cocycle(2), standard_cocycle(2),
        standard_cocycle(3), standard_cocycle(4, 2)})
    CHECK(jacobson_radical(twisted_group_algebra(tau)).empty());

  const GradedAlgebra b = paper_example('B');
  CHECK(same_subspace(jacobson_radical(b), coordinate_subspace(b, {1, 3})));

  const GradedAlgebra a2 = paper_example('A');
  CHECK(same_subspace(jacobson_radical(a2), coordinate_subspace(a2, {1, 3})));
}

TEST_CASE("radical computation is idempotent") {
  for (const GradedAlgebra& a :
       {paper_example('B'), paper_example('A'), truncated_grassmann(3),
        tensor_product(twisted_group_algebra(standard_cocycle(2)),
                       truncated_polynomial_local(1, 2))}) {
    const Mat j = jacobson_radical(a);
    CHECK(radical_dim_of_quotient(a, j) == 0);
  }
}

TEST_CASE("parallel and serial gram sweeps agree") {
  for (const GradedAlgebra& a :
       {paper_example('B'), pauli_matrix_algebra(3),
        tensor_product(twisted_group_algebra(standard_cocycle(2)),
                       truncated_polynomial_local(2, 1))}) {
    CHECK(same_subspace(jacobson_radical(a, Exec::serial), jacobson_radical(a, Exec::parallel)));
  }
}

TEST_CASE("radical grading report") {
  const RadicalGradingReport rb = radical_grading_report(paper_example('B'));
  CHECK(rb.is_graded);
  CHECK(rb.j_dim == 2);
  CHECK(rb.j0_dim == 1);
  CHECK(rb.identity_holds);

  const RadicalGradingReport rt =
      radical_grading_report(twisted_group_algebra(standard_cocycle(2)));
  CHECK(rt.j_dim == 0);
  CHECK(rt.is_graded);
  CHECK(rt.identity_holds);

  const GradedAlgebra t =
      tensor_product(twisted_group_algebra(cyclic_cocycle(2)), truncated_polynomial_local(1, 1));
  const RadicalGradingReport rr = radical_grading_report(t);
  CHECK(rr.j_dim == 2);
  CHECK(rr.j0_dim == 1);
  CHECK(rr.j_dim == static_cast<std::size_t>(t.group().order()) * rr.j0_dim);
}

TEST_CASE("zero component extraction") {
  const GradedAlgebra a2 = paper_example('A');
  const Subalgebra a0 = zero_component(a2);
  CHECK(a0.alg.dim() == 2);
  CHECK(a0.parent_index == std::vector<std::size_t>{0, 3});
  CHECK(jacobson_radical(a0.alg).size() == 1);
}

TEST_CASE("construction validation rejects bad data") {
  GroupSpec z2({2});
  const Cyclotomic one(1);
  // grading violation: product of two odd elements lands in degree 1
  {
    ProductTable p(2, std::vector<std::vector<SparseTerm>>(2));
    p[0][0] = {{0, one}};
    p[0][1] = {{1, one}};
    p[1][0] = {{1, one}};
    p[1][1] = {{1, one}};
    CHECK_THROWS_AS(GradedAlgebra(z2, {"1", "u"}, {z2.zero(), GroupElement{{1}}}, p,
                                  Vec{one, Cyclotomic(0)}),
                    ValidationError);
  }
  // associativity violation
  {
    ProductTable p(2, std::vector<std::vector<SparseTerm>>(2));
    p[0][0] = {{0, one}};
    p[0][1] = {{1, one}};
    p[1][0] = {{1, Cyclotomic(2)}};
    p[1][1] = {};
    CHECK_THROWS_AS(GradedAlgebra(z2, {"1", "u"}, {z2.zero(), GroupElement{{1}}}, p,
                                  Vec{one, Cyclotomic(0)}),
                    ValidationError);
  }
  // unit law violation
  {
    ProductTable p(2, std::vector<std::vector<SparseTerm>>(2));
    p[0][0] = {{0, one}};
    p[0][1] = {{1, Cyclotomic(2)}};
    p[1][0] = {{1, one}};
    p[1][1] = {};
    CHECK_THROWS_AS(GradedAlgebra(z2, {"1", "u"}, {z2.zero(), GroupElement{{1}}}, p,
                                  Vec{one, Cyclotomic(0)}),
                    ValidationError);
  }
}

TEST_CASE("with_trivial_grading regrades over a bigger group") {
  const GradedAlgebra v = truncated_polynomial_local(1, 1);
  const GradedAlgebra over2 = with_trivial_grading(v, GroupSpec({2}));
  CHECK(over2.group().order() == 2);
  CHECK(!over2.full_support());
  CHECK(over2.component(0).size() == 2);
  CHECK(over2.component(1).empty());
}

TEST_CASE("algebra json round trip preserves structure constants") {
  const std::vector<GradedAlgebra> builtins = {
      paper_example('B'),
      paper_example('A'),
      pauli_matrix_algebra(2),
      pauli_matrix_algebra(3),
      truncated_grassmann(2),
      truncated_polynomial_local(2, 2),
      twisted_group_algebra(standard_cocycle(2)),
      tensor_product(twisted_group_algebra(cyclic_cocycle(2)),
                     truncated_polynomial_local(1, 1)),
      direct_sum(twisted_group_algebra(standard_cocycle(2)),
                 twisted_group_algebra(standard_cocycle(2))),
  };
  for (const GradedAlgebra& a : builtins) {
    const json j = algebra_to_json(a);
    const GradedAlgebra back = algebra_from_json(j);
    CHECK(same_structure(a, back));
    CHECK(back.degrees() == a.degrees());
    CHECK(back.unit() == a.unit());
    CHECK(algebra_to_json(back) == j);
  }
}

TEST_CASE("algebra spec grammar") {
  CHECK(algebra_from_spec("paperB").dim() == 4);
  CHECK(algebra_from_spec("pauli:3").dim() == 9);
  CHECK(algebra_from_spec("grassmann:3").dim() == 8);
  CHECK(algebra_from_spec("local:2,2").dim() == 6);
  CHECK(algebra_from_spec("twisted:standard:4^2").dim() == 16);
  CHECK(algebra_from_spec("tensor(twisted:pauli2,local:1,1)").dim() == 4);
  CHECK(algebra_from_spec("dsum(paperB,paperA2)").dim() == 8);
  CHECK(algebra_from_spec("over(2,local:1,1)").group() == GroupSpec({2}));
  CHECK(algebra_from_spec("tensor(dsum(paperB,paperB),local:1,1)").dim() == 16);
  CHECK_THROWS_AS(algebra_from_spec("tensor(paperB paperB)"), ParseError);
  CHECK_THROWS_AS(algebra_from_spec("unknown:thing"), ParseError);
  CHECK_THROWS_AS(algebra_from_spec("paperB extra"), ParseError);
}

}  // TEST_SUITE
