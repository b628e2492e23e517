#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regrade/exec.hpp"
#include "regrade/group.hpp"
#include "regrade/linalg.hpp"
#include "regrade/pairing.hpp"

namespace regrade {

struct SparseTerm {
  std::size_t k;
  Cyclotomic c;
};

// One sparse product list per ordered basis pair: b_i * b_j = sum c_k b_k.
using ProductTable = std::vector<std::vector<std::vector<SparseTerm>>>;

// Finite-dimensional unital algebra given by a homogeneous basis and sparse
// structure constants. Construction validates grading consistency,
// associativity on all basis triples, and the unit law; scalars are
// normalized to a common conductor. Immutable afterwards, safe to share.
class GradedAlgebra {
 public:
  GradedAlgebra(GroupSpec group, std::vector<std::string> labels,
                std::vector<GroupElement> degrees, ProductTable products, Vec unit);

  std::size_t dim() const { return labels_.size(); }
  const GroupSpec& group() const { return group_; }
  long conductor() const { return conductor_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const Vec& unit() const { return unit_; }
  const std::vector<SparseTerm>& terms(std::size_t i, std::size_t j) const {
    return products_[i][j];
  }

  // Basis indices of the homogeneous component, by group element index.
  const std::vector<std::size_t>& component(std::size_t group_idx) const {
    return components_[group_idx];
  }
  std::vector<GroupElement> support() const;
  bool full_support() const;

  Vec basis_vec(std::size_t i) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  // x * b_j for a basis index j.
  Vec multiply_basis(const Vec& x, std::size_t j) const;

  // Degree of a homogeneous vector, nullopt for 0 or mixed support.
  std::optional<GroupElement> homogeneous_degree(const Vec& x) const;

  // Solves x*y = 1 for homogeneous x; the returned y also satisfies y*x = 1
  // (checked). Throws DomainError when x has mixed support.
  std::optional<Vec> invert_homogeneous(const Vec& x) const;

 private:
  void validate() const;

  GroupSpec group_;
  std::vector<std::string> labels_;
  std::vector<GroupElement> degrees_;
  ProductTable products_;
  Vec unit_;
  long conductor_ = 1;
  std::vector<std::vector<std::size_t>> components_;
};

// Constructors for the stock algebras.
GradedAlgebra twisted_group_algebra(const Cocycle& tau);
GradedAlgebra pauli_matrix_algebra(long n);
GradedAlgebra truncated_grassmann(long r);
GradedAlgebra truncated_polynomial_local(long vars, long cap);
GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);
GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b);
// The two explicit 4-dimensional Z2-graded algebras: 'B' commutative
// (K[z,t]/(z^2, t^2-1)), 'A' noncommutative (t^2 = 1, zt = -tz, z^2 = 0).
GradedAlgebra paper_example(char which);
// Reinterpret an algebra over a (possibly larger) group with every basis
// element in degree zero.
GradedAlgebra with_trivial_grading(const GradedAlgebra& a, const GroupSpec& g);

// Jacobson radical by the characteristic-0 trace criterion: the nullspace of
// G_ij = trace(L_{b_i b_j}). The result is verified to be a two-sided
// nilpotent ideal; failure signals invalid input data. Rows form the
// canonical rref basis.
Mat jacobson_radical(const GradedAlgebra& a, Exec exec = Exec::parallel);

struct Subalgebra {
  GradedAlgebra alg;
  std::vector<std::size_t> parent_index;  // basis index in the parent
};

// The degree-zero component as a standalone algebra (same group, degrees
// zero). The parent's unit must be supported there.
Subalgebra zero_component(const GradedAlgebra& a);

// Quotient A / ideal for a two-sided ideal given by an rref basis; the
// returned radical dimension is computed on the raw quotient structure
// constants (the quotient of a graded algebra by a non-homogeneous ideal
// need not be graded, so no GradedAlgebra is built).
std::size_t radical_dim_of_quotient(const GradedAlgebra& a, const Mat& ideal_rref);

struct RadicalGradingReport {
  bool is_graded = false;      // J is spanned by homogeneous elements
  std::size_t j_dim = 0;       // dim J(A)
  std::size_t j0_dim = 0;      // dim J(A_0)
  bool identity_holds = false; // J(A_0) = A_0 intersect J(A)
};

RadicalGradingReport radical_grading_report(const GradedAlgebra& a);

}  // namespace regrade
