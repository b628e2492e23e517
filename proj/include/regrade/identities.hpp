#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "regrade/algebra.hpp"
#include "regrade/exec.hpp"
#include "regrade/pairing.hpp"
#include "regrade/rational.hpp"

namespace regrade {

using DegreeTuple = std::vector<GroupElement>;

// Degree cap for the codimension sweeps (n! rows per tuple).
long codim_degree_cap();
void set_codim_degree_cap(long cap);

// Rank of the multilinear evaluation matrix for one degree tuple: rows are
// the n! permutation monomials, columns are (basis substitution, output
// coordinate) pairs, streamed so only the accumulated row basis is held.
// Multilinearity justifies substituting basis elements only. An empty
// homogeneous component gives rank 0.
long codim_for_tuple(const GradedAlgebra& a, const DegreeTuple& q);

struct CodimReport {
  long n = 0;
  long group_order = 1;
  std::vector<std::pair<DegreeTuple, long>> per_tuple;  // canonical tuple order
  long graded = 0;
  std::optional<long> ordinary;
};

// Sum of codim_for_tuple over all |G|^n degree tuples. The parallel sweep
// distributes tuples over threads; aggregation is in canonical tuple order
// either way, so both policies return identical reports.
CodimReport graded_codimension(const GradedAlgebra& a, long n, Exec exec = Exec::parallel);

// Rank of the single ungraded evaluation matrix (rows = n! monomials,
// columns = any basis tuple x coordinate).
long ordinary_codimension(const GradedAlgebra& a, long n);

// Scalar mu with y_{tau(1)}..y_{tau(n)} = mu * y_1..y_n in the relatively
// free beta-commutative algebra: the product of beta(h_{tau(a)}, h_{tau(b)})
// over positions a < b appearing out of order (tau(a) > tau(b)). The
// convention is pinned by the twisted-group-algebra oracle in the tests.
Cyclotomic mu_scalar(const Bicharacter& beta, const DegreeTuple& h,
                     const std::vector<int>& tau);

struct TensorCodimReport {
  long lhs = 0;  // c_n over GxG of the graded tensor product
  long rhs = 0;  // |G|^n * c_n over G of S
  bool equal = false;
  // The tensor is graded by deg(b (x) s) = (deg s, deg b); the left side is
  // computed over G x G.
  std::string convention = "lhs = c_n^{GxG}(B(x)S), deg(b(x)s) = (deg s, deg b)";
};

// Checks c_n^{GxG}(B (x) S) = |G|^n c_n^G(S) for regular B.
// Throws NotRegularError when B is not regular.
TensorCodimReport verify_tensor_codimension(const GradedAlgebra& b, const GradedAlgebra& s,
                                            long n);

struct ExponentEstimate {
  std::vector<long> sequence;     // c_k for k = 1..n_max
  std::vector<Rational> nth_roots;  // exact when c_k is a perfect k-th power
  std::optional<long> predicted;  // |G| for regular minimal inputs, else none
};

ExponentEstimate exponent_estimate(const GradedAlgebra& a, long n_max);

}  // namespace regrade
