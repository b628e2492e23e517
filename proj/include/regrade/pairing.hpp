#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "regrade/exec.hpp"
#include "regrade/group.hpp"
#include "regrade/linalg.hpp"

namespace regrade {

// Total table of a map G x G -> K*, rows and columns in enumeration order.
// Entries are normalized to a common conductor at construction.
class PairingTable {
 public:
  PairingTable(GroupSpec group, std::vector<Cyclotomic> table);

  const GroupSpec& group() const { return group_; }
  long conductor() const { return conductor_; }
  const std::vector<Cyclotomic>& table() const { return table_; }
  const Cyclotomic& at(std::size_t gi, std::size_t hi) const {
    return table_[gi * static_cast<std::size_t>(group_.order()) + hi];
  }
  const Cyclotomic& at(const GroupElement& g, const GroupElement& h) const {
    return at(group_.index_of(g), group_.index_of(h));
  }

 protected:
  GroupSpec group_;
  std::vector<Cyclotomic> table_;
  long conductor_ = 1;
};

// Bicharacter: skew (eq. beta(g,h) = beta(h,g)^-1) and multiplicative in each
// argument. The table IS the decomposition matrix of any algebra carrying it.
// The constructor re-checks all defining identities exhaustively.
class Bicharacter : public PairingTable {
 public:
  Bicharacter(GroupSpec group, std::vector<Cyclotomic> table, Exec exec = Exec::parallel);
};

// 2-cocycle: tau(g,h+k) tau(h,k) = tau(g+h,k) tau(g,h), checked over G^3.
class Cocycle : public PairingTable {
 public:
  Cocycle(GroupSpec group, std::vector<Cyclotomic> table, Exec exec = Exec::parallel);
};

// Unique bimultiplicative extension of generator values B[i][j] =
// beta(e_i, e_j). Compatibility (orders, skew on generators) is checked
// first; the full table is validated afterwards.
Bicharacter bicharacter_from_generators(const GroupSpec& g, const Mat& gen);

// beta(g,h) = tau(g,h) * tau(h,g)^-1. Validity of tau guarantees validity of
// beta; a validation failure here is an internal error, not user error.
Bicharacter induced_bicharacter(const Cocycle& tau);

// Subgroup {k : beta(x,k) = 1 for all x}, in enumeration order.
std::vector<GroupElement> radical(const Bicharacter& beta);

// Q0(tau) = {x : tau(x,s) = tau(s,x) for all s}; equals the radical of the
// induced bicharacter.
std::vector<GroupElement> regular_elements(const Cocycle& tau);

struct MinimalityReport {
  bool radical_trivial = false;
  bool has_equal_columns = false;
  std::optional<std::pair<GroupElement, GroupElement>> equal_columns_witness;
  Cyclotomic det;
  bool minimal() const { return radical_trivial; }
};

// The three equivalent minimality predicates; disagreement between them
// would contradict the underlying theorem and raises InternalError.
MinimalityReport is_minimal(const Bicharacter& beta);

Cyclotomic det_decomposition_matrix(const Bicharacter& beta);

// Builtins.
Bicharacter trivial_bicharacter(const GroupSpec& g);
Bicharacter grassmann_bicharacter();
Bicharacter pauli_bicharacter(long n);
Cocycle trivial_cocycle(const GroupSpec& g);
// Z_n x Z_n, tau((a,b),(c,d)) = (zeta_n^xi_power)^(b*c).
Cocycle standard_cocycle(long n, long xi_power = 1);
// Z_n, tau(a,c) = (zeta_n^xi_power)^(a*c). A coboundary; induces beta = 1.
Cocycle cyclic_cocycle(long n, long xi_power = 1);
// Pointwise product of tau with the coboundary of f (a |G|-vector of nonzero
// scalars); induces the same bicharacter.
Cocycle coboundary_twist(const Cocycle& tau, const std::vector<Cyclotomic>& f);

}  // namespace regrade
