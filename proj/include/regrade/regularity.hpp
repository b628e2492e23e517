#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regrade/algebra.hpp"
#include "regrade/pairing.hpp"

namespace regrade {

inline constexpr std::size_t kDefaultStateCap = 4096;

// Result of trying to read a bicharacter off the grading. The scalar for
// each pair of degrees is taken from the first nonzero basis-pair product in
// enumeration order and then verified against every basis pair, so the
// tie-break cannot change the outcome.
struct ExtractOutcome {
  std::optional<Bicharacter> beta;
  // basis indices (i, j) with b_i b_j != beta * b_j b_i
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  // degrees whose products vanish identically in both orders
  std::optional<std::pair<GroupElement, GroupElement>> indeterminate_pair;
  std::string note;

  bool ok() const { return beta.has_value(); }
};

// Requires full support (otherwise the bicharacter is underdetermined and a
// DomainError is thrown; is_regular screens for that case first).
ExtractOutcome extract_bicharacter(const GradedAlgebra& a);

enum class CondIStatus { Verified, FailsAtTuple, Undecided };

struct ConditionIVerdict {
  CondIStatus status = CondIStatus::Undecided;
  std::vector<GroupElement> witness_tuple;  // set when status == FailsAtTuple
  std::size_t states_explored = 0;
};

// Breadth-first closure over product subspaces: states are canonical rref
// subspaces, starting from the homogeneous components, with transitions
// S -> span(S * A_g). The zero subspace is reachable iff some degree tuple
// admits only vanishing products; a completed closure decides the condition
// for every tuple length at once.
ConditionIVerdict check_condition_i(const GradedAlgebra& a,
                                    std::size_t state_cap = kDefaultStateCap);

struct RegularityVerdict {
  struct ConditionII {
    bool holds = false;
    std::optional<Bicharacter> beta;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::optional<std::pair<GroupElement, GroupElement>> indeterminate_pair;
    std::string note;
  };
  ConditionII condition_ii;
  ConditionIVerdict condition_i;
  bool full_support = false;

  bool regular() const {
    return full_support && condition_ii.holds && condition_i.status == CondIStatus::Verified;
  }
  bool undecided() const {
    return full_support && condition_ii.holds && condition_i.status == CondIStatus::Undecided;
  }
};

RegularityVerdict is_regular(const GradedAlgebra& a, std::size_t state_cap = kDefaultStateCap);

struct DecompositionReport {
  Bicharacter matrix;
  Cyclotomic det;
  bool minimal = false;
  std::vector<GroupElement> radical_elements;
  std::optional<long> exp_prediction;  // |G| when minimal, absent otherwise
  MinimalityReport minimality;
};

// Throws NotRegularError when no bicharacter is extractable.
DecompositionReport decomposition_report(const GradedAlgebra& a);

// Observable consequences of the classification of minimal regular gradings.
struct StructureReport {
  bool a0_commutative = false;                   // (a)
  long k = 0;                                     // (b) simple summands of A0/J(A0)
  std::size_t dim = 0, dim_a0 = 0, dim_j = 0, dim_j0 = 0;
  bool dim_matches = false;                       // (c) dim A = |G| dim A0
  bool radical_dim_matches = false;               // (d) dim J(A) = |G| dim J(A0)
  bool semisimple_case_applicable = false;        // (e) guard J(A0) = 0
  bool semisimple_case_holds = false;             //     J(A) = 0 and dim A = k|G|
  bool division_case_applicable = false;          // (f) guard k = 1, J(A0) = 0
  bool division_case_holds = false;               //     all homogeneous invertible
  bool all_hold() const;
};

// Requires a regular grading whose decomposition matrix is nonsingular;
// throws NotRegularError otherwise.
StructureReport verify_structure_theorem(const GradedAlgebra& a,
                                         std::size_t state_cap = kDefaultStateCap);

}  // namespace regrade
