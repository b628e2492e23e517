#include "regrade/regularity.hpp"

#include <deque>
#include <map>

#include "regrade/error.hpp"

namespace regrade {

ExtractOutcome extract_bicharacter(const GradedAlgebra& a) {
  for (long gi = 0; gi < a.group().order(); ++gi)
    if (a.component(static_cast<std::size_t>(gi)).empty())
      throw DomainError("bicharacter extraction requires full support: component " +
                        a.group().element_at(static_cast<std::size_t>(gi)).str() + " is zero");
  const GroupSpec& g = a.group();
  const std::size_t n = static_cast<std::size_t>(g.order());
  ExtractOutcome out;
  std::vector<Cyclotomic> table(n * n, Cyclotomic(1));
  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t hi = 0; hi < n; ++hi) {
      const auto& ci = a.component(gi);
      const auto& cj = a.component(hi);
      // anchor: first basis pair with a nonzero product
      std::optional<Cyclotomic> lambda;
      for (std::size_t i : ci) {
        for (std::size_t j : cj) {
          Vec p = a.multiply(a.basis_vec(i), a.basis_vec(j));
          if (vec_is_zero(p)) continue;
          Vec q = a.multiply(a.basis_vec(j), a.basis_vec(i));
          if (vec_is_zero(q)) {
            out.witness = {i, j};
            out.note = "product " + a.labels()[i] + "*" + a.labels()[j] +
                       " is nonzero but the reversed product vanishes";
            return out;
          }
          std::size_t c = 0;
          while (q[c].is_zero()) ++c;
          lambda = p[c] * q[c].inverse();
          break;
        }
        if (lambda) break;
      }
      if (!lambda) {
        bool reverse_nonzero = false;
        for (std::size_t i : ci)
          for (std::size_t j : cj)
            if (!vec_is_zero(a.multiply(a.basis_vec(j), a.basis_vec(i)))) reverse_nonzero = true;
        if (reverse_nonzero)
          throw InternalError("asymmetric zero pattern escaped the anchor scan");
        out.indeterminate_pair = {g.element_at(gi), g.element_at(hi)};
        out.note = "all products of degrees " + g.element_at(gi).str() + " and " +
                   g.element_at(hi).str() + " vanish in both orders";
        return out;
      }
      // global verification over every basis pair of these degrees
      for (std::size_t i : ci)
        for (std::size_t j : cj) {
          Vec p = a.multiply(a.basis_vec(i), a.basis_vec(j));
          Vec q = a.multiply(a.basis_vec(j), a.basis_vec(i));
          for (std::size_t c = 0; c < p.size(); ++c)
            if (p[c] != *lambda * q[c]) {
              out.witness = {i, j};
              out.note = "no single scalar commutes " + a.labels()[i] + " and " + a.labels()[j] +
                         " for degrees (" + g.element_at(gi).str() + ", " +
                         g.element_at(hi).str() + ")";
              return out;
            }
        }
      table[gi * n + hi] = *lambda;
    }
  try {
    out.beta = Bicharacter(g, std::move(table));
  } catch (const ValidationError& e) {
    out.note = std::string("pairwise scalars exist but violate the bicharacter laws: ") +
               e.what();
  }
  return out;
}

ConditionIVerdict check_condition_i(const GradedAlgebra& a, std::size_t state_cap) {
  const GroupSpec& g = a.group();
  const std::size_t n = static_cast<std::size_t>(g.order());
  const long conductor = a.conductor();

  ConditionIVerdict verdict;
  std::map<std::string, std::size_t> seen;
  std::vector<Mat> states;
  // parent state and the degree appended on that edge, for tuple recovery
  std::vector<std::pair<long, std::size_t>> parent;
  std::deque<std::size_t> frontier;

  auto trace_tuple = [&](long state_id, std::size_t final_g,
                         bool include_final) -> std::vector<GroupElement> {
    std::vector<GroupElement> tuple;
    if (include_final) tuple.push_back(g.element_at(final_g));
    for (long s = state_id; s >= 0; s = parent[static_cast<std::size_t>(s)].first)
      tuple.push_back(g.element_at(parent[static_cast<std::size_t>(s)].second));
    std::reverse(tuple.begin(), tuple.end());
    return tuple;
  };

  auto add_state = [&](Mat m, long from, std::size_t via) -> std::optional<std::size_t> {
    const std::string key = mat_key(m, conductor, a.dim());
    auto it = seen.find(key);
    if (it != seen.end()) return std::nullopt;
    const std::size_t id = states.size();
    seen.emplace(key, id);
    states.push_back(std::move(m));
    parent.emplace_back(from, via);
    frontier.push_back(id);
    return id;
  };

  for (std::size_t gi = 0; gi < n; ++gi) {
    Mat init;
    for (std::size_t i : a.component(gi)) init.push_back(a.basis_vec(i));
    rref(init);
    if (init.empty()) {
      verdict.status = CondIStatus::FailsAtTuple;
      verdict.witness_tuple = {g.element_at(gi)};
      verdict.states_explored = states.size();
      return verdict;
    }
    add_state(std::move(init), -1, gi);
  }

  while (!frontier.empty()) {
    if (states.size() > state_cap) {
      verdict.status = CondIStatus::Undecided;
      verdict.states_explored = states.size();
      return verdict;
    }
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    for (std::size_t gi = 0; gi < n; ++gi) {
      Mat next;
      for (const auto& v : states[cur])
        for (std::size_t j : a.component(gi)) next.push_back(a.multiply_basis(v, j));
      rref(next);
      if (next.empty()) {
        verdict.status = CondIStatus::FailsAtTuple;
        verdict.witness_tuple = trace_tuple(static_cast<long>(cur), gi, true);
        verdict.states_explored = states.size();
        return verdict;
      }
      add_state(std::move(next), static_cast<long>(cur), gi);
    }
  }
  verdict.status = states.size() <= state_cap ? CondIStatus::Verified : CondIStatus::Undecided;
  verdict.states_explored = states.size();
  return verdict;
}

RegularityVerdict is_regular(const GradedAlgebra& a, std::size_t state_cap) {
  RegularityVerdict v;
  v.full_support = a.full_support();
  v.condition_i = check_condition_i(a, state_cap);
  if (!v.full_support) {
    v.condition_ii.holds = false;
    v.condition_ii.note = "support is a proper subset of the group; not regular over this group";
    return v;
  }
  ExtractOutcome out = extract_bicharacter(a);
  v.condition_ii.holds = out.ok();
  v.condition_ii.beta = std::move(out.beta);
  v.condition_ii.witness = out.witness;
  v.condition_ii.indeterminate_pair = out.indeterminate_pair;
  v.condition_ii.note = std::move(out.note);
  return v;
}

DecompositionReport decomposition_report(const GradedAlgebra& a) {
  ExtractOutcome out = extract_bicharacter(a);
  if (!out.ok())
    throw NotRegularError("no bicharacter: " +
                          (out.note.empty() ? std::string("extraction failed") : out.note));
  MinimalityReport mini = is_minimal(*out.beta);
  std::vector<GroupElement> rad = radical(*out.beta);
  DecompositionReport rep{std::move(*out.beta), mini.det, mini.minimal(),
                          std::move(rad),      std::nullopt, mini};
  if (rep.minimal) rep.exp_prediction = rep.matrix.group().order();
  return rep;
}

StructureReport verify_structure_theorem(const GradedAlgebra& a, std::size_t state_cap) {
  RegularityVerdict reg = is_regular(a, state_cap);
  if (!reg.regular())
    throw NotRegularError("structure report requires a regular grading" +
                          (reg.undecided() ? std::string(" (closure undecided at this cap)")
                                           : std::string()));
  MinimalityReport mini = is_minimal(*reg.condition_ii.beta);
  if (!mini.minimal())
    throw NotRegularError(
        "structure report requires a minimal decomposition (nonsingular decomposition matrix)");

  StructureReport rep;
  rep.dim = a.dim();
  Subalgebra a0 = zero_component(a);
  rep.dim_a0 = a0.alg.dim();
  Mat j = jacobson_radical(a);
  Mat j0 = jacobson_radical(a0.alg);
  rep.dim_j = j.size();
  rep.dim_j0 = j0.size();

  rep.a0_commutative = true;
  for (std::size_t i = 0; i < a0.alg.dim() && rep.a0_commutative; ++i)
    for (std::size_t jdx = 0; jdx < a0.alg.dim() && rep.a0_commutative; ++jdx)
      if (a0.alg.multiply(a0.alg.basis_vec(i), a0.alg.basis_vec(jdx)) !=
          a0.alg.multiply(a0.alg.basis_vec(jdx), a0.alg.basis_vec(i)))
        rep.a0_commutative = false;

  rep.k = static_cast<long>(rep.dim_a0 - rep.dim_j0);
  const long order = a.group().order();
  rep.dim_matches = static_cast<long>(rep.dim) == order * static_cast<long>(rep.dim_a0);
  rep.radical_dim_matches =
      static_cast<long>(rep.dim_j) == order * static_cast<long>(rep.dim_j0);

  rep.semisimple_case_applicable = rep.dim_j0 == 0;
  if (rep.semisimple_case_applicable)
    rep.semisimple_case_holds =
        rep.dim_j == 0 && static_cast<long>(rep.dim) == rep.k * order;

  rep.division_case_applicable = rep.k == 1 && rep.dim_j0 == 0;
  if (rep.division_case_applicable) {
    rep.division_case_holds = true;
    for (std::size_t gi = 0; gi < static_cast<std::size_t>(order); ++gi)
      if (a.component(gi).size() != 1) rep.division_case_holds = false;
    for (std::size_t i = 0; i < a.dim() && rep.division_case_holds; ++i)
      if (!a.invert_homogeneous(a.basis_vec(i))) rep.division_case_holds = false;
  }
  return rep;
}

bool StructureReport::all_hold() const {
  if (!a0_commutative || !dim_matches || !radical_dim_matches) return false;
  if (semisimple_case_applicable && !semisimple_case_holds) return false;
  if (division_case_applicable && !division_case_holds) return false;
  return true;
}

}  // namespace regrade
