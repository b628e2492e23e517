#include "regrade/identities.hpp"

#include <algorithm>
#include <atomic>

#include "regrade/error.hpp"
#include "regrade/regularity.hpp"

namespace regrade {

namespace {

std::atomic<long> g_codim_cap{6};

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Rank of the evaluation matrix whose rows are the permutation monomials and
// whose columns run over the given per-slot substitution sets.
long evaluation_rank(const GradedAlgebra& a, const std::vector<const std::vector<std::size_t>*>& slots) {
  const int n = static_cast<int>(slots.size());
  for (const auto* s : slots)
    if (s->empty()) return 0;
  const auto perms = all_permutations(n);
  const std::size_t nrows = perms.size();
  IncrementalRank acc(nrows);

  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  std::vector<Vec> evals(nrows);
  while (true) {
    for (std::size_t s = 0; s < nrows; ++s) {
      const auto& perm = perms[s];
      Vec v = a.basis_vec((*slots[static_cast<std::size_t>(perm[0])])[pick[static_cast<std::size_t>(perm[0])]]);
      for (int t = 1; t < n; ++t)
        v = a.multiply_basis(v, (*slots[static_cast<std::size_t>(perm[t])])[pick[static_cast<std::size_t>(perm[t])]]);
      evals[s] = std::move(v);
    }
    for (std::size_t c = 0; c < a.dim(); ++c) {
      Vec col(nrows, Cyclotomic(0));
      bool nonzero = false;
      for (std::size_t s = 0; s < nrows; ++s) {
        col[s] = evals[s][c];
        nonzero = nonzero || !col[s].is_zero();
      }
      if (nonzero) acc.insert(std::move(col));
      if (acc.rank() == nrows) return static_cast<long>(nrows);
    }
    int slot = n - 1;
    while (slot >= 0) {
      if (++pick[static_cast<std::size_t>(slot)] < slots[static_cast<std::size_t>(slot)]->size()) break;
      pick[static_cast<std::size_t>(slot)] = 0;
      --slot;
    }
    if (slot < 0) break;
  }
  return static_cast<long>(acc.rank());
}

DegreeTuple tuple_at(const GroupSpec& g, long n, std::size_t idx) {
  const std::size_t order = static_cast<std::size_t>(g.order());
  DegreeTuple q(static_cast<std::size_t>(n));
  for (long s = n; s-- > 0;) {
    q[static_cast<std::size_t>(s)] = g.element_at(idx % order);
    idx /= order;
  }
  return q;
}

void check_cap(long n) {
  if (n < 1) throw DomainError("codimension degree must be >= 1");
  if (n > g_codim_cap.load())
    throw DomainError("codimension degree " + std::to_string(n) +
                      " exceeds the configured cap " + std::to_string(g_codim_cap.load()));
}

std::vector<long> codim_sweep_serial(const GradedAlgebra& a, long n, std::size_t tuples) {
  std::vector<long> ranks(tuples, 0);
  for (std::size_t ti = 0; ti < tuples; ++ti)
    ranks[ti] = codim_for_tuple(a, tuple_at(a.group(), n, ti));
  return ranks;
}

std::vector<long> codim_sweep_parallel(const GradedAlgebra& a, long n, std::size_t tuples) {
  std::vector<long> ranks(tuples, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long ti = 0; ti < static_cast<long long>(tuples); ++ti)
    ranks[static_cast<std::size_t>(ti)] =
        codim_for_tuple(a, tuple_at(a.group(), n, static_cast<std::size_t>(ti)));
  return ranks;
}

}  // namespace

long codim_degree_cap() { return g_codim_cap.load(); }

void set_codim_degree_cap(long cap) {
  if (cap < 1) throw DomainError("degree cap must be >= 1");
  g_codim_cap.store(cap);
}

long codim_for_tuple(const GradedAlgebra& a, const DegreeTuple& q) {
  check_cap(static_cast<long>(q.size()));
  std::vector<const std::vector<std::size_t>*> slots;
  slots.reserve(q.size());
  for (const auto& e : q) slots.push_back(&a.component(a.group().index_of(e)));
  return evaluation_rank(a, slots);
}

CodimReport graded_codimension(const GradedAlgebra& a, long n, Exec exec) {
  check_cap(n);
  CodimReport rep;
  rep.n = n;
  rep.group_order = a.group().order();
  std::size_t tuples = 1;
  for (long i = 0; i < n; ++i) tuples *= static_cast<std::size_t>(rep.group_order);
  const std::vector<long> ranks = exec == Exec::parallel ? codim_sweep_parallel(a, n, tuples)
                                                         : codim_sweep_serial(a, n, tuples);
  rep.per_tuple.reserve(tuples);
  for (std::size_t ti = 0; ti < tuples; ++ti) {
    rep.per_tuple.emplace_back(tuple_at(a.group(), n, ti), ranks[ti]);
    rep.graded += ranks[ti];
  }
  return rep;
}

long ordinary_codimension(const GradedAlgebra& a, long n) {
  check_cap(n);
  std::vector<std::size_t> everything(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) everything[i] = i;
  std::vector<const std::vector<std::size_t>*> slots(static_cast<std::size_t>(n), &everything);
  return evaluation_rank(a, slots);
}

Cyclotomic mu_scalar(const Bicharacter& beta, const DegreeTuple& h, const std::vector<int>& tau) {
  const std::size_t n = h.size();
  if (tau.size() != n) throw ShapeError("permutation length must match the degree tuple");
  std::vector<bool> hit(n, false);
  for (int v : tau) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)])
      throw DomainError("tau is not a permutation of 0..n-1");
    hit[static_cast<std::size_t>(v)] = true;
  }
  Cyclotomic mu(1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (tau[a] > tau[b])
        mu *= beta.at(h[static_cast<std::size_t>(tau[a])], h[static_cast<std::size_t>(tau[b])]);
  return mu;
}

TensorCodimReport verify_tensor_codimension(const GradedAlgebra& b, const GradedAlgebra& s,
                                            long n) {
  if (b.group() != s.group())
    throw ShapeError("tensor codimension check requires one common grading group");
  RegularityVerdict reg = is_regular(b);
  if (!reg.regular())
    throw NotRegularError("tensor codimension identity requires a regular first factor");
  // deg(b (x) s) = (deg s, deg b): realized by tensoring in the order (s, b)
  GradedAlgebra l = tensor_product(s, b);
  TensorCodimReport rep;
  rep.lhs = graded_codimension(l, n).graded;
  long scale = 1;
  for (long i = 0; i < n; ++i) scale *= b.group().order();
  rep.rhs = scale * graded_codimension(s, n).graded;
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

ExponentEstimate exponent_estimate(const GradedAlgebra& a, long n_max) {
  check_cap(n_max);
  ExponentEstimate est;
  for (long n = 1; n <= n_max; ++n) {
    const long c = graded_codimension(a, n).graded;
    est.sequence.push_back(c);
    // floor of c^(1/n) at 6 decimal digits; exact when c is a perfect power
    BigInt root;
    mpz_root(root.get_mpz_t(), BigInt(c).get_mpz_t(), static_cast<unsigned long>(n));
    BigInt powed;
    mpz_pow_ui(powed.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(n));
    if (powed == c) {
      est.nth_roots.emplace_back(root);
    } else {
      BigInt scaled = BigInt(c);
      BigInt tenp;
      mpz_ui_pow_ui(tenp.get_mpz_t(), 10, static_cast<unsigned long>(6 * n));
      scaled *= tenp;
      mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(n));
      Rational r(root, BigInt(1000000));
      r.canonicalize();
      est.nth_roots.push_back(r);
    }
  }
  RegularityVerdict reg = is_regular(a);
  if (reg.regular()) {
    MinimalityReport mini = is_minimal(*reg.condition_ii.beta);
    if (mini.minimal()) {
      est.predicted = a.group().order();
      long expect = 1;
      for (long n = 1; n <= n_max; ++n) {
        expect *= a.group().order();
        if (est.sequence[static_cast<std::size_t>(n - 1)] != expect)
          throw InternalError("minimal regular grading violates the codimension formula at n=" +
                              std::to_string(n));
      }
    }
  }
  return est;
}

}  // namespace regrade
