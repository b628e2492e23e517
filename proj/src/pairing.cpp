#include "regrade/pairing.hpp"

#include <limits>
#include <sstream>

#include "regrade/error.hpp"

namespace regrade {

namespace {

constexpr std::size_t kNoViolation = std::numeric_limits<std::size_t>::max();

std::string pair_str(const GroupSpec& g, std::size_t gi, std::size_t hi) {
  return g.element_at(gi).str() + ", " + g.element_at(hi).str();
}

// Law codes: 0 = skew over pairs, 1 = right-multiplicativity over triples,
// 2 = left-multiplicativity over triples, 3 = cocycle identity over triples.
// The composite code orders all checks so the serial and parallel sweeps
// agree on the first violation.
std::size_t bicharacter_violation_serial(const GroupSpec& g,
                                         const PairingTable& t) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::size_t n2 = n * n, n3 = n2 * n;
  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t hi = 0; hi < n; ++hi)
      if (!(t.at(gi, hi) * t.at(hi, gi)).is_one()) return gi * n + hi;
  const auto elems = g.enumerate();
  for (std::size_t idx = 0; idx < n3; ++idx) {
    const std::size_t gi = idx / n2, hi = (idx / n) % n, ki = idx % n;
    const std::size_t hk = g.index_of(g.add(elems[hi], elems[ki]));
    if (t.at(gi, hk) != t.at(gi, hi) * t.at(gi, ki)) return n2 + idx;
    const std::size_t gk = g.index_of(g.add(elems[gi], elems[ki]));
    if (t.at(gk, hi) != t.at(gi, hi) * t.at(ki, hi)) return n2 + n3 + idx;
  }
  return kNoViolation;
}

std::size_t bicharacter_violation_parallel(const GroupSpec& g,
                                           const PairingTable& t) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::size_t n2 = n * n, n3 = n2 * n;
  const auto elems = g.enumerate();
  std::size_t best = kNoViolation;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : best)
#endif
  for (long long p = 0; p < static_cast<long long>(n2); ++p) {
    const std::size_t gi = static_cast<std::size_t>(p) / n, hi = static_cast<std::size_t>(p) % n;
    if (!(t.at(gi, hi) * t.at(hi, gi)).is_one())
      best = std::min<std::size_t>(best, static_cast<std::size_t>(p));
  }
  if (best != kNoViolation) return best;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : best)
#endif
  for (long long p = 0; p < static_cast<long long>(n3); ++p) {
    const std::size_t idx = static_cast<std::size_t>(p);
    const std::size_t gi = idx / n2, hi = (idx / n) % n, ki = idx % n;
    const std::size_t hk = g.index_of(g.add(elems[hi], elems[ki]));
    if (t.at(gi, hk) != t.at(gi, hi) * t.at(gi, ki)) {
      best = std::min<std::size_t>(best, n2 + idx);
      continue;
    }
    const std::size_t gk = g.index_of(g.add(elems[gi], elems[ki]));
    if (t.at(gk, hi) != t.at(gi, hi) * t.at(ki, hi))
      best = std::min<std::size_t>(best, n2 + n3 + idx);
  }
  return best;
}

std::size_t cocycle_violation_serial(const GroupSpec& g, const PairingTable& t) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::size_t n2 = n * n, n3 = n2 * n;
  const auto elems = g.enumerate();
  for (std::size_t idx = 0; idx < n3; ++idx) {
    const std::size_t gi = idx / n2, hi = (idx / n) % n, ki = idx % n;
    const std::size_t hk = g.index_of(g.add(elems[hi], elems[ki]));
    const std::size_t gh = g.index_of(g.add(elems[gi], elems[hi]));
    if (t.at(gi, hk) * t.at(hi, ki) != t.at(gh, ki) * t.at(gi, hi)) return idx;
  }
  return kNoViolation;
}

std::size_t cocycle_violation_parallel(const GroupSpec& g, const PairingTable& t) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::size_t n2 = n * n, n3 = n2 * n;
  const auto elems = g.enumerate();
  std::size_t best = kNoViolation;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : best)
#endif
  for (long long p = 0; p < static_cast<long long>(n3); ++p) {
    const std::size_t idx = static_cast<std::size_t>(p);
    const std::size_t gi = idx / n2, hi = (idx / n) % n, ki = idx % n;
    const std::size_t hk = g.index_of(g.add(elems[hi], elems[ki]));
    const std::size_t gh = g.index_of(g.add(elems[gi], elems[hi]));
    if (t.at(gi, hk) * t.at(hi, ki) != t.at(gh, ki) * t.at(gi, hi))
      best = std::min<std::size_t>(best, idx);
  }
  return best;
}

}  // namespace

PairingTable::PairingTable(GroupSpec group, std::vector<Cyclotomic> table)
    : group_(std::move(group)), table_(std::move(table)) {
  const std::size_t n = static_cast<std::size_t>(group_.order());
  if (table_.size() != n * n) throw ShapeError("pairing table must be |G| x |G|");
  for (const auto& v : table_) conductor_ = lcm_long(conductor_, v.conductor());
  for (auto& v : table_) v = v.embedded(conductor_);
}

Bicharacter::Bicharacter(GroupSpec group, std::vector<Cyclotomic> table, Exec exec)
    : PairingTable(std::move(group), std::move(table)) {
  const std::size_t n = static_cast<std::size_t>(group_.order());
  const long expo = group_.exponent();
  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (at(gi, hi).is_zero())
        throw ValidationError("bicharacter value is zero at (" + pair_str(group_, gi, hi) + ")");
      if (!at(gi, hi).pow(expo).is_one())
        throw ValidationError("bicharacter value at (" + pair_str(group_, gi, hi) +
                              ") is not a root of unity of order dividing exp(G)");
    }
  const std::size_t code = exec == Exec::parallel
                               ? bicharacter_violation_parallel(group_, *this)
                               : bicharacter_violation_serial(group_, *this);
  if (code == kNoViolation) return;
  const std::size_t n2 = n * n, n3 = n2 * n;
  std::ostringstream os;
  if (code < n2) {
    os << "skew symmetry fails at (" << pair_str(group_, code / n, code % n) << ")";
  } else {
    const std::size_t idx = (code - n2) % n3;
    const char* which = (code - n2) < n3 ? "right" : "left";
    os << which << "-multiplicativity fails at ("
       << group_.element_at(idx / n2).str() << ", " << group_.element_at((idx / n) % n).str()
       << ", " << group_.element_at(idx % n).str() << ")";
  }
  throw ValidationError("invalid bicharacter: " + os.str());
}

Cocycle::Cocycle(GroupSpec group, std::vector<Cyclotomic> table, Exec exec)
    : PairingTable(std::move(group), std::move(table)) {
  const std::size_t n = static_cast<std::size_t>(group_.order());
  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t hi = 0; hi < n; ++hi)
      if (at(gi, hi).is_zero())
        throw ValidationError("cocycle value is zero at (" + pair_str(group_, gi, hi) + ")");
  const std::size_t code = exec == Exec::parallel ? cocycle_violation_parallel(group_, *this)
                                                  : cocycle_violation_serial(group_, *this);
  if (code == kNoViolation) return;
  const std::size_t n2 = n * n;
  throw ValidationError("invalid cocycle: identity fails at (" +
                        group_.element_at(code / n2).str() + ", " +
                        group_.element_at((code / n) % n).str() + ", " +
                        group_.element_at(code % n).str() + ")");
}

Bicharacter bicharacter_from_generators(const GroupSpec& g, const Mat& gen) {
  const std::size_t k = g.rank();
  if (gen.size() != k) throw ShapeError("generator matrix must be rank x rank");
  for (const auto& row : gen)
    if (row.size() != k) throw ShapeError("generator matrix must be rank x rank");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!gen[i][j].pow(g.moduli()[i]).is_one() || !gen[i][j].pow(g.moduli()[j]).is_one())
        throw ValidationError("invalid bicharacter: generator value at (" + std::to_string(i) +
                              "," + std::to_string(j) + ") is not compatible with the factor orders");
      if (j <= i && !(gen[i][j] * gen[j][i]).is_one())
        throw ValidationError("invalid bicharacter: generator values at (" + std::to_string(i) +
                              "," + std::to_string(j) + ") are not skew");
    }
  const auto elems = g.enumerate();
  const std::size_t n = elems.size();
  std::vector<Cyclotomic> table(n * n, Cyclotomic(1));
  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t hi = 0; hi < n; ++hi) {
      Cyclotomic v(1);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          long e = elems[gi].r[i] * elems[hi].r[j];
          if (e != 0) v *= gen[i][j].pow(e);
        }
      table[gi * n + hi] = v;
    }
  return Bicharacter(g, std::move(table));
}

Bicharacter induced_bicharacter(const Cocycle& tau) {
  const std::size_t n = static_cast<std::size_t>(tau.group().order());
  std::vector<Cyclotomic> table(n * n, Cyclotomic(1));
  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t hi = 0; hi < n; ++hi)
      table[gi * n + hi] = tau.at(gi, hi) * tau.at(hi, gi).inverse();
  try {
    return Bicharacter(tau.group(), std::move(table));
  } catch (const ValidationError& e) {
    throw InternalError(std::string("a valid cocycle induced an invalid bicharacter: ") +
                        e.what());
  }
}

std::vector<GroupElement> radical(const Bicharacter& beta) {
  const std::size_t n = static_cast<std::size_t>(beta.group().order());
  std::vector<GroupElement> out;
  for (std::size_t ki = 0; ki < n; ++ki) {
    bool everywhere_one = true;
    for (std::size_t xi = 0; xi < n && everywhere_one; ++xi)
      everywhere_one = beta.at(xi, ki).is_one();
    if (everywhere_one) out.push_back(beta.group().element_at(ki));
  }
  return out;
}

std::vector<GroupElement> regular_elements(const Cocycle& tau) {
  const std::size_t n = static_cast<std::size_t>(tau.group().order());
  std::vector<GroupElement> out;
  for (std::size_t xi = 0; xi < n; ++xi) {
    bool regular = true;
    for (std::size_t si = 0; si < n && regular; ++si)
      regular = tau.at(xi, si) == tau.at(si, xi);
    if (regular) out.push_back(tau.group().element_at(xi));
  }
  return out;
}

MinimalityReport is_minimal(const Bicharacter& beta) {
  MinimalityReport rep;
  const std::size_t n = static_cast<std::size_t>(beta.group().order());
  const auto rad = radical(beta);
  rep.radical_trivial = rad.size() == 1;
  for (std::size_t gi = 0; gi < n && !rep.has_equal_columns; ++gi)
    for (std::size_t hi = gi + 1; hi < n && !rep.has_equal_columns; ++hi) {
      bool equal = true;
      for (std::size_t xi = 0; xi < n && equal; ++xi)
        equal = beta.at(xi, gi) == beta.at(xi, hi);
      if (equal) {
        rep.has_equal_columns = true;
        rep.equal_columns_witness = {beta.group().element_at(gi), beta.group().element_at(hi)};
      }
    }
  rep.det = det_decomposition_matrix(beta);
  const bool det_nonzero = !rep.det.is_zero();
  if (rep.radical_trivial != !rep.has_equal_columns || rep.radical_trivial != det_nonzero)
    throw InternalError("minimality predicates disagree: radical_trivial=" +
                        std::to_string(rep.radical_trivial) +
                        " has_equal_columns=" + std::to_string(rep.has_equal_columns) +
                        " det=" + rep.det.str());
  return rep;
}

Cyclotomic det_decomposition_matrix(const Bicharacter& beta) {
  const std::size_t n = static_cast<std::size_t>(beta.group().order());
  Mat m(n, Vec(n, Cyclotomic(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = beta.at(i, j);
  return det(std::move(m));
}

Bicharacter trivial_bicharacter(const GroupSpec& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  return Bicharacter(g, std::vector<Cyclotomic>(n * n, Cyclotomic(1)));
}

Bicharacter grassmann_bicharacter() {
  return bicharacter_from_generators(GroupSpec({2}), Mat{{Cyclotomic(-1)}});
}

Bicharacter pauli_bicharacter(long n) {
  if (n < 2) throw DomainError("pauli bicharacter requires n >= 2");
  return induced_bicharacter(standard_cocycle(n));
}

Cocycle trivial_cocycle(const GroupSpec& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  return Cocycle(g, std::vector<Cyclotomic>(n * n, Cyclotomic(1)));
}

Cocycle standard_cocycle(long n, long xi_power) {
  if (n < 1) throw DomainError("standard cocycle requires n >= 1");
  GroupSpec g({n, n});
  const auto elems = g.enumerate();
  const std::size_t sz = elems.size();
  const Cyclotomic xi = Cyclotomic::zeta(n, xi_power);
  std::vector<Cyclotomic> table(sz * sz, Cyclotomic(1));
  for (std::size_t gi = 0; gi < sz; ++gi)
    for (std::size_t hi = 0; hi < sz; ++hi)
      table[gi * sz + hi] = xi.pow(elems[gi].r[1] * elems[hi].r[0]);
  return Cocycle(g, std::move(table));
}

Cocycle cyclic_cocycle(long n, long xi_power) {
  if (n < 1) throw DomainError("cyclic cocycle requires n >= 1");
  GroupSpec g({n});
  const std::size_t sz = static_cast<std::size_t>(n);
  const Cyclotomic xi = Cyclotomic::zeta(n, xi_power);
  std::vector<Cyclotomic> table(sz * sz, Cyclotomic(1));
  for (std::size_t gi = 0; gi < sz; ++gi)
    for (std::size_t hi = 0; hi < sz; ++hi)
      table[gi * sz + hi] = xi.pow(static_cast<long>(gi) * static_cast<long>(hi));
  return Cocycle(g, std::move(table));
}

Cocycle coboundary_twist(const Cocycle& tau, const std::vector<Cyclotomic>& f) {
  const GroupSpec& g = tau.group();
  const std::size_t n = static_cast<std::size_t>(g.order());
  if (f.size() != n) throw ShapeError("coboundary data must have one value per group element");
  for (const auto& v : f)
    if (v.is_zero()) throw DomainError("coboundary values must be nonzero");
  const auto elems = g.enumerate();
  std::vector<Cyclotomic> table(n * n, Cyclotomic(1));
  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t hi = 0; hi < n; ++hi) {
      const std::size_t si = g.index_of(g.add(elems[gi], elems[hi]));
      table[gi * n + hi] = tau.at(gi, hi) * f[gi] * f[hi] * f[si].inverse();
    }
  return Cocycle(g, std::move(table));
}

}  // namespace regrade
