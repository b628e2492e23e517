#include "regrade/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "regrade/error.hpp"

namespace regrade {

namespace {

void scale_add(Vec& acc, const Cyclotomic& c, const std::vector<SparseTerm>& terms) {
  for (const auto& t : terms) acc[t.k] += c * t.c;
}

}  // namespace

GradedAlgebra::GradedAlgebra(GroupSpec group, std::vector<std::string> labels,
                             std::vector<GroupElement> degrees, ProductTable products, Vec unit)
    : group_(std::move(group)),
      labels_(std::move(labels)),
      degrees_(std::move(degrees)),
      products_(std::move(products)),
      unit_(std::move(unit)) {
  const std::size_t d = labels_.size();
  if (degrees_.size() != d || unit_.size() != d || products_.size() != d)
    throw ShapeError("algebra data sizes disagree");
  for (auto& row : products_)
    if (row.size() != d) throw ShapeError("algebra product table is not dim x dim");
  for (const auto& g : degrees_)
    if (!group_.canonical(g)) throw ShapeError("basis degree is not canonical for the group");

  for (auto& row : products_)
    for (auto& cell : row) {
      cell.erase(std::remove_if(cell.begin(), cell.end(),
                                [](const SparseTerm& t) { return t.c.is_zero(); }),
                 cell.end());
      std::sort(cell.begin(), cell.end(),
                [](const SparseTerm& a, const SparseTerm& b) { return a.k < b.k; });
      for (const auto& t : cell) {
        if (t.k >= d) throw ShapeError("structure constant index out of range");
        conductor_ = lcm_long(conductor_, t.c.conductor());
      }
    }
  for (const auto& v : unit_) conductor_ = lcm_long(conductor_, v.conductor());
  for (auto& row : products_)
    for (auto& cell : row)
      for (auto& t : cell) t.c = t.c.embedded(conductor_);
  for (auto& v : unit_) v = v.embedded(conductor_);

  components_.assign(static_cast<std::size_t>(group_.order()), {});
  for (std::size_t i = 0; i < d; ++i) components_[group_.index_of(degrees_[i])].push_back(i);

  validate();
}

void GradedAlgebra::validate() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const GroupElement want = group_.add(degrees_[i], degrees_[j]);
      for (const auto& t : products_[i][j])
        if (degrees_[t.k] != want)
          throw ValidationError("grading inconsistency: " + labels_[i] + " * " + labels_[j] +
                                " hits " + labels_[t.k] + " outside degree " + want.str());
    }
  // associativity on basis triples
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec left(d, Cyclotomic(0)), right(d, Cyclotomic(0));
        for (const auto& t : products_[i][j]) scale_add(left, t.c, products_[t.k][k]);
        for (const auto& t : products_[j][k]) scale_add(right, t.c, products_[i][t.k]);
        if (left != right)
          throw ValidationError("associativity fails on (" + labels_[i] + ", " + labels_[j] +
                                ", " + labels_[k] + ")");
      }
  for (std::size_t i = 0; i < d; ++i) {
    Vec b = basis_vec(i);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b)
      throw ValidationError("unit law fails on " + labels_[i]);
  }
}

std::vector<GroupElement> GradedAlgebra::support() const {
  std::vector<GroupElement> out;
  for (std::size_t gi = 0; gi < components_.size(); ++gi)
    if (!components_[gi].empty()) out.push_back(group_.element_at(gi));
  return out;
}

bool GradedAlgebra::full_support() const {
  for (const auto& comp : components_)
    if (comp.empty()) return false;
  return true;
}

Vec GradedAlgebra::basis_vec(std::size_t i) const {
  Vec v(dim(), Cyclotomic(0));
  v[i] = Cyclotomic(1);
  return v;
}

Vec GradedAlgebra::multiply(const Vec& x, const Vec& y) const {
  const std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw ShapeError("element length does not match dim");
  Vec r(d, Cyclotomic(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      scale_add(r, x[i] * y[j], products_[i][j]);
    }
  }
  return r;
}

Vec GradedAlgebra::multiply_basis(const Vec& x, std::size_t j) const {
  const std::size_t d = dim();
  if (x.size() != d) throw ShapeError("element length does not match dim");
  Vec r(d, Cyclotomic(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    scale_add(r, x[i], products_[i][j]);
  }
  return r;
}

std::optional<GroupElement> GradedAlgebra::homogeneous_degree(const Vec& x) const {
  std::optional<GroupElement> deg;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    if (!deg) {
      deg = degrees_[i];
    } else if (*deg != degrees_[i]) {
      return std::nullopt;
    }
  }
  return deg;  // nullopt for the zero vector
}

std::optional<Vec> GradedAlgebra::invert_homogeneous(const Vec& x) const {
  if (vec_is_zero(x)) return std::nullopt;
  if (!homogeneous_degree(x)) throw DomainError("element is not homogeneous");
  const std::size_t d = dim();
  Mat lx(d, Vec(d, Cyclotomic(0)));
  for (std::size_t c = 0; c < d; ++c) {
    Vec col(d, Cyclotomic(0));
    for (std::size_t i = 0; i < d; ++i)
      if (!x[i].is_zero()) scale_add(col, x[i], products_[i][c]);
    for (std::size_t r = 0; r < d; ++r) lx[r][c] = col[r];
  }
  auto y = solve(lx, unit_);
  if (!y) return std::nullopt;
  if (multiply(*y, x) != unit_)
    throw InternalError("right inverse is not a left inverse; algebra data is corrupt");
  return y;
}

GradedAlgebra twisted_group_algebra(const Cocycle& tau) {
  const GroupSpec& g = tau.group();
  const auto elems = g.enumerate();
  const std::size_t n = elems.size();
  std::vector<std::string> labels(n);
  ProductTable products(n, std::vector<std::vector<SparseTerm>>(n));
  for (std::size_t i = 0; i < n; ++i) labels[i] = "X" + elems[i].str();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      products[i][j] = {{g.index_of(g.add(elems[i], elems[j])), tau.at(i, j)}};
  Vec unit(n, Cyclotomic(0));
  unit[0] = tau.at(std::size_t{0}, std::size_t{0}).inverse();
  return GradedAlgebra(g, std::move(labels), elems, std::move(products), std::move(unit));
}

namespace {

Mat mat_mul_square(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat r(n, Vec(n, Cyclotomic(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

// Inverse by rref on [A | I]; A must be square invertible.
Mat mat_inverse(Mat a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(Cyclotomic(i == j ? 1 : 0));
  }
  if (rref(a) != n) throw InternalError("singular change-of-basis matrix");
  Mat inv(n, Vec(n, Cyclotomic(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

GradedAlgebra pauli_matrix_algebra(long n) {
  if (n < 2) throw DomainError("pauli algebra requires n >= 2");
  const std::size_t un = static_cast<std::size_t>(n);
  const Cyclotomic xi = Cyclotomic::zeta(n);
  Mat x(un, Vec(un, Cyclotomic(0))), y(un, Vec(un, Cyclotomic(0)));
  for (std::size_t i = 0; i < un; ++i) x[i][i] = xi.pow(n - 1 - static_cast<long>(i));
  for (std::size_t i = 0; i + 1 < un; ++i) y[i][i + 1] = Cyclotomic(1);
  y[un - 1][0] = Cyclotomic(1);

  // basis matrices X^i Y^j, then every product re-expressed on that basis
  std::vector<Mat> basis(un * un);
  Mat xp(un, Vec(un, Cyclotomic(0)));
  for (std::size_t i = 0; i < un; ++i) xp[i][i] = Cyclotomic(1);
  for (std::size_t i = 0; i < un; ++i) {
    Mat cur = xp;
    for (std::size_t j = 0; j < un; ++j) {
      basis[i * un + j] = cur;
      cur = mat_mul_square(cur, y);
    }
    xp = mat_mul_square(xp, x);
  }
  const std::size_t dim = un * un;
  Mat change(dim, Vec(dim, Cyclotomic(0)));  // rows: matrix entries, cols: basis
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t r = 0; r < un; ++r)
      for (std::size_t c = 0; c < un; ++c) change[r * un + c][b] = basis[b][r][c];
  Mat inv = mat_inverse(std::move(change));

  GroupSpec g({n, n});
  std::vector<std::string> labels(dim);
  std::vector<GroupElement> degrees(dim);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      labels[i * un + j] =
          "X" + std::to_string(i) + "Y" + std::to_string(j);
      degrees[i * un + j] = GroupElement{{static_cast<long>(i), static_cast<long>(j)}};
    }
  ProductTable products(dim, std::vector<std::vector<SparseTerm>>(dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      Mat p = mat_mul_square(basis[a], basis[b]);
      std::vector<SparseTerm> cell;
      for (std::size_t k = 0; k < dim; ++k) {
        Cyclotomic coef(0);
        for (std::size_t e = 0; e < dim; ++e) {
          const Cyclotomic& pe = p[e / un][e % un];
          if (!pe.is_zero() && !inv[k][e].is_zero()) coef += inv[k][e] * pe;
        }
        if (!coef.is_zero()) cell.push_back({k, coef});
      }
      products[a][b] = std::move(cell);
    }
  Vec unit(dim, Cyclotomic(0));
  unit[0] = Cyclotomic(1);
  return GradedAlgebra(g, std::move(labels), std::move(degrees), std::move(products),
                       std::move(unit));
}

GradedAlgebra truncated_grassmann(long r) {
  if (r < 1) throw DomainError("grassmann truncation requires r >= 1");
  const std::size_t dim = std::size_t{1} << r;
  GroupSpec g({2});
  std::vector<std::string> labels(dim);
  std::vector<GroupElement> degrees(dim);
  for (std::size_t mask = 0; mask < dim; ++mask) {
    if (mask == 0) {
      labels[0] = "1";
    } else {
      std::string s = "e";
      for (long b = 0; b < r; ++b)
        if (mask & (std::size_t{1} << b)) s += std::to_string(b + 1);
      labels[mask] = s;
    }
    degrees[mask] = GroupElement{{static_cast<long>(__builtin_popcountll(mask) % 2)}};
  }
  ProductTable products(dim, std::vector<std::vector<SparseTerm>>(dim));
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t t = 0; t < dim; ++t) {
      if (s & t) continue;  // repeated generator kills the product
      long crossings = 0;
      for (long tb = 0; tb < r; ++tb) {
        if (!(t & (std::size_t{1} << tb))) continue;
        for (long sb = tb + 1; sb < r; ++sb)
          if (s & (std::size_t{1} << sb)) ++crossings;
      }
      products[s][t] = {{s | t, Cyclotomic(crossings % 2 == 0 ? 1 : -1)}};
    }
  Vec unit(dim, Cyclotomic(0));
  unit[0] = Cyclotomic(1);
  return GradedAlgebra(g, std::move(labels), std::move(degrees), std::move(products),
                       std::move(unit));
}

namespace {

void gen_monomials(long vars, long cap, long pos, long used, std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
  if (pos == vars) {
    out.push_back(cur);
    return;
  }
  for (long e = 0; e + used <= cap; ++e) {
    cur[static_cast<std::size_t>(pos)] = e;
    gen_monomials(vars, cap, pos + 1, used + e, cur, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

std::string monomial_label(const std::vector<long>& expo) {
  std::string s;
  for (std::size_t v = 0; v < expo.size(); ++v) {
    if (expo[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(v + 1);
    if (expo[v] > 1) s += "^" + std::to_string(expo[v]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

GradedAlgebra truncated_polynomial_local(long vars, long cap) {
  if (vars < 1 || cap < 1) throw DomainError("local algebra requires vars >= 1 and cap >= 1");
  std::vector<std::vector<long>> monos;
  std::vector<long> cur(static_cast<std::size_t>(vars), 0);
  gen_monomials(vars, cap, 0, 0, cur, monos);
  std::sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
    long ta = 0, tb = 0;
    for (long e : a) ta += e;
    for (long e : b) tb += e;
    if (ta != tb) return ta < tb;
    return a < b;
  });
  std::map<std::vector<long>, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;

  const std::size_t dim = monos.size();
  GroupSpec g{std::vector<long>{}};  // trivial group
  std::vector<std::string> labels(dim);
  std::vector<GroupElement> degrees(dim, g.zero());
  for (std::size_t i = 0; i < dim; ++i) labels[i] = monomial_label(monos[i]);
  ProductTable products(dim, std::vector<std::vector<SparseTerm>>(dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      std::vector<long> sum(static_cast<std::size_t>(vars));
      long total = 0;
      for (std::size_t v = 0; v < sum.size(); ++v) {
        sum[v] = monos[a][v] + monos[b][v];
        total += sum[v];
      }
      if (total <= cap) products[a][b] = {{index.at(sum), Cyclotomic(1)}};
    }
  Vec unit(dim, Cyclotomic(0));
  unit[0] = Cyclotomic(1);
  return GradedAlgebra(g, std::move(labels), std::move(degrees), std::move(products),
                       std::move(unit));
}

GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b) {
  const GroupSpec g = direct_product(a.group(), b.group());
  const std::size_t da = a.dim(), db = b.dim(), dim = da * db;
  std::vector<std::string> labels(dim);
  std::vector<GroupElement> degrees(dim);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      labels[i * db + j] = a.labels()[i] + "|" + b.labels()[j];
      GroupElement d = a.degrees()[i];
      d.r.insert(d.r.end(), b.degrees()[j].r.begin(), b.degrees()[j].r.end());
      degrees[i * db + j] = std::move(d);
    }
  ProductTable products(dim, std::vector<std::vector<SparseTerm>>(dim));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          std::vector<SparseTerm> cell;
          for (const auto& ta : a.terms(i, k))
            for (const auto& tb : b.terms(j, l))
              cell.push_back({ta.k * db + tb.k, ta.c * tb.c});
          products[i * db + j][k * db + l] = std::move(cell);
        }
  Vec unit(dim, Cyclotomic(0));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      if (!a.unit()[i].is_zero() && !b.unit()[j].is_zero())
        unit[i * db + j] = a.unit()[i] * b.unit()[j];
  return GradedAlgebra(g, std::move(labels), std::move(degrees), std::move(products),
                       std::move(unit));
}

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.group() != b.group()) throw ShapeError("direct sum requires the same grading group");
  const std::size_t da = a.dim(), db = b.dim(), dim = da + db;
  std::vector<std::string> labels(dim);
  std::vector<GroupElement> degrees(dim);
  for (std::size_t i = 0; i < da; ++i) {
    labels[i] = "1:" + a.labels()[i];
    degrees[i] = a.degrees()[i];
  }
  for (std::size_t j = 0; j < db; ++j) {
    labels[da + j] = "2:" + b.labels()[j];
    degrees[da + j] = b.degrees()[j];
  }
  ProductTable products(dim, std::vector<std::vector<SparseTerm>>(dim));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) products[i][j] = a.terms(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      std::vector<SparseTerm> cell = b.terms(i, j);
      for (auto& t : cell) t.k += da;
      products[da + i][da + j] = std::move(cell);
    }
  Vec unit(dim, Cyclotomic(0));
  for (std::size_t i = 0; i < da; ++i) unit[i] = a.unit()[i];
  for (std::size_t j = 0; j < db; ++j) unit[da + j] = b.unit()[j];
  return GradedAlgebra(a.group(), std::move(labels), std::move(degrees), std::move(products),
                       std::move(unit));
}

GradedAlgebra paper_example(char which) {
  GroupSpec g({2});
  std::vector<std::string> labels = {"1", "z", "t", "zt"};
  ProductTable products(4, std::vector<std::vector<SparseTerm>>(4));
  const Cyclotomic one(1), neg(-1);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Cyclotomic& c) {
    products[i][j] = {{k, c}};
  };
  for (std::size_t i = 0; i < 4; ++i) {
    set(0, i, i, one);
    set(i, 0, i, one);
  }
  std::vector<GroupElement> degrees;
  if (which == 'B') {
    // commutative: z^2 = 0, t^2 = 1, grading B0 = {1, z}, B1 = {t, zt}
    degrees = {GroupElement{{0}}, GroupElement{{0}}, GroupElement{{1}}, GroupElement{{1}}};
    set(1, 2, 3, one);
    set(2, 1, 3, one);
    set(2, 2, 0, one);
    set(2, 3, 1, one);
    set(3, 2, 1, one);
  } else if (which == 'A') {
    // t^2 = 1, zt = -tz, z^2 = 0; grading A0 = {1, zt}, A1 = {z, t}
    degrees = {GroupElement{{0}}, GroupElement{{1}}, GroupElement{{1}}, GroupElement{{0}}};
    set(1, 2, 3, one);
    set(2, 1, 3, neg);
    set(2, 2, 0, one);
    set(2, 3, 1, neg);
    set(3, 2, 1, one);
  } else {
    throw DomainError("paper example must be 'B' or 'A'");
  }
  Vec unit(4, Cyclotomic(0));
  unit[0] = one;
  return GradedAlgebra(g, std::move(labels), std::move(degrees), std::move(products),
                       std::move(unit));
}

GradedAlgebra with_trivial_grading(const GradedAlgebra& a, const GroupSpec& g) {
  ProductTable products(a.dim(), std::vector<std::vector<SparseTerm>>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) products[i][j] = a.terms(i, j);
  return GradedAlgebra(g, a.labels(), std::vector<GroupElement>(a.dim(), g.zero()),
                       std::move(products), a.unit());
}

namespace {

// trace(L_{b_t}) for every t, straight off the structure constants
Vec left_mult_traces(const GradedAlgebra& a) {
  const std::size_t d = a.dim();
  Vec tr(d, Cyclotomic(0));
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t k = 0; k < d; ++k)
      for (const auto& term : a.terms(t, k))
        if (term.k == k) tr[t] += term.c;
  return tr;
}

Mat radical_gram_serial(const GradedAlgebra& a) {
  const std::size_t d = a.dim();
  const Vec tr = left_mult_traces(a);
  Mat gram(d, Vec(d, Cyclotomic(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Cyclotomic v(0);
      for (const auto& term : a.terms(i, j)) v += term.c * tr[term.k];
      gram[i][j] = v;
    }
  return gram;
}

Mat radical_gram_parallel(const GradedAlgebra& a) {
  const std::size_t d = a.dim();
  const Vec tr = left_mult_traces(a);
  Mat gram(d, Vec(d, Cyclotomic(0)));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(d); ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Cyclotomic v(0);
      for (const auto& term : a.terms(static_cast<std::size_t>(i), j)) v += term.c * tr[term.k];
      gram[static_cast<std::size_t>(i)][j] = v;
    }
  return gram;
}

}  // namespace

Mat jacobson_radical(const GradedAlgebra& a, Exec exec) {
  const std::size_t d = a.dim();
  Mat gram = exec == Exec::parallel ? radical_gram_parallel(a) : radical_gram_serial(a);
  Mat rad = nullspace(gram, d);

  // two-sided ideal check
  for (const auto& v : rad)
    for (std::size_t j = 0; j < d; ++j) {
      if (!in_span(rad, a.multiply_basis(v, j)) || !in_span(rad, a.multiply(a.basis_vec(j), v)))
        throw InternalError("radical candidate is not a two-sided ideal");
    }
  // nilpotency: J, J^2, ... must reach zero within dim steps
  Mat power = rad;
  for (std::size_t step = 0; !power.empty(); ++step) {
    if (step > d) throw InternalError("radical candidate is not nilpotent");
    Mat next;
    for (const auto& v : power)
      for (const auto& w : rad) next.push_back(a.multiply(v, w));
    rref(next);
    if (next.size() == power.size() && same_subspace(next, power))
      throw InternalError("radical candidate is not nilpotent");
    power = std::move(next);
  }
  return rad;
}

Subalgebra zero_component(const GradedAlgebra& a) {
  const std::size_t zero_idx = a.group().index_of(a.group().zero());
  const auto& idx = a.component(zero_idx);
  std::vector<long> back(a.dim(), -1);
  for (std::size_t p = 0; p < idx.size(); ++p) back[idx[p]] = static_cast<long>(p);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (back[i] < 0 && !a.unit()[i].is_zero())
      throw InternalError("unit is not supported on the zero component");

  const std::size_t d0 = idx.size();
  std::vector<std::string> labels(d0);
  std::vector<GroupElement> degrees(d0, a.group().zero());
  Vec unit(d0, Cyclotomic(0));
  ProductTable products(d0, std::vector<std::vector<SparseTerm>>(d0));
  for (std::size_t p = 0; p < d0; ++p) {
    labels[p] = a.labels()[idx[p]];
    unit[p] = a.unit()[idx[p]];
    for (std::size_t q = 0; q < d0; ++q) {
      std::vector<SparseTerm> cell;
      for (const auto& t : a.terms(idx[p], idx[q])) {
        if (back[t.k] < 0)
          throw InternalError("zero-component product escapes the zero component");
        cell.push_back({static_cast<std::size_t>(back[t.k]), t.c});
      }
      products[p][q] = std::move(cell);
    }
  }
  return Subalgebra{GradedAlgebra(a.group(), std::move(labels), std::move(degrees),
                                  std::move(products), std::move(unit)),
                    idx};
}

std::size_t radical_dim_of_quotient(const GradedAlgebra& a, const Mat& ideal_rref) {
  const std::size_t d = a.dim();
  std::vector<long> pivot_of_col(d, -1);
  for (std::size_t i = 0; i < ideal_rref.size(); ++i) {
    std::size_t c = 0;
    while (c < d && ideal_rref[i][c].is_zero()) ++c;
    pivot_of_col[c] = static_cast<long>(i);
  }
  std::vector<std::size_t> comp;  // complement coordinates = quotient basis
  for (std::size_t c = 0; c < d; ++c)
    if (pivot_of_col[c] < 0) comp.push_back(c);
  const std::size_t q = comp.size();

  auto reduce_to_quotient = [&](Vec v) {
    for (std::size_t c = 0; c < d; ++c) {
      if (pivot_of_col[c] < 0 || v[c].is_zero()) continue;
      const Vec& row = ideal_rref[static_cast<std::size_t>(pivot_of_col[c])];
      Cyclotomic f = v[c];
      for (std::size_t j = c; j < d; ++j) v[j] -= f * row[j];
    }
    Vec out(q, Cyclotomic(0));
    for (std::size_t p = 0; p < q; ++p) out[p] = v[comp[p]];
    return out;
  };

  // quotient structure constants, dense
  std::vector<std::vector<Vec>> prod(q, std::vector<Vec>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec full(d, Cyclotomic(0));
      for (const auto& t : a.terms(comp[i], comp[j])) full[t.k] += t.c;
      prod[i][j] = reduce_to_quotient(std::move(full));
    }
  Vec tr(q, Cyclotomic(0));
  for (std::size_t t = 0; t < q; ++t)
    for (std::size_t k = 0; k < q; ++k) tr[t] += prod[t][k][k];
  Mat gram(q, Vec(q, Cyclotomic(0)));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Cyclotomic v(0);
      for (std::size_t k = 0; k < q; ++k)
        if (!prod[i][j][k].is_zero()) v += prod[i][j][k] * tr[k];
      gram[i][j] = v;
    }
  return nullspace(gram, q).size();
}

RadicalGradingReport radical_grading_report(const GradedAlgebra& a) {
  RadicalGradingReport rep;
  Mat rad = jacobson_radical(a);
  rep.j_dim = rad.size();

  rep.is_graded = true;
  for (const auto& v : rad) {
    for (std::size_t gi = 0; gi < static_cast<std::size_t>(a.group().order()) && rep.is_graded;
         ++gi) {
      Vec proj(a.dim(), Cyclotomic(0));
      bool nonzero = false;
      for (std::size_t k : a.component(gi)) {
        proj[k] = v[k];
        nonzero = nonzero || !v[k].is_zero();
      }
      if (nonzero && !in_span(rad, proj)) rep.is_graded = false;
    }
    if (!rep.is_graded) break;
  }

  Subalgebra a0 = zero_component(a);
  Mat rad0 = jacobson_radical(a0.alg);
  rep.j0_dim = rad0.size();

  // embed J(A_0) into the parent coordinates
  Mat rad0_embedded;
  for (const auto& v : rad0) {
    Vec w(a.dim(), Cyclotomic(0));
    for (std::size_t p = 0; p < a0.parent_index.size(); ++p) w[a0.parent_index[p]] = v[p];
    rad0_embedded.push_back(std::move(w));
  }
  rref(rad0_embedded);

  // A_0 intersect J(A): combinations of J rows supported on A_0 coordinates
  std::vector<bool> in_a0(a.dim(), false);
  for (std::size_t p : a0.parent_index) in_a0[p] = true;
  std::vector<std::size_t> outside;
  for (std::size_t c = 0; c < a.dim(); ++c)
    if (!in_a0[c]) outside.push_back(c);
  Mat restricted_t(outside.size(), Vec(rad.size(), Cyclotomic(0)));
  for (std::size_t r = 0; r < rad.size(); ++r)
    for (std::size_t c = 0; c < outside.size(); ++c) restricted_t[c][r] = rad[r][outside[c]];
  Mat combos = nullspace(restricted_t, rad.size());
  Mat inter;
  for (const auto& cvec : combos) {
    Vec w(a.dim(), Cyclotomic(0));
    for (std::size_t r = 0; r < rad.size(); ++r)
      if (!cvec[r].is_zero())
        for (std::size_t c = 0; c < a.dim(); ++c) w[c] += cvec[r] * rad[r][c];
    inter.push_back(std::move(w));
  }
  rref(inter);
  rep.identity_holds = same_subspace(inter, rad0_embedded);
  return rep;
}

}  // namespace regrade
