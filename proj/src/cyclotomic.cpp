#include "regrade/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "regrade/error.hpp"

namespace regrade {

long lcm_long(long a, long b) { return std::lcm(a, b); }

Rational make_rational(const std::string& num, const std::string& den) {
  Rational q{BigInt(num), BigInt(den)};
  q.canonicalize();
  return q;
}

std::pair<std::string, std::string> rational_parts(const Rational& q) {
  return {q.get_num().get_str(), q.get_den().get_str()};
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long euler_phi(long m) {
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

// num = q*den + rem with deg rem < deg den; den must be nonzero.
void poly_divmod(Poly num, const Poly& den, Poly& q, Poly& rem) {
  q.clear();
  poly_trim(num);
  if (den.empty()) throw InternalError("polynomial division by zero");
  if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Rational(0));
  const Rational& lead = den.back();
  while (num.size() >= den.size()) {
    Rational f = num.back() / lead;
    std::size_t shift = num.size() - den.size();
    q[shift] = f;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    num.pop_back();
    poly_trim(num);
  }
  rem = std::move(num);
}

std::mutex g_phi_mutex;
std::map<long, Poly> g_phi_cache;

const Poly& phi_unlocked(long m) {
  auto it = g_phi_cache.find(m);
  if (it != g_phi_cache.end()) return it->second;
  Poly result;
  if (m == 1) {
    result = {Rational(-1), Rational(1)};  // x - 1
  } else {
    Poly p(static_cast<std::size_t>(m) + 1, Rational(0));
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;  // x^m - 1
    for (long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      Poly q, rem;
      poly_divmod(p, phi_unlocked(d), q, rem);
      if (!rem.empty()) throw InternalError("cyclotomic polynomial division left a remainder");
      p = std::move(q);
    }
    result = std::move(p);
  }
  return g_phi_cache.emplace(m, std::move(result)).first->second;
}

Poly phi_poly(long m) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return phi_unlocked(m);
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(long m) {
  if (m < 1) throw DomainError("conductor must be >= 1");
  return phi_poly(m);
}

Cyclotomic::Cyclotomic(long v) : cond_(1), c_{Rational(v)} {}

Cyclotomic::Cyclotomic(const Rational& v) : cond_(1), c_{v} {}

Cyclotomic Cyclotomic::from_poly(long m, std::vector<Rational> poly) {
  if (m < 1) throw DomainError("conductor must be >= 1");
  Cyclotomic x;
  x.cond_ = m;
  Poly q, rem;
  poly_divmod(std::move(poly), phi_poly(m), q, rem);
  rem.resize(static_cast<std::size_t>(euler_phi(m)), Rational(0));
  x.c_ = std::move(rem);
  return x;
}

Cyclotomic Cyclotomic::zeta(long m, long k) {
  if (m < 1) throw DomainError("conductor must be >= 1");
  k %= m;
  if (k < 0) k += m;
  Poly p(static_cast<std::size_t>(k) + 1, Rational(0));
  p[static_cast<std::size_t>(k)] = 1;
  return from_poly(m, std::move(p));
}

bool Cyclotomic::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw DomainError("value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::embedded(long M) const {
  if (M == cond_) return *this;
  if (M < 1 || M % cond_ != 0) throw DomainError("conductor embedding requires m | M");
  long t = M / cond_;
  Poly p(static_cast<std::size_t>((static_cast<long>(c_.size()) - 1) * t + 1), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * static_cast<std::size_t>(t)] = c_[i];
  return from_poly(M, std::move(p));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic x = *this;
  for (auto& v : x.c_) v = -v;
  return x;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  long L = lcm_long(a.cond_, b.cond_);
  Cyclotomic x = a.embedded(L), y = b.embedded(L);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  long L = lcm_long(a.cond_, b.cond_);
  Cyclotomic x = a.embedded(L), y = b.embedded(L);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
  return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  long L = lcm_long(a.cond_, b.cond_);
  Cyclotomic x = a.embedded(L), y = b.embedded(L);
  return Cyclotomic::from_poly(L, poly_mul(x.c_, y.c_));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) { return *this = *this + o; }
Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this = *this - o; }
Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta)");
  // Extended Euclid on (a, Phi_m) over Q[x]; Phi_m is irreducible, so the
  // gcd is a nonzero constant and u with u*a = gcd (mod Phi_m) exists.
  Poly r0 = phi_poly(cond_), r1 = c_;
  poly_trim(r1);
  Poly u0 = {}, u1 = {Rational(1)};  // coefficients of `a` in r0, r1
  while (true) {
    Poly q, rem;
    poly_divmod(r0, r1, q, rem);
    if (rem.empty()) break;
    Poly nu = u0;
    Poly qu = poly_mul(q, u1);
    nu.resize(std::max(nu.size(), qu.size()), Rational(0));
    for (std::size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
    poly_trim(nu);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(nu);
  }
  if (r1.size() != 1) throw InternalError("nonconstant gcd against an irreducible modulus");
  Rational g = r1[0];
  for (auto& v : u1) v /= g;
  return from_poly(cond_, std::move(u1));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this, acc = Cyclotomic(1).embedded(cond_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Cyclotomic Cyclotomic::conj() const {
  Poly p(static_cast<std::size_t>(cond_), Rational(0));
  p[0] = c_[0];
  for (std::size_t i = 1; i < c_.size(); ++i)
    p[static_cast<std::size_t>(cond_) - i] = c_[i];
  return from_poly(cond_, std::move(p));
}

std::optional<long> Cyclotomic::root_of_unity_order() const {
  if (is_zero()) return std::nullopt;
  const Cyclotomic one = Cyclotomic(1).embedded(cond_);
  Cyclotomic p = *this;
  long bound = 2 * cond_ * cond_;
  for (long d = 1; d <= bound; ++d) {
    if (p == one) return d;
    p *= *this;
  }
  return std::nullopt;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (cond_ == o.cond_) return c_ == o.c_;
  long L = lcm_long(cond_, o.cond_);
  return embedded(L).c_ == o.embedded(L).c_;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (first) {
      if (v < 0) {
        os << '-';
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (i == 0) {
      os << rational_str(v);
    } else {
      if (v != 1) os << rational_str(v) << '*';
      os << 'z' << cond_;
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

std::string Cyclotomic::key() const {
  std::ostringstream os;
  os << cond_ << '|';
  for (const auto& v : c_) os << v.get_num().get_str() << '/' << v.get_den().get_str() << ',';
  return os.str();
}

}  // namespace regrade
