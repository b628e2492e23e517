#include "regrade/group.hpp"

#include <numeric>
#include <sstream>

#include "regrade/error.hpp"

namespace regrade {

bool GroupElement::is_zero() const {
  for (long v : r)
    if (v != 0) return false;
  return true;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) os << ',';
    os << r[i];
  }
  os << ')';
  return os.str();
}

GroupSpec::GroupSpec(std::vector<long> moduli) : moduli_(std::move(moduli)) {
  for (long n : moduli_) {
    if (n < 1) throw DomainError("cyclic factor modulus must be >= 1");
    order_ *= n;
  }
}

long GroupSpec::exponent() const {
  long e = 1;
  for (long n : moduli_) e = std::lcm(e, n);
  return e;
}

GroupElement GroupSpec::zero() const {
  return GroupElement{std::vector<long>(moduli_.size(), 0)};
}

bool GroupSpec::canonical(const GroupElement& a) const {
  if (a.r.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (a.r[i] < 0 || a.r[i] >= moduli_[i]) return false;
  return true;
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  if (a.r.size() != moduli_.size() || b.r.size() != moduli_.size())
    throw ShapeError("group element length does not match the group");
  GroupElement s;
  s.r.resize(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    s.r[i] = (a.r[i] + b.r[i]) % moduli_[i];
  return s;
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
  if (a.r.size() != moduli_.size())
    throw ShapeError("group element length does not match the group");
  GroupElement s;
  s.r.resize(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    s.r[i] = (moduli_[i] - a.r[i]) % moduli_[i];
  return s;
}

GroupElement GroupSpec::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

std::vector<GroupElement> GroupSpec::enumerate() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (long i = 0; i < order_; ++i) out.push_back(element_at(static_cast<std::size_t>(i)));
  return out;
}

std::size_t GroupSpec::index_of(const GroupElement& a) const {
  if (!canonical(a)) throw ShapeError("element is not canonical for this group");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    idx = idx * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(a.r[i]);
  return idx;
}

GroupElement GroupSpec::element_at(std::size_t idx) const {
  GroupElement e;
  e.r.assign(moduli_.size(), 0);
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    e.r[i] = static_cast<long>(idx % static_cast<std::size_t>(moduli_[i]));
    idx /= static_cast<std::size_t>(moduli_[i]);
  }
  if (idx != 0) throw ShapeError("element index out of range");
  return e;
}

std::string GroupSpec::str() const {
  if (moduli_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) os << 'x';
    os << 'Z' << moduli_[i];
  }
  return os.str();
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
  std::vector<long> m = a.moduli();
  m.insert(m.end(), b.moduli().begin(), b.moduli().end());
  return GroupSpec(std::move(m));
}

MillerSum miller_sum(const GroupSpec& g) {
  MillerSum out;
  out.sum.r.assign(g.rank(), 0);
  long involutions = 1;  // elements with 2x = 0, including zero
  for (std::size_t i = 0; i < g.rank(); ++i) {
    long n = g.moduli()[i];
    if (n % 2 == 0) {
      involutions *= 2;
      // sum over the whole group of the i-th coordinate, mod n
      out.sum.r[i] = ((g.order() / 2) % n * ((n - 1) % n)) % n;
    }
  }
  out.order2_count = involutions - 1;
  return out;
}

}  // namespace regrade
