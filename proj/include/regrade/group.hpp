#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace regrade {

// Element of a product of cyclic groups, stored as canonical residues.
struct GroupElement {
  std::vector<long> r;

  bool operator==(const GroupElement& o) const { return r == o.r; }
  bool operator!=(const GroupElement& o) const { return r != o.r; }
  bool operator<(const GroupElement& o) const { return r < o.r; }
  bool is_zero() const;
  std::string str() const;
};

// Finite abelian group Z_{n1} x ... x Z_{nk}. The empty product is the
// trivial group. Immutable after construction.
class GroupSpec {
 public:
  GroupSpec() = default;
  explicit GroupSpec(std::vector<long> moduli);

  const std::vector<long>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  long order() const { return order_; }
  long exponent() const;

  bool operator==(const GroupSpec& o) const { return moduli_ == o.moduli_; }
  bool operator!=(const GroupSpec& o) const { return moduli_ != o.moduli_; }

  GroupElement zero() const;
  bool canonical(const GroupElement& a) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;

  // Lexicographic order by residues, zero first. This is the canonical
  // row/column order of every table indexed by the group.
  std::vector<GroupElement> enumerate() const;
  std::size_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::size_t idx) const;

  std::string str() const;

 private:
  std::vector<long> moduli_;
  long order_ = 1;
};

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b);

struct MillerSum {
  GroupElement sum;
  long order2_count = 0;
};

// Sum of all group elements together with the number of elements of order
// exactly 2. The sum vanishes unless there is exactly one involution, in
// which case it equals that involution. Closed form per cyclic factor; the
// fold over enumerate() is kept as the test oracle.
MillerSum miller_sum(const GroupSpec& g);

}  // namespace regrade
