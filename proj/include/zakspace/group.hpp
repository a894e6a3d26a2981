#pragma once

#include <span>
#include <string>
#include <vector>

namespace zakspace {

// A finite group given by its multiplication table, g*h = table[g][h].
// Haar measure is counting measure, so the group is unimodular.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Validates the table; throws ShapeMismatch / OutOfRange / NoIdentity /
  // NoInverse / NotAssociative naming the witness.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return table_[static_cast<std::size_t>(g) * order_ + h]; }
  int inv(int g) const { return inverses_[g]; }
  bool is_abelian() const { return abelian_; }

  std::vector<std::vector<int>> table() const;
  std::vector<std::vector<int>> conjugacy_classes() const;
  // Order of the element g.
  int element_order(int g) const;

  // Throws NotSubgroup unless `elements` is a nonempty subset closed under
  // product and inverse.
  void check_subgroup(std::span<const int> elements) const;
  bool is_subgroup(std::span<const int> elements) const;
  bool is_normal(std::span<const int> subgroup) const;

  // Optional human-readable element names (catalog groups fill these in).
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);
  std::string name_of(int g) const;

 private:
  int order_ = 0;
  int identity_ = 0;
  bool abelian_ = true;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::vector<std::string> names_;
};

inline FiniteGroup make_group(const std::vector<std::vector<int>>& table) {
  return FiniteGroup::from_table(table);
}

// Catalog constructions with a canonical element order.
FiniteGroup cyclic_group(int n);
// Element index f*n + k stands for r^k s^f (r rotation, s reflection).
FiniteGroup dihedral_group(int n);
// All permutations of {0..n-1} in lexicographic order; (p*q)(i) = p[q[i]].
FiniteGroup symmetric_group(int n);
std::vector<std::vector<int>> symmetric_group_permutations(int n);
// Element index a*|B| + b stands for (a, b).
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// Group of a set of permutations closed under composition.
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& perms);

std::vector<int> generated_subgroup(const FiniteGroup& group, std::span<const int> generators);

}  // namespace zakspace
