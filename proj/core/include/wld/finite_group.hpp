#pragma once

// Finite groups given by multiplication tables; targets for hom counting.

#include <string>
#include <string_view>
#include <vector>

namespace wld {

class FiniteGroupTable {
 public:
  /// table[a * order + b] = a*b. Validates closure, associativity, identity
  /// and inverses; throws std::invalid_argument otherwise.
  FiniteGroupTable(std::string name, int order, std::vector<int> table);

  const std::string& name() const noexcept { return name_; }
  int order() const noexcept { return order_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const noexcept { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }

 private:
  std::string name_;
  int order_;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

FiniteGroupTable cyclic_group(int n);
/// Symmetries of the regular n-gon (order 2n).
FiniteGroupTable dihedral_group(int n);
FiniteGroupTable symmetric_group(int n);
FiniteGroupTable quaternion_group();

/// z2..z12, d3..d8, s3, s4, q8.
FiniteGroupTable builtin_group(std::string_view name);
std::vector<std::string> builtin_group_names();

/// One row per element, comma separated products; '#' lines are comments.
FiniteGroupTable parse_group_csv(std::string_view text, std::string name = "table");

}  // namespace wld
