#ifndef JOINALG_GROUP_HPP
#define JOINALG_GROUP_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace joinalg {

/// Finite group given by its multiplication table. The group axioms are
/// verified on construction (MalformedInput on failure).
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// S3 as permutations of {0,1,2}, element 0 the identity.
  static FiniteGroup symmetric3();
  /// "Z/n", "Z/2xZ/2", "S3", "trivial".
  static FiniteGroup named(const std::string& name);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const std::string& name(std::size_t g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_abelian() const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
  std::size_t identity_ = 0;
};

}  // namespace joinalg

#endif  // JOINALG_GROUP_HPP
