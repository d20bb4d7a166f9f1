#ifndef JOINALG_REPORT_HPP
#define JOINALG_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

namespace joinalg {

struct CheckItem {
  std::string axiom;
  bool passed = false;
  std::string detail;
};

/// Ordered list of named checks. A report passes when every item passes;
/// the first failing item names the violated axiom and carries a witness.
class Report {
 public:
  void add(std::string axiom, bool passed, std::string detail = {});
  /// Appends the items of `other`, prefixing their names with `prefix`.
  void merge(const Report& other, const std::string& prefix = {});

  bool ok() const;
  std::optional<CheckItem> first_failure() const;
  const std::vector<CheckItem>& items() const { return items_; }
  /// Status of a named item; nullopt if absent.
  std::optional<bool> status(const std::string& axiom) const;

 private:
  std::vector<CheckItem> items_;
};

}  // namespace joinalg

#endif  // JOINALG_REPORT_HPP
