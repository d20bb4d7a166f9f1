#include "joinalg/report.hpp"

#include <algorithm>

namespace joinalg {

void Report::add(std::string axiom, bool passed, std::string detail) {
  items_.push_back(CheckItem{std::move(axiom), passed, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& item : other.items_) items_.push_back({prefix + item.axiom, item.passed, item.detail});
}

bool Report::ok() const {
  return std::all_of(items_.begin(), items_.end(), [](const CheckItem& c) { return c.passed; });
}

std::optional<CheckItem> Report::first_failure() const {
  for (const auto& item : items_) {
    if (!item.passed) return item;
  }
  return std::nullopt;
}

std::optional<bool> Report::status(const std::string& axiom) const {
  for (const auto& item : items_) {
    if (item.axiom == axiom) return item.passed;
  }
  return std::nullopt;
}

}  // namespace joinalg
