#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kch {

/// Ordered set of variable identifiers. The order is fixed at construction
/// and determines the canonical term order of every polynomial over it.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<size_t> index(std::string_view name) const;
  bool contains(std::string_view name) const { return index(name).has_value(); }

  bool operator==(const VarSet&) const = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace kch
