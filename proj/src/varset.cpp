#include "kch/varset.hpp"

#include <set>
#include <stdexcept>

namespace kch {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("VarSet: empty identifier");
    if (!seen.insert(n).second)
      throw std::invalid_argument("VarSet: duplicate identifier '" + n + "'");
  }
}

std::optional<size_t> VarSet::index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

}  // namespace kch
