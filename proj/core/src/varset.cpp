#include "stolarsky/varset.hpp"

#include <algorithm>

#include "stolarsky/errors.hpp"

namespace stolarsky {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw error("VarSet: empty variable name");
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw error("VarSet: duplicate variable '" + names_[i] + "'");
  }
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names) {
  return std::shared_ptr<const VarSet>(new VarSet(std::move(names)));
}

std::shared_ptr<const VarSet> VarSet::make(std::initializer_list<std::string_view> names) {
  std::vector<std::string> v;
  v.reserve(names.size());
  for (auto n : names) v.emplace_back(n);
  return make(std::move(v));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

}  // namespace stolarsky
