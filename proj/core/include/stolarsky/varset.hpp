#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stolarsky {

/// Ordered, immutable set of variable names. Polynomials hold a shared pointer
/// to their VarSet; the declared order fixes the term order and the exponent
/// layout of every monomial referencing it.
class VarSet {
 public:
  static std::shared_ptr<const VarSet> make(std::vector<std::string> names);
  static std::shared_ptr<const VarSet> make(std::initializer_list<std::string_view> names);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_[i]; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

 private:
  explicit VarSet(std::vector<std::string> names);
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

/// True when the two polynomials' variable sets are interchangeable (same
/// object or equal contents).
inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace stolarsky
