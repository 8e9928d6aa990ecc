#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace macrocheck {

/// Ordered, immutable list of distinct variable names. Copies share storage.
/// Two VarSets are equal iff they list the same names in the same order.
class VarSet {
 public:
  VarSet();
  /// Throws StructuralError on duplicate or malformed names.
  explicit VarSet(std::vector<std::string> names);
  VarSet(std::initializer_list<std::string> names);

  std::size_t size() const;
  const std::string& name(std::size_t index) const;
  const std::vector<std::string>& names() const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// True when every name of this set also appears in `other`.
  bool is_subset_of(const VarSet& other) const;

  friend bool operator==(const VarSet& lhs, const VarSet& rhs);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Text form "{a1, a2, ...}" used in diagnostics.
std::string to_string(const VarSet& vars);

}  // namespace macrocheck
