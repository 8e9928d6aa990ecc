#include "macrocheck/varset.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "macrocheck/errors.hpp"

namespace macrocheck {

struct VarSet::Data {
  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> index;
};

namespace {

bool valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  const auto first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && name.front() != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

}  // namespace

VarSet::VarSet() : data_(std::make_shared<const Data>()) {}

VarSet::VarSet(std::vector<std::string> names) {
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!valid_identifier(names[i])) {
      throw StructuralError("invalid variable name '" + names[i] + "'");
    }
    if (!data->index.emplace(names[i], i).second) {
      throw StructuralError("duplicate variable name '" + names[i] + "'");
    }
  }
  data->names = std::move(names);
  data_ = std::move(data);
}

VarSet::VarSet(std::initializer_list<std::string> names)
    : VarSet(std::vector<std::string>(names)) {}

std::size_t VarSet::size() const { return data_->names.size(); }

const std::string& VarSet::name(std::size_t index) const { return data_->names.at(index); }

const std::vector<std::string>& VarSet::names() const { return data_->names; }

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  const auto it = data_->index.find(name);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool VarSet::is_subset_of(const VarSet& other) const {
  return std::all_of(names().begin(), names().end(),
                     [&](const std::string& n) { return other.contains(n); });
}

bool operator==(const VarSet& lhs, const VarSet& rhs) {
  return lhs.data_ == rhs.data_ || lhs.data_->names == rhs.data_->names;
}

std::string to_string(const VarSet& vars) {
  std::string out = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) out += ", ";
    out += vars.name(i);
  }
  return out + "}";
}

}  // namespace macrocheck
