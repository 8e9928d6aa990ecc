#include "macrocheck/substitution.hpp"

#include "macrocheck/errors.hpp"

namespace macrocheck {

Substitution::Substitution(VarSet source, VarSet target,
                           const std::map<std::string, Polynomial, std::less<>>& images)
    : source_(std::move(source)), target_(std::move(target)) {
  for (const auto& [name, image] : images) {
    if (!source_.contains(name)) {
      throw StructuralError("substitution image for '" + name + "' outside source " +
                            to_string(source_));
    }
    if (!(image.vars() == target_)) {
      throw StructuralError("substitution image for '" + name + "' is not over target " +
                            to_string(target_));
    }
  }
  images_.reserve(source_.size());
  for (const auto& name : source_.names()) {
    const auto it = images.find(name);
    if (it == images.end()) throw StructuralError("substitution has no image for '" + name + "'");
    images_.push_back(it->second);
  }
}

Substitution Substitution::identity(const VarSet& vars) { return partial(vars, {}); }

Substitution Substitution::partial(const VarSet& vars,
                                   const std::map<std::string, Polynomial, std::less<>>& images) {
  std::map<std::string, Polynomial, std::less<>> full(images);
  for (const auto& name : vars.names()) {
    full.try_emplace(name, Polynomial::variable(vars, name));
  }
  return Substitution(vars, vars, full);
}

const Polynomial& Substitution::image(std::string_view name) const {
  const auto idx = source_.index_of(name);
  if (!idx) throw StructuralError("'" + std::string(name) + "' not in " + to_string(source_));
  return images_[*idx];
}

Polynomial Substitution::apply(const Polynomial& p) const {
  if (!(p.vars() == source_)) {
    throw StructuralError("substitute: polynomial over " + to_string(p.vars()) +
                          ", substitution expects " + to_string(source_));
  }
  // powers[i][e] = images_[i]^e, grown on demand.
  std::vector<std::vector<Polynomial>> powers(source_.size());
  for (auto& table : powers) table.push_back(Polynomial::constant(target_, Rational(1)));

  Polynomial out(target_);
  for (const auto& [m, c] : p.terms()) {
    Polynomial product = Polynomial::constant(target_, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto e = m[i];
      if (e == 0) continue;
      auto& table = powers[i];
      while (table.size() <= e) table.push_back(table.back() * images_[i]);
      product *= table[e];
    }
    out += product;
  }
  return out;
}

}  // namespace macrocheck
