#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "macrocheck/polynomial.hpp"

namespace macrocheck {

/// Ring homomorphism from polynomials over `source` to polynomials over
/// `target`, fixed by one image per source variable.
class Substitution {
 public:
  /// Every source variable needs an image over `target`; throws StructuralError otherwise.
  Substitution(VarSet source, VarSet target,
               const std::map<std::string, Polynomial, std::less<>>& images);

  /// v -> v on `vars`.
  static Substitution identity(const VarSet& vars);
  /// Source and target are both `vars`; variables without an explicit image map to themselves.
  static Substitution partial(const VarSet& vars,
                              const std::map<std::string, Polynomial, std::less<>>& images);

  const VarSet& source() const { return source_; }
  const VarSet& target() const { return target_; }
  /// Throws StructuralError for names outside source().
  const Polynomial& image(std::string_view name) const;

  /// Throws StructuralError when `p` is not over source().
  Polynomial apply(const Polynomial& p) const;

 private:
  VarSet source_;
  VarSet target_;
  std::vector<Polynomial> images_;  // aligned with source_
};

inline Polynomial substitute(const Polynomial& p, const Substitution& s) { return s.apply(p); }

}  // namespace macrocheck
