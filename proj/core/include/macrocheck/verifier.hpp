#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "macrocheck/polynomial.hpp"

namespace macrocheck::verify {

enum class Status { verified, refuted, error };

std::string_view to_string(Status s);

/// Outcome of one symbolic check.
struct Report {
  std::string check_name;
  Status status = Status::error;
  /// Nonzero difference that refutes the check; present iff status is refuted.
  std::optional<std::string> witness;
  /// Terms in the expanded sides before the difference is formed.
  std::size_t term_count = 0;
  std::int64_t elapsed_ms = 0;
  /// Diagnostic for status error. Not serialized.
  std::string error_message;
};

/// One polynomial identity lhs == rhs. A check is a list of these.
struct Identity {
  std::string label;
  Polynomial lhs;
  Polynomial rhs;
};

enum class CheckId {
  lagrange,
  key_identity,
  constraint_factorization,
  k_equivalence,
  case_formulas,
  sharpness_reduction,
  weak_implication,
};

inline constexpr std::array<CheckId, 7> kAllChecks = {
    CheckId::lagrange,         CheckId::key_identity,        CheckId::constraint_factorization,
    CheckId::k_equivalence,    CheckId::case_formulas,       CheckId::sharpness_reduction,
    CheckId::weak_implication,
};

/// "lagrange", "key-identity", "constraint-factorization", "k-equivalence",
/// "case-formulas", "sharpness-reduction", "weak-implication".
std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check_name(std::string_view name);

/// The identities a check is made of, built fresh from the corpus.
std::vector<Identity> identities_for(CheckId id);

/// verified iff every lhs - rhs expands to the zero polynomial. Exceptions
/// raised while expanding become status error.
Report check_identities(std::string name, std::span<const Identity> identities);

Report run_check(CheckId id);

Report verify_lagrange();
Report verify_key_identity();
Report verify_constraint_factorization();
Report verify_k_equivalence();
/// Cases (i), (ii) with its discriminant, (iii) and (iv) of the vertex analysis.
Report verify_case_formulas();
Report verify_sharpness_reduction();
Report verify_weak_implication();

/// All checks in kAllChecks order. Checks run concurrently when `parallel`.
std::vector<Report> verify_all(bool parallel = true);

/// `count` copies of `identity`, each with exactly one coefficient changed
/// (alternating sides, cycling through terms). Each differs from a true
/// identity by a single nonzero term, so it must refute.
std::vector<Identity> coefficient_mutations(const Identity& identity, std::size_t count);

/// Evaluates both sides at `count` seeded random rational points and returns
/// how many disagree.
std::size_t cross_validate(const Identity& identity, std::size_t count, std::uint64_t seed);

}  // namespace macrocheck::verify
