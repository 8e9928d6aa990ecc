#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "macrocheck/polynomial.hpp"
#include "macrocheck/rational.hpp"

/// Exact numeric exploration: seeded counterexample search, the greedy
/// z-minimization of d, vertex case classification and sharpness witnesses.
namespace macrocheck::explore {

using Triple = std::array<Rational, 3>;

/// Concrete values of the macro variables p and z.
struct MacroState {
  Triple p;
  Triple z;

  /// c_i evaluated at p.
  Triple c() const;
  /// (p1+z1)(p2+z2)(p3+z3)
  Rational constraint_value() const;
  bool feasible() const { return constraint_value().sign() >= 0; }
  /// d evaluated through its corpus polynomial.
  Rational d_value() const;

  friend bool operator==(const MacroState&, const MacroState&) = default;
};

enum class Target { d_tilde, d_k, weak_difference, cs_diff };

/// "d-tilde", "d-k", "weak", "cs"
std::string_view target_name(Target t);
std::optional<Target> parse_target(std::string_view name);

struct SearchConfig {
  std::uint64_t sample_count = 1000;
  std::uint64_t seed = 0;
  std::uint64_t numerator_bound = 10;
  std::uint64_t denominator_bound = 10;
  Rational zero_probability = Rational(1, 16);
  /// Worker threads for random_search; 0 picks the hardware concurrency.
  /// Results do not depend on this value.
  unsigned threads = 1;
  /// Cap on how many counterexamples and equality points are listed.
  std::size_t max_recorded = 64;
};

/// Throws PreconditionError for zero sample counts, zero bounds or a zero
/// probability outside [0, 1].
void validate(const SearchConfig& cfg);

struct SamplePoint {
  /// Sample index; -1 marks the fixed probe.
  std::int64_t index = 0;
  std::vector<Rational> coordinates;
  Rational value;

  friend bool operator==(const SamplePoint&, const SamplePoint&) = default;
};

struct SearchReport {
  Target target = Target::d_tilde;
  /// Constant in front of the bracket (only meaningful for d-k).
  Rational constant = Rational(1, 2);
  std::vector<std::string> variables;
  std::uint64_t seed = 0;
  std::uint64_t samples_run = 0;
  Rational min_value;
  SamplePoint argmin;
  std::uint64_t counterexample_count = 0;
  /// Strictly negative hits, lowest indices first, at most max_recorded.
  std::vector<SamplePoint> counterexamples;
  std::uint64_t equality_count = 0;
  /// Exact zeros, lowest indices first, at most max_recorded.
  std::vector<SamplePoint> equality_points;
  /// The all-ones point, evaluated before any random sample.
  SamplePoint probe;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// The polynomial searched for `target`. For d-k the bracket constant is
/// fixed to `constant`.
Polynomial search_polynomial(Target target, const Rational& constant = Rational(1, 2));

/// Evaluates the target at the all-ones probe, then at cfg.sample_count
/// points drawn from per-sample SplitMix64 streams. The minimum breaks ties
/// toward the lowest index (the probe first), so the report is identical for
/// any thread count.
SearchReport random_search(Target target, const SearchConfig& cfg,
                           const Rational& constant = Rational(1, 2));

enum class CaseLabel { i, ii, iii, iv, mixed };
std::string_view to_string(CaseLabel label);

struct MinimizeStep {
  int coordinate = 0;  // 1-based index of the lowered z
  Rational old_value;
  Rational new_value;
  Rational d_before;
  Rational d_after;

  friend bool operator==(const MinimizeStep&, const MinimizeStep&) = default;
};

struct MinimizeTrace {
  MacroState initial;
  std::vector<MinimizeStep> steps;
  MacroState final_state;
  CaseLabel label = CaseLabel::mixed;

  friend bool operator==(const MinimizeTrace&, const MinimizeTrace&) = default;
};

using CoordinateOrder = std::array<int, 3>;
inline constexpr CoordinateOrder kProofOrder = {3, 2, 1};

/// Lowers each z_i in `order` to the smallest value keeping z_i >= 0 and
/// the constraint satisfied, with the other coordinates held fixed. Only
/// coordinates that actually move produce a step. Throws PreconditionError
/// when some p_i is zero, some z_i is negative, the state is infeasible or
/// `order` is not a permutation of {1, 2, 3}.
MinimizeTrace greedy_minimize_z(const MacroState& state, CoordinateOrder order = kProofOrder);

struct CaseClassification {
  CaseLabel label = CaseLabel::mixed;
  /// permutation[j] is the original 1-based index moved to canonical slot j+1.
  std::array<int, 3> permutation = {1, 2, 3};
  Rational closed_form_value;
};

/// Maps a vertex (every z_i in {0, -p_i}) onto one of the four canonical
/// cases and evaluates that case's closed form. Throws PreconditionError when
/// the state is not a vertex or has z_i = -p_i with -p_i < 0.
CaseClassification case_classify(const MacroState& state);

struct SharpnessWitness {
  Rational constant;
  Triple b;
  Triple k;
  Rational value;
};

/// For C > 1/2: b = (1,1,1), k = (0,0,k3) with the smallest positive integer
/// k3 making the reduced difference negative, and the value of the
/// parametric k-form there. Throws PreconditionError for C <= 1/2.
SharpnessWitness sharpness_witness(const Rational& constant);

struct FuzzSummary {
  std::uint64_t samples = 0;
  std::uint64_t negative_product_samples = 0;
  std::uint64_t failed_samples = 0;
  std::uint64_t monotonicity_failures = 0;
  std::uint64_t vertex_failures = 0;
  std::uint64_t negative_d_failures = 0;
  std::uint64_t closed_form_failures = 0;
  /// Case (iv) reached with p1p2p3 < 0, which feasibility rules out.
  std::uint64_t case_iv_fatal = 0;
  /// p1p2p3 > 0 but d at z = 0 negative.
  std::uint64_t positive_branch_failures = 0;
  /// Cases reached by the greedy minimizer.
  std::array<std::uint64_t, 4> case_counts = {0, 0, 0, 0};
  /// Drawn states that already were vertices; these are classified too and
  /// cover cases the greedy path never ends in.
  std::uint64_t initial_vertex_samples = 0;
  std::array<std::uint64_t, 4> initial_vertex_case_counts = {0, 0, 0, 0};

  std::uint64_t passed() const { return samples - failed_samples; }
};

/// Random feasible states with nonzero p: minimize, classify, and check the
/// trace. With `negative_product_only` every state has p1p2p3 < 0.
FuzzSummary minimize_fuzz(const SearchConfig& cfg, bool negative_product_only = true,
                          CoordinateOrder order = kProofOrder);

/// Random state used by minimize_fuzz for sample `index`.
MacroState fuzz_state(const SearchConfig& cfg, std::uint64_t index, bool negative_product_only);

}  // namespace macrocheck::explore
