#include "macrocheck/explorer.hpp"

#include <algorithm>
#include <thread>

#include "macrocheck/corpus.hpp"
#include "macrocheck/errors.hpp"
#include "macrocheck/random.hpp"
#include "macrocheck/substitution.hpp"

namespace macrocheck::explore {

namespace {

const Polynomial& d_polynomial() {
  static const Polynomial d = corpus::build_d();
  return d;
}

const Polynomial& parametric_k_form() {
  static const Polynomial dk = corpus::build_k_form(true);
  return dk;
}

Rational other_factors(const MacroState& s, std::size_t skip) {
  Rational out(1);
  for (std::size_t j = 0; j < 3; ++j) {
    if (j != skip) out *= s.p[j] + s.z[j];
  }
  return out;
}

void require_valid_order(const CoordinateOrder& order) {
  std::array<int, 3> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) {
    throw PreconditionError("coordinate order must be a permutation of 1, 2, 3");
  }
}

struct Partial {
  std::optional<SamplePoint> best;
  std::uint64_t counterexample_count = 0;
  std::vector<SamplePoint> counterexamples;
  std::uint64_t equality_count = 0;
  std::vector<SamplePoint> equality_points;
};

Partial search_range(const Polynomial& poly, const SearchConfig& cfg, std::uint64_t lo,
                     std::uint64_t hi) {
  const RationalDraw draw{cfg.numerator_bound, cfg.denominator_bound, cfg.zero_probability};
  Partial out;
  std::vector<Rational> coords(poly.vars().size());
  for (std::uint64_t n = lo; n < hi; ++n) {
    auto rng = SplitMix64::for_sample(cfg.seed, n);
    for (auto& c : coords) c = draw_rational(rng, draw);
    Rational value = poly.evaluate(coords);
    const int sign = value.sign();
    auto make_point = [&] { return SamplePoint{static_cast<std::int64_t>(n), coords, value}; };
    if (sign < 0) {
      ++out.counterexample_count;
      if (out.counterexamples.size() < cfg.max_recorded) out.counterexamples.push_back(make_point());
    } else if (sign == 0) {
      ++out.equality_count;
      if (out.equality_points.size() < cfg.max_recorded) out.equality_points.push_back(make_point());
    }
    if (!out.best || value < out.best->value) out.best = make_point();
  }
  return out;
}

void append_capped(std::vector<SamplePoint>& into, std::vector<SamplePoint>&& from, std::size_t cap) {
  for (auto& p : from) {
    if (into.size() >= cap) break;
    into.push_back(std::move(p));
  }
}

Rational case_formula(CaseLabel label, const Triple& q) {
  switch (label) {
    case CaseLabel::i: return -((q[0] + q[1]) * (q[0] + q[2]) * (q[1] + q[2]));
    case CaseLabel::ii:
      return -(q[0] * q[1] * (q[0] + q[1])) - q[0] * q[1] * q[2] + (-q[0] - q[1]) * q[2] * q[2];
    case CaseLabel::iii: return -(q[0] * (q[1] * q[1] + q[2] * q[2]));
    case CaseLabel::iv: return q[0] * q[1] * q[2];
    default: throw PreconditionError("no closed form for a mixed vertex");
  }
}

// Every z_i is 0 or a positive -p_i.
bool is_vertex(const MacroState& s) {
  for (std::size_t i = 0; i < 3; ++i) {
    const bool at_zero = s.z[i].is_zero();
    const bool at_pin = s.z[i] == -s.p[i] && (-s.p[i]).sign() > 0;
    if (!at_zero && !at_pin) return false;
  }
  return true;
}

Rational nonzero_draw(SplitMix64& rng, const SearchConfig& cfg) {
  const RationalDraw draw{cfg.numerator_bound, cfg.denominator_bound, Rational()};
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rational r = draw_rational(rng, draw);
    if (!r.is_zero()) return r;
  }
  return Rational(1);
}

}  // namespace

Triple MacroState::c() const {
  return {p[1] * p[1] + p[1] * p[2] + p[2] * p[2], p[0] * p[0] + p[0] * p[2] + p[2] * p[2],
          p[1] * p[1] + p[1] * p[0] + p[0] * p[0]};
}

Rational MacroState::constraint_value() const {
  return (p[0] + z[0]) * (p[1] + z[1]) * (p[2] + z[2]);
}

Rational MacroState::d_value() const {
  const std::array<Rational, 6> values = {p[0], p[1], p[2], z[0], z[1], z[2]};
  return d_polynomial().evaluate(values);
}

std::string_view target_name(Target t) {
  switch (t) {
    case Target::d_tilde: return "d-tilde";
    case Target::d_k: return "d-k";
    case Target::weak_difference: return "weak";
    case Target::cs_diff: return "cs";
  }
  return "unknown";
}

std::optional<Target> parse_target(std::string_view name) {
  for (const Target t : {Target::d_tilde, Target::d_k, Target::weak_difference, Target::cs_diff}) {
    if (target_name(t) == name) return t;
  }
  return std::nullopt;
}

void validate(const SearchConfig& cfg) {
  if (cfg.sample_count == 0) throw PreconditionError("sample count must be positive");
  validate(RationalDraw{cfg.numerator_bound, cfg.denominator_bound, cfg.zero_probability});
}

Polynomial search_polynomial(Target target, const Rational& constant) {
  switch (target) {
    case Target::d_tilde: return corpus::build_inequality().d_tilde;
    case Target::weak_difference: return corpus::build_weak_difference();
    case Target::cs_diff: return corpus::build_lagrange_and_cs().cs_diff;
    case Target::d_k: {
      const VarSet& from = corpus::kb_parametric_alphabet();
      const VarSet& to = corpus::kb_alphabet();
      std::map<std::string, Polynomial, std::less<>> images;
      for (const auto& name : to.names()) images.emplace(name, Polynomial::variable(to, name));
      images.emplace("Cc", Polynomial::constant(to, constant));
      return substitute(parametric_k_form(), Substitution(from, to, images));
    }
  }
  throw PreconditionError("unknown search target");
}

SearchReport random_search(Target target, const SearchConfig& cfg, const Rational& constant) {
  validate(cfg);
  const Polynomial poly = search_polynomial(target, constant);

  SearchReport report;
  report.target = target;
  report.constant = constant;
  report.variables = poly.vars().names();
  report.seed = cfg.seed;
  report.samples_run = cfg.sample_count;

  std::vector<Rational> ones(poly.vars().size(), Rational(1));
  report.probe = SamplePoint{-1, ones, poly.evaluate(ones)};

  unsigned workers = cfg.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : cfg.threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.sample_count));
  std::vector<Partial> partials(workers);
  const std::uint64_t chunk = (cfg.sample_count + workers - 1) / workers;
  auto range_of = [&](unsigned w) {
    const std::uint64_t lo = std::min(cfg.sample_count, chunk * w);
    return std::pair{lo, std::min(cfg.sample_count, lo + chunk)};
  };
  if (workers == 1) {
    partials[0] = search_range(poly, cfg, 0, cfg.sample_count);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const auto [lo, hi] = range_of(w);
      pool.emplace_back([&, w, lo = lo, hi = hi] { partials[w] = search_range(poly, cfg, lo, hi); });
    }
  }

  // Workers cover ascending index ranges, so concatenation keeps index order.
  report.argmin = report.probe;
  for (auto& part : partials) {
    report.counterexample_count += part.counterexample_count;
    report.equality_count += part.equality_count;
    append_capped(report.counterexamples, std::move(part.counterexamples), cfg.max_recorded);
    append_capped(report.equality_points, std::move(part.equality_points), cfg.max_recorded);
    if (part.best && part.best->value < report.argmin.value) report.argmin = std::move(*part.best);
  }
  report.min_value = report.argmin.value;
  return report;
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::i: return "i";
    case CaseLabel::ii: return "ii";
    case CaseLabel::iii: return "iii";
    case CaseLabel::iv: return "iv";
    case CaseLabel::mixed: return "mixed";
  }
  return "mixed";
}

MinimizeTrace greedy_minimize_z(const MacroState& state, CoordinateOrder order) {
  require_valid_order(order);
  for (std::size_t i = 0; i < 3; ++i) {
    if (state.p[i].is_zero()) throw PreconditionError("greedy minimization needs every p_i nonzero");
    if (state.z[i].sign() < 0) throw PreconditionError("z_i must be nonnegative");
  }
  if (!state.feasible()) throw PreconditionError("initial state violates the product constraint");

  MinimizeTrace trace;
  trace.initial = state;
  MacroState current = state;
  Rational d = current.d_value();
  for (const int coordinate : order) {
    const auto i = static_cast<std::size_t>(coordinate - 1);
    const Rational rest = other_factors(current, i);
    // rest > 0 forces p_i + z_i >= 0; rest < 0 forces p_i + z_i <= 0, which
    // z_i = 0 keeps because the state is feasible; rest = 0 leaves z_i free.
    Rational lowest;
    if (rest.sign() > 0 && current.p[i].sign() < 0) lowest = -current.p[i];
    if (lowest == current.z[i]) continue;

    MinimizeStep step;
    step.coordinate = coordinate;
    step.old_value = current.z[i];
    step.new_value = lowest;
    step.d_before = d;
    current.z[i] = lowest;
    d = current.d_value();
    step.d_after = d;
    trace.steps.push_back(std::move(step));
  }
  trace.final_state = current;
  try {
    trace.label = case_classify(current).label;
  } catch (const PreconditionError&) {
    trace.label = CaseLabel::mixed;
  }
  return trace;
}

CaseClassification case_classify(const MacroState& state) {
  std::vector<int> pinned;
  std::vector<int> free;
  for (std::size_t i = 0; i < 3; ++i) {
    const int index = static_cast<int>(i) + 1;
    if (state.z[i].is_zero()) {
      free.push_back(index);
    } else if (state.z[i] == -state.p[i]) {
      if (state.z[i].sign() < 0) {
        throw PreconditionError("invalid vertex: z_" + std::to_string(index) + " = -p_" +
                                std::to_string(index) + " requires -p_" + std::to_string(index) +
                                " > 0");
      }
      pinned.push_back(index);
    } else {
      throw PreconditionError("not a vertex: z_" + std::to_string(index) + " is neither 0 nor -p_" +
                              std::to_string(index));
    }
  }

  CaseClassification out;
  switch (pinned.size()) {
    case 3: out.label = CaseLabel::i; break;
    case 2: out.label = CaseLabel::ii; break;
    case 1: out.label = CaseLabel::iii; break;
    default: out.label = CaseLabel::iv; break;
  }
  std::size_t slot = 0;
  for (int idx : pinned) out.permutation[slot++] = idx;
  for (int idx : free) out.permutation[slot++] = idx;

  Triple q;
  for (std::size_t j = 0; j < 3; ++j) q[j] = state.p[static_cast<std::size_t>(out.permutation[j] - 1)];
  out.closed_form_value = case_formula(out.label, q);
  return out;
}

SharpnessWitness sharpness_witness(const Rational& constant) {
  if (constant <= Rational(1, 2)) {
    throw PreconditionError("sharpness witness needs C > 1/2; none exists for C = " + constant.str());
  }
  // At b = (1,1,1), k = (0,0,k3) the difference is (1-2C) k3^2 + 8.
  const Rational threshold = Rational(8) / (Rational(2) * constant - Rational(1));
  const BigInt k3 = isqrt(threshold.floor()) + 1;

  SharpnessWitness w;
  w.constant = constant;
  w.b = {Rational(1), Rational(1), Rational(1)};
  w.k = {Rational(0), Rational(0), Rational(k3)};
  const std::array<Rational, 7> point = {w.k[0], w.k[1], w.k[2], w.b[0], w.b[1], w.b[2], constant};
  w.value = parametric_k_form().evaluate(point);
  return w;
}

MacroState fuzz_state(const SearchConfig& cfg, std::uint64_t index, bool negative_product_only) {
  auto rng = SplitMix64::for_sample(cfg.seed, index);
  MacroState s;
  for (auto& p : s.p) p = nonzero_draw(rng, cfg);
  if (negative_product_only && (s.p[0] * s.p[1] * s.p[2]).sign() > 0) {
    auto& flipped = s.p[rng.below(3)];
    flipped = -flipped;
  }

  const RationalDraw draw{cfg.numerator_bound, cfg.denominator_bound, cfg.zero_probability};
  for (int attempt = 0; attempt < 16; ++attempt) {
    for (std::size_t i = 0; i < 3; ++i) {
      switch (rng.below(4)) {
        case 0: s.z[i] = Rational(); break;
        case 1: s.z[i] = s.p[i].sign() < 0 ? -s.p[i] : Rational(); break;
        default: s.z[i] = draw_rational(rng, draw).abs(); break;
      }
    }
    if (s.feasible()) return s;
  }
  // Every factor positive.
  for (std::size_t i = 0; i < 3; ++i) {
    if (s.p[i].sign() < 0) s.z[i] = -s.p[i] + Rational(1);
  }
  return s;
}

FuzzSummary minimize_fuzz(const SearchConfig& cfg, bool negative_product_only, CoordinateOrder order) {
  validate(cfg);
  require_valid_order(order);
  FuzzSummary summary;
  for (std::uint64_t n = 0; n < cfg.sample_count; ++n) {
    const MacroState state = fuzz_state(cfg, n, negative_product_only);
    ++summary.samples;
    bool failed = false;
    auto fail = [&](std::uint64_t& counter) {
      ++counter;
      failed = true;
    };

    const int product_sign = (state.p[0] * state.p[1] * state.p[2]).sign();
    if (product_sign < 0) ++summary.negative_product_samples;
    if (product_sign > 0) {
      MacroState at_zero = state;
      at_zero.z = {Rational(), Rational(), Rational()};
      if (at_zero.d_value().sign() < 0) fail(summary.positive_branch_failures);
    }

    if (is_vertex(state)) {
      ++summary.initial_vertex_samples;
      const CaseClassification cls = case_classify(state);
      summary.initial_vertex_case_counts[static_cast<std::size_t>(cls.label)]++;
      if (cls.closed_form_value != state.d_value()) fail(summary.closed_form_failures);
    }

    const MinimizeTrace trace = greedy_minimize_z(state, order);
    for (const auto& step : trace.steps) {
      if (step.d_after > step.d_before) {
        fail(summary.monotonicity_failures);
        break;
      }
    }

    const MacroState& v = trace.final_state;
    const bool vertex_ok = v.feasible() && is_vertex(v);
    if (!vertex_ok) fail(summary.vertex_failures);

    const Rational d_final = v.d_value();
    if (product_sign < 0 && d_final.sign() < 0) fail(summary.negative_d_failures);

    if (vertex_ok) {
      const CaseClassification cls = case_classify(v);
      summary.case_counts[static_cast<std::size_t>(cls.label)]++;
      if (cls.closed_form_value != d_final) fail(summary.closed_form_failures);
      if (cls.label == CaseLabel::iv && product_sign < 0) fail(summary.case_iv_fatal);
    }
    if (failed) ++summary.failed_samples;
  }
  return summary;
}

}  // namespace macrocheck::explore
