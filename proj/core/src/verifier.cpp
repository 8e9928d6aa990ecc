#include "macrocheck/verifier.hpp"

#include <chrono>
#include <future>

#include "macrocheck/corpus.hpp"
#include "macrocheck/errors.hpp"
#include "macrocheck/random.hpp"
#include "macrocheck/substitution.hpp"

namespace macrocheck::verify {

namespace {

using corpus::macro_alphabet;

Polynomial mvar(const std::string& name) { return Polynomial::variable(macro_alphabet(), name); }

std::vector<Identity> lagrange_identities() {
  auto forms = corpus::build_lagrange_and_cs();
  return {{"lagrange", std::move(forms.lagrange_lhs), std::move(forms.lagrange_rhs)}};
}

std::vector<Identity> key_identities() {
  const auto& ab = corpus::ab_alphabet();
  const Polynomial y_product =
      Polynomial::monomial(ab, Rational(1), {{"b1", 2}, {"b2", 2}, {"b3", 2}});
  const Polynomial d_image = substitute(corpus::build_d(), corpus::build_macro_substitution());
  return {{"y1*y2*y3*d_tilde = d", y_product * corpus::build_inequality().d_tilde, d_image}};
}

std::vector<Identity> constraint_identities() {
  const auto& ab = corpus::ab_alphabet();
  const Polynomial image = substitute(corpus::build_constraint(), corpus::build_macro_substitution());
  const Polynomial square = Polynomial::monomial(
      ab, Rational(1), {{"a1", 2}, {"a2", 2}, {"a3", 2}, {"b1", 2}, {"b2", 2}, {"b3", 2}});
  return {{"(p1+z1)(p2+z2)(p3+z3) = (a1a2a3b1b2b3)^2", image, square}};
}

std::vector<Identity> k_identities() {
  return {{"d_tilde(a=k*b) = d_k",
           substitute(corpus::build_inequality().d_tilde, corpus::build_k_substitution()),
           corpus::build_k_form(false)}};
}

// d with z_i replaced by -p_i for i in `pinned` and by 0 otherwise.
Polynomial d_at_vertex(const Polynomial& poly, std::initializer_list<int> pinned) {
  std::map<std::string, Polynomial, std::less<>> images;
  for (int i = 1; i <= 3; ++i) images.emplace("z" + std::to_string(i), Polynomial(macro_alphabet()));
  for (int i : pinned) images.insert_or_assign("z" + std::to_string(i), -mvar("p" + std::to_string(i)));
  return substitute(poly, Substitution::partial(macro_alphabet(), images));
}

std::vector<Identity> case_identities() {
  const Polynomial d = corpus::build_d();
  const Polynomial p1 = mvar("p1");
  const Polynomial p2 = mvar("p2");
  const Polynomial p3 = mvar("p3");

  std::vector<Identity> out;
  out.push_back({"case (i): d at z=-p", d_at_vertex(d, {1, 2, 3}), -((p1 + p2) * (p1 + p3) * (p2 + p3))});

  const Polynomial case_ii = d_at_vertex(d, {1, 2});
  out.push_back({"case (ii): d at z=(-p1,-p2,0)", case_ii,
                 -(p1 * p2 * (p1 + p2)) - p1 * p2 * p3 + (-p1 - p2) * p3 * p3});

  // Quadratic in p3 read off by coefficient extraction.
  auto coeffs = case_ii.coefficients_in("p3");
  out.push_back({"case (ii): degree in p3",
                 Polynomial::constant(macro_alphabet(), Rational(static_cast<long>(coeffs.size()) - 1)),
                 Polynomial::constant(macro_alphabet(), Rational(2))});
  coeffs.resize(3, Polynomial(macro_alphabet()));
  Polynomial discriminant = coeffs[1] * coeffs[1] - Rational(4) * coeffs[2] * coeffs[0];
  out.push_back({"case (ii): discriminant in p3", std::move(discriminant),
                 -(p1 * p2 * (Rational(4) * p1 * p1 + Rational(7) * p1 * p2 + Rational(4) * p2 * p2))});

  out.push_back({"case (iii): d at z=(-p1,0,0)", d_at_vertex(d, {1}), -(p1 * (p2 * p2 + p3 * p3))});
  out.push_back({"case (iv): constraint at z=0", d_at_vertex(corpus::build_constraint(), {}), p1 * p2 * p3});
  return out;
}

std::vector<Identity> sharpness_identities() {
  const auto& vars = corpus::kb_parametric_alphabet();
  const Polynomial zero(vars);
  const Polynomial reduced = substitute(corpus::build_k_form(true),
                                        Substitution::partial(vars, {{"k1", zero}, {"k2", zero}}));
  auto v = [&](const char* name) { return Polynomial::variable(vars, name); };
  const Polynomial b1s = v("b1") * v("b1");
  const Polynomial b2s = v("b2") * v("b2");
  const Polynomial b3s = v("b3") * v("b3");
  const Polynomial one = Polynomial::constant(vars, Rational(1));
  const Polynomial expected = (one - Rational(2) * v("Cc")) * b1s * b2s * b3s * v("k3") * v("k3") +
                              (b1s + b2s) * (b1s + b3s) * (b2s + b3s);
  return {{"d_k(k1=k2=0) with constant Cc", reduced, expected}};
}

std::vector<Identity> weak_identities() {
  const auto& ab = corpus::ab_alphabet();
  std::vector<Identity> out;
  const Polynomial dropped = corpus::build_weak_difference() - corpus::build_inequality().d_tilde;
  Polynomial summands(ab);
  for (int i = 1; i <= 3; ++i) {
    const std::string bi = "b" + std::to_string(i);
    const Polynomial cross = corpus::cross_term(i);
    summands += Rational(1, 2) * Polynomial::monomial(ab, Rational(1), {{bi, 2}}) * cross * cross;
    // cross_i = u - v with u, v monomials, so cross_i^2 = u^2 - 2uv + v^2.
    if (cross.term_count() != 2) {
      out.push_back({"cross " + std::to_string(i) + " is a binomial", cross, Polynomial(ab)});
      continue;
    }
    auto it = cross.terms().begin();
    const Polynomial u = Polynomial::normalize(ab, {*it});
    const Polynomial w = Polynomial::normalize(ab, {*std::next(it)});
    out.push_back({"cross " + std::to_string(i) + " squared is a perfect-square trinomial",
                   cross * cross, u * u + Rational(2) * u * w + w * w});
  }
  out.insert(out.begin(), Identity{"weak - d_tilde = 1/2 sum b_i^2 cross_i^2", dropped, summands});
  return out;
}

Monomial nth_monomial(const Polynomial& p, std::size_t n) {
  auto it = p.terms().begin();
  std::advance(it, static_cast<std::ptrdiff_t>(n % p.term_count()));
  return it->first;
}

Rational mutated_coefficient(const Rational& c, std::size_t variant) {
  switch (variant % 6) {
    case 0: return c + Rational(1);
    case 1: return c * Rational(2);
    case 2: return c - Rational(1);
    case 3: return c + Rational(1, 2);
    case 4: return c * Rational(3);
    default: return c - Rational(1, 3);
  }
}

Polynomial with_changed_coefficient(const Polynomial& p, std::size_t term, std::size_t variant) {
  if (p.is_zero()) {
    // Only mutation available: introduce a constant term.
    return p + Polynomial::constant(p.vars(), Rational(static_cast<long>(variant + 1)));
  }
  const Monomial m = nth_monomial(p, term);
  const Rational old = p.coefficient(m);
  Rational updated = mutated_coefficient(old, variant);
  if (updated == old) updated += Rational(1);
  return p + Polynomial::normalize(p.vars(), {{m, updated - old}});
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    default: return "error";
  }
}

std::string_view check_name(CheckId id) {
  switch (id) {
    case CheckId::lagrange: return "lagrange";
    case CheckId::key_identity: return "key-identity";
    case CheckId::constraint_factorization: return "constraint-factorization";
    case CheckId::k_equivalence: return "k-equivalence";
    case CheckId::case_formulas: return "case-formulas";
    case CheckId::sharpness_reduction: return "sharpness-reduction";
    case CheckId::weak_implication: return "weak-implication";
  }
  return "unknown";
}

std::optional<CheckId> parse_check_name(std::string_view name) {
  for (const CheckId id : kAllChecks) {
    if (check_name(id) == name) return id;
  }
  return std::nullopt;
}

std::vector<Identity> identities_for(CheckId id) {
  switch (id) {
    case CheckId::lagrange: return lagrange_identities();
    case CheckId::key_identity: return key_identities();
    case CheckId::constraint_factorization: return constraint_identities();
    case CheckId::k_equivalence: return k_identities();
    case CheckId::case_formulas: return case_identities();
    case CheckId::sharpness_reduction: return sharpness_identities();
    case CheckId::weak_implication: return weak_identities();
  }
  throw PreconditionError("unknown check id");
}

Report check_identities(std::string name, std::span<const Identity> identities) {
  Report report;
  report.check_name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    report.status = Status::verified;
    for (const Identity& identity : identities) {
      report.term_count += identity.lhs.term_count() + identity.rhs.term_count();
      const Polynomial difference = identity.lhs - identity.rhs;
      if (!difference.is_zero() && !report.witness) {
        report.status = Status::refuted;
        report.witness = identity.label + ": " + difference.str();
      }
    }
  } catch (const std::exception& e) {
    report.status = Status::error;
    report.witness.reset();
    report.error_message = e.what();
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

Report run_check(CheckId id) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    const auto identities = identities_for(id);
    report = check_identities(std::string(check_name(id)), identities);
  } catch (const std::exception& e) {
    report.check_name = std::string(check_name(id));
    report.status = Status::error;
    report.error_message = e.what();
  }
  // Include corpus construction in the timing.
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

Report verify_lagrange() { return run_check(CheckId::lagrange); }
Report verify_key_identity() { return run_check(CheckId::key_identity); }
Report verify_constraint_factorization() { return run_check(CheckId::constraint_factorization); }
Report verify_k_equivalence() { return run_check(CheckId::k_equivalence); }
Report verify_case_formulas() { return run_check(CheckId::case_formulas); }
Report verify_sharpness_reduction() { return run_check(CheckId::sharpness_reduction); }
Report verify_weak_implication() { return run_check(CheckId::weak_implication); }

std::vector<Report> verify_all(bool parallel) {
  std::vector<Report> reports;
  if (!parallel) {
    for (const CheckId id : kAllChecks) reports.push_back(run_check(id));
    return reports;
  }
  std::vector<std::future<Report>> pending;
  for (const CheckId id : kAllChecks) {
    pending.push_back(std::async(std::launch::async, [id] { return run_check(id); }));
  }
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

std::vector<Identity> coefficient_mutations(const Identity& identity, std::size_t count) {
  std::vector<Identity> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Identity mutant = identity;
    const std::size_t term = n / 2;
    const std::size_t variant = n / 2 + n % 2;
    if (n % 2 == 0) {
      mutant.lhs = with_changed_coefficient(identity.lhs, term, variant);
      mutant.label += " [lhs mutant " + std::to_string(n) + "]";
    } else {
      mutant.rhs = with_changed_coefficient(identity.rhs, term, variant);
      mutant.label += " [rhs mutant " + std::to_string(n) + "]";
    }
    out.push_back(std::move(mutant));
  }
  return out;
}

std::size_t cross_validate(const Identity& identity, std::size_t count, std::uint64_t seed) {
  if (!(identity.lhs.vars() == identity.rhs.vars())) {
    throw StructuralError("cross_validate: sides over different variable sets");
  }
  const RationalDraw draw{.numerator_bound = 50, .denominator_bound = 12,
                          .zero_probability = Rational(1, 16)};
  const std::size_t nvars = identity.lhs.vars().size();
  std::size_t disagreements = 0;
  std::vector<Rational> point(nvars);
  for (std::size_t n = 0; n < count; ++n) {
    auto rng = SplitMix64::for_sample(seed, n);
    for (auto& value : point) value = draw_rational(rng, draw);
    if (identity.lhs.evaluate(point) != identity.rhs.evaluate(point)) ++disagreements;
  }
  return disagreements;
}

}  // namespace macrocheck::verify
