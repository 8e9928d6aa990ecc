// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "macrocheck/corpus.hpp"
#include "macrocheck/explorer.hpp"
#include "macrocheck/verifier.hpp"
#include "test_support.hpp"

namespace mc = macrocheck;
using mc::Polynomial;
using mc::Rational;
using mc::SplitMix64;
using mc::Substitution;

namespace {

using Clock = std::chrono::steady_clock;
using Images = std::map<std::string, Polynomial, std::less<>>;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CliRun {
  int code = -1;
  nlohmann::json manifest;
};

CliRun run_cli(std::vector<std::string> args) {
  const auto path =
      (std::filesystem::temp_directory_path() / "macrocheck_acceptance.json").string();
  std::filesystem::remove(path);
  args.insert(args.begin(), "macrocheck");
  args.push_back("--json");
  args.push_back(path);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = mc::cli::run(args, out, err);
  if (std::filesystem::exists(path)) r.manifest = nlohmann::json::parse(mc::testing::read_file(path));
  std::filesystem::remove(path);
  return r;
}

// A single verifier check with a wall-clock bound (0 = unbounded).
std::string check_verified(mc::verify::CheckId id, double bound_s) {
  const auto start = Clock::now();
  const auto r = mc::verify::run_check(id);
  const double t = seconds_since(start);
  if (r.status != mc::verify::Status::verified) {
    return std::string(mc::verify::to_string(r.status)) + " " + r.error_message +
           (r.witness ? *r.witness : std::string());
  }
  if (bound_s > 0 && t >= bound_s) return "took " + std::to_string(t) + " s";
  return {};
}

std::string key_identity() {
  // Degree 12 in 6 variables on both sides.
  const auto ids = mc::verify::identities_for(mc::verify::CheckId::key_identity);
  for (const auto& id : ids) {
    if (id.lhs.vars().size() != 6 || id.lhs.total_degree() != 12) return "unexpected shape";
  }
  const auto r = run_cli({"verify", "--check", "key-identity"});
  if (r.code != mc::cli::kPass || r.manifest["reports"][0]["status"] != "verified") return "cli";
  return check_verified(mc::verify::CheckId::key_identity, 10.0);
}

std::string k_equivalence() {
  const auto ineq = mc::corpus::build_inequality();
  const Polynomial through = substitute(ineq.d_tilde, mc::corpus::build_k_substitution());
  if (!(through - mc::corpus::build_k_form(false)).is_zero()) return "difference nonzero";
  return check_verified(mc::verify::CheckId::k_equivalence, 0);
}

std::string case_formulas() {
  if (auto e = check_verified(mc::verify::CheckId::case_formulas, 0); !e.empty()) return e;
  // Independent discriminant: d at z=(-p1,-p2,0), read as a quadratic in p3
  // from the direct evaluator at p3 = 0, 1, -1.
  for (std::uint64_t n = 0; n < 200; ++n) {
    auto rng = SplitMix64::for_sample(91, n);
    const auto v = mc::testing::random_point(rng, 2);
    const Rational p1 = v[0];
    const Rational p2 = v[1];
    auto f = [&](const Rational& p3) { return mc::testing::direct_d({p1, p2, p3}, {-p1, -p2, Rational(0)}); };
    const Rational f0 = f(Rational(0));
    const Rational fp = f(Rational(1));
    const Rational fm = f(Rational(-1));
    const Rational a = (fp + fm) / Rational(2) - f0;
    const Rational b = (fp - fm) / Rational(2);
    const Rational disc = b * b - Rational(4) * a * f0;
    const Rational expected = -(p1 * p2 * (Rational(4) * p1 * p1 + Rational(7) * p1 * p2 + Rational(4) * p2 * p2));
    if (disc != expected) return "discriminant mismatch at sample " + std::to_string(n);
  }
  return {};
}

std::string sharpness() {
  if (auto e = check_verified(mc::verify::CheckId::sharpness_reduction, 0); !e.empty()) return e;
  const nlohmann::json ones = {"1", "1", "1"};
  auto r = run_cli({"sharpness", "--c", "1"});
  if (r.code != mc::cli::kPass) return "C=1 exit " + std::to_string(r.code);
  auto w = r.manifest["reports"][0];
  if (w["value"] != "-1" || w["b"] != ones || w["k"][2] != "3") return "C=1 witness " + w.dump();
  r = run_cli({"sharpness", "--c", "3/5"});
  w = r.manifest["reports"][0];
  if (r.code != mc::cli::kPass || w["value"] != "-9/5" || w["k"][2] != "7") return "C=3/5 witness " + w.dump();
  r = run_cli({"sharpness", "--c", "1/2"});
  if (r.code == mc::cli::kPass || r.manifest["status"] != "error") return "C=1/2 did not error";
  return {};
}

std::string search() {
  const auto start = Clock::now();
  const auto r = run_cli({"search", "--target", "d-tilde", "--samples", "100000", "--seed", "42"});
  const double t = seconds_since(start);
  if (r.code != mc::cli::kPass) return "exit " + std::to_string(r.code);
  const auto& rep = r.manifest["reports"][0];
  if (rep["samples_run"] != 100000) return "samples_run";
  if (rep["counterexample_count"] != 0) return "counterexamples found";
  if (Rational::parse(rep["min_value"].get<std::string>()).sign() < 0) return "negative minimum";
  if (rep["probe"]["value"] != "0" || rep["probe"]["point"] != nlohmann::json(std::vector<std::string>(6, "1"))) {
    return "probe " + rep["probe"].dump();
  }
  if (t >= 60.0) return "took " + std::to_string(t) + " s";
  return {};
}

std::string fuzz() {
  const auto start = Clock::now();
  const auto r = run_cli({"fuzz", "--samples", "10000", "--seed", "1"});
  const double t = seconds_since(start);
  const auto& s = r.manifest["reports"][0];
  if (r.code != mc::cli::kPass || s["failed"] != 0) return "failures " + s.dump();
  if (s["samples"] != 10000 || s["negative_product_samples"] != 10000) return "sample counts";
  if (t >= 30.0) return "took " + std::to_string(t) + " s";
  return {};
}

std::string mutations() {
  for (const auto id : mc::verify::kAllChecks) {
    std::size_t made = 0;
    for (const auto& identity : mc::verify::identities_for(id)) {
      for (const auto& m : mc::verify::coefficient_mutations(identity, 10)) {
        const mc::verify::Identity one[] = {m};
        const auto r = mc::verify::check_identities("mutant", one);
        if (r.status != mc::verify::Status::refuted) {
          return std::string(mc::verify::check_name(id)) + ": mutant of " + identity.label + " not refuted";
        }
        ++made;
      }
    }
    if (made < 10) return std::string(mc::verify::check_name(id)) + ": too few mutants";
  }
  return {};
}

std::string ring_axioms() {
  for (std::uint64_t n = 0; n < 1000; ++n) {
    auto rng = SplitMix64::for_sample(501, n);
    const auto vars = mc::testing::small_vars(1 + rng.below(4));
    const auto p = mc::testing::random_polynomial(rng, vars, 5);
    const auto q = mc::testing::random_polynomial(rng, vars, 5);
    const auto r = mc::testing::random_polynomial(rng, vars, 5);
    const Polynomial zero(vars);
    const auto one = Polynomial::constant(vars, Rational(1));
    const bool ok = (p + q) + r == p + (q + r) && p + q == q + p && (p * q) * r == p * (q * r) &&
                    p * q == q * p && p * (q + r) == p * q + p * r && p + zero == p && p * one == p &&
                    (p - p).is_zero() && p * zero == zero;
    if (!ok) return "triple " + std::to_string(n);
  }
  return {};
}

std::string homomorphism() {
  const mc::VarSet dst({"t1", "t2", "t3"});
  for (std::uint64_t n = 0; n < 500; ++n) {
    auto rng = SplitMix64::for_sample(502, n);
    const auto src = mc::testing::small_vars(1 + rng.below(4));
    Images images;
    for (const auto& name : src.names()) images.emplace(name, mc::testing::random_polynomial(rng, dst, 3));
    const Substitution s(src, dst, images);
    const auto p = mc::testing::random_polynomial(rng, src, 4);
    const auto q = mc::testing::random_polynomial(rng, src, 4);
    if (substitute(p * q, s) != substitute(p, s) * substitute(q, s) ||
        substitute(p + q, s) != substitute(p, s) + substitute(q, s)) {
      return "homomorphism case " + std::to_string(n);
    }
    const auto x = mc::testing::random_point(rng, dst.size());
    std::vector<Rational> y;
    for (const auto& name : src.names()) y.push_back(s.image(name).evaluate(x));
    if (substitute(p, s).evaluate(x) != p.evaluate(y)) return "commutation case " + std::to_string(n);
  }
  return {};
}

std::string d_tilde_invariances() {
  const auto d_tilde = mc::corpus::build_inequality().d_tilde;
  if (d_tilde.homogeneous_degree() != 6U) return "not homogeneous of degree 6";
  for (std::uint64_t n = 0; n < 200; ++n) {
    auto rng = SplitMix64::for_sample(503, n);
    const auto v = mc::testing::random_point(rng, 6);
    const Rational t = mc::testing::random_point(rng, 1)[0];
    std::vector<Rational> scaled;
    for (const auto& x : v) scaled.push_back(t * x);
    if (d_tilde.evaluate(scaled) != t.pow(6) * d_tilde.evaluate(v)) return "scaling sample " + std::to_string(n);
  }
  const auto& ab = mc::corpus::ab_alphabet();
  std::array<int, 3> perm = {1, 2, 3};
  do {
    Images images;
    for (const char* stem : {"a", "b"}) {
      for (int i = 0; i < 3; ++i) {
        images.emplace(stem + std::to_string(i + 1),
                       Polynomial::variable(ab, stem + std::to_string(perm[static_cast<std::size_t>(i)])));
      }
    }
    if (substitute(d_tilde, Substitution(ab, ab, images)) != d_tilde) return "index permutation";
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int i = 1; i <= 3; ++i) {
    const std::string a = "a" + std::to_string(i);
    const std::string b = "b" + std::to_string(i);
    const auto s = Substitution::partial(ab, {{a, -Polynomial::variable(ab, a)}, {b, -Polynomial::variable(ab, b)}});
    if (substitute(d_tilde, s) != d_tilde) return "sign pair " + std::to_string(i);
  }
  return {};
}

std::string properties() {
  for (auto* f : {ring_axioms, homomorphism, d_tilde_invariances}) {
    if (auto e = f(); !e.empty()) return e;
  }
  return {};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {"key identity expands to zero in under 10 s", key_identity},
      {"Lagrange identity in under 1 s", [] { return check_verified(mc::verify::CheckId::lagrange, 1.0); }},
      {"constraint factorization",
       [] { return check_verified(mc::verify::CheckId::constraint_factorization, 0); }},
      {"k-form equivalence", k_equivalence},
      {"case formulas and case-(ii) discriminant", case_formulas},
      {"sharpness reduction and witnesses", sharpness},
      {"d-tilde search, 100000 samples, seed 42", search},
      {"greedy minimizer fuzz, 10000 states", fuzz},
      {"single-coefficient mutations refute", mutations},
      {"ring, substitution and d-tilde property suites", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    std::string error;
    try {
      error = criteria[i].run();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double t = seconds_since(start);
    std::printf("[%s] %zu. %s (%.2f s)%s%s\n", error.empty() ? "PASS" : "FAIL", i + 1, criteria[i].name, t,
                error.empty() ? "" : " -- ", error.c_str());
    if (!error.empty()) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
