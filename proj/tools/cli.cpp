#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "macrocheck/corpus.hpp"
#include "macrocheck/errors.hpp"
#include "macrocheck/explorer.hpp"
#include "macrocheck/json_io.hpp"
#include "macrocheck/verifier.hpp"

#ifndef MACROCHECK_VERSION
#define MACROCHECK_VERSION "dev"
#endif

namespace macrocheck::cli {

namespace {

using nlohmann::json;

struct Outcome {
  json config = json::object();
  json reports = json::array();
  bool pass = true;
};

explore::Triple parse_triple(const std::string& text, const char* flag) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(item);
  if (items.size() != 3 || text.back() == ',') {
    throw StructuralError(std::string(flag) + " expects three comma-separated rationals");
  }
  return {Rational::parse(items[0]), Rational::parse(items[1]), Rational::parse(items[2])};
}

explore::CoordinateOrder parse_order(const std::string& text) {
  std::string digits;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    digits += ch;
  }
  if (digits.size() != 3) throw StructuralError("--order expects a permutation such as 321");
  explore::CoordinateOrder order{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (digits[i] < '1' || digits[i] > '3') throw StructuralError("--order digits must be 1, 2 or 3");
    order[i] = digits[i] - '0';
  }
  return order;
}

std::string format_triple(const explore::Triple& t) {
  return "(" + t[0].str() + ", " + t[1].str() + ", " + t[2].str() + ")";
}

Outcome run_verify(const std::string& check, std::ostream& out) {
  Outcome o;
  std::vector<verify::Report> reports;
  if (check.empty()) {
    o.config["checks"] = "all";
    reports = verify::verify_all();
  } else {
    const auto id = verify::parse_check_name(check);
    if (!id) throw StructuralError("unknown check '" + check + "'");
    o.config["checks"] = check;
    reports.push_back(verify::run_check(*id));
  }
  for (const auto& r : reports) {
    out << r.check_name << ": " << verify::to_string(r.status) << " (" << r.term_count << " terms, "
        << r.elapsed_ms << " ms)\n";
    if (r.witness) out << "  witness: " << *r.witness << '\n';
    if (r.status == verify::Status::error) out << "  error: " << r.error_message << '\n';
    o.pass = o.pass && r.status == verify::Status::verified;
    o.reports.push_back(to_json(r));
  }
  return o;
}

struct SearchArgs {
  std::string target;
  std::string constant;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t num_bound = 10;
  std::uint64_t den_bound = 10;
  std::string zero_prob = "1/16";
  unsigned threads = 0;
  std::size_t max_recorded = 64;
};

Outcome run_search(const SearchArgs& a, std::ostream& out) {
  const auto target = explore::parse_target(a.target);
  if (!target) throw StructuralError("unknown search target '" + a.target + "'");
  if (!a.constant.empty() && *target != explore::Target::d_k) {
    throw StructuralError("--c only applies to --target d-k");
  }
  const Rational constant = a.constant.empty() ? Rational(1, 2) : Rational::parse(a.constant);

  explore::SearchConfig cfg;
  cfg.sample_count = a.samples;
  cfg.seed = a.seed;
  cfg.numerator_bound = a.num_bound;
  cfg.denominator_bound = a.den_bound;
  cfg.zero_probability = Rational::parse(a.zero_prob);
  cfg.threads = a.threads;
  cfg.max_recorded = a.max_recorded;

  Outcome o;
  o.config = {{"target", a.target},       {"samples", a.samples},
              {"seed", a.seed},           {"num_bound", a.num_bound},
              {"den_bound", a.den_bound}, {"zero_prob", cfg.zero_probability.str()},
              {"max_recorded", a.max_recorded}};
  if (*target == explore::Target::d_k) o.config["c"] = constant.str();

  const explore::SearchReport report = explore::random_search(*target, cfg, constant);
  out << "search " << a.target << ": " << report.samples_run << " samples, seed " << report.seed
      << ", min " << report.min_value.str() << " at "
      << (report.argmin.index < 0 ? std::string("probe") : "sample " + std::to_string(report.argmin.index))
      << ", counterexamples " << report.counterexample_count << ", exact zeros "
      << report.equality_count << ", probe value " << report.probe.value.str() << '\n';
  o.pass = report.counterexample_count == 0;
  o.reports.push_back(to_json(report));
  return o;
}

Outcome run_minimize(const std::string& p, const std::string& z, const std::string& order_text,
                     std::ostream& out) {
  explore::MacroState state{parse_triple(p, "--p"), parse_triple(z, "--z")};
  const auto order = parse_order(order_text);
  Outcome o;
  o.config = {{"p", p}, {"z", z}, {"order", order}};

  const explore::MinimizeTrace trace = explore::greedy_minimize_z(state, order);
  out << "initial p=" << format_triple(trace.initial.p) << " z=" << format_triple(trace.initial.z)
      << " d=" << trace.initial.d_value().str() << '\n';
  bool monotone = true;
  for (const auto& s : trace.steps) {
    out << "  lower z" << s.coordinate << ": " << s.old_value.str() << " -> " << s.new_value.str()
        << ", d " << s.d_before.str() << " -> " << s.d_after.str() << '\n';
    monotone = monotone && s.d_after <= s.d_before;
  }
  const Rational d_final = trace.final_state.d_value();
  out << "final z=" << format_triple(trace.final_state.z) << " d=" << d_final.str() << " case "
      << explore::to_string(trace.label) << '\n';

  json report = to_json(trace);
  if (trace.label != explore::CaseLabel::mixed) {
    const auto cls = explore::case_classify(trace.final_state);
    report["classification"] = to_json(cls);
    o.pass = cls.closed_form_value == d_final;
  } else {
    o.pass = false;
  }
  o.pass = o.pass && monotone && d_final.sign() >= 0;
  o.reports.push_back(std::move(report));
  return o;
}

Outcome run_sharpness(const std::string& c, std::ostream& out) {
  const Rational constant = Rational::parse(c);
  Outcome o;
  o.config = {{"c", constant.str()}};
  const explore::SharpnessWitness w = explore::sharpness_witness(constant);
  out << "C=" << w.constant.str() << ": b=" << format_triple(w.b) << " k=" << format_triple(w.k)
      << " value " << w.value.str() << '\n';
  o.pass = w.value.sign() < 0;
  o.reports.push_back(to_json(w));
  return o;
}

Outcome run_fuzz(std::uint64_t samples, std::uint64_t seed, std::uint64_t num_bound,
                 std::uint64_t den_bound, bool include_positive, std::ostream& out) {
  explore::SearchConfig cfg;
  cfg.sample_count = samples;
  cfg.seed = seed;
  cfg.numerator_bound = num_bound;
  cfg.denominator_bound = den_bound;
  Outcome o;
  o.config = {{"samples", samples}, {"seed", seed}, {"num_bound", num_bound},
              {"den_bound", den_bound}, {"include_positive", include_positive}};
  const auto summary = explore::minimize_fuzz(cfg, !include_positive);
  out << "fuzz: " << summary.samples << " samples, " << summary.passed() << " passed, "
      << summary.failed_samples << " failed (cases i/ii/iii/iv: " << summary.case_counts[0] << '/'
      << summary.case_counts[1] << '/' << summary.case_counts[2] << '/' << summary.case_counts[3]
      << ")\n";
  o.pass = summary.failed_samples == 0;
  o.reports.push_back(to_json(summary));
  return o;
}

const std::vector<std::string>& dump_names() {
  static const std::vector<std::string> names = {
      "d-tilde", "lhs", "rhs", "lagrange-lhs", "lagrange-rhs", "cs", "weak",
      "half-bracket", "d", "constraint", "d-k", "d-k-parametric"};
  return names;
}

Polynomial dump_polynomial(const std::string& name) {
  if (name == "d-tilde") return corpus::build_inequality().d_tilde;
  if (name == "lhs") return corpus::build_inequality().lhs;
  if (name == "rhs") return corpus::build_inequality().rhs;
  if (name == "lagrange-lhs") return corpus::build_lagrange_and_cs().lagrange_lhs;
  if (name == "lagrange-rhs") return corpus::build_lagrange_and_cs().lagrange_rhs;
  if (name == "cs") return corpus::build_lagrange_and_cs().cs_diff;
  if (name == "weak") return corpus::build_weak_difference();
  if (name == "half-bracket") return corpus::build_half_bracket();
  if (name == "d") return corpus::build_d();
  if (name == "constraint") return corpus::build_constraint();
  if (name == "d-k") return corpus::build_k_form(false);
  if (name == "d-k-parametric") return corpus::build_k_form(true);
  throw StructuralError("unknown expression '" + name + "'");
}

Outcome run_dump(const std::string& name, std::ostream& out) {
  const Polynomial p = dump_polynomial(name);
  out << p.str() << '\n';
  Outcome o;
  o.config = {{"expr", name}};
  o.reports.push_back({{"expr", name},
                       {"variables", p.vars().names()},
                       {"term_count", p.term_count()},
                       {"polynomial", p.str()}});
  return o;
}

void write_manifest(const std::string& path, const std::string& command, const Outcome* outcome,
                    const std::string& error) {
  json manifest = {{"tool", "macrocheck"}, {"version", MACROCHECK_VERSION}, {"command", command}};
  if (outcome) {
    manifest["config"] = outcome->config;
    manifest["reports"] = outcome->reports;
    manifest["status"] = outcome->pass ? "pass" : "fail";
  } else {
    manifest["config"] = json::object();
    manifest["reports"] = json::array();
    manifest["status"] = "error";
    manifest["error"] = error;
  }
  std::ofstream file(path);
  if (!file) throw StructuralError("cannot write " + path);
  file << manifest.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-rational polynomial identity checks and counterexample search", "macrocheck"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MACROCHECK_VERSION);
  std::string json_path;

  auto* verify_cmd = app.add_subcommand("verify", "Replay the symbolic identities");
  std::string check;
  auto* check_opt = verify_cmd->add_option("--check", check, "Single check to run");
  auto* all_flag = verify_cmd->add_flag("--all", "Run every check (default)");
  check_opt->excludes(all_flag);
  verify_cmd->add_option("--json", json_path, "Write the run manifest here");

  auto* search_cmd = app.add_subcommand("search", "Seeded exact counterexample search");
  SearchArgs search;
  search_cmd->add_option("--target", search.target, "d-tilde, d-k, weak or cs")->required();
  search_cmd->add_option("--c", search.constant, "Bracket constant for d-k (default 1/2)");
  search_cmd->add_option("--samples", search.samples, "Number of random points")->required();
  search_cmd->add_option("--seed", search.seed, "64-bit seed")->required();
  search_cmd->add_option("--num-bound", search.num_bound, "Numerator bound")->capture_default_str();
  search_cmd->add_option("--den-bound", search.den_bound, "Denominator bound")->capture_default_str();
  search_cmd->add_option("--zero-prob", search.zero_prob, "Chance of an exact zero coordinate")
      ->capture_default_str();
  search_cmd->add_option("--threads", search.threads, "Worker threads, 0 for all cores")
      ->capture_default_str();
  search_cmd->add_option("--max-recorded", search.max_recorded, "Listed hits per category")
      ->capture_default_str();
  search_cmd->add_option("--json", json_path, "Write the run manifest here");

  auto* minimize_cmd = app.add_subcommand("minimize", "Greedy z-minimization of d");
  std::string p_text;
  std::string z_text;
  std::string order_text = "321";
  minimize_cmd->add_option("--p", p_text, "p1,p2,p3")->required();
  minimize_cmd->add_option("--z", z_text, "z1,z2,z3")->required();
  minimize_cmd->add_option("--order", order_text, "Coordinate order")->capture_default_str();
  minimize_cmd->add_option("--json", json_path, "Write the run manifest here");

  auto* sharp_cmd = app.add_subcommand("sharpness", "Counterexample for a constant above 1/2");
  std::string c_text;
  sharp_cmd->add_option("--c", c_text, "Constant C > 1/2")->required();
  sharp_cmd->add_option("--json", json_path, "Write the run manifest here");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized replay of the minimization argument");
  std::uint64_t fuzz_samples = 10000;
  std::uint64_t fuzz_seed = 1;
  std::uint64_t fuzz_num = 10;
  std::uint64_t fuzz_den = 10;
  bool include_positive = false;
  fuzz_cmd->add_option("--samples", fuzz_samples)->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz_seed)->capture_default_str();
  fuzz_cmd->add_option("--num-bound", fuzz_num)->capture_default_str();
  fuzz_cmd->add_option("--den-bound", fuzz_den)->capture_default_str();
  fuzz_cmd->add_flag("--include-positive", include_positive, "Also sample p1p2p3 > 0");
  fuzz_cmd->add_option("--json", json_path, "Write the run manifest here");

  auto* dump_cmd = app.add_subcommand("dump", "Print a corpus polynomial in canonical text form");
  std::string expr;
  dump_cmd->add_option("--expr", expr, "Expression name")
      ->required()
      ->check(CLI::IsMember(dump_names()));
  dump_cmd->add_option("--json", json_path, "Write the run manifest here");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << MACROCHECK_VERSION << '\n';
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Outcome outcome;
    if (command == "verify") {
      outcome = run_verify(check, out);
    } else if (command == "search") {
      outcome = run_search(search, out);
    } else if (command == "minimize") {
      outcome = run_minimize(p_text, z_text, order_text, out);
    } else if (command == "dump") {
      Outcome o = run_dump(expr, out);
      if (!json_path.empty()) write_manifest(json_path, command, &o, {});
      return kPass;
    } else if (command == "sharpness") {
      outcome = run_sharpness(c_text, out);
    } else {
      outcome = run_fuzz(fuzz_samples, fuzz_seed, fuzz_num, fuzz_den, include_positive, out);
    }
    out << "overall: " << (outcome.pass ? "pass" : "fail") << '\n';
    if (!json_path.empty()) write_manifest(json_path, command, &outcome, {});
    return outcome.pass ? kPass : kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    if (!json_path.empty()) {
      try {
        write_manifest(json_path, command, nullptr, e.what());
      } catch (const std::exception& write_error) {
        err << "error: " << write_error.what() << '\n';
      }
    }
    return kUsage;
  }
}

}  // namespace macrocheck::cli
