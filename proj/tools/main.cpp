// Command-line front end: run rules, check axioms, test priceability, sample
// elections, reproduce the experiments, and replay the counterexample corpus.
// Exits 0 on success, 1 on usage/input errors, 2 on internal assertion or
// witness regressions.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "droopjr/axioms.hpp"
#include "droopjr/csv.hpp"
#include "droopjr/experiment.hpp"
#include "droopjr/priceability.hpp"
#include "droopjr/rules.hpp"
#include "droopjr/sampling.hpp"
#include "droopjr/svg.hpp"
#include "droopjr/witness.hpp"

namespace {

using namespace droopjr;

constexpr int kExitRegression = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("cannot write file: " + path);
  out << content;
}

Election load_election(const std::string& path) { return parse_election(read_file(path)); }

TieBreakPolicy parse_tie(const std::string& spec) {
  if (spec == "lex") return TieBreakPolicy::lexicographic();
  if (spec.rfind("script:", 0) == 0) {
    std::istringstream in(read_file(spec.substr(7)));
    std::vector<int> script;
    int v;
    while (in >> v) script.push_back(v);
    return TieBreakPolicy::scripted(script);
  }
  throw CLI::ValidationError("--tie must be 'lex' or 'script:<file>'");
}

std::vector<int> parse_committee(const std::string& spec) {
  std::vector<int> committee;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      committee.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw CLI::ValidationError("bad committee index: '" + tok + "'");
    }
  }
  if (committee.empty()) throw CLI::ValidationError("--committee must list indices");
  return committee;
}

Quota parse_quota(const std::string& name) {
  if (name == "hare") return Quota::Hare;
  if (name == "droop") return Quota::Droop;
  throw CLI::ValidationError("--quota must be hare or droop");
}

int cmd_rule(const std::string& rule, const std::string& quota_str,
             const std::string& election_path, const std::string& budget_str,
             const std::string& epsilon_str, const std::string& tie_str) {
  Election e = load_election(election_path);
  Quota q = parse_quota(quota_str);
  TieBreakPolicy tie = parse_tie(tie_str);

  auto budget = [&] {
    if (!budget_str.empty()) return parse_rational(budget_str);
    return q == Quota::Droop ? droop_budget(e) : Rational(1);
  };

  RuleOutcome out;
  if (rule == "av") {
    out = av(e, tie);
  } else if (rule == "pav") {
    out = pav_exact(e, tie);
  } else if (rule == "lspav") {
    Rational eps =
        epsilon_str.empty() ? default_ls_pav_epsilon(e) : parse_rational(epsilon_str);
    out = ls_pav(e, eps, std::nullopt, tie);
  } else if (rule == "gjcr") {
    out = gjcr(e, q, tie);
  } else if (rule == "gcr") {
    out = gcr(e, q, tie);
  } else if (rule == "mes") {
    out = mes(e, budget(), SharesVariant::MES, tie);
  } else if (rule == "ees") {
    out = mes(e, budget(), SharesVariant::EES, tie);
  } else if (rule == "mes-completed") {
    out = mes_completed(e, budget(), SharesVariant::MES, tie);
  } else if (rule == "ees-completed") {
    out = mes_completed(e, budget(), SharesVariant::EES, tie);
  } else if (rule == "phragmen") {
    out = seq_phragmen(e, std::vector<Rational>(e.n(), Rational(0)), e.k(), tie);
  } else if (rule == "monroe") {
    out = monroe(e, q, tie);
  } else if (rule == "greedy-monroe") {
    out = greedy_monroe(e, q, tie);
  } else {
    throw CLI::ValidationError("unknown rule: " + rule);
  }

  std::cout << "committee";
  for (int c : out.committee) std::cout << " " << c;
  std::cout << "\n" << out.trace.serialize();
  return 0;
}

int cmd_check(const std::string& axiom_str, const std::string& quota_str,
              const std::string& election_path, const std::string& committee_str) {
  Election e = load_election(election_path);
  std::vector<int> committee = parse_committee(committee_str);

  std::vector<Axiom> axioms;
  if (axiom_str == "all") {
    axioms.assign(kAllAxioms.begin(), kAllAxioms.end());
  } else if (auto a = axiom_from_name(axiom_str)) {
    axioms.push_back(*a);
  } else {
    throw CLI::ValidationError("unknown axiom: " + axiom_str);
  }
  std::vector<Quota> quotas;
  if (quota_str == "both") {
    quotas = {Quota::Hare, Quota::Droop};
  } else {
    quotas = {parse_quota(quota_str)};
  }

  int exit = 0;
  for (Axiom a : axioms)
    for (Quota q : quotas) {
      auto witness = check(e, committee, a, q);
      std::cout << axiom_name(a) << " " << quota_name(q) << " "
                << (witness ? "FAIL" : "PASS") << "\n";
      if (witness) {
        std::cout << witness->serialize() << "\n";
        if (!witness_revalidates(e, committee, *witness)) {
          std::cerr << "internal error: witness does not revalidate\n";
          exit = kExitRegression;
        }
      }
    }
  return exit;
}

int cmd_price(const std::string& election_path, const std::string& committee_str) {
  Election e = load_election(election_path);
  std::vector<int> committee = parse_committee(committee_str);
  auto ps = find_price_system(e, committee);
  if (!ps) {
    std::cout << "NOT PRICEABLE\n";
    return 0;
  }
  std::cout << "PRICEABLE p=" << to_string(ps->price) << "\n" << ps->serialize();
  if (!verify_price_system(e, committee, *ps)) {
    std::cerr << "internal error: price system does not verify\n";
    return kExitRegression;
  }
  return 0;
}

int cmd_sample(const SamplerConfig& cfg, int k, const std::string& out_path) {
  Election e = sample_election(cfg, k);
  std::ostringstream out;
  out << "# model=" << model_name(cfg.model) << " p=" << cfg.p
      << " dispersion=" << cfg.dispersion << " seed=" << cfg.seed << "\n"
      << serialize_election(e);
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    write_file(out_path, out.str());
  }
  return 0;
}

int cmd_experiment(const GridConfig& cfg, const std::string& csv_path,
                   const std::string& svg_path) {
  auto records = run_experiment(cfg);
  std::string csv = emit_csv(records);
  if (csv_path.empty()) {
    std::cout << csv;
  } else {
    write_file(csv_path, csv);
  }
  if (!svg_path.empty()) write_file(svg_path, emit_plot(records));
  return 0;
}

int cmd_witness(const std::string& name) {
  std::vector<std::string> names =
      name == "all" ? witness_names() : std::vector<std::string>{name};
  int exit = 0;
  for (const auto& n : names) {
    WitnessResult r = run_witness(n);
    std::cout << n << " " << (r.passed ? "PASS" : "FAIL") << "\n" << r.detail;
    if (!r.passed) exit = kExitRegression;
  }
  return exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approval-based committee rules and representation-axiom checkers"};
  app.require_subcommand(1);

  std::string rule_name, quota = "hare", election_path, budget_str, epsilon_str,
              tie_str = "lex";
  auto* rule_cmd = app.add_subcommand("rule", "Run a voting rule");
  rule_cmd->add_option("--rule", rule_name,
                       "av|pav|lspav|gjcr|gcr|mes|ees|mes-completed|ees-completed|"
                       "phragmen|monroe|greedy-monroe")
      ->required();
  rule_cmd->add_option("--quota", quota, "hare|droop");
  rule_cmd->add_option("--election", election_path, "election file")->required();
  rule_cmd->add_option("--budget", budget_str, "per-voter budget (rational; mes/ees)");
  rule_cmd->add_option("--epsilon", epsilon_str, "lspav improvement threshold (rational)");
  rule_cmd->add_option("--tie", tie_str, "lex or script:<file>");

  std::string axiom = "all", check_quota = "both", committee_str;
  auto* check_cmd = app.add_subcommand("check", "Check representation axioms");
  check_cmd->add_option("--axiom", axiom, "JR|PJR|EJR|PJR+|EJR+|FPJR|FJR|all");
  check_cmd->add_option("--quota", check_quota, "hare|droop|both");
  check_cmd->add_option("--election", election_path, "election file")->required();
  check_cmd->add_option("--committee", committee_str, "comma-separated indices")
      ->required();

  auto* price_cmd = app.add_subcommand("price", "Decide committee priceability");
  price_cmd->add_option("--election", election_path, "election file")->required();
  price_cmd->add_option("--committee", committee_str, "comma-separated indices")
      ->required();

  SamplerConfig sampler;
  std::string model_str = "ic", out_path;
  int sample_k = 1;
  double phi = -1, alpha = -1;
  auto* sample_cmd = app.add_subcommand("sample", "Sample an election");
  sample_cmd->add_option("--model", model_str, "resampling|noise|urn|ic");
  sample_cmd->add_option("--p", sampler.p, "approval probability / central size");
  sample_cmd->add_option("--phi", phi, "dispersion (resampling/noise)");
  sample_cmd->add_option("--alpha", alpha, "urn contagion");
  sample_cmd->add_option("-m", sampler.m, "candidates")->required();
  sample_cmd->add_option("-n", sampler.n, "voters")->required();
  sample_cmd->add_option("-k", sample_k, "committee size written to the file");
  sample_cmd->add_option("--seed", sampler.seed, "RNG seed");
  sample_cmd->add_flag("--per-candidate", sampler.per_candidate_resampling,
                       "resampling variant: redraw each bit independently");
  sample_cmd->add_option("--out", out_path, "output file (default stdout)");

  GridConfig grid;
  std::string csv_path, svg_path;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a Monte-Carlo experiment");
  exp_cmd->add_option("--id", grid.experiment, "1|2|3")->required();
  exp_cmd->add_option("--scale", grid.scale, "1 = full grid, default desk scale 0.125");
  exp_cmd->add_option("--seed", grid.seed, "master seed");
  exp_cmd->add_option("--workers", grid.workers, "worker threads (0 = all cores)");
  exp_cmd->add_flag("--bare-mes", grid.bare_mes,
                    "experiment 2: skip the completion phase");
  exp_cmd->add_option("--out", csv_path, "CSV output file (default stdout)");
  exp_cmd->add_option("--plot", svg_path, "SVG plot output file");

  std::string witness_name = "all";
  auto* witness_cmd = app.add_subcommand("witness", "Replay counterexample scenarios");
  witness_cmd->add_option("--name", witness_name, "scenario name or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rule_cmd->parsed())
      return cmd_rule(rule_name, quota, election_path, budget_str, epsilon_str, tie_str);
    if (check_cmd->parsed())
      return cmd_check(axiom, check_quota, election_path, committee_str);
    if (price_cmd->parsed()) return cmd_price(election_path, committee_str);
    if (sample_cmd->parsed()) {
      auto model = model_from_name(model_str);
      if (!model) throw CLI::ValidationError("unknown model: " + model_str);
      sampler.model = *model;
      if (phi >= 0 && alpha >= 0)
        throw CLI::ValidationError("--phi and --alpha are mutually exclusive");
      if (phi >= 0) sampler.dispersion = phi;
      if (alpha >= 0) sampler.dispersion = alpha;
      return cmd_sample(sampler, sample_k, out_path);
    }
    if (exp_cmd->parsed()) return cmd_experiment(grid, csv_path, svg_path);
    if (witness_cmd->parsed()) return cmd_witness(witness_name);
  } catch (const CLI::ValidationError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::logic_error& ex) {
    std::cerr << "internal assertion failed: " << ex.what() << "\n";
    return kExitRegression;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
