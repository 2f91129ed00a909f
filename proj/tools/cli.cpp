#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "swapbribery/colorcoding.hpp"
#include "swapbribery/errors.hpp"
#include "swapbribery/io.hpp"
#include "swapbribery/kernel.hpp"
#include "swapbribery/oracle.hpp"
#include "swapbribery/reductions.hpp"
#include "swapbribery/rule_ilp.hpp"
#include "swapbribery/uniform.hpp"

namespace swapbribery {

namespace {

constexpr int kYes = 0, kNo = 1, kError = 2;

std::string read_text(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

struct SolveSettings {
  std::string algorithm = "auto";
  std::string color_mode = "exhaustive";
  long long trials = 0;
  std::uint64_t seed = 1;
  bool optimize = false;
  double cap = 1e7;
};

struct Outcome {
  SolveResult result;
  std::string solver;
  std::vector<std::pair<std::string, std::string>> config;
};

bool factorial_at_most(int m, long long bound) {
  long long f = 1;
  for (int i = 2; i <= m; ++i)
    if ((f *= i) > bound) return false;
  return true;
}

Outcome run_color(const BriberyInstance& inst, const SolveSettings& s, ColorMode mode) {
  ColorOptions options;
  options.mode = mode;
  options.trials = s.trials;
  options.seed = s.seed;
  options.optimize = s.optimize;
  bool exhaustive = mode == ColorMode::exhaustive;
  Outcome out{solve_colorcoding(inst, options), exhaustive ? "color-exhaustive" : "color-random", {}};
  out.config = {{"color-mode", exhaustive ? "exhaustive" : "random"}};
  if (!exhaustive) out.config.emplace_back("trials", std::to_string(s.trials ? s.trials : default_trials(inst.vote_count(), inst.rule.k())));
  return out;
}

Outcome run_solver(const BriberyInstance& inst, const SolveSettings& s) {
  std::string algorithm = s.algorithm;
  if (algorithm == "auto") {
    if (inst.rule.is_approval() && all_costs_equal(inst, 1))
      algorithm = "flow";
    else if (factorial_at_most(inst.candidate_count(), 720))
      algorithm = "ilp";
    else {
      try {
        return run_color(inst, s, ColorMode::exhaustive);
      } catch (const ResourceError&) {
        return run_color(inst, s, ColorMode::random);
      }
    }
  }
  if (algorithm == "brute") {
    OracleOptions options{.cap = s.cap, .prune_at_budget = true};
    if (inst.rule.is_approval()) return {brute_topk(inst, options), "brute-topk", {}};
    return {brute_rankings(inst, options), "brute-rankings", {}};
  }
  if (algorithm == "flow") return {solve_uniform(inst), "flow", {}};
  if (algorithm == "approx") {
    auto approx = approx_delta(inst);
    SolveResult r;
    r.decision = approx.within_budget;
    if (approx.witness) r.cost = approx.cost;
    r.witness = std::move(approx.witness);
    return {std::move(r), "approx", {{"delta", to_string(approx.delta)}}};
  }
  if (algorithm == "ilp") return {solve_ilp(inst), "ilp", {}};
  if (algorithm == "color")
    return run_color(inst, s, s.color_mode == "random" ? ColorMode::random : ColorMode::exhaustive);
  throw DomainError("unknown algorithm " + algorithm);
}

// Every witness is re-checked before anything is reported.
void recheck(const BriberyInstance& inst, const Outcome& out) {
  const auto& r = out.result;
  if (!r.witness) {
    if (r.decision) throw std::logic_error(out.solver + " answered yes without a witness");
    return;
  }
  auto report = verify_bribery(inst, *r.witness);
  if (r.decision && !report.is_solution()) throw std::logic_error(out.solver + " returned a witness that is not a solution");
  if (r.cost && report.cost != *r.cost) throw std::logic_error(out.solver + " misreported its witness cost");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Swap Bribery workbench", "sbe"};
  app.require_subcommand(1);
  std::function<int()> action;

  // solve
  SolveSettings settings;
  std::string instance_path, solution_path;
  auto* solve = app.add_subcommand("solve", "Decide an election file");
  solve->add_option("instance", instance_path, "Election file ('-' for stdin)")->required();
  solve->add_option("--algorithm", settings.algorithm, "auto, brute, flow, approx, color or ilp")
      ->check(CLI::IsMember({"auto", "brute", "flow", "approx", "color", "ilp"}));
  auto* color_mode = solve->add_option("--color-mode", settings.color_mode)->check(CLI::IsMember({"exhaustive", "random"}));
  auto* trials = solve->add_option("--trials", settings.trials, "Random colorings per pattern")->check(CLI::NonNegativeNumber);
  solve->add_option("--seed", settings.seed);
  auto* optimize = solve->add_flag("--optimize", settings.optimize, "Exhaustive color coding: report the cheapest bribery");
  solve->add_option("--cap", settings.cap, "Leaf cap for the brute-force solvers");
  solve->add_option("--solution", solution_path, "Write a solution file ('-' for stdout)");
  solve->callback([&] {
    action = [&]() -> int {
      bool color = settings.algorithm == "color";
      if (!color && (color_mode->count() || trials->count() || optimize->count()))
        throw DomainError("--color-mode, --trials and --optimize need --algorithm color");
      if (settings.color_mode == "random" && optimize->count()) throw DomainError("--optimize needs --color-mode exhaustive");
      auto inst = parse_election(read_text(instance_path));
      auto outcome = run_solver(inst, settings);
      recheck(inst, outcome);
      std::ostream& summary = solution_path == "-" ? err : out;
      summary << "solver " << outcome.solver << "\n";
      summary << "decision " << (outcome.result.decision ? "yes" : "no") << "\n";
      if (outcome.result.cost) summary << "cost " << to_string(*outcome.result.cost) << "\n";
      if (!solution_path.empty()) {
        SolutionFile file;
        file.solver = outcome.solver;
        file.decision = outcome.result.decision;
        file.cost = outcome.result.cost;
        file.seed = settings.seed;
        file.config = outcome.config;
        file.bribery = outcome.result.witness;
        write_text(solution_path, serialize_solution(file, inst.election), out);
      }
      return outcome.result.decision ? kYes : kNo;
    };
  });

  // kernelize
  std::string kernel_method = "full", output_path;
  auto* kernel = app.add_subcommand("kernelize", "Shrink a k-approval instance");
  kernel->add_option("instance", instance_path)->required();
  kernel->add_option("--method", kernel_method, "full or simple")->check(CLI::IsMember({"full", "simple"}));
  kernel->add_option("-o,--output", output_path);
  kernel->callback([&] {
    action = [&]() -> int {
      auto inst = parse_election(read_text(instance_path));
      BriberyInstance reduced = kernel_method == "full" ? kernelize(inst).instance : simple_truncation_kernel(inst);
      err << "kernel: " << reduced.candidate_count() << " candidates, " << reduced.vote_count() << " votes (from "
          << inst.candidate_count() << ", " << inst.vote_count() << ")\n";
      write_text(output_path, serialize_election(reduced), out);
      return kYes;
    };
  });

  // generate
  auto* generate = app.add_subcommand("generate", "Write generated instances");
  generate->require_subcommand(1);
  RandomSpec spec;
  std::string cost_model = "unit", budget_text = "1", low_text = "1", high_text = "2", mode_text = "co-winner";
  auto* random = generate->add_subcommand("random", "Random k-approval instance");
  random->add_option("--m", spec.m)->check(CLI::PositiveNumber);
  random->add_option("--n", spec.n)->check(CLI::PositiveNumber);
  random->add_option("--k", spec.k)->check(CLI::PositiveNumber);
  random->add_option("--costs", cost_model, "unit, two-valued or range")->check(CLI::IsMember({"unit", "two-valued", "range"}));
  random->add_option("--low", low_text, "two-valued: common cost");
  random->add_option("--high", high_text, "two-valued: rare cost");
  random->add_option("--density", spec.costs.density, "two-valued: probability of the rare cost");
  random->add_option("--lo", spec.costs.lo, "range: smallest cost");
  random->add_option("--hi", spec.costs.hi, "range: largest cost");
  random->add_option("--budget", budget_text);
  random->add_option("--mode", mode_text)->check(CLI::IsMember({"co-winner", "unique-winner"}));
  random->add_option("--seed", spec.seed);
  random->add_option("-o,--output", output_path);
  random->callback([&] {
    action = [&]() -> int {
      if (cost_model == "two-valued")
        spec.costs = CostModel::two_valued(parse_rational(low_text), parse_rational(high_text), spec.costs.density);
      else if (cost_model == "range")
        spec.costs = CostModel::uniform_range(spec.costs.lo, spec.costs.hi);
      else
        spec.costs.kind = CostModelKind::unit;
      spec.budget = parse_rational(budget_text);
      spec.mode = mode_text == "unique-winner" ? WinnerMode::unique : WinnerMode::co_winner;
      write_text(output_path, serialize_election(generate_random(spec)), out);
      return kYes;
    };
  });

  std::string graph_path, epsilon_text = "1", clique_text, witness_path;
  int clique_size = 2;
  auto* gadget = generate->add_subcommand("clique", "2-approval instance from a colored graph");
  gadget->add_option("--graph", graph_path)->required();
  gadget->add_option("--epsilon", epsilon_text, "Surcharge on the guarded swaps");
  auto* clique_opt = gadget->add_option("--clique", clique_text, "Comma-separated vertices, one per class");
  gadget->add_option("--witness", witness_path, "Write the clique's bribery as a solution file")->needs(clique_opt);
  gadget->add_option("-o,--output", output_path);
  gadget->callback([&] {
    action = [&]() -> int {
      auto graph = parse_graph(read_text(graph_path));
      auto built = build_clique_gadget(graph, parse_rational(epsilon_text));
      err << "clique gadget: " << built.instance.candidate_count() << " candidates, "
          << built.instance.election.line_count() << " vote lines, K = " << built.K << ", budget "
          << to_string(built.instance.budget) << "\n";
      write_text(output_path, serialize_election(built.instance), out);
      if (!clique_text.empty()) {
        std::vector<int> clique;
        for (const auto& v : split_list(clique_text)) clique.push_back(std::stoi(v));
        auto bribery = clique_witness_bribery(graph, clique, built);
        auto report = verify_bribery(built.instance, bribery);
        err << "witness cost " << to_string(report.cost) << ", preferred wins " << (report.preferred_wins ? "yes" : "no")
            << "\n";
        if (!witness_path.empty()) {
          SolutionFile file{"clique-witness", report.is_solution(), report.cost, std::nullopt, {}, std::move(bribery)};
          write_text(witness_path, serialize_solution(file, built.instance.election), out);
        }
        return report.is_solution() ? kYes : kNo;
      }
      return kYes;
    };
  });

  auto* single = generate->add_subcommand("single-vote", "(k+1)-approval single-vote instance from a graph");
  single->add_option("--graph", graph_path)->required();
  single->add_option("--k", clique_size, "Clique size")->check(CLI::PositiveNumber);
  single->add_option("-o,--output", output_path);
  single->callback([&] {
    action = [&]() -> int {
      write_text(output_path, serialize_election(build_single_vote_clique(parse_graph(read_text(graph_path)), clique_size)), out);
      return kYes;
    };
  });

  // reduce
  std::string target;
  bool decide = false;
  auto* reduce = app.add_subcommand("reduce", "Translate between Swap Bribery and Possible Winner");
  reduce->add_option("instance", instance_path)->required();
  auto* to = reduce->add_option("--to", target, "pw (from an election file) or sb (from a partial-vote file)")
                 ->check(CLI::IsMember({"pw", "sb"}));
  auto* decide_flag = reduce->add_flag("--decide", decide, "Decide a partial-vote file by brute force");
  to->excludes(decide_flag);
  reduce->add_option("-o,--output", output_path);
  reduce->callback([&] {
    action = [&]() -> int {
      auto text = read_text(instance_path);
      if (decide) {
        bool yes = possible_winner_brute(parse_possible_winner(text));
        out << "decision " << (yes ? "yes" : "no") << "\n";
        return yes ? kYes : kNo;
      }
      if (target.empty()) throw DomainError("reduce needs --to or --decide");
      if (target == "pw")
        write_text(output_path, serialize_possible_winner(sb_to_pw(parse_election(text))), out);
      else
        write_text(output_path, serialize_election(pw_to_sb(parse_possible_winner(text))), out);
      return kYes;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check a solution file against an election file");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("solution", solution_path)->required();
  verify->callback([&] {
    action = [&]() -> int {
      auto inst = parse_election(read_text(instance_path));
      auto file = parse_solution(read_text(solution_path), inst.election);
      if (!file.bribery) {
        if (file.decision) throw DomainError("solution claims yes but lists no target rankings");
        out << "no bribery to check\n";
        return kYes;
      }
      auto report = verify_bribery(inst, *file.bribery);
      out << "cost " << to_string(report.cost) << "\n";
      out << "preferred wins " << (report.preferred_wins ? "yes" : "no") << "\n";
      out << "within budget " << (report.within_budget ? "yes" : "no") << "\n";
      bool consistent = (!file.cost || *file.cost == report.cost) && (!file.decision || report.is_solution());
      out << (consistent ? "consistent" : "inconsistent") << "\n";
      return consistent ? kYes : kNo;
    };
  });

  // bench
  std::vector<std::string> bench_files;
  std::string solvers_text = "auto", seeds_text = "1";
  auto* bench = app.add_subcommand("bench", "Time solvers over election files, CSV out");
  bench->add_option("instances", bench_files)->required();
  bench->add_option("--solvers", solvers_text, "Comma-separated algorithms");
  bench->add_option("--seeds", seeds_text, "Comma-separated seeds");
  bench->add_option("-o,--output", output_path);
  bench->callback([&] {
    action = [&]() -> int {
      std::ostringstream csv;
      csv << "instance,solver,decision,cost,wall_ms,seed\n";
      auto solvers = split_list(solvers_text);
      std::vector<std::uint64_t> seeds;
      for (const auto& s : split_list(seeds_text)) seeds.push_back(std::stoull(s));
      for (const auto& path : bench_files) {
        auto inst = parse_election(read_text(path));
        for (const auto& solver : solvers)
          for (auto seed : seeds) {
            SolveSettings s;
            s.algorithm = solver;
            s.seed = seed;
            std::string decision = "error", cost;
            auto start = std::chrono::steady_clock::now();
            try {
              auto outcome = run_solver(inst, s);
              recheck(inst, outcome);
              decision = outcome.result.decision ? "yes" : "no";
              if (outcome.result.cost) cost = to_string(*outcome.result.cost);
            } catch (const std::exception& e) {
              err << path << " " << solver << ": " << e.what() << "\n";
            }
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            csv << csv_field(path) << "," << solver << "," << decision << "," << cost << "," << std::fixed
                << std::setprecision(3) << ms << "," << seed << "\n";
          }
      }
      write_text(output_path, csv.str(), out);
      return kYes;
    };
  });

  // export-network
  int s_star = 1;
  bool with_flow = false;
  auto* network = app.add_subcommand("export-network", "DOT rendering of the score network for one target score");
  network->add_option("instance", instance_path)->required();
  network->add_option("--s-star", s_star, "Target score of p")->required();
  network->add_flag("--flow", with_flow, "Annotate a min-cost max flow");
  network->add_option("-o,--output", output_path);
  network->callback([&] {
    action = [&]() -> int {
      auto inst = parse_election(read_text(instance_path));
      if (!inst.rule.is_approval()) throw UnsupportedRule("the score network needs k-approval");
      auto votes = inst.election.expanded();
      auto net = build_score_network(votes, inst.candidate_count(), inst.rule.k(), inst.preferred, s_star, inst.mode,
                                     inst.election.names());
      if (with_flow) {
        auto flow = min_cost_max_flow(net.network);
        err << "flow value " << flow.value << ", cost " << to_string(flow.cost) << "\n";
        write_text(output_path, to_dot(net.network, &flow.flow), out);
      } else {
        write_text(output_path, to_dot(net.network), out);
      }
      return kYes;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }
  try {
    return action ? action() : kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace swapbribery
