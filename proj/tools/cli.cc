#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ddom/errors.h"
#include "ddom/exact.h"
#include "ddom/generators.h"
#include "ddom/graph.h"
#include "ddom/greedy.h"
#include "ddom/ordering.h"
#include "ddom/pig.h"
#include "ddom/reductions.h"

namespace ddom::cli {

namespace {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Input {
  std::string text;
  Graph graph;
};

Input read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  Input input{buf.str(), {}};
  input.graph = parse_graph(input.text);
  return input;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

VertexSet parse_set(const std::string& text) {
  std::vector<Vertex> members;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      members.push_back(static_cast<Vertex>(v));
    } catch (const std::logic_error&) {
      throw InputError("bad vertex '" + item + "' in --set");
    }
  }
  return VertexSet(std::move(members));
}

/// What every solve/verify command reports. The verdict is always recomputed
/// from the graph, never taken from a solver.
struct RunReport {
  std::string command;
  std::uint64_t input_hash = 0;
  VertexSet solution;
  bool valid = false;
  double millis = 0.0;

  void print(std::ostream& out, bool porcelain) const {
    if (porcelain) {
      out << "k " << solution.size() << '\n';
      out << 's';
      for (Vertex v : solution) out << ' ' << v;
      out << '\n';
      out << "t " << static_cast<long long>(millis) << '\n';
      out << "ok " << (valid ? 1 : 0) << '\n';
      return;
    }
    out << "command:     " << command << '\n';
    out << "input:       fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << input_hash
        << std::dec << std::setfill(' ') << '\n';
    out << "solution:    " << to_string(solution) << '\n';
    out << "cardinality: " << solution.size() << '\n';
    out << "verdict:     " << (valid ? "VALID" : "INVALID") << '\n';
    out << "time_ms:     " << std::fixed << std::setprecision(3) << millis << '\n';
  }
};

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disjunctive domination solvers and reductions", "ddom"};
  app.require_subcommand(1);
  app.fallthrough();

  bool porcelain = false;
  int b = 2;
  std::size_t budget = SearchConfig{}.node_budget;
  std::string problem_text = "ddp";
  app.add_flag("--porcelain", porcelain, "Line-oriented machine output");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve a graph read from FILE (or - for stdin)");
  solve->require_subcommand(1);
  std::string input_path = "-";

  auto* pig = solve->add_subcommand("pig", "Linear-time exact solver for proper interval graphs");
  pig->add_option("file", input_path, "Edge-list file")->capture_default_str();

  auto* exact = solve->add_subcommand("exact", "Exact search");
  exact->add_option("file", input_path, "Edge-list file")->capture_default_str();
  exact->add_option("--problem", problem_text, "ddp, dom, 2dom or vc")->capture_default_str();
  exact->add_option("--b", b, "Disjunctive parameter")->capture_default_str();
  exact->add_option("--budget", budget, "Search node budget")->capture_default_str();
  std::string strategy_text = "bb";
  exact->add_option("--strategy", strategy_text, "bb or exhaustive")->capture_default_str();

  auto* greedy = solve->add_subcommand("greedy", "Greedy multicover approximation");
  greedy->add_option("file", input_path, "Edge-list file")->capture_default_str();
  greedy->add_option("--b", b, "Disjunctive parameter")->capture_default_str();
  std::string instance_path;
  greedy->add_option("--emit-instance", instance_path, "Also write the multicover instance (- for stdout)");

  // transform
  auto* transform = app.add_subcommand("transform", "Build gc, domhard or apx graph");
  std::string kind;
  transform->add_option("kind", kind, "gc, domhard or apx")->required()->check(CLI::IsMember({"gc", "domhard", "apx"}));
  transform->add_option("file", input_path, "Edge-list file")->capture_default_str();
  std::string output_path;
  std::string roles_path;
  transform->add_option("-o,--output", output_path, "Write the edge list here instead of stdout");
  transform->add_option("--roles", roles_path, "Role map path (default: <output>.roles when -o is given)");

  // generate
  auto* gen = app.add_subcommand("generate", "Print a seeded random graph");
  GenSpec spec;
  std::string family_text = "proper_interval";
  std::uint64_t seed = 0;
  gen->add_option("--family", family_text, "proper_interval, gnp_connected, tree, cubic, named")->capture_default_str();
  gen->add_option("--n", spec.n, "Vertex count")->required();
  gen->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  gen->add_option("--p", spec.p, "Edge probability (gnp_connected)")->capture_default_str();
  gen->add_option("--spread", spec.spread, "Maximum interval gap (proper_interval)")->capture_default_str();
  gen->add_option("--name", spec.name, "path, cycle, complete, star (named)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a vertex set against a problem");
  verify->add_option("file", input_path, "Edge-list file")->capture_default_str();
  verify->add_option("--problem", problem_text, "ddp, dom, 2dom or vc")->capture_default_str();
  verify->add_option("--b", b, "Disjunctive parameter")->capture_default_str();
  std::string set_text;
  verify->add_option("--set", set_text, "Comma-separated vertices")->required();

  // order
  auto* order = app.add_subcommand("order", "Print a bi-compatible elimination ordering");
  order->add_option("file", input_path, "Edge-list file")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << app.help();
    return kExitInvalidInput;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };
    if (b < 1) throw InputError("--b must be >= 1");

    if (*solve) {
      const Input input = read_input(input_path, in);
      RunReport report;
      report.command = join(args);
      report.input_hash = fnv1a64(input.text);
      Problem problem = Problem::kDisjunctive;
      if (*pig) {
        report.solution = solve_pig_linear(input.graph);
        b = 2;
      } else if (*exact) {
        problem = parse_problem(problem_text);
        SearchConfig cfg;
        cfg.b = b;
        cfg.node_budget = budget;
        if (strategy_text == "bb") cfg.strategy = Strategy::kBranchAndBound;
        else if (strategy_text == "exhaustive") cfg.strategy = Strategy::kExhaustive;
        else throw InputError("unknown strategy '" + strategy_text + "'");
        report.solution = exact_solve(input.graph, problem, cfg);
      } else {
        if (!instance_path.empty()) write_text(instance_path, build_cmsmc(input.graph, b).to_text(), out);
        report.solution = approx_disjunctive(input.graph, b);
      }
      report.millis = elapsed_ms();
      report.valid = verify_solution(input.graph, problem, report.solution, b);
      report.print(out, porcelain);
      return kExitOk;
    }

    if (*verify) {
      const Input input = read_input(input_path, in);
      RunReport report;
      report.command = join(args);
      report.input_hash = fnv1a64(input.text);
      report.solution = parse_set(set_text);
      report.valid = verify_solution(input.graph, parse_problem(problem_text), report.solution, b);
      report.millis = elapsed_ms();
      report.print(out, porcelain);
      return kExitOk;
    }

    if (*transform) {
      const Input input = read_input(input_path, in);
      TransformResult tr;
      if (kind == "gc") tr = gc_transform(input.graph);
      else if (kind == "domhard") tr = domination_hardness_transform(input.graph);
      else tr = apx_gadget_transform(input.graph);
      write_text(output_path, serialize_graph(tr.h), out);
      if (roles_path.empty() && !output_path.empty() && output_path != "-") roles_path = output_path + ".roles";
      if (!roles_path.empty()) write_text(roles_path, tr.role_map_text(), out);
      return kExitOk;
    }

    if (*gen) {
      spec.family = parse_family(family_text);
      spec.seed = seed;
      out << serialize_graph(generate(spec));
      return kExitOk;
    }

    if (*order) {
      const Input input = read_input(input_path, in);
      try {
        const VertexOrdering ord = compute_bco(input.graph);
        for (std::size_t i = 0; i < ord.size(); ++i) out << (i ? " " : "") << ord[i];
        out << '\n';
      } catch (const InputError& e) {
        out << "rejected: " << e.what() << '\n';
        return kExitInvalidInput;
      }
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace ddom::cli
