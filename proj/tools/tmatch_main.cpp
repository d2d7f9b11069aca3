// Copyright 2026 The tmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tmatch/approx.hpp"
#include "tmatch/bench.hpp"
#include "tmatch/errors.hpp"
#include "tmatch/fpt_k.hpp"
#include "tmatch/generators.hpp"
#include "tmatch/io.hpp"
#include "tmatch/line_graph.hpp"
#include "tmatch/matching.hpp"
#include "tmatch/oracle.hpp"
#include "tmatch/static_graph.hpp"
#include "tmatch/window_dp.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw tmatch::PreconditionError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

tmatch::TemporalGraph load_instance(const std::string& path) {
  try {
    return tmatch::parse_instance(read_input(path));
  } catch (const tmatch::ParseError& e) {
    throw tmatch::ParseError(e.line(), path + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    for (std::string part; std::getline(ss, part, ',');) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta-temporal matching solvers, approximations and generators"};
  app.require_subcommand(1);

  // solve
  std::string solve_algo = "oracle";
  int delta = 1;
  int k = 0;
  std::size_t budget = tmatch::OracleConfig{}.budget;
  std::uint64_t cap = tmatch::kDefaultMinorCap;
  int jobs = 1;
  std::string instance_path;
  auto* solve = app.add_subcommand("solve", "Exact maximum matching or fpt-k decision");
  solve->add_option("--algo", solve_algo, "oracle | fpt-k | window-dp")
      ->check(CLI::IsMember({"oracle", "fpt-k", "window-dp"}));
  solve->add_option("--delta", delta, "Delta")->required()->check(CLI::PositiveNumber);
  solve->add_option("--k", k, "Target size for fpt-k")->check(CLI::NonNegativeNumber);
  solve->add_option("--budget", budget, "Oracle time-edge budget");
  solve->add_option("--cap", cap, "Representative-family cap");
  solve->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  solve->add_option("instance", instance_path, "Instance file or -")->required();

  // approx
  std::string approx_algo = "template";
  auto* approx = app.add_subcommand("approx", "Approximate matching");
  approx->add_option("--algo", approx_algo, "greedy | template")
      ->check(CLI::IsMember({"greedy", "template"}));
  approx->add_option("--delta", delta, "Delta")->required()->check(CLI::PositiveNumber);
  approx->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  approx->add_option("instance", instance_path, "Instance file or -")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);
  std::string graph_name = "k4";
  bool augment = false;
  auto* gen_cubic = gen->add_subcommand("cubic-reduction", "Reduction from a cubic graph");
  gen_cubic->add_option("--graph", graph_name, "k4 | k33 | prism | petersen | cube")
      ->check(CLI::IsMember(tmatch::named_cubic_graph_names()));
  gen_cubic->add_flag("--augment", augment, "Append the complete snapshot");
  int rand_n = 5;
  double edge_prob = 0.5;
  int lifetime = 4;
  double label_prob = 0.3;
  std::uint64_t seed = 1;
  auto* gen_random = gen->add_subcommand("random", "Random temporal graph");
  gen_random->add_option("--n", rand_n, "Vertices")->check(CLI::PositiveNumber);
  gen_random->add_option("--edge-prob", edge_prob, "Edge probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--T", lifetime, "Lifetime")->check(CLI::PositiveNumber);
  gen_random->add_option("--label-prob", label_prob, "Label probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", seed, "Seed");

  // grid2path
  std::string cells_path;
  auto* grid = app.add_subcommand("grid2path", "Temporal path from a diagonal-grid cell set");
  grid->add_option("cells", cells_path, "Cell file or -")->required();

  // validate
  std::string matching_path;
  auto* check = app.add_subcommand("validate", "Check a matching against an instance");
  check->add_option("--delta", delta, "Delta")->required()->check(CLI::PositiveNumber);
  check->add_option("instance", instance_path, "Instance file")->required();
  check->add_option("matching", matching_path, "Matching file")->required();

  // bench
  std::vector<std::string> bench_paths;
  std::vector<std::string> bench_algos = {"greedy,template"};
  int bench_count = 10;
  auto* bench = app.add_subcommand("bench", "Tab-separated benchmark records");
  bench->add_option("--delta", delta, "Delta")->required()->check(CLI::PositiveNumber);
  bench->add_option("--algo", bench_algos, "Algorithms (comma separated, repeatable)")
      ->allow_extra_args(false);
  bench->add_option("--seed", seed, "Seed for generated cases");
  bench->add_option("--count", bench_count, "Generated cases when no files are given")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--budget", budget, "Oracle time-edge budget");
  bench->add_option("--cap", cap, "Representative-family cap");
  bench->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("instances", bench_paths, "Instance files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) {
      const auto g = load_instance(instance_path);
      if (solve_algo == "fpt-k") {
        if (solve->count("--k") == 0) throw tmatch::PreconditionError("--k is required for fpt-k");
        const auto d = tmatch::solve_fpt_k(g, delta, k);
        if (!d.yes) {
          std::cout << "# no\n";
          return kExitNo;
        }
        std::cout << "# yes\n" << tmatch::serialize_matching(d.witness);
        return kExitYes;
      }
      tmatch::DeltaMatching m;
      if (solve_algo == "oracle") {
        m = tmatch::solve_exact(g, delta, tmatch::OracleConfig{budget});
      } else {
        m = tmatch::solve_window_dp(g, delta, tmatch::WindowDpConfig{cap, jobs});
      }
      std::cout << tmatch::serialize_matching(m);
      return kExitYes;
    }
    if (*approx) {
      const auto g = load_instance(instance_path);
      const auto m = approx_algo == "greedy" ? tmatch::approx_greedy(g, delta)
                                             : tmatch::approx_template(g, delta, jobs);
      std::cout << tmatch::serialize_matching(m);
      return kExitYes;
    }
    if (*gen) {
      if (*gen_cubic) {
        const auto source = tmatch::named_cubic_graph(graph_name);
        const auto alpha = tmatch::maximum_independent_set_bruteforce(source).size();
        auto inst = tmatch::cubic_reduction(source, static_cast<int>(alpha));
        if (augment) inst = tmatch::complete_underlying_augment(inst);
        std::cout << "# " << inst.provenance << " graph=" << graph_name << " delta=" << inst.delta
                  << " certified_mu=" << *inst.certified_mu << '\n'
                  << tmatch::serialize_instance(inst.graph);
      } else {
        std::cout << tmatch::serialize_instance(
            tmatch::random_temporal_graph(rand_n, edge_prob, lifetime, label_prob, seed));
      }
      return kExitYes;
    }
    if (*grid) {
      const auto cells = tmatch::parse_cells(read_input(cells_path));
      std::cout << tmatch::serialize_instance(tmatch::grid_to_temporal_path(cells));
      return kExitYes;
    }
    if (*check) {
      const auto g = load_instance(instance_path);
      const auto m = tmatch::parse_matching(read_input(matching_path), delta);
      if (auto violation = tmatch::validate(g, m)) {
        std::cout << "invalid: " << violation->describe() << '\n';
        return kExitNo;
      }
      std::cout << "ok size " << m.size() << '\n';
      return kExitYes;
    }
    if (*bench) {
      tmatch::BenchConfig config;
      config.delta = delta;
      config.algos = split_list(bench_algos);
      for (const auto& a : config.algos) {
        if (!tmatch::is_known_algo(a)) throw tmatch::PreconditionError("unknown algorithm: " + a);
      }
      config.oracle.budget = budget;
      config.window_dp = tmatch::WindowDpConfig{cap, jobs};
      config.jobs = jobs;
      std::vector<tmatch::BenchCase> cases;
      if (bench_paths.empty()) {
        cases = tmatch::random_bench_cases(bench_count, seed);
      } else {
        for (const auto& p : bench_paths) cases.push_back({p, load_instance(p)});
      }
      for (const auto& r : tmatch::run_bench(cases, config)) std::cout << r.to_line() << '\n';
      return kExitYes;
    }
  } catch (const tmatch::ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
