// Copyright 2026 The pbs-schedule Authors
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

// Command-line front end: instance generation, solving, exact solving,
// schedule validation and the ratio benchmark.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or parse error,
// 3 oracle limit exceeded.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbs/bench.hpp"
#include "pbs/exact_oracle.hpp"
#include "pbs/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr int kOracleLimit = 3;

std::vector<pbs::Weight> parse_int_list(const std::string& csv) {
  std::vector<pbs::Weight> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size() || v < 1) throw std::invalid_argument("bad d-list entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty d-list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preemptive bipartite scheduling with per-packet setup overhead"};
  app.require_subcommand(1);

  pbs::GenSpec gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen.n, "Transmitters")->required();
  gen_cmd->add_option("--m", gen.m, "Receivers")->required();
  gen_cmd->add_option("--d", gen.d, "Setup overhead")->required();
  gen_cmd->add_option("--wmax", gen.w_max, "Maximum message length")->required();
  gen_cmd->add_option("--density", gen.density, "Fraction of pairs with a message")->required();
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed")->required();
  gen_cmd->add_option("-o", gen_out, "Output file")->required();

  std::string solve_alg, solve_in, solve_out;
  auto* solve_cmd = app.add_subcommand("solve", "Schedule an instance");
  solve_cmd->add_option("--alg", solve_alg, "sga, a1 or apbs")
      ->required()
      ->check(CLI::IsMember({"sga", "a1", "apbs"}));
  solve_cmd->add_option("--in", solve_in, "Instance file")->required();
  solve_cmd->add_option("--out", solve_out, "Schedule output file");

  std::string exact_in;
  pbs::SearchLimits limits;
  auto* exact_cmd = app.add_subcommand("exact", "Optimal makespan of a small instance");
  exact_cmd->add_option("--in", exact_in, "Instance file")->required();
  exact_cmd->add_option("--max-edges", limits.max_edges, "Edge limit");
  exact_cmd->add_option("--node-budget", limits.node_budget, "Search node budget");

  std::string val_in, val_sched;
  auto* val_cmd = app.add_subcommand("validate", "Check a schedule against an instance");
  val_cmd->add_option("--in", val_in, "Instance file")->required();
  val_cmd->add_option("--sched", val_sched, "Schedule file")->required();

  bool paper = false, quick = false;
  std::string d_list, csv_path;
  int cases = 0, n = 0, m = 0, threads = 0;
  pbs::Weight wmax = 0;
  double density = 0;
  std::uint64_t seed = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Approximation-ratio experiment");
  auto* paper_flag = bench_cmd->add_flag("--paper", paper, "1000 cases per d on 15x15");
  bench_cmd->add_flag("--quick", quick, "100 cases per d on 15x15")->excludes(paper_flag);
  bench_cmd->add_option("--d-list", d_list, "Comma-separated overheads");
  bench_cmd->add_option("--cases", cases, "Cases per d");
  bench_cmd->add_option("--n", n, "Transmitters");
  bench_cmd->add_option("--m", m, "Receivers");
  bench_cmd->add_option("--wmax", wmax, "Maximum message length");
  bench_cmd->add_option("--density", density, "Fraction of pairs with a message");
  bench_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  bench_cmd->add_option("--seed", seed, "Base seed")->required();
  bench_cmd->add_option("--csv", csv_path, "CSV output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) {
      pbs::write_file(gen_out, pbs::emit_instance(pbs::generate_instance(gen)));
      return kOk;
    }
    if (*solve_cmd) {
      const pbs::Instance instance = pbs::parse_instance(pbs::read_file(solve_in));
      const pbs::Schedule schedule = pbs::solve(pbs::parse_algorithm(solve_alg), instance);
      std::cout << "makespan " << pbs::makespan(schedule, instance.overhead()) << '\n'
                << "lower_bound " << pbs::lower_bound(instance) << '\n';
      if (!solve_out.empty()) pbs::write_file(solve_out, pbs::emit_schedule(schedule));
      return kOk;
    }
    if (*exact_cmd) {
      const pbs::Instance instance = pbs::parse_instance(pbs::read_file(exact_in));
      try {
        const pbs::OracleResult r = pbs::optimal_makespan(instance, limits);
        std::cout << "makespan " << r.makespan << '\n'
                  << "lower_bound " << pbs::lower_bound(instance) << '\n'
                  << "explored " << r.explored << '\n';
      } catch (const pbs::OracleLimitExceeded& e) {
        std::cerr << "oracle limit exceeded: " << e.what() << '\n';
        return kOracleLimit;
      }
      return kOk;
    }
    if (*val_cmd) {
      const pbs::Instance instance = pbs::parse_instance(pbs::read_file(val_in));
      const pbs::Schedule schedule = pbs::parse_schedule(pbs::read_file(val_sched));
      const pbs::ValidationReport report = pbs::validate_schedule(instance, schedule);
      if (!report.ok()) {
        std::cout << report.summary();
        return kInvalid;
      }
      std::cout << "ok makespan " << pbs::makespan(schedule, instance.overhead()) << '\n';
      return kOk;
    }
    if (*bench_cmd) {
      pbs::BenchConfig config = paper ? pbs::BenchConfig::paper() : pbs::BenchConfig::quick();
      if (!d_list.empty()) config.d_list = parse_int_list(d_list);
      if (cases > 0) config.cases = cases;
      if (n > 0) config.shape.n = n;
      if (m > 0) config.shape.m = m;
      if (wmax > 0) config.shape.w_max = wmax;
      if (density > 0) config.shape.density = density;
      config.base_seed = seed;
      config.threads = threads;
      try {
        pbs::write_file(csv_path, pbs::to_csv(pbs::run_experiment(config)));
      } catch (const pbs::InvalidScheduleError& e) {
        std::cerr << e.what() << '\n';
        return kInvalid;
      }
      return kOk;
    }
  } catch (const pbs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
