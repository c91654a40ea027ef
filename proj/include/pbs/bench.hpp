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

// Random instance generation and the approximation-ratio experiment runner.

#ifndef PBS_BENCH_HPP_
#define PBS_BENCH_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pbs/core_model.hpp"

namespace pbs {

/// SplitMix64: state advances by the golden-ratio increment and each output
/// is the state passed through the mix64 finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound), by rejection so there is no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();

  static std::uint64_t mix64(std::uint64_t z);

 private:
  std::uint64_t state_;
};

/// Seed of case `index` at overhead `d`:
///   mix64(mix64(base ^ mix64(d)) + index * 0x9e3779b97f4a7c15).
/// Depends only on its arguments, so workers may generate cases in any order.
std::uint64_t case_seed(std::uint64_t base_seed, Weight d, std::uint64_t index);

struct GenSpec {
  int n = 15;
  int m = 15;
  Weight w_max = 50;
  double density = 1.0;
  Weight d = 1;
  std::uint64_t seed = 0;
};

/// Visits (v, u) pairs in row-major order; each is kept with probability
/// `density` (one draw) and then given a weight uniform in [1, w_max]
/// (a second draw, only for kept pairs). Throws std::invalid_argument on an
/// invalid spec.
Instance generate_instance(const GenSpec& spec);

enum class Algorithm { kSga, kA1, kApbs };

std::string_view algorithm_name(Algorithm alg);
Algorithm parse_algorithm(std::string_view name);  // "sga" | "a1" | "apbs"
Schedule solve(Algorithm alg, const Instance& instance);

struct BenchConfig {
  std::vector<Algorithm> algorithms{Algorithm::kSga, Algorithm::kA1, Algorithm::kApbs};
  std::vector<Weight> d_list{1, 2, 5, 10, 20, 50, 100, 150, 200};
  int cases = 100;
  GenSpec shape;  // n, m, w_max and density; d and seed are set per case
  std::uint64_t base_seed = 1;
  int threads = 0;  // 0: hardware concurrency

  static BenchConfig paper();  // 1000 cases per d
  static BenchConfig quick();  // 100 cases per d
};

struct BenchRow {
  Weight d = 0;
  Algorithm algorithm = Algorithm::kSga;
  int cases = 0;
  double mean_ratio = 0;
  double worst_ratio = 0;
  double mean_makespan = 0;
  double mean_lower_bound = 0;
  double solve_ms = 0;  // wall clock summed over cases
};

/// A schedule failed validation; identifies the case so it can be replayed.
class InvalidScheduleError : public std::runtime_error {
 public:
  InvalidScheduleError(std::uint64_t seed, Weight d, Algorithm alg,
                       const std::string& report);

  std::uint64_t seed;
  Weight d;
  Algorithm algorithm;
};

/// Every algorithm solves the same generated instance for each (d, case).
/// Rows are ordered by d, then by the configured algorithm order.
std::vector<BenchRow> run_experiment(const BenchConfig& config);

inline constexpr std::string_view kCsvHeader =
    "d,alg,cases,mean_ratio,worst_ratio,mean_makespan,mean_lb,solve_ms";

/// Ratios and means with 6 decimals, solve_ms with 3.
std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace pbs

#endif  // PBS_BENCH_HPP_
