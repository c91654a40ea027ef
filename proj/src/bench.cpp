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

#include "pbs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "pbs/baselines.hpp"
#include "pbs/sga.hpp"

namespace pbs {

std::uint64_t SplitMix64::mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Largest multiple of bound representable in 64 bits.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

double SplitMix64::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t case_seed(std::uint64_t base_seed, Weight d, std::uint64_t index) {
  const std::uint64_t per_d =
      SplitMix64::mix64(base_seed ^ SplitMix64::mix64(static_cast<std::uint64_t>(d)));
  return SplitMix64::mix64(per_d + index * 0x9e3779b97f4a7c15ULL);
}

Instance generate_instance(const GenSpec& spec) {
  if (spec.n < 1 || spec.m < 1) throw std::invalid_argument("n and m must be >= 1");
  if (spec.w_max < 1) throw std::invalid_argument("w_max must be >= 1");
  if (!(spec.density > 0.0 && spec.density <= 1.0)) {
    throw std::invalid_argument("density must be in (0, 1]");
  }
  SplitMix64 rng(spec.seed);
  std::vector<Edge> edges;
  for (int v = 0; v < spec.n; ++v) {
    for (int u = 0; u < spec.m; ++u) {
      if (rng.unit() >= spec.density) continue;
      edges.push_back({v, u, 1 + static_cast<Weight>(rng.below(spec.w_max))});
    }
  }
  return Instance(spec.n, spec.m, spec.d, std::move(edges));
}

std::string_view algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::kSga: return "sga";
    case Algorithm::kA1: return "a1";
    case Algorithm::kApbs: return "apbs";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "sga") return Algorithm::kSga;
  if (name == "a1") return Algorithm::kA1;
  if (name == "apbs") return Algorithm::kApbs;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

Schedule solve(Algorithm alg, const Instance& instance) {
  switch (alg) {
    case Algorithm::kSga: return run_sga(instance);
    case Algorithm::kA1: return run_a1(instance);
    case Algorithm::kApbs: return run_apbs(instance);
  }
  throw std::invalid_argument("unknown algorithm");
}

BenchConfig BenchConfig::paper() {
  BenchConfig c;
  c.cases = 1000;
  return c;
}

BenchConfig BenchConfig::quick() {
  BenchConfig c;
  c.cases = 100;
  return c;
}

InvalidScheduleError::InvalidScheduleError(std::uint64_t seed_, Weight d_, Algorithm alg,
                                           const std::string& report)
    : std::runtime_error("invalid schedule from " + std::string(algorithm_name(alg)) +
                         " (seed " + std::to_string(seed_) + ", d " +
                         std::to_string(d_) + "): " + report),
      seed(seed_),
      d(d_),
      algorithm(alg) {}

namespace {

struct CellResult {
  Weight makespan = 0;
  Weight lower = 0;
  double ms = 0;
};

double ratio(const CellResult& c) {
  return c.lower == 0 ? 1.0 : static_cast<double>(c.makespan) / static_cast<double>(c.lower);
}

}  // namespace

std::vector<BenchRow> run_experiment(const BenchConfig& config) {
  if (config.algorithms.empty()) throw std::invalid_argument("no algorithms selected");
  if (config.cases < 1) throw std::invalid_argument("cases must be >= 1");
  const std::size_t n_alg = config.algorithms.size();
  const std::size_t n_cells = config.d_list.size() * static_cast<std::size_t>(config.cases);

  // results[cell * n_alg + a]; cell = d_index * cases + case_index.
  std::vector<CellResult> results(n_cells * n_alg);
  std::atomic<std::size_t> next_cell{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t cell = next_cell.fetch_add(1);
      if (cell >= n_cells) return;
      const Weight d = config.d_list[cell / config.cases];
      GenSpec spec = config.shape;
      spec.d = d;
      spec.seed = case_seed(config.base_seed, d, cell % config.cases);
      try {
        const Instance instance = generate_instance(spec);
        const Weight lower = lower_bound(instance);
        for (std::size_t a = 0; a < n_alg; ++a) {
          const auto start = std::chrono::steady_clock::now();
          const Schedule schedule = solve(config.algorithms[a], instance);
          const auto stop = std::chrono::steady_clock::now();
          const ValidationReport report = validate_schedule(instance, schedule);
          if (!report.ok()) {
            throw InvalidScheduleError(spec.seed, d, config.algorithms[a], report.summary());
          }
          results[cell * n_alg + a] = {
              makespan(schedule, d), lower,
              std::chrono::duration<double, std::milli>(stop - start).count()};
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next_cell.store(n_cells);
        return;
      }
    }
  };

  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(n_cells, 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<BenchRow> rows;
  for (std::size_t di = 0; di < config.d_list.size(); ++di) {
    for (std::size_t a = 0; a < n_alg; ++a) {
      BenchRow row;
      row.d = config.d_list[di];
      row.algorithm = config.algorithms[a];
      row.cases = config.cases;
      for (int i = 0; i < config.cases; ++i) {
        const CellResult& c = results[(di * config.cases + i) * n_alg + a];
        const double r = ratio(c);
        row.mean_ratio += r;
        row.worst_ratio = std::max(row.worst_ratio, r);
        row.mean_makespan += static_cast<double>(c.makespan);
        row.mean_lower_bound += static_cast<double>(c.lower);
        row.solve_ms += c.ms;
      }
      row.mean_ratio /= config.cases;
      row.mean_makespan /= config.cases;
      row.mean_lower_bound /= config.cases;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  char buf[256];
  for (const BenchRow& r : rows) {
    // printf rounds the exact binary value; exact decimal ties go to even.
    std::snprintf(buf, sizeof buf, "%lld,%s,%d,%.6f,%.6f,%.6f,%.6f,%.3f\n",
                  static_cast<long long>(r.d), algorithm_name(r.algorithm).data(),
                  r.cases, r.mean_ratio, r.worst_ratio, r.mean_makespan,
                  r.mean_lower_bound, r.solve_ms);
    out += buf;
  }
  return out;
}

}  // namespace pbs
