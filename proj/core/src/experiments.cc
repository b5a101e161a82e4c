// Copyright 2026 The posetdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posetdp/experiments.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "posetdp/analysis.h"
#include "posetdp/ball.h"
#include "posetdp/error.h"
#include "posetdp/io.h"
#include "posetdp/randposet.h"

#ifndef POSETDP_DEFAULT_DATA_DIR
#define POSETDP_DEFAULT_DATA_DIR "data"
#endif

namespace posetdp {
namespace {

// Runs fn(0..n-1) on up to `threads` workers; the first exception is
// rethrown on the calling thread.
void ParallelFor(std::size_t n, int threads,
                 const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Stream layout: one index per (d, poset) pair, with separate children for
// the generator and for the ratio trials.
constexpr std::uint64_t kGeneratorChild = 0;
constexpr std::uint64_t kTrialChild = 1;

std::uint64_t PosetStreamIndex(int d, int k) {
  return (static_cast<std::uint64_t>(d) << 32) | static_cast<std::uint32_t>(k);
}

Poset SweepPoset(int d, std::optional<std::uint64_t> steps,
                 const Stream& stream) {
  Stream gen = stream.Split(kGeneratorChild);
  return DagToPoset(RandomDag(d, gen, steps.value_or(DefaultDagSteps(d))));
}

}  // namespace

RatioRecord RatioExperiment(const Poset& poset, const RatioOptions& options,
                            const Stream& rng) {
  const int d = poset.size();
  if (d < 1) throw ValidationError("ratio experiment needs d >= 1");
  if (options.trials < 1) throw ValidationError("trials must be >= 1");
  const RootedPoset rooted = AugmentRoot(poset);
  const PosetBallSampler sampler(
      rooted, options.policy.value_or(DefaultPolicy(d)),
      options.exact_cap);
  const LpBall cube{d, kInfinity, 1.0};

  std::vector<double> num(options.trials);
  std::vector<double> den(options.trials);
  ParallelFor(options.trials, options.threads, [&](std::size_t t) {
    Stream s = rng.Split(t);
    std::vector<double> y(d + 1);
    sampler.Sample(s, y);
    num[t] = SquaredNorm(std::span<const double>(y).subspan(1));
    if (!options.analytic_denominator) {
      std::vector<double> z(d);
      SampleLpBall(cube, s, z);
      den[t] = SquaredNorm(z);
    }
  });

  RatioRecord r;
  r.poset_hash = poset.HashHex();
  r.d = d;
  const PosetMetrics m = ComputeMetrics(poset);
  r.depth = m.depth;
  r.reduced_edge_count = m.reduced_edge_count;
  r.trials = options.trials;
  r.poset_ball_mean_sq = Mean(num);
  r.linf_mean_sq = options.analytic_denominator ? d / 3.0 : Mean(den);
  r.ratio = r.poset_ball_mean_sq / r.linf_mean_sq;
  return r;
}

std::vector<double> DefaultExponentGrid() {
  return {1.0, 1.5, 2.0, 3.0, 5.0, 10.0, kInfinity};
}

std::vector<LpCurveRow> LpCurve(const std::vector<int>& dims,
                                const std::vector<double>& exponents) {
  std::vector<LpCurveRow> rows;
  for (int d : dims) {
    for (double p : exponents) rows.push_back({d, p, ScaledExpected(d, p)});
  }
  return rows;
}

std::vector<SweepRow> RandomRatioSweep(const SweepOptions& options,
                                       std::uint64_t seed) {
  if (options.posets_per_d < 1) {
    throw ValidationError("posets_per_d must be >= 1");
  }
  RatioOptions inner = options.ratio;
  inner.threads = 1;
  std::vector<SweepRow> rows;
  for (int d : options.dims) {
    if (d < 1) throw ValidationError("sweep dimensions must be >= 1");
    std::vector<double> ratios(options.posets_per_d);
    ParallelFor(ratios.size(), options.ratio.threads, [&](std::size_t k) {
      const Stream stream(seed, PosetStreamIndex(d, static_cast<int>(k)));
      const Poset poset = SweepPoset(d, options.dag_steps, stream);
      ratios[k] =
          RatioExperiment(poset, inner, stream.Split(kTrialChild)).ratio;
    });
    rows.push_back({d, Mean(ratios), StandardError(ratios),
                    options.posets_per_d});
  }
  return rows;
}

StructureResult StructureSweep(const StructureOptions& options,
                               std::uint64_t seed) {
  if (options.d < 1 || options.total_posets < 1) {
    throw ValidationError("structure sweep needs d >= 1 and posets >= 1");
  }
  RatioOptions inner = options.ratio;
  inner.threads = 1;
  StructureResult result;
  result.records.resize(options.total_posets);
  ParallelFor(result.records.size(), options.ratio.threads,
              [&](std::size_t k) {
                const Stream stream(
                    seed, PosetStreamIndex(options.d, static_cast<int>(k)));
                const Poset poset = SweepPoset(options.d, options.dag_steps,
                                               stream);
                result.records[k] =
                    RatioExperiment(poset, inner, stream.Split(kTrialChild));
              });

  std::vector<double> ratio;
  std::vector<double> depth;
  std::vector<double> edges;
  std::map<int, std::vector<double>> by_depth;
  std::map<int, std::vector<double>> by_edges;
  for (const RatioRecord& r : result.records) {
    ratio.push_back(r.ratio);
    depth.push_back(r.depth);
    edges.push_back(r.reduced_edge_count);
    by_depth[r.depth].push_back(r.ratio);
    by_edges[r.reduced_edge_count].push_back(r.ratio);
  }
  auto emit = [&](const std::string& metric,
                  const std::map<int, std::vector<double>>& buckets) {
    for (const auto& [bucket, values] : buckets) {
      const int n = static_cast<int>(values.size());
      if (n < options.min_bucket) continue;
      result.rows.push_back({metric, bucket, Mean(values), n});
    }
  };
  emit("depth", by_depth);
  emit("edges", by_edges);
  if (result.records.size() >= 2) {
    result.spearman_depth = SpearmanCorrelation(depth, ratio);
    result.spearman_edges = SpearmanCorrelation(edges, ratio);
  }
  return result;
}

std::string DefaultDataDir() {
  if (const char* env = std::getenv("POSETDP_DATA_DIR")) return env;
  return POSETDP_DEFAULT_DATA_DIR;
}

std::string NhisPosetPath(int sections, const std::string& data_dir) {
  if (sections < 1 || sections > 3) {
    throw ValidationError("sections must be 1, 2 or 3");
  }
  return (std::filesystem::path(data_dir) / "nhis" /
          ("sections_" + std::to_string(sections) + ".json"))
      .string();
}

Poset LoadNhisPoset(int sections, const std::string& data_dir) {
  const std::string path = NhisPosetPath(sections, data_dir);
  if (!std::filesystem::exists(path)) {
    throw ValidationError("missing bundled poset file: " + path);
  }
  return ReadPosetFile(path);
}

RatioOptions DefaultNhisOptions() {
  RatioOptions options;
  options.trials = 10'000;
  options.policy = MaximalPolicy::kExactSmall;
  options.exact_cap = kMaxExactSize;
  return options;
}

RatioRecord NhisExperiment(int sections, const RatioOptions& options,
                           std::uint64_t seed, const std::string& data_dir) {
  const Poset poset = LoadNhisPoset(sections, data_dir);
  return RatioExperiment(poset, options,
                         Stream(seed, static_cast<std::uint64_t>(sections)));
}

}  // namespace posetdp
