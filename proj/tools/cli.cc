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

#include "cli.h"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetdp/analysis.h"
#include "posetdp/ball.h"
#include "posetdp/bipartition.h"
#include "posetdp/error.h"
#include "posetdp/experiments.h"
#include "posetdp/io.h"
#include "posetdp/mechanism.h"
#include "posetdp/poset.h"
#include "posetdp/randposet.h"
#include "posetdp/triangulation.h"
#include "posetdp/verify.h"

namespace posetdp::cli {
namespace {

using Json = nlohmann::ordered_json;

// Flags shared by every command. Echoed into each output artifact.
struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 0;  // 0: the command's own default
  int threads = 1;
  std::string out;
  std::string poset_path;
  std::string policy;
  double epsilon = 1.0;
  double sensitivity = 1.0;
};

std::string SeedText(std::uint64_t seed) { return std::to_string(seed); }

Json ConfigJson(const std::string& command, const RunConfig& c) {
  Json j;
  j["command"] = command;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["threads"] = c.threads;
  if (!c.poset_path.empty()) j["poset"] = c.poset_path;
  if (!c.policy.empty()) j["policy"] = c.policy;
  j["epsilon"] = c.epsilon;
  j["sensitivity"] = c.sensitivity;
  return j;
}

Provenance ConfigProvenance(const std::string& command, const RunConfig& c) {
  Provenance p = {{"command", command},
                  {"seed", SeedText(c.seed)},
                  {"trials", std::to_string(c.trials)},
                  {"threads", std::to_string(c.threads)}};
  if (!c.poset_path.empty()) p.emplace_back("poset", c.poset_path);
  if (!c.policy.empty()) p.emplace_back("policy", c.policy);
  return p;
}

void Emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty() || c.out == "-") {
    out << text;
    out.flush();
    return;
  }
  WriteTextOutput(c.out, text);
}

std::string FormatP(double p) {
  return std::isinf(p) ? std::string("inf") : FormatDouble(p);
}

MaximalPolicy ResolvePolicy(const RunConfig& c, int n) {
  return c.policy.empty() ? DefaultPolicy(n) : ParsePolicy(c.policy);
}

std::uint64_t TrialsOr(const RunConfig& c, std::uint64_t fallback) {
  return c.trials == 0 ? fallback : c.trials;
}

std::string CsvQuote(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

// --- sample ---------------------------------------------------------------

void RunSample(const RunConfig& c, std::uint64_t n, bool rooted_input,
               std::ostream& out) {
  const Poset poset = ReadPosetFile(c.poset_path);
  const RootedPoset rooted =
      rooted_input ? RootedPoset(poset) : AugmentRoot(poset);
  const MaximalPolicy policy = ResolvePolicy(c, rooted.stripped().size());
  const PosetBallSampler sampler(rooted, policy, kMaxExactSize);
  Provenance prov = ConfigProvenance("sample", c);
  prov.emplace_back("poset_hash", rooted.poset().HashHex());
  prov.emplace_back("resolved_policy", std::string(PolicyName(policy)));
  prov.emplace_back("n", std::to_string(n));
  std::ostringstream text;
  text << CsvPreamble(prov);
  for (int i = 0; i < rooted.dimension(); ++i) {
    text << (i ? "," : "") << rooted.poset().Label(i);
  }
  text << "\n";
  Stream rng(c.seed);
  std::vector<double> y(rooted.dimension());
  for (std::uint64_t t = 0; t < n; ++t) {
    sampler.Sample(rng, y);
    for (std::size_t i = 0; i < y.size(); ++i) {
      text << (i ? "," : "") << FormatDouble(y[i]);
    }
    text << "\n";
  }
  Emit(c, text.str(), out);
}

// --- mechanism ------------------------------------------------------------

void RunMechanism(const RunConfig& c, const std::string& records_path,
                  const std::string& counts_path, const std::string& baseline,
                  std::ostream& out) {
  if (records_path.empty() == counts_path.empty()) {
    throw ValidationError("give exactly one of --records and --counts");
  }
  const Poset poset = ReadPosetFile(c.poset_path);
  CountVector counts;
  if (!records_path.empty()) {
    const auto records = ParseRecordsCsv(ReadTextFile(records_path), poset.size());
    counts = Aggregate(poset, records);
  } else {
    counts = ParseCountsCsv(ReadTextFile(counts_path), poset.size());
  }
  ValidateCounts(poset, counts);

  MechanismConfig config;
  config.epsilon = c.epsilon;
  config.sensitivity = c.sensitivity;
  config.seed = c.seed;
  if (!c.policy.empty()) config.policy = ParsePolicy(c.policy);
  ValidateConfig(config);

  std::vector<double> noisy;
  std::string mechanism = "poset-ball";
  std::string policy_name;
  if (baseline.empty()) {
    const PosetMechanism m(poset, config);
    policy_name = std::string(PolicyName(m.policy()));
    Stream rng(config.seed);
    noisy = m.Release(counts, rng);
  } else {
    std::vector<double> exact(counts.counts.begin(), counts.counts.end());
    Stream rng(config.seed);
    if (baseline == "linf") {
      mechanism = "linf";
      noisy = LinfMechanism(exact, config, rng);
    } else if (baseline == "l1") {
      mechanism = "l1";
      noisy = LaplaceMechanism(exact, config, rng);
    } else {
      throw ValidationError("unknown baseline '" + baseline +
                            "' (expected linf or l1)");
    }
  }
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["config"] = ConfigJson("mechanism", c);
  doc["poset_hash"] = poset.HashHex();
  doc["mechanism"] = mechanism;
  if (!policy_name.empty()) doc["policy"] = policy_name;
  doc["record_count"] = counts.record_count;
  doc["counts"] = counts.counts;
  doc["noisy_counts"] = noisy;
  Emit(c, doc.dump(2) + "\n", out);
}

// --- enumerate / triangulate ----------------------------------------------

void RunEnumerate(const RunConfig& c, int cap, std::ostream& out) {
  const Poset poset = ReadPosetFile(c.poset_path);
  const auto ebs = EnumerateBipartitions(poset, cap);
  std::ostringstream text;
  for (const ExtendedBipartition& eb : ebs) text << FormatBipartition(eb) << "\n";
  text << "total: " << ebs.size() << "\n";
  Emit(c, text.str(), out);
}

void RunTriangulate(const RunConfig& c, int cap, std::ostream& out) {
  const Poset poset = ReadPosetFile(c.poset_path);
  const RootedPoset rooted = AugmentRoot(poset);
  const auto ebs = EnumerateBipartitions(poset, cap);
  Provenance prov = ConfigProvenance("triangulate", c);
  prov.emplace_back("poset_hash", rooted.poset().HashHex());
  prov.emplace_back("simplices", std::to_string(ebs.size()));
  std::ostringstream text;
  text << CsvPreamble(prov) << "id,bipartition";
  const int d = rooted.dimension();
  for (int k = 0; k <= d; ++k) text << ",v" << k;
  text << "\n";
  for (std::size_t id = 0; id < ebs.size(); ++id) {
    const Simplex s =
        ChainsToSimplex(rooted, BipartitionToChains(poset, ebs[id]));
    text << id << "," << CsvQuote(FormatBipartition(ebs[id]));
    for (int k = 0; k <= d; ++k) {
      text << ",";
      const auto v = s.vertex(k);
      for (int j = 0; j < d; ++j) {
        text << (j ? " " : "") << static_cast<int>(v[j]);
      }
    }
    text << "\n";
  }
  Emit(c, text.str(), out);
}

// --- randposet ------------------------------------------------------------

void RunRandPoset(const RunConfig& c, int d, std::uint64_t steps,
                  std::ostream& out) {
  if (d < 1) throw ValidationError("--d must be >= 1");
  const std::uint64_t moves = steps == 0 ? DefaultDagSteps(d) : steps;
  Stream rng(c.seed);
  const Poset poset = DagToPoset(RandomDag(d, rng, moves));
  Json doc = Json::parse(PosetToJson(poset));
  doc["schema_version"] = kSchemaVersion;
  doc["poset_hash"] = poset.HashHex();
  Json config = ConfigJson("randposet", c);
  config["steps"] = moves;
  doc["config"] = config;
  Emit(c, doc.dump() + "\n", out);
}

// --- verify ---------------------------------------------------------------

int RunVerify(const RunConfig& c, const std::string& suite,
              std::ostream& out) {
  if (suite == "counterexample") {
    Emit(c, CounterexampleReportJson(TrialsOr(c, 160'000), c.seed), out);
    return kExitOk;
  }
  const SuiteReport report = RunSuite(suite, c.seed, c.trials);
  Json doc = Json::parse(report.ToJson());
  doc["config"] = ConfigJson("verify", c);
  Emit(c, doc.dump(2) + "\n", out);
  return report.passed() ? kExitOk : kExitInternal;
}

// --- experiment -----------------------------------------------------------

RatioOptions BaseRatioOptions(const RunConfig& c, std::uint64_t default_trials,
                              bool analytic) {
  RatioOptions o;
  o.trials = TrialsOr(c, default_trials);
  o.analytic_denominator = analytic;
  o.threads = c.threads;
  if (!c.policy.empty()) o.policy = ParsePolicy(c.policy);
  return o;
}

void RunLpCurve(const RunConfig& c, int d_min, int d_max, std::ostream& out) {
  if (d_min < 1 || d_max < d_min) throw ValidationError("bad dimension range");
  std::vector<int> dims;
  for (int d = d_min; d <= d_max; ++d) dims.push_back(d);
  std::ostringstream text;
  text << CsvPreamble(ConfigProvenance("experiment lp-curve", c))
       << "d,p,scaled_expected\n";
  for (const LpCurveRow& r : LpCurve(dims, DefaultExponentGrid())) {
    text << r.d << "," << FormatP(r.p) << "," << FormatDouble(r.scaled_expected)
         << "\n";
  }
  Emit(c, text.str(), out);
}

void RunRandomRatio(const RunConfig& c, const std::vector<int>& dims,
                    int posets, std::uint64_t steps, bool analytic,
                    std::ostream& out) {
  SweepOptions o;
  o.dims = dims;
  o.posets_per_d = posets;
  if (steps != 0) o.dag_steps = steps;
  o.ratio = BaseRatioOptions(c, 100, analytic);
  const std::vector<SweepRow> rows = RandomRatioSweep(o, c.seed);
  Provenance prov = ConfigProvenance("experiment random-ratio", c);
  prov.emplace_back("posets_per_d", std::to_string(posets));
  prov.emplace_back("dag_steps", steps == 0 ? "10*d^4" : std::to_string(steps));
  prov.emplace_back("denominator", analytic ? "analytic" : "monte_carlo");
  std::ostringstream text;
  text << CsvPreamble(prov) << "d,mean_ratio,stderr,n_posets\n";
  for (const SweepRow& r : rows) {
    text << r.d << "," << FormatDouble(r.mean_ratio) << ","
         << FormatDouble(r.standard_error) << "," << r.n_posets << "\n";
  }
  Emit(c, text.str(), out);
}

void RunStructure(const RunConfig& c, int d, int posets, int min_bucket,
                  std::uint64_t steps, bool analytic, std::ostream& out) {
  StructureOptions o;
  o.d = d;
  o.total_posets = posets;
  o.min_bucket = min_bucket;
  if (steps != 0) o.dag_steps = steps;
  o.ratio = BaseRatioOptions(c, 100, analytic);
  const StructureResult result = StructureSweep(o, c.seed);
  Provenance prov = ConfigProvenance("experiment structure", c);
  prov.emplace_back("d", std::to_string(d));
  prov.emplace_back("total_posets", std::to_string(posets));
  prov.emplace_back("min_bucket", std::to_string(min_bucket));
  prov.emplace_back("spearman_depth", FormatDouble(result.spearman_depth));
  prov.emplace_back("spearman_edges", FormatDouble(result.spearman_edges));
  std::ostringstream text;
  text << CsvPreamble(prov) << "metric,bucket,mean_ratio,n\n";
  for (const StructureRow& r : result.rows) {
    text << r.metric << "," << r.bucket << "," << FormatDouble(r.mean_ratio)
         << "," << r.n << "\n";
  }
  Emit(c, text.str(), out);
}

void RunNhis(const RunConfig& c, const std::vector<int>& sections,
             const std::string& data_dir, bool analytic, std::ostream& out) {
  RatioOptions o = DefaultNhisOptions();
  o.trials = TrialsOr(c, o.trials);
  o.threads = c.threads;
  o.analytic_denominator = analytic;
  if (!c.policy.empty()) o.policy = ParsePolicy(c.policy);
  const std::string dir = data_dir.empty() ? DefaultDataDir() : data_dir;
  Provenance prov = ConfigProvenance("experiment nhis", c);
  prov.emplace_back("data_dir", dir);
  std::ostringstream rows;
  for (int s : sections) {
    const RatioRecord r = NhisExperiment(s, o, c.seed, dir);
    prov.emplace_back("poset_hash_" + std::to_string(s), r.poset_hash);
    rows << s << "," << r.d << "," << FormatDouble(r.ratio) << "," << r.trials
         << "\n";
  }
  Emit(c, CsvPreamble(prov) + "sections,d,ratio,trials\n" + rows.str(), out);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"K-norm mechanisms for partially ordered binary data",
               "posetdp"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app.add_option("--trials", c.trials, "Trial count (0: command default)");
  app.add_option("--threads", c.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "Output file (default: stdout)");

  auto add_poset = [&](CLI::App* sub) {
    sub->add_option("--poset", c.poset_path, "Poset file")->required();
  };
  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--policy", c.policy,
                    "first-found|childless-preferred|random-maximal|"
                    "exact-small");
  };

  std::uint64_t sample_n = 1;
  bool rooted_input = false;
  CLI::App* sample = app.add_subcommand("sample", "Uniform poset-ball samples");
  add_poset(sample);
  add_policy(sample);
  sample->add_option("--n", sample_n, "Number of samples");
  sample->add_flag("--rooted", rooted_input,
                   "Input already has its root at index 0");

  std::string records_path;
  std::string counts_path;
  std::string baseline;
  CLI::App* mechanism =
      app.add_subcommand("mechanism", "Release noisy counts");
  add_poset(mechanism);
  add_policy(mechanism);
  mechanism->add_option("--records", records_path, "Records CSV");
  mechanism->add_option("--counts", counts_path,
                        "Counts CSV: record_count then d counts");
  mechanism->add_option("--epsilon", c.epsilon, "Privacy parameter");
  mechanism->add_option("--sensitivity", c.sensitivity, "Norm sensitivity");
  mechanism->add_option("--baseline", baseline, "linf|l1");

  int cap = kDefaultEnumerationCap;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List extended bipartitions");
  add_poset(enumerate);
  enumerate->add_option("--cap", cap, "Maximum poset size");

  CLI::App* triangulate =
      app.add_subcommand("triangulate", "List triangulation simplices");
  add_poset(triangulate);
  triangulate->add_option("--cap", cap, "Maximum poset size");

  int rand_d = 0;
  std::uint64_t steps = 0;
  CLI::App* randposet =
      app.add_subcommand("randposet", "Random poset from the DAG chain");
  randposet->add_option("--d", rand_d, "Number of elements")->required();
  randposet->add_option("--steps", steps, "Chain moves (0: 10*d^4)");

  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  verify
      ->add_option("--suite", suite,
                   "uniformity|volume|lp|simplex|mechanism|counterexample")
      ->required();

  CLI::App* experiment =
      app.add_subcommand("experiment", "Batch experiments (CSV)");
  experiment->require_subcommand(1);
  bool analytic = false;

  int d_min = 1;
  int d_max = 50;
  CLI::App* lp_curve = experiment->add_subcommand("lp-curve", "l_p moments");
  lp_curve->add_option("--d-min", d_min, "Smallest dimension");
  lp_curve->add_option("--d-max", d_max, "Largest dimension");

  std::vector<int> dims = {2, 5, 10, 15, 20, 25, 30, 35, 40};
  int posets = 100;
  CLI::App* random_ratio =
      experiment->add_subcommand("random-ratio", "Ratio versus d");
  random_ratio->add_option("--dims", dims, "Dimensions")->delimiter(',');
  random_ratio->add_option("--posets", posets, "Posets per dimension");
  random_ratio->add_option("--steps", steps, "Chain moves (0: 10*d^4)");
  random_ratio->add_flag("--analytic", analytic, "Use d/3 as denominator");
  add_policy(random_ratio);

  int structure_d = 10;
  int structure_posets = 5000;
  int min_bucket = 100;
  CLI::App* structure =
      experiment->add_subcommand("structure", "Ratio versus structure");
  structure->add_option("--d", structure_d, "Poset size");
  structure->add_option("--posets", structure_posets, "Total posets");
  structure->add_option("--min-bucket", min_bucket, "Smallest bucket kept");
  structure->add_option("--steps", steps, "Chain moves (0: 10*d^4)");
  structure->add_flag("--analytic", analytic, "Use d/3 as denominator");
  add_policy(structure);

  std::vector<int> sections = {1, 2, 3};
  std::string data_dir;
  CLI::App* nhis =
      experiment->add_subcommand("nhis", "Survey question posets");
  nhis->add_option("--sections", sections, "1, 2 and/or 3")->delimiter(',');
  nhis->add_option("--data-dir", data_dir, "Bundled data directory");
  nhis->add_flag("--analytic", analytic, "Use d/3 as denominator");
  add_policy(nhis);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (*sample) {
      RunSample(c, sample_n, rooted_input, out);
    } else if (*mechanism) {
      RunMechanism(c, records_path, counts_path, baseline, out);
    } else if (*enumerate) {
      RunEnumerate(c, cap, out);
    } else if (*triangulate) {
      RunTriangulate(c, cap, out);
    } else if (*randposet) {
      RunRandPoset(c, rand_d, steps, out);
    } else if (*verify) {
      return RunVerify(c, suite, out);
    } else if (*lp_curve) {
      RunLpCurve(c, d_min, d_max, out);
    } else if (*random_ratio) {
      RunRandomRatio(c, dims, posets, steps, analytic, out);
    } else if (*structure) {
      RunStructure(c, structure_d, structure_posets, min_bucket, steps,
                   analytic, out);
    } else if (*nhis) {
      RunNhis(c, sections, data_dir, analytic, out);
    }
  } catch (const RecordError& e) {
    err << "error: " << e.what() << " (index " << e.index() << ")\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace posetdp::cli
