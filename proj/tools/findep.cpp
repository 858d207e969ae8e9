// Copyright 2026 The findep Authors.
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
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "findep/analysis.hpp"
#include "findep/eden.hpp"
#include "findep/growth.hpp"
#include "findep/recurrence.hpp"
#include "findep/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct Common {
  std::string format;
  std::string out;
  unsigned threads = 0;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + c.out + " for writing");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void add_common(CLI::App* cmd, Common& c, const std::string& default_format,
                const std::vector<std::string>& formats) {
  c.format = default_format;
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->envname("FINDEP_FORMAT")
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write output to PATH instead of stdout")->envname("FINDEP_OUT");
  cmd->add_option("--threads", c.threads, "Worker threads (0 = available parallelism)")
      ->envname("FINDEP_THREADS")
      ->capture_default_str();
}

std::string dist_document(const findep::ExactDist& d, const Common& c, json header) {
  if (c.format == "csv") return findep::to_csv(d);
  header["schema_version"] = kSchemaVersion;
  header["support_size"] = d.support_size();
  header["distribution"] = json::parse(findep::to_json(d));
  return header.dump(2);
}

// ---- exact ----------------------------------------------------------------

struct ExactArgs {
  Common common;
  std::string model;
  int n = 0, q = 0, k = 0;
  std::uint64_t budget = findep::kDefaultEnumerationBudget;
};

int run_exact(const ExactArgs& a) {
  if (a.model == "line" && a.k < 1) throw std::invalid_argument("exact line requires --k >= 1");
  findep::RecurrenceOptions opts;
  opts.enumeration_budget = a.budget;
  opts.threads = a.common.threads;
  findep::RecurrenceEngine engine(opts);
  json header{{"command", "exact"}, {"model", a.model}, {"n", a.n}, {"q", a.q}};
  findep::ExactDist d = [&] {
    if (a.model == "cycle") return engine.cycle_law(a.n, a.q);
    header["k"] = a.k;
    header["defines_coloring"] = findep::defines_coloring(a.k, a.q);
    return engine.line_window_law(a.n, a.k, a.q);
  }();
  emit(a.common, dist_document(d, a.common, header));
  return kOk;
}

// ---- sample ---------------------------------------------------------------

struct SampleArgs {
  Common common;
  std::string model;
  int n = 0, q = 0;
  std::size_t reps = 1000;
  std::uint64_t seed = 1;
  bool gof = false;
  double alpha = 0.001;
  std::uint64_t budget = findep::kDefaultEnumerationBudget;
};

int run_sample(const SampleArgs& a) {
  if (a.n < 3) throw std::invalid_argument("sample requires --n >= 3");
  if (a.q < 3) throw std::invalid_argument("sample requires --q >= 3");
  if (a.reps == 0) throw std::invalid_argument("sample requires --reps >= 1");
  const int n = a.n, q = a.q;
  std::function<findep::Word(findep::RngStream&)> draw;
  if (a.model == "necklace")
    draw = [n, q](findep::RngStream& r) { return findep::necklace_sample(n, q, r); };
  else
    draw = [n, q](findep::RngStream& r) { return findep::eden_sample(n, q, r); };
  std::cerr << "sampling " << a.reps << " " << a.model << " replicates (n=" << n << ", q=" << q
            << ", seed=" << a.seed << ")\n";
  const auto samples = findep::sample_replicates(draw, a.reps, a.seed, a.common.threads);

  if (a.gof) {
    findep::RecurrenceOptions opts;
    opts.enumeration_budget = a.budget;
    opts.threads = a.common.threads;
    findep::RecurrenceEngine engine(opts);
    const findep::ExactDist law = engine.cycle_law(n, q);
    std::map<findep::State, std::uint64_t> counts;
    for (const auto& w : samples) ++counts[w.symbols()];
    const findep::GofReport rep = findep::chi_square_gof(counts, law, a.alpha);
    if (a.common.format == "csv") {
      std::ostringstream os;
      os << "statistic,dof,p_value,alpha,bins,total,pass\n"
         << rep.statistic << ',' << rep.dof << ',' << rep.p_value << ',' << rep.alpha << ','
         << rep.bins << ',' << rep.total << ',' << (rep.pass ? "true" : "false") << '\n';
      emit(a.common, os.str());
    } else {
      json doc{{"schema_version", kSchemaVersion}, {"command", "sample"}, {"model", a.model},
               {"n", n},  {"q", q},  {"reps", a.reps},  {"seed", a.seed},
               {"gof", {{"statistic", rep.statistic}, {"dof", rep.dof}, {"p_value", rep.p_value},
                        {"alpha", rep.alpha}, {"bins", rep.bins}, {"total", rep.total},
                        {"pass", rep.pass}, {"diagnostic", rep.diagnostic}}}};
      emit(a.common, doc.dump(2));
    }
    if (!rep.pass) std::cerr << "goodness of fit rejected: p = " << rep.p_value << "\n";
    return rep.pass ? kOk : kFailed;
  }

  std::ostringstream os;
  if (a.common.format == "json") {
    json list = json::array();
    for (const auto& w : samples) list.push_back(findep::format_state(w.symbols()));
    json doc{{"schema_version", kSchemaVersion}, {"command", "sample"}, {"model", a.model},
             {"n", n}, {"q", q}, {"reps", a.reps}, {"seed", a.seed}, {"samples", list}};
    os << doc.dump(2);
  } else if (a.common.format == "csv") {
    os << "replicate,state\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const std::string s = findep::format_state(samples[i].symbols());
      os << i << ',' << (s.find(',') == std::string::npos ? s : '"' + s + '"') << '\n';
    }
  } else {
    for (const auto& w : samples) os << findep::format_state(w.symbols()) << '\n';
  }
  emit(a.common, os.str());
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string suite;
  findep::VerifyOptions options;
};

int run_verify(const VerifyArgs& a) {
  std::vector<std::string> suites;
  if (a.suite == "all")
    suites = findep::suite_names();
  else
    suites.push_back(a.suite);

  bool all_passed = true;
  json results = json::array();
  for (const auto& name : suites) {
    std::cerr << "verify " << name << " ...\n";
    const findep::SuiteResult r = findep::run_suite(name, a.options);
    all_passed = all_passed && r.passed;
    json item{{"suite", r.name}, {"passed", r.passed}, {"details", r.details}};
    if (!r.passed) {
      item["counterexample"] = r.counterexample;
      std::cerr << "  FAIL " << name << ": " << r.counterexample << "\n";
    }
    results.push_back(item);
  }

  if (a.common.format == "csv") {
    std::ostringstream os;
    os << "suite,passed,counterexample\n";
    for (const auto& item : results) {
      std::string ce = item.value("counterexample", "");
      std::string quoted;
      for (char ch : ce) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      os << item["suite"].get<std::string>() << ',' << (item["passed"].get<bool>() ? "true" : "false")
         << ",\"" << quoted << "\"\n";
    }
    emit(a.common, os.str());
  } else {
    json doc{{"schema_version", kSchemaVersion}, {"command", "verify"}, {"suite", a.suite},
             {"passed", all_passed}, {"results", results}};
    if (a.options.max_n) doc["max_n"] = *a.options.max_n;
    emit(a.common, doc.dump(2));
  }
  return all_passed ? kOk : kFailed;
}

// ---- eden-snapshot --------------------------------------------------------

struct SnapshotArgs {
  Common common;
  int n = 0, q = 0;
  std::uint64_t seed = 1;
};

int run_snapshot(const SnapshotArgs& a) {
  if (a.n < 3) throw std::invalid_argument("eden-snapshot requires --n >= 3");
  if (a.q < 3) throw std::invalid_argument("eden-snapshot requires --q >= 3");
  findep::RngStream rng(a.seed, 0);
  findep::EdenState s = findep::eden_init(a.q, rng);
  for (int len = 3; len < a.n; ++len) s = findep::eden_step(s, rng);
  s.validate();
  if (a.common.format == "csv") {
    std::ostringstream os;
    os << "position,dual_vertex,color\n";
    for (std::size_t i = 0; i < s.outer().size(); ++i)
      os << i + 1 << ',' << s.outer()[i].id << ',' << s.outer()[i].color << '\n';
    emit(a.common, os.str());
  } else {
    json doc = json::parse(s.snapshot_json());
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "eden-snapshot";
    doc["seed"] = a.seed;
    emit(a.common, doc.dump(2));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "findep: exact laws, samplers and identity checks for finitely dependent colorings.\n"
      "Settings resolve as command-line flags, then FINDEP_* environment variables,\n"
      "then built-in defaults.\n"
      "Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exceeded."};
  app.require_subcommand(1);

  ExactArgs ex;
  auto* exact = app.add_subcommand("exact", "Exact law of a coloring process");
  exact->add_option("model", ex.model, "cycle or line")->required()->check(CLI::IsMember({"cycle", "line"}));
  exact->add_option("--n", ex.n, "Cycle length or window length")->required()->envname("FINDEP_N");
  exact->add_option("--q", ex.q, "Number of colors (>= 3)")->required()->envname("FINDEP_Q");
  exact->add_option("--k", ex.k, "Dependence range for the line window law")->envname("FINDEP_K");
  exact->add_option("--budget", ex.budget, "Maximum number of words enumerated")
      ->envname("FINDEP_BUDGET")
      ->capture_default_str();
  add_common(exact, ex.common, "json", {"json", "csv"});

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Draw samples from the necklace or Eden sampler");
  sample->add_option("model", sa.model, "necklace or eden")->required()->check(CLI::IsMember({"necklace", "eden"}));
  sample->add_option("--n", sa.n, "Cycle length (>= 3)")->required()->envname("FINDEP_N");
  sample->add_option("--q", sa.q, "Number of colors (>= 3)")->required()->envname("FINDEP_Q");
  sample->add_option("--reps", sa.reps, "Number of replicates")->envname("FINDEP_REPS")->capture_default_str();
  sample->add_option("--seed", sa.seed, "Base seed")->envname("FINDEP_SEED")->capture_default_str();
  sample->add_flag("--gof", sa.gof, "Run a chi-square fit against the exact law");
  sample->add_option("--alpha", sa.alpha, "Significance level for --gof")
      ->check(CLI::Range(0.0, 1.0))
      ->envname("FINDEP_ALPHA")
      ->capture_default_str();
  sample->add_option("--budget", sa.budget, "Enumeration budget for the exact law")
      ->envname("FINDEP_BUDGET")
      ->capture_default_str();
  add_common(sample, sa.common, "text", {"text", "json", "csv"});

  VerifyArgs va;
  std::vector<std::string> suite_choices = findep::suite_names();
  suite_choices.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run exact identity checks");
  verify->add_option("suite", va.suite, "Suite name or all")->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--max-n", va.options.max_n, "Cap on the largest size in each suite")
      ->envname("FINDEP_MAX_N");
  verify->add_option("--n", va.options.n, "kdep: cycle length");
  verify->add_option("--q", va.options.q, "kdep: number of colors");
  verify->add_option("--k", va.options.k, "kdep: dependence range");
  add_common(verify, va.common, "json", {"json", "csv"});

  SnapshotArgs sn;
  auto* snapshot = app.add_subcommand("eden-snapshot", "Grow one Eden cluster and dump it");
  snapshot->add_option("--n", sn.n, "Outer cycle length (>= 3)")->required()->envname("FINDEP_N");
  snapshot->add_option("--q", sn.q, "Number of colors (>= 3)")->required()->envname("FINDEP_Q");
  snapshot->add_option("--seed", sn.seed, "Seed")->envname("FINDEP_SEED")->capture_default_str();
  add_common(snapshot, sn.common, "json", {"json", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*exact) return run_exact(ex);
    if (*sample) return run_sample(sa);
    if (*verify) return run_verify(va);
    if (*snapshot) return run_snapshot(sn);
  } catch (const findep::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
