// apmads: run, benchmark and profile the adaptive-precision MADS solvers.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <regex>
#include <thread>

#include <CLI11.hpp>

#include "apmads/config.hpp"
#include "apmads/errors.hpp"
#include "apmads/invariants.hpp"
#include "apmads/problems.hpp"
#include "apmads/profiles.hpp"
#include "apmads/run_log.hpp"
#include "apmads/solver.hpp"

namespace fs = std::filesystem;
using namespace apmads;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailure = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kAlgorithms = {"dpmads", "mpmads", "fixed"};

void require_algorithm(const std::string& algo) {
  if (std::find(kAlgorithms.begin(), kAlgorithms.end(), algo) == kAlgorithms.end())
    throw UsageError("unknown algorithm '" + algo + "'; available: dpmads mpmads fixed");
}

std::unique_ptr<Problem> problem_or_usage(const std::string& name) {
  try {
    return make_problem(name);
  } catch (const UnknownProblem& e) {
    throw UsageError(e.what());
  }
}

struct SolveOptions {
  std::string config_file;
  double budget = kInf;
  double stop_delta_p = -1.0;  // < 0: problem default
  double sigma_fixed = 1e-3;
  std::size_t max_iterations = 0;  // 0: config default
};

SolverConfig build_config(const std::string& algo, const Problem& problem, std::uint64_t seed,
                          const SolveOptions& opt) {
  const Variant v = algo == "mpmads" ? Variant::MP : Variant::DP;
  SolverConfig config = SolverConfig::defaults(v, problem);
  if (!opt.config_file.empty()) apply_config(read_config_file(opt.config_file), config);
  config.seed = seed;
  if (std::isfinite(opt.budget)) config.stop_draws = opt.budget;
  if (opt.stop_delta_p >= 0.0) config.stop_delta_p = opt.stop_delta_p;
  if (opt.max_iterations > 0) config.max_iterations = opt.max_iterations;
  if (algo != "fixed" && config.enforce_sigma_min_rule())
    std::cerr << "note: sigma_min forced to 0 because the search step is disabled\n";
  return config;
}

RunOutput solve(const std::string& algo, const Problem& problem, const SolverConfig& config,
                const SolveOptions& opt) {
  if (algo == "fixed") return run_fixed_precision_baseline(problem, opt.sigma_fixed, config);
  return run(problem, config);
}

std::string log_name(const std::string& problem, const std::string& algo, std::uint64_t seed) {
  return problem + "__" + algo + "__s" + std::to_string(seed) + ".csv";
}

void add_solve_flags(CLI::App* cmd, SolveOptions& opt) {
  cmd->add_option("--config", opt.config_file, "key = value config file")->check(CLI::ExistingFile);
  cmd->add_option("--budget", opt.budget, "stop once cumulative draws reach this value");
  cmd->add_option("--stop-delta-p", opt.stop_delta_p, "stop when the frame size drops below this");
  cmd->add_option("--sigma-fixed", opt.sigma_fixed, "noise level of the fixed-precision baseline");
  cmd->add_option("--max-iterations", opt.max_iterations, "iteration cap");
}

// --- run -------------------------------------------------------------------

struct RunArgs {
  std::string problem;
  std::string algo = "dpmads";
  std::uint64_t seed = 0;
  std::string out;
  std::string cache_dump;
  SolveOptions solve;
};

int cmd_run(const RunArgs& a) {
  require_algorithm(a.algo);
  const auto problem = problem_or_usage(a.problem);
  const SolverConfig config = build_config(a.algo, *problem, a.seed, a.solve);
  const RunOutput result = solve(a.algo, *problem, config, a.solve);

  if (!a.out.empty()) write_log_file(a.out, result.log, problem->dimension());
  if (!a.cache_dump.empty()) {
    std::ofstream dump(a.cache_dump);
    write_cache_dump(dump, result.cache, problem->dimension());
  }
  std::cout << "problem " << problem->name() << " algo " << a.algo << " seed " << a.seed << '\n'
            << "iterations " << result.log.size() << '\n'
            << "draws " << format_double(result.total_draws) << '\n'
            << "incumbent";
  for (double c : result.incumbent.coords()) std::cout << ' ' << format_double(c);
  std::cout << "\nf_true " << format_double(problem->truth(result.incumbent)) << '\n';
  return kOk;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> problems = {"norm2", "moustache"};
  std::vector<std::string> algos = {"dpmads", "mpmads"};
  std::size_t seeds = 10;
  std::uint64_t first_seed = 0;
  std::string out_dir = "logs";
  unsigned jobs = 0;
  SolveOptions solve;
};

int cmd_bench(const BenchArgs& a) {
  for (const auto& algo : a.algos) require_algorithm(algo);
  std::vector<std::unique_ptr<Problem>> problems;
  for (const auto& name : a.problems) problems.push_back(problem_or_usage(name));
  fs::create_directories(a.out_dir);

  struct Task {
    const Problem* problem;
    std::string algo;
    std::uint64_t seed;
  };
  struct Row {
    std::string line;
    bool ok = false;
  };
  std::vector<Task> tasks;
  for (const auto& p : problems)
    for (const auto& algo : a.algos)
      for (std::size_t s = 0; s < a.seeds; ++s) tasks.push_back({p.get(), algo, a.first_seed + s});

  std::vector<Row> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex console;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      const std::string file = log_name(t.problem->name(), t.algo, t.seed);
      try {
        const auto start = std::chrono::steady_clock::now();
        const SolverConfig config = build_config(t.algo, *t.problem, t.seed, a.solve);
        const RunOutput result = solve(t.algo, *t.problem, config, a.solve);
        write_log_file((fs::path(a.out_dir) / file).string(), result.log, t.problem->dimension());
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows[i] = {t.problem->name() + ',' + t.algo + ',' + std::to_string(t.seed) + ',' + file + ',' +
                       std::to_string(result.log.size()) + ',' + format_double(result.total_draws) +
                       ',' + format_double(t.problem->truth(result.incumbent)) + ',' +
                       format_double(secs),
                   true};
        std::lock_guard lock(console);
        std::cerr << file << ": " << result.log.size() << " iterations, "
                  << format_double(result.total_draws) << " draws\n";
      } catch (const std::exception& e) {
        std::lock_guard lock(console);
        std::cerr << file << ": failed: " << e.what() << '\n';
      }
    }
  };
  const unsigned n_workers =
      std::max(1u, a.jobs ? a.jobs : std::thread::hardware_concurrency());
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(n_workers, tasks.size()); ++w) pool.emplace_back(worker);
  pool.clear();

  std::ofstream manifest(fs::path(a.out_dir) / "manifest.csv");
  manifest << "problem,algo,seed,log,iterations,draws,f_true_final,seconds\n";
  bool all_ok = true;
  for (const auto& row : rows) {
    if (row.ok) manifest << row.line << '\n';
    all_ok = all_ok && row.ok;
  }
  return all_ok ? kOk : kFailure;
}

// --- profile ---------------------------------------------------------------

struct ProfileArgs {
  std::vector<std::string> logs;
  std::string manifest;
  std::vector<double> taus = {1e-3};
  double sigma_ref = 1e-3;
  std::string out_dir = ".";
  bool log_budget = false;
};

struct LogRef {
  std::string path;
  std::string problem;
  std::string algo;
  std::uint64_t seed;
};

LogRef parse_log_name(const std::string& path) {
  static const std::regex pattern(R"(^([A-Za-z0-9_-]+?)__([A-Za-z0-9_-]+)__s([0-9]+)\.csv$)");
  std::smatch m;
  const std::string name = fs::path(path).filename().string();
  if (!std::regex_match(name, m, pattern))
    throw UsageError("log '" + path + "' is not named <problem>__<algo>__s<seed>.csv; use --manifest");
  return {path, m[1], m[2], std::stoull(m[3])};
}

std::vector<LogRef> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open manifest '" + path + "'");
  std::vector<LogRef> refs;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string problem, algo, seed, log;
    std::getline(ss, problem, ',');
    std::getline(ss, algo, ',');
    std::getline(ss, seed, ',');
    std::getline(ss, log, ',');
    refs.push_back({(fs::path(path).parent_path() / log).string(), problem, algo, std::stoull(seed)});
  }
  return refs;
}

void write_profile(const fs::path& file, const std::string& x_name, const Profile& profile) {
  std::ofstream out(file);
  out << x_name << ",algo,fraction\n";
  for (double x : breakpoints(profile))
    for (const auto& [algo, f] : profile) out << format_double(x) << ',' << algo << ',' << format_double(f(x)) << '\n';
}

std::string tau_suffix(const ProfileArgs& a, double tau) {
  if (a.taus.size() == 1) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "_tau%g", tau);
  return buf;
}

int cmd_profile(const ProfileArgs& a) {
  std::vector<LogRef> refs;
  if (!a.manifest.empty()) refs = read_manifest(a.manifest);
  for (const auto& path : a.logs) refs.push_back(parse_log_name(path));
  if (refs.empty()) throw UsageError("no logs given");
  std::sort(refs.begin(), refs.end(), [](const LogRef& x, const LogRef& y) {
    return std::tie(x.problem, x.algo, x.seed, x.path) < std::tie(y.problem, y.algo, y.seed, y.path);
  });

  std::vector<RunResult> results;
  std::map<std::string, std::unique_ptr<Problem>> problems;
  for (const auto& ref : refs) {
    auto& problem = problems[ref.problem];
    if (!problem) problem = problem_or_usage(ref.problem);
    results.push_back(make_run_result(ref.algo, *problem, ref.seed, read_log_file(ref.path)));
  }

  const fs::path out_dir(a.out_dir);
  fs::create_directories(out_dir / "conv");
  for (double tau : a.taus) {
    const std::string suffix = tau_suffix(a, tau);
    write_profile(out_dir / ("perf" + suffix + ".csv"), "alpha", performance_profile(results, tau, a.log_budget));
    write_profile(out_dir / ("data" + suffix + ".csv"), "groups", data_profile(results, tau, a.sigma_ref));
  }

  std::ofstream acc(out_dir / "acc.csv");
  acc << "budget,algo,problem,seed,f_acc\n";
  for (const auto& run : results) {
    const auto trace = accuracy_trace(run);
    for (std::size_t i = 0; i < trace.size(); ++i)
      acc << format_double(run.log[i].draws) << ',' << run.algorithm << ',' << run.problem << ','
          << run.seed << ',' << format_double(trace[i]) << '\n';

    std::ofstream conv(out_dir / "conv" / log_name(run.problem, run.algorithm, run.seed));
    conv << "draws,f_true_inc,f_inc,sig_inc\n";
    for (std::size_t i = 0; i < run.log.size(); ++i)
      conv << format_double(run.log[i].draws) << ',' << format_double(run.truth[i]) << ','
           << format_double(run.log[i].f_inc) << ',' << format_double(run.log[i].sig_inc) << '\n';
  }
  return kOk;
}

// --- validate --------------------------------------------------------------

struct ValidateArgs {
  std::string log;
  std::string variant;
  double beta_l = -1.0;
  double beta_u = -1.0;
};

int cmd_validate(const ValidateArgs& a) {
  const auto log = read_log_file(a.log);
  LogCheckOptions options;
  if (!a.variant.empty()) {
    Variant v;
    try {
      v = parse_variant(a.variant);
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
    PrecisionPolicy policy = PrecisionPolicy::defaults(v);
    if (a.beta_l >= 0.0) policy.beta_l = a.beta_l;
    if (a.beta_u >= 0.0) policy.beta_u = a.beta_u;
    options.policy = policy;
  }
  const auto issues = check_log(log, options);
  for (const auto& issue : issues) std::cout << issue << '\n';
  std::cout << log.size() << " records, " << issues.size() << " violations\n";
  return issues.empty() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive-precision MADS (DPMADS / MPMADS) solver and benchmark tools"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "solve one problem");
  run_cmd->add_option("--problem", run_args.problem, "problem name (norm2, moustache)")->required();
  run_cmd->add_option("--algo", run_args.algo, "dpmads, mpmads or fixed");
  run_cmd->add_option("--seed", run_args.seed, "random seed");
  run_cmd->add_option("--out", run_args.out, "run log CSV");
  run_cmd->add_option("--cache-dump", run_args.cache_dump, "write the final cache as CSV");
  add_solve_flags(run_cmd, run_args.solve);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "problems x algorithms x seeds, in parallel");
  bench_cmd->add_option("--problems", bench_args.problems)->delimiter(',');
  bench_cmd->add_option("--algos", bench_args.algos)->delimiter(',');
  bench_cmd->add_option("--seeds", bench_args.seeds, "number of seeds per pair");
  bench_cmd->add_option("--first-seed", bench_args.first_seed);
  bench_cmd->add_option("--out-dir", bench_args.out_dir);
  bench_cmd->add_option("--jobs", bench_args.jobs, "worker threads (default: hardware threads)");
  add_solve_flags(bench_cmd, bench_args.solve);

  ProfileArgs profile_args;
  auto* profile_cmd = app.add_subcommand("profile", "performance/data/accuracy profiles from logs");
  profile_cmd->add_option("logs", profile_args.logs, "<problem>__<algo>__s<seed>.csv files");
  profile_cmd->add_option("--manifest", profile_args.manifest, "bench manifest.csv");
  profile_cmd->add_option("--tau", profile_args.taus, "tolerances")->delimiter(',');
  profile_cmd->add_option("--sigma-ref", profile_args.sigma_ref, "reference sigma for data profiles");
  profile_cmd->add_option("--out-dir", profile_args.out_dir);
  profile_cmd->add_flag("--log-budget", profile_args.log_budget,
                        "use log10 budgets in performance ratios");

  ValidateArgs validate_args;
  auto* validate_cmd = app.add_subcommand("validate", "check run-log invariants");
  validate_cmd->add_option("log", validate_args.log)->required();
  validate_cmd->add_option("--variant", validate_args.variant, "mp or dp: also check C_MP / C_DP");
  validate_cmd->add_option("--beta-l", validate_args.beta_l);
  validate_cmd->add_option("--beta-u", validate_args.beta_u);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run_args);
    if (*bench_cmd) return cmd_bench(bench_args);
    if (*profile_cmd) return cmd_profile(profile_args);
    if (*validate_cmd) return cmd_validate(validate_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
