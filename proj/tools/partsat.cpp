// Command-line front end: formula statistics, sum-satisfiability analysis,
// partition decisions, brute-force oracles, instance generation, and corpus
// screening. JSON on stdout by default; see --help per subcommand.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "partsat/decide.hpp"
#include "partsat/dimacs.hpp"
#include "partsat/generate.hpp"
#include "partsat/kernels.hpp"
#include "partsat/nae.hpp"
#include "partsat/oracle.hpp"
#include "partsat/report.hpp"
#include "partsat/screen.hpp"
#include "partsat/sigma.hpp"

namespace {

using namespace partsat;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitBudget = 4;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOpts {
  std::string path;
  std::string format = "auto";
  bool permissive = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", path, "input formula (.cnf DIMACS, .mat matrix grid)")
        ->required();
    cmd->add_option("--format", format, "force input format")
        ->check(CLI::IsMember({"auto", "dimacs", "matrix"}));
    cmd->add_flag("--permissive", permissive,
                  "keep duplicate identical literals instead of rejecting them");
  }

  Formula load() const {
    FileFormat ff = FileFormat::Auto;
    if (format == "dimacs")
      ff = FileFormat::Dimacs;
    else if (format == "matrix")
      ff = FileFormat::Matrix;
    return parse_file(path, ff, BuildOptions{permissive});
  }
};

struct PartitionOpts {
  std::string mu;
  bool one_in_k = false;
  std::int32_t l = -1;

  void attach(CLI::App* cmd) {
    auto* mu_opt = cmd->add_option("--mu", mu,
                                   "partition as comma-separated counts, index = "
                                   "true literals per clause; 'm' = clause count");
    auto* one_opt = cmd->add_flag("--one-in-k", one_in_k,
                                  "require exactly one true literal per clause");
    auto* l_opt = cmd->add_option("--l-in-k", l,
                                  "require exactly L true literals per clause");
    mu_opt->excludes(one_opt)->excludes(l_opt);
    one_opt->excludes(l_opt);
  }

  PartitionSpec to_spec() const {
    if (one_in_k)
      return PartitionSpec::one_in_k();
    if (l >= 0)
      return PartitionSpec::l_in_k(l);
    if (!mu.empty())
      return PartitionSpec::parse_mu(mu);
    throw UsageError("one of --mu, --one-in-k, --l-in-k is required");
  }
};

std::uint64_t budget_from_env() {
  const char* env = std::getenv("PARTSAT_BUDGET");
  if (env == nullptr)
    return kDefaultBudget;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0)
    throw UsageError("PARTSAT_BUDGET must be a positive integer");
  return static_cast<std::uint64_t>(value);
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

void emit(const json& value, bool human) {
  if (human) {
    // flat key: value lines; nested objects fall back to compact JSON
    for (const auto& [key, v] : value.items())
      std::cout << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                << "\n";
  } else {
    std::cout << value.dump(2) << "\n";
  }
}

int exit_code(const Decision& d) {
  switch (d.verdict) {
  case Verdict::Yes:
    return kExitYes;
  case Verdict::No:
    return kExitNo;
  case Verdict::Inapplicable:
    return kExitInapplicable;
  }
  return kExitInput;
}

std::vector<std::uint64_t> binomial_row(std::int32_t n) {
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (std::int32_t i = 1; i <= n; ++i)
    for (std::int32_t k = i; k >= 1; --k)
      row[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k) - 1];
  return row;
}

int run(int argc, char** argv) {
  CLI::App app{"CNF sum-satisfiability toolkit"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand
  app.set_version_flag("--version", std::string("partsat 1.0 (kernels: ") +
                                        kernels::active_backend() + ")");
  bool human = false;
  app.add_flag("--human", human, "key/value text instead of JSON");

  std::uint64_t budget = budget_from_env();

  // ---- stats ----
  auto* stats_cmd = app.add_subcommand("stats", "occurrence statistics");
  auto stats_in = std::make_shared<InputOpts>();
  stats_in->attach(stats_cmd);
  stats_cmd->callback([&, stats_in] {
    Formula f = stats_in->load();
    emit(to_json(f.stats()), human);
  });

  // ---- classify ----
  auto* classify_cmd = app.add_subcommand("classify", "syntactic class flags");
  auto classify_in = std::make_shared<InputOpts>();
  classify_in->attach(classify_cmd);
  classify_cmd->callback([&, classify_in] {
    Formula f = classify_in->load();
    emit(to_json(classify(f)), human);
  });

  // ---- sigma ----
  auto* sigma_cmd = app.add_subcommand(
      "sigma", "sum satisfiability: extremes, or the value under --assign");
  auto sigma_in = std::make_shared<InputOpts>();
  sigma_in->attach(sigma_cmd);
  auto sigma_assign = std::make_shared<std::string>();
  sigma_cmd->add_option("--assign", *sigma_assign,
                        "assignment: 'all-true', 'all-false', or signs '-1,1,...' "
                        "(use --assign=-1,... for leading minus)");
  sigma_cmd->callback([&, sigma_in, sigma_assign] {
    Formula f = sigma_in->load();
    if (sigma_assign->empty()) {
      emit(to_json(sigma_extremes(f)), human);
      return;
    }
    Assignment x = Assignment::parse(*sigma_assign, f.var_count());
    json out{{"sigma", sigma(f, x)}, {"per_clause", sigma_per_clause(f, x)}};
    emit(out, human);
  });

  // ---- hist ----
  auto* hist_cmd = app.add_subcommand("hist", "sigma histogram over all assignments");
  auto hist_in = std::make_shared<InputOpts>();
  hist_in->attach(hist_cmd);
  auto hist_csv = std::make_shared<bool>(false);
  auto hist_limit = std::make_shared<std::int32_t>(kDefaultEnumLimit);
  auto hist_out = std::make_shared<std::string>();
  hist_cmd->add_flag("--csv", *hist_csv, "CSV (sigma,count) instead of JSON");
  hist_cmd->add_option("--limit", *hist_limit, "enumeration limit on variables");
  hist_cmd->add_option("-o,--output", *hist_out, "write to file instead of stdout");
  hist_cmd->callback([&, hist_in, hist_csv, hist_limit, hist_out] {
    Formula f = hist_in->load();
    SigmaHistogram hist = sigma_histogram(f, *hist_limit);
    write_output(*hist_out, *hist_csv ? histogram_csv(hist)
                                      : histogram_json(hist).dump(2) + "\n");
  });

  // ---- dist-check ----
  auto* dist_cmd = app.add_subcommand(
      "dist-check", "compare the sigma histogram against binomial(n, k) counts");
  auto dist_in = std::make_shared<InputOpts>();
  dist_in->attach(dist_cmd);
  auto dist_limit = std::make_shared<std::int32_t>(kDefaultEnumLimit);
  dist_cmd->add_option("--limit", *dist_limit, "enumeration limit on variables");
  auto dist_fail = std::make_shared<bool>(false);
  dist_cmd->callback([&, dist_in, dist_limit, dist_fail] {
    Formula f = dist_in->load();
    ClassFlags flags = classify(f);
    bool applicable = flags.completely_mixed && flags.exact_read_p &&
                      *flags.exact_read_p == 3;
    if (!applicable)
      std::cout << "note: formula is not completely mixed exact READ-3; the "
                   "binomial law is not guaranteed\n";
    SigmaHistogram hist = sigma_histogram(f, *dist_limit);
    std::int32_t n = f.var_count();
    auto binom = binomial_row(n);
    bool all_match = true;
    std::uint64_t covered = 0;
    for (std::int32_t k = 0; k <= n; ++k) {
      auto it = hist.find(n + k);
      std::uint64_t got = it == hist.end() ? 0 : it->second;
      covered += got;
      bool match = got == binom[static_cast<std::size_t>(k)];
      all_match = all_match && match;
      std::cout << "sigma=" << n + k << " count=" << got
                << " binomial=" << binom[static_cast<std::size_t>(k)]
                << (match ? "" : "  MISMATCH") << "\n";
    }
    // any sigma mass outside [n, 2n] also breaks the law
    std::uint64_t total = 0;
    for (const auto& [value, count] : hist)
      total += count;
    all_match = all_match && covered == total;
    std::cout << (all_match ? "PASS" : "FAIL") << "\n";
    *dist_fail = !all_match;
  });

  // ---- decide ----
  auto* decide_cmd = app.add_subcommand(
      "decide", "decide the partition problem via the sigma-extreme criterion");
  auto decide_in = std::make_shared<InputOpts>();
  decide_in->attach(decide_cmd);
  auto decide_part = std::make_shared<PartitionOpts>();
  decide_part->attach(decide_cmd);
  decide_cmd->add_option("--budget", budget, "max candidate assignments to check");
  auto decide_code = std::make_shared<int>(0);
  decide_cmd->callback([&, decide_in, decide_part, decide_code] {
    Formula f = decide_in->load();
    Partition p = decide_part->to_spec().resolve(f);
    Decision d = decide(f, p, budget);
    emit(to_json(d), human);
    *decide_code = exit_code(d);
  });

  // ---- oracle ----
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force ground truth for the partition problem");
  auto oracle_in = std::make_shared<InputOpts>();
  oracle_in->attach(oracle_cmd);
  auto oracle_part = std::make_shared<PartitionOpts>();
  oracle_part->attach(oracle_cmd);
  auto oracle_limit = std::make_shared<std::int32_t>(kDefaultEnumLimit);
  oracle_cmd->add_option("--limit", *oracle_limit, "enumeration limit on variables");
  auto oracle_code = std::make_shared<int>(0);
  oracle_cmd->callback([&, oracle_in, oracle_part, oracle_limit, oracle_code] {
    Formula f = oracle_in->load();
    Partition p = oracle_part->to_spec().resolve(f);
    OracleResult result = brute_partsat(f, p, *oracle_limit);
    emit(to_json(result), human);
    *oracle_code = result.witnesses.empty() ? kExitNo : kExitYes;
  });

  // ---- nae-check ----
  auto* nae_cmd = app.add_subcommand(
      "nae-check", "test the quadratic NAE necessary condition on an assignment");
  auto nae_in = std::make_shared<InputOpts>();
  nae_in->attach(nae_cmd);
  auto nae_assign = std::make_shared<std::string>();
  nae_cmd->add_option("--assign", *nae_assign, "assignment to test")->required();
  auto nae_code = std::make_shared<int>(0);
  nae_cmd->callback([&, nae_in, nae_assign, nae_code] {
    Formula f = nae_in->load();
    Assignment x = Assignment::parse(*nae_assign, f.var_count());
    bool holds = nae_condition(f, x);
    emit(json{{"nae_condition", holds}}, human);
    *nae_code = holds ? kExitYes : kExitNo;
  });

  // ---- nae-sweep ----
  auto* sweep_cmd = app.add_subcommand(
      "nae-sweep", "decide {0,mu,m-mu,0} for every mu of an exact 3-CNF");
  auto sweep_in = std::make_shared<InputOpts>();
  sweep_in->attach(sweep_cmd);
  sweep_cmd->add_option("--budget", budget, "max candidate assignments per mu");
  auto sweep_code = std::make_shared<int>(0);
  sweep_cmd->callback([&, sweep_in, sweep_code] {
    Formula f = sweep_in->load();
    NaeSweepReport report = nae_sweep(f, budget);
    emit(to_json(report), human);
    if (!report.nae_decided)
      *sweep_code = kExitInapplicable;
    else
      *sweep_code = *report.nae_satisfiable ? kExitYes : kExitNo;
  });

  // ---- mu-matrix ----
  auto* mu_cmd = app.add_subcommand(
      "mu-matrix", "variable-pair couplings as triangular CSV");
  auto mu_in = std::make_shared<InputOpts>();
  mu_in->attach(mu_cmd);
  auto mu_out = std::make_shared<std::string>();
  mu_cmd->add_option("-o,--output", *mu_out, "write to file instead of stdout");
  mu_cmd->callback([&, mu_in, mu_out] {
    Formula f = mu_in->load();
    write_output(*mu_out, mu_matrix_csv(mu_matrix(f)));
  });

  // ---- screen ----
  auto* screen_cmd = app.add_subcommand(
      "screen", "screen a directory of .cnf files for criterion applicability");
  auto screen_dir = std::make_shared<std::string>();
  screen_cmd->add_option("dir", *screen_dir, "directory of .cnf files")->required();
  auto screen_part = std::make_shared<PartitionOpts>();
  screen_part->attach(screen_cmd);
  auto screen_jobs = std::make_shared<int>(1);
  auto screen_csv = std::make_shared<bool>(false);
  auto screen_no_times = std::make_shared<bool>(false);
  auto screen_out = std::make_shared<std::string>();
  screen_cmd->add_option("--jobs", *screen_jobs, "worker threads")->check(CLI::PositiveNumber);
  screen_cmd->add_flag("--csv", *screen_csv, "CSV rows instead of JSON");
  screen_cmd->add_flag("--no-times", *screen_no_times,
                       "blank the elapsed_ms column (byte-stable output)");
  screen_cmd->add_option("-o,--output", *screen_out, "write to file instead of stdout");
  screen_cmd->add_option("--budget", budget, "max candidate assignments per file");
  screen_cmd->callback([&, screen_dir, screen_part, screen_jobs, screen_csv,
                        screen_no_times, screen_out] {
    PartitionSpec spec = screen_part->to_spec();
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(*screen_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".cnf")
        paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());

    auto records = screen_files(paths, spec, *screen_jobs, budget);
    ScreenSummary summary = summarize(records);
    bool times = !*screen_no_times;
    if (*screen_csv) {
      std::string out = screen_csv_header();
      for (const ScreenRecord& r : records)
        out += screen_csv_row(r, times);
      write_output(*screen_out, out);
    } else {
      json out = json::object();
      out["records"] = json::array();
      for (const ScreenRecord& r : records)
        out["records"].push_back(to_json(r, times));
      out["summary"] = to_json(summary);
      write_output(*screen_out, out.dump(2) + "\n");
    }
    std::cerr << "screened " << summary.total << " files: at_min=" << summary.at_min
              << " at_max=" << summary.at_max
              << " out_of_range=" << summary.out_of_range
              << " between=" << summary.between << " errors=" << summary.errors
              << "\n";
  });

  // ---- gen ----
  auto* gen_cmd = app.add_subcommand("gen", "generate instances (DIMACS out)");
  auto gen_fixture = std::make_shared<std::string>();
  auto gen_sq = std::make_shared<std::int32_t>(0);
  auto gen_rand = std::make_shared<std::vector<std::int64_t>>();
  auto gen_class = std::make_shared<std::vector<std::int64_t>>();
  auto gen_seed = std::make_shared<std::uint64_t>(1);
  auto gen_out = std::make_shared<std::string>();
  std::string fixture_help = "built-in instance, one of:";
  for (std::string_view name : fixture_names())
    fixture_help += std::string(" ") + std::string(name);
  auto* fx_opt = gen_cmd->add_option("--fixture", *gen_fixture, fixture_help);
  auto* sq_opt = gen_cmd->add_option("--square-mixed-read3", *gen_sq,
                                     "square completely mixed exact READ-3 with N variables");
  auto* rand_opt = gen_cmd->add_option("--random", *gen_rand,
                                       "random exact k-CNF: M N K")->expected(3);
  auto* class_opt = gen_cmd->add_option("--random-class", *gen_class,
                                        "random capped instance: M N K_MAX P_MAX")->expected(4);
  fx_opt->excludes(sq_opt)->excludes(rand_opt)->excludes(class_opt);
  sq_opt->excludes(rand_opt)->excludes(class_opt);
  rand_opt->excludes(class_opt);
  gen_cmd->add_option("--seed", *gen_seed, "generator seed");
  gen_cmd->add_option("-o,--output", *gen_out, "write to file instead of stdout");
  gen_cmd->callback([&, gen_fixture, gen_sq, gen_rand, gen_class, gen_seed, gen_out] {
    std::optional<Formula> f;
    if (!gen_fixture->empty())
      f = fixture(*gen_fixture);
    else if (*gen_sq > 0)
      f = gen_square_mixed_read3(*gen_sq, *gen_seed);
    else if (gen_rand->size() == 3)
      f = gen_random_cnf((*gen_rand)[0], static_cast<std::int32_t>((*gen_rand)[1]),
                         static_cast<std::int32_t>((*gen_rand)[2]), *gen_seed);
    else if (gen_class->size() == 4)
      f = gen_random_class((*gen_class)[0], static_cast<std::int32_t>((*gen_class)[1]),
                           static_cast<std::int32_t>((*gen_class)[2]),
                           static_cast<std::int32_t>((*gen_class)[3]), *gen_seed);
    else
      throw UsageError("one of --fixture, --square-mixed-read3, --random, "
                       "--random-class is required");
    write_output(*gen_out, write_dimacs(*f));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*decide_code != 0)
    return *decide_code;
  if (*oracle_code != 0)
    return *oracle_code;
  if (*nae_code != 0)
    return *nae_code;
  if (*sweep_code != 0)
    return *sweep_code;
  if (*dist_fail)
    return kExitNo;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
