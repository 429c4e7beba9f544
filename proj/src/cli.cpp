#include "ssice/cli.hpp"

#include "ssice/acceptance.hpp"
#include "ssice/errors.hpp"
#include "ssice/json_io.hpp"
#include "ssice/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace ssice::cli {

namespace {

using json_io::Json;

const std::vector<std::string> kSubcommands = {"verify", "partition", "sample", "render", "suite"};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

struct SpecArgs {
  std::string model;
  std::optional<int> n;
  int L = 0;
  std::string lambda;
  std::string sigma, tau;
  std::string z;
  std::string q;

  void add(CLI::App* app, bool lambda_required) {
    app->add_option("--model", model, "reflecting | absorbing | signed | positive")->required();
    app->add_option("--n", n, "row pairs (defaults to the number of z values)");
    app->add_option("--L", L, "columns")->required();
    auto* lam = app->add_option("--lambda", lambda, "partition, comma separated");
    if (lambda_required) lam->required();
    app->add_option("--sigma", sigma, "signed permutation of the left boundary colors");
    app->add_option("--tau", tau, "signed permutation of the bottom colors");
    app->add_option("--z", z, "spectral parameters p/q,...")->required();
    app->add_option("--q", q, "deformation parameter")->required();
  }

  LatticeSpec build() const {
    const auto m = parse_model(model);
    if (!m) throw UsageError("unknown model '" + model + "'");
    const ParamPoint point(parse_rational_list(z), parse_rational(q));
    const int rows = static_cast<int>(point.n());
    if (n && *n != rows) throw UsageError("--n is " + std::to_string(*n) + " but " + std::to_string(rows) + " z values given");
    Partition lam;
    if (!lambda.empty())
      lam = parse_partition(lambda);
    else if (*m != Model::UncoloredAbsorbing)
      lam.parts.assign(static_cast<std::size_t>(rows), 0);
    if (!is_colored(*m)) {
      if (!sigma.empty() || !tau.empty()) throw UsageError("--sigma/--tau only apply to colored models");
      return LatticeSpec(*m, L, lam, point);
    }
    const auto sig = sigma.empty() ? SignedPermutation::identity(rows) : parse_signed_permutation(sigma);
    const auto ta = tau.empty() ? SignedPermutation::identity(rows) : parse_signed_permutation(tau);
    return LatticeSpec(*m, L, lam, sig, ta, point);
  }
};

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int run_verify(std::ostream& out, const std::string& relation, std::size_t points, std::uint64_t seed, bool paranoid,
               const std::string& corrupt, unsigned jobs) {
  Json config{{"command", "verify"}, {"relation", relation}, {"points", points}, {"seed", seed},
              {"paranoid", paranoid}, {"jobs", jobs}};
  if (!corrupt.empty()) config["corrupt"] = corrupt;

  RelationReport report;
  const auto fchecks = acceptance::functional_check_ids();
  if (is_relation_id(relation)) {
    RelationOptions options;
    options.jobs = jobs;
    options.paranoid = paranoid;
    if (!corrupt.empty()) {
      const auto f = parse_family(corrupt);
      if (!f) throw UsageError("unknown family '" + corrupt + "'");
      options.system = WeightSystem::corrupted(*f, Rational(1, 7));
    }
    report = run_relation(relation, points, seed, options);
  } else if (std::find(fchecks.begin(), fchecks.end(), relation) != fchecks.end()) {
    if (!corrupt.empty()) throw UsageError("--corrupt only applies to local relations");
    report = acceptance::run_functional_check(relation, points, seed);
  } else {
    throw UsageError("unknown relation '" + relation + "'");
  }
  print(out, {{"config", config}, {"report", json_io::to_json(report)}});
  return report.pass() ? kExitPass : kExitViolation;
}

int run_partition(std::ostream& out, const SpecArgs& a, const std::string& method, bool value_only) {
  const LatticeSpec spec = a.build();
  Rational z;
  if (method == "enumerate")
    z = partition_function(spec);
  else if (method == "transfer")
    z = partition_function_transfer(spec);
  else
    throw UsageError("--method must be enumerate or transfer");
  if (value_only) {
    out << to_string(z) << "\n";
    return kExitPass;
  }
  Json config{{"command", "partition"}};
  config.update(json_io::to_json(spec));
  config["method"] = method;
  print(out, {{"config", config}, {"Z", to_string(z)}});
  return kExitPass;
}

int run_sample(std::ostream& out, const SpecArgs& a, std::uint64_t samples, std::uint64_t seed,
               const std::string& trajectories, unsigned jobs) {
  const LatticeSpec spec = a.build();
  const SamplerConfig cfg{spec, seed, samples};
  const SampleSummary summary = summarize(cfg, jobs);
  const StatisticsReport stats = compare_empirical_to_exact(summary, exact_outcome_probabilities(spec), acceptance::kChiSquareLevel);

  if (!trajectories.empty()) {
    std::ofstream f(trajectories);
    if (!f) throw UsageError("cannot write '" + trajectories + "'");
    const Sampler sampler(spec);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const auto r = sampler.sample(seed, i);
      Json line{{"index", i}, {"outcome", json_io::to_json(r.outcome)},
                {"positions", json_io::to_json(trajectory_from_configuration(r.config), spec.model)}};
      f << line.dump() << "\n";
    }
  }

  Json config{{"command", "sample"}};
  config.update(json_io::to_json(spec));
  config["samples"] = samples;
  config["seed"] = seed;
  config["jobs"] = jobs;
  if (!trajectories.empty()) config["trajectories"] = trajectories;
  const bool pass = stats.pass(acceptance::kZScoreLimit);
  print(out, {{"config", config},
              {"summary", json_io::to_json(summary)},
              {"statistics", json_io::to_json(stats)},
              {"pass", pass}});
  return pass ? kExitPass : kExitViolation;
}

int run_render(std::ostream& out, const SpecArgs& a, const std::string& format, std::optional<std::uint64_t> seed,
               std::uint64_t index) {
  const RenderFormat fmt = parse_render_format(format);
  const LatticeSpec spec = a.build();
  std::optional<Configuration> config;
  if (seed) {
    config = Sampler(spec).sample(*seed, index).config;
  } else {
    // The index-th admissible state in enumeration order.
    std::uint64_t seen = 0;
    enumerate_states(spec, [&](const Configuration& c, const Rational&) {
      if (seen++ == index) config = c;
    });
    if (!config) throw SpecError("spec has " + std::to_string(seen) + " admissible states, index " + std::to_string(index) + " requested");
  }
  out << render_state(spec, *config, fmt);
  return kExitPass;
}

int run_suite(std::ostream& out, std::ostream& err, std::uint64_t seed, const std::vector<int>& only, unsigned jobs) {
  acceptance::Options options{seed, jobs};
  Json results = Json::array();
  bool pass = true;
  for (const auto& c : acceptance::criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto r = acceptance::run_criterion(c, options);
    err << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << "\n";
    pass = pass && r.pass;
    results.push_back(json_io::to_json(r));
  }
  Json config{{"command", "suite"}, {"seed", seed}, {"jobs", jobs}};
  if (!only.empty()) config["only"] = only;
  print(out, {{"config", config}, {"criteria", results}, {"pass", pass}});
  return pass ? kExitPass : kExitViolation;
}

}  // namespace

std::vector<std::string> merge_config(const std::vector<std::string>& args, const std::string& config_text) {
  auto sub = std::find_first_of(args.begin(), args.end(), kSubcommands.begin(), kSubcommands.end());
  std::vector<std::string> global, local;
  std::istringstream in(config_text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError("config line " + std::to_string(lineno) + ": empty key");
    const std::string flag = "--" + key;
    if (has_flag(args, flag)) continue;
    auto& dest = key == "jobs" ? global : local;
    if (value == "true")
      dest.push_back(flag);
    else if (value != "false")
      dest.insert(dest.end(), {flag, value});
  }
  std::vector<std::string> merged(args.begin(), sub);
  merged.insert(merged.end(), global.begin(), global.end());
  if (sub != args.end()) merged.push_back(*sub++);
  merged.insert(merged.end(), local.begin(), local.end());
  merged.insert(merged.end(), sub, args.end());
  return merged;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"stochastic symplectic ice: exact partition functions, identity checks and sampling", "ssice"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  std::string config_path;
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--config", config_path, "flat key = value file; explicit flags win");

  auto* verify = app.add_subcommand("verify", "check a local relation or functional identity at seeded points");
  std::string relation, corrupt;
  std::size_t points = 20;
  std::uint64_t seed = 1;
  bool paranoid = false;
  verify->add_option("--relation", relation, "relation id")->required();
  verify->add_option("--points", points, "random points");
  verify->add_option("--seed", seed, "seed");
  verify->add_flag("--paranoid", paranoid, "widen the colored alphabet by one label");
  verify->add_option("--corrupt", corrupt)->group("");

  auto* partition = app.add_subcommand("partition", "exact partition function");
  SpecArgs pargs;
  pargs.add(partition, true);
  std::string method = "enumerate";
  bool value_only = false;
  partition->add_option("--method", method, "enumerate | transfer");
  partition->add_flag("--value-only", value_only, "print only Z");

  auto* sample = app.add_subcommand("sample", "Monte Carlo summary against exact probabilities");
  SpecArgs sargs;
  sargs.add(sample, false);
  std::uint64_t samples = 10000, sample_seed = 1;
  std::string trajectories;
  sample->add_option("--samples", samples, "number of samples");
  sample->add_option("--seed", sample_seed, "seed");
  sample->add_option("--trajectories", trajectories, "write one JSON line per sample to this file");

  auto* render = app.add_subcommand("render", "draw one state");
  SpecArgs rargs;
  rargs.add(render, false);
  std::string format = "ascii";
  std::optional<std::uint64_t> render_seed;
  std::uint64_t index = 0;
  render->add_option("--format", format, "ascii | svg");
  render->add_option("--seed", render_seed, "draw a sampled state instead of an enumerated one");
  render->add_option("--index", index, "state or sample index");

  auto* suite = app.add_subcommand("suite", "full acceptance battery");
  std::uint64_t suite_seed = acceptance::Options{}.seed;
  std::vector<int> only;
  suite->add_option("--seed", suite_seed, "seed");
  suite->add_option("--only", only, "criterion ids")->delimiter(',');

  try {
    std::vector<std::string> args = raw_args;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
      else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    }
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw UsageError("cannot read config '" + config_path + "'");
      std::stringstream text;
      text << f.rdbuf();
      args = merge_config(args, text.str());
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (verify->parsed()) return run_verify(out, relation, points, seed, paranoid, corrupt, jobs);
    if (partition->parsed()) return run_partition(out, pargs, method, value_only);
    if (sample->parsed()) return run_sample(out, sargs, samples, sample_seed, trajectories, jobs);
    if (render->parsed()) return run_render(out, rargs, format, render_seed, index);
    return run_suite(out, err, suite_seed, only, jobs);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const SoundnessError& e) {
    err << "soundness failure: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ssice::cli
