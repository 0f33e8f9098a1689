#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lodeg/cli.hpp"
#include "lodeg/errors.hpp"
#include "lodeg/parse.hpp"

namespace lodeg::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kCommands{"lodeg",         "bidegrees",          "sectional",
                                         "polar",         "chern_mather",       "euler_obstruction",
                                         "dual_infinity", "correspondence",     "verify"};

class Stages {
public:
  explicit Stages(bool enabled) : enabled_(enabled) {}

  template <class Fn>
  auto run(const std::string& name, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    auto result = fn();
    if (enabled_) {
      timings_[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return result;
  }

  json to_json() const { return timings_; }

private:
  bool enabled_;
  json timings_ = json::object();
};

std::vector<mpq_class> parse_covector(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("--covector: empty entry in '" + text + "'");
    item = item.substr(b, e - b + 1);
    mpq_class q;
    if (q.set_str(item, 10) != 0 || item.find_first_not_of("+-0123456789/") != std::string::npos) {
      throw InputError("--covector: '" + item + "' is not a rational number");
    }
    if (q.get_den() == 0) throw InputError("--covector: zero denominator");
    q.canonicalize();
    out.push_back(q);
  }
  if (out.empty()) throw InputError("--covector: no entries");
  return out;
}

Overrides overrides_of(const Options& opts, const VarietySpec& spec) {
  Overrides over;
  if (opts.covector) over.covector = parse_covector(*opts.covector);
  if (!opts.slices.empty()) {
    std::vector<QPoly> forms;
    for (const auto& s : opts.slices) {
      try {
        forms.push_back(parse_polynomial(s, spec.variables, RationalField{}));
      } catch (const ParseError& e) {
        throw InputError("--slice '" + s + "': " + e.what());
      }
    }
    over.slice = std::move(forms);
  }
  return over;
}

json check_json(const VerificationReport& r) {
  return json{{"identity", r.identity}, {"pass", r.pass}, {"left", r.left}, {"right", r.right}, {"detail", r.detail}};
}

json input_json(const VarietyFile& file, int d) {
  json polys = json::array();
  for (const auto& g : file.spec.generators) polys.push_back(g.to_string(file.spec.variables));
  return json{{"path", file.path},
              {"digest", file.digest},
              {"variables", file.spec.variables},
              {"polynomials", polys},
              {"assumed_irreducible", file.spec.assumed_irreducible},
              {"n", file.spec.n()},
              {"d", d}};
}

std::string render_value(const json& v) {
  if (v.is_array()) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + render_value(v[k]);
    return "(" + s + ")";
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

json run_command(const Options& opts, int& exit_code) {
  exit_code = 0;
  VarietyFile file = load_variety_file(opts.input);
  const VarietySpec& spec = file.spec;

  RunConfig cfg;
  cfg.seed = Seed{opts.seed};
  if (!opts.primes.empty()) cfg.policy.primes = opts.primes;
  for (auto p : cfg.policy.primes) validate_working_prime(p);
  if (opts.trials == 0) throw InputError("--trials must be at least 1");
  cfg.policy.seeds_per_trial = opts.trials;
  cfg.budget = opts.budget_secs > 0 ? Budget::seconds(opts.budget_secs) : Budget::unlimited();

  const int d = reduce_variety(spec, PrimeField(cfg.policy.primes.front()), cfg.budget).dimension;
  Overrides over = overrides_of(opts, spec);
  Stages stages(opts.timings);
  json results = json::object();
  json warnings = json::array();
  if (!spec.assumed_irreducible) {
    warnings.push_back("irreducibility is not assumed; counts are summed over the components of X");
  }

  const std::string& cmd = opts.command;
  if (cmd == "lodeg") {
    results["lo_degree"] = stages.run("lo_degree", [&] { return lo_degree(spec, cfg, over); });
  } else if (cmd == "bidegrees") {
    results["bidegrees"] = stages.run("bidegrees", [&] { return bidegrees(spec, cfg); }).values;
  } else if (cmd == "sectional") {
    results["sectional"] = stages.run("sectional", [&] { return sectional_lo_degrees(spec, cfg); }).values;
  } else if (cmd == "polar") {
    results["polar"] = stages.run("polar", [&] { return polar_degrees(spec, cfg); }).values;
  } else if (cmd == "chern_mather") {
    DegreeVector b = stages.run("bidegrees", [&] { return bidegrees(spec, cfg); });
    results["bidegrees"] = b.values;
    results["chern_mather"] = chern_mather_from_bidegrees(b).values;
  } else if (cmd == "euler_obstruction") {
    EulerObstruction e = stages.run("euler_obstruction", [&] { return euler_obstruction_at_cone_point(spec, cfg); });
    results["bidegrees"] = e.bidegrees.values;
    results["euler_obstruction"] = e.value;
  } else if (cmd == "dual_infinity") {
    results["dual_contains_hyperplane_at_infinity"] =
        stages.run("dual_infinity", [&] { return dual_contains_hyperplane_at_infinity(spec, cfg); });
  } else if (cmd == "correspondence") {
    if (!opts.i && !over.slice) throw InputError("correspondence needs --i or --slice");
    if (opts.i && over.slice && *opts.i != over.slice->size()) {
      throw InputError("--i " + std::to_string(*opts.i) + " disagrees with the " +
                       std::to_string(over.slice->size()) + " given --slice forms");
    }
    std::size_t i = opts.i ? *opts.i : over.slice->size();
    CorrespondenceReport r = stages.run("correspondence", [&] { return critical_correspondence(spec, i, cfg, over); });
    results = json{{"i", r.i},
                   {"count_critical", r.count_critical},
                   {"count_conormal", r.count_conormal},
                   {"bidegree", r.expected},
                   {"generic", r.generic}};
  } else if (cmd == "verify") {
    DegreeVector b = stages.run("bidegrees", [&] { return bidegrees(spec, cfg); });
    DegreeVector s = stages.run("sectional", [&] { return sectional_lo_degrees(spec, cfg); });
    DegreeVector delta = stages.run("polar", [&] { return polar_degrees(spec, cfg); });
    bool contains = stages.run("dual_infinity", [&] { return dual_contains_hyperplane_at_infinity(spec, cfg); });
    long long lo = stages.run("lo_degree", [&] { return lo_degree(spec, cfg); });
    long long deg = stages.run("degree", [&] { return degree(spec, cfg); });

    json checks = json::array();
    checks.push_back(check_json(compare_sectional(b, s)));
    checks.push_back(check_json(compare_polar(b, delta, contains)));

    DegreeVector a = chern_mather_from_bidegrees(b);
    DegreeVector back = bidegrees_from_chern_mather(a);
    checks.push_back(json{{"identity", "transform_roundtrip"},
                          {"pass", back.values == b.values},
                          {"left", back.values},
                          {"right", b.values},
                          {"detail", "a = " + render_value(json(a.values))}});
    checks.push_back(json{{"identity", "lo_degree_is_b0"},
                          {"pass", lo == b.values.front()},
                          {"left", {lo}},
                          {"right", {b.values.front()}},
                          {"detail", ""}});
    checks.push_back(json{{"identity", "degree_is_bd"},
                          {"pass", deg == b.values.back()},
                          {"left", {deg}},
                          {"right", {b.values.back()}},
                          {"detail", ""}});
    if (spec.homogeneous()) {
      long long eu = alternating_sum(b);
      checks.push_back(json{{"identity", "euler_obstruction_is_a0"},
                            {"pass", eu == a.values.front()},
                            {"left", {eu}},
                            {"right", {a.values.front()}},
                            {"detail", ""}});
    }
    bool pass = true;
    for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
    results = json{{"bidegrees", b.values},
                   {"sectional", s.values},
                   {"polar", delta.values},
                   {"chern_mather", a.values},
                   {"dual_contains_hyperplane_at_infinity", contains},
                   {"checks", checks},
                   {"pass", pass}};
    if (!pass) exit_code = 5;
  } else {
    throw InputError("unknown command '" + cmd + "'");
  }

  json config{{"seed", opts.seed},
              {"primes", cfg.policy.primes},
              {"trials", cfg.policy.seeds_per_trial},
              {"max_retries", cfg.policy.max_retries},
              {"budget_secs", opts.budget_secs}};
  if (opts.covector) config["covector"] = *opts.covector;
  if (!opts.slices.empty()) config["slice"] = opts.slices;
  return json{{"command", cmd},       {"input", input_json(file, d)}, {"config", config},
              {"results", results},   {"warnings", warnings},         {"timings", stages.to_json()}};
}

std::string render_text(const json& report) {
  std::ostringstream os;
  const json& in = report["input"];
  os << "command: " << report["command"].get<std::string>() << "\n";
  os << "input: " << in["path"].get<std::string>() << " (" << in["digest"].get<std::string>() << ")\n";
  os << "variables: " << render_value(in["variables"]) << ", n = " << in["n"] << ", d = " << in["d"] << "\n";
  for (const auto& p : in["polynomials"]) os << "  " << p.get<std::string>() << " = 0\n";
  os << "seed: " << report["config"]["seed"] << ", primes: " << render_value(report["config"]["primes"]) << "\n";
  const json& res = report["results"];
  for (auto it = res.begin(); it != res.end(); ++it) {
    if (it.key() == "checks") continue;
    os << it.key() << ": " << render_value(it.value()) << "\n";
  }
  if (res.contains("checks")) {
    for (const auto& c : res["checks"]) {
      os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["identity"].get<std::string>();
      std::string detail = c["detail"].get<std::string>();
      if (!detail.empty()) os << ": " << detail;
      os << "\n";
    }
  }
  for (const auto& w : report["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  const json& t = report["timings"];
  for (auto it = t.begin(); it != t.end(); ++it) os << "time " << it.key() << ": " << it.value() << " s\n";
  return os.str();
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"LO degrees, bidegrees, polar degrees and Chern-Mather coefficients of affine varieties"};
  app.require_subcommand(1);
  Options opts;
  std::string format = "json";

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", opts.input, "variety JSON file")->required();
    sub->add_option("--prime", opts.primes, "working prime (repeatable)");
    sub->add_option("--seed", opts.seed, "base seed");
    sub->add_option("--trials", opts.trials, "seeds per agreement round");
    sub->add_option("--budget-secs", opts.budget_secs, "time budget per Groebner computation (0 = none)");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timings", opts.timings, "report per-stage wall times");
  };
  for (const auto& name : kCommands) {
    CLI::App* sub = app.add_subcommand(name, "");
    common(sub);
    if (name == "lodeg" || name == "correspondence") {
      sub->add_option("--covector", opts.covector, "explicit covector, e.g. 10,5,17");
    }
    if (name == "correspondence") {
      sub->add_option("--slice", opts.slices, "explicit affine form cutting out L (repeatable)");
      sub->add_option("--i", opts.i, "codimension of the random slice L");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }
  for (const auto* sub : app.get_subcommands()) opts.command = sub->get_name();
  opts.format = format;

  int exit_code = 0;
  try {
    json report = run_command(opts, exit_code);
    out << (opts.format == "text" ? render_text(report) : report.dump(2) + "\n");
    return exit_code;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const Instability& e) {
    err << "error: " << e.what();
    if (!e.observed().empty()) {
      err << " (observed";
      for (auto v : e.observed()) err << " " << v;
      err << ")";
    }
    err << "\n";
    return 2;
  } catch (const DegenerateSlice& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CharacteristicHazard& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadPrime& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // parse, input, dimension and cone errors
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lodeg::cli
