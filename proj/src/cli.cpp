#include "rhydro/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "rhydro/errors.hpp"
#include "rhydro/kmc.hpp"
#include "rhydro/rng.hpp"
#include "rhydro/measures.hpp"
#include "rhydro/model.hpp"
#include "rhydro/pde.hpp"
#include "rhydro/profile.hpp"
#include "rhydro/rw_oracle.hpp"
#include "rhydro/verify.hpp"

namespace rhydro::cli {

namespace fs = std::filesystem;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// option handling: flat key=value config files merged under command flags

enum class Source { Default, File, Flag };

struct Options {
  std::string command;
  std::map<std::string, std::string> values;
  std::map<std::string, Source> sources;
  std::map<std::string, std::string> known;  // key -> help

  void declare(const std::string& key, const std::string& help,
               const std::string& def = "") {
    known[key] = help;
    if (!def.empty() && !values.count(key)) {
      values[key] = def;
      sources[key] = Source::Default;
    }
  }

  bool has(const std::string& key) const { return values.count(key) != 0; }

  std::string get(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) throw InputError("missing required option --" + key);
    return it->second;
  }

  double get_double(const std::string& key) const {
    const std::string s = get(key);
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InputError("option --" + key + ": expected a number, got '" + s + "'");
    }
  }

  int get_int(const std::string& key) const {
    const double v = get_double(key);
    if (std::abs(v - std::round(v)) > 1e-9)
      throw InputError("option --" + key + ": expected an integer");
    return static_cast<int>(std::llround(v));
  }

  std::uint64_t get_seed(const std::string& key) const {
    const std::string s = get(key);
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw InputError("option --" + key + ": expected a nonnegative integer seed");
    }
  }

  std::vector<double> get_double_list(const std::string& key) const {
    std::vector<double> out;
    std::stringstream ss(get(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw InputError("option --" + key + ": bad list element '" + item + "'");
      }
    }
    if (out.empty()) throw InputError("option --" + key + ": empty list");
    return out;
  }

  std::vector<int> get_int_list(const std::string& key) const {
    std::vector<int> out;
    for (double v : get_double_list(key)) {
      if (std::abs(v - std::round(v)) > 1e-9)
        throw InputError("option --" + key + ": expected integers");
      out.push_back(static_cast<int>(std::llround(v)));
    }
    return out;
  }
};

void apply_flags(Options& opt, const std::vector<std::string>& args, std::size_t start) {
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0)
      throw InputError("expected a --flag, got '" + a + "'");
    std::string key = a.substr(2);
    std::string value;
    const auto eq = key.find('=');
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= args.size()) throw InputError("flag --" + key + " needs a value");
      value = args[++i];
    }
    if (!opt.known.count(key)) throw InputError("unknown flag --" + key);
    opt.values[key] = value;
    opt.sources[key] = Source::Flag;
  }
}

// Flat `key = value` per line; '#' starts a comment; dotted keys allowed.
// Unknown keys and malformed lines report line and column.
void load_config_into(Options& opt, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("config file not found: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    std::string body = hash == std::string::npos ? line : line.substr(0, hash);
    const auto notspace = body.find_first_not_of(" \t\r");
    if (notspace == std::string::npos) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw InputError("config " + path + ":" + std::to_string(lineno) + ":" +
                       std::to_string(notspace + 1) + ": expected 'key = value'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty())
      throw InputError("config " + path + ":" + std::to_string(lineno) + ":" +
                       std::to_string(notspace + 1) + ": empty key");
    if (!opt.known.count(key))
      throw InputError("config " + path + ":" + std::to_string(lineno) + ":" +
                       std::to_string(body.find(key) + 1) + ": unknown key '" + key + "'");
    // flags win over file values
    if (opt.sources.count(key) && opt.sources[key] == Source::Flag) continue;
    opt.values[key] = value;
    opt.sources[key] = Source::File;
  }
}

// ---------------------------------------------------------------------------
// output artifacts

struct RunDir {
  fs::path dir;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  explicit RunDir(const std::string& path) : dir(path) {
    fs::create_directories(dir);
  }

  std::ofstream open(const std::string& name) const {
    std::ofstream out(dir / name);
    if (!out) throw InputError("cannot write " + (dir / name).string());
    return out;
  }

  void echo_config(const Options& opt) const {
    std::ofstream out = open("config.resolved");
    out << "command = " << opt.command << "\n";
    for (const auto& [key, value] : opt.values) {
      const char* from = "default";
      auto it = opt.sources.find(key);
      if (it != opt.sources.end()) {
        if (it->second == Source::Flag) from = "flag";
        else if (it->second == Source::File) from = "file";
      }
      out << key << " = " << value << "  # from: " << from << "\n";
    }
  }

  void finish() const {
    std::ofstream out = open("meta.txt");
    const auto wall = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    started).count();
    std::time_t now = std::time(nullptr);
    char stamp[64];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "version = " << kVersion << "\n";
    out << "finished = " << stamp << "\n";
    out << "wall_seconds = " << fmt17(wall) << "\n";
  }
};

void write_density_csv(std::ofstream out, const PdeSolution& sol) {
  out << "t,u,value\n";
  for (int i = 0; i < sol.nt(); ++i)
    for (int j = 0; j < sol.nu(); ++j)
      out << fmt17(sol.t_grid[static_cast<std::size_t>(i)]) << ','
          << fmt17(sol.u_grid[static_cast<std::size_t>(j)]) << ','
          << fmt17(sol.value(i, j)) << '\n';
}

void write_reservoir_csv(std::ofstream out, const PdeSolution& sol) {
  out << "t,m,boundary_value\n";
  for (int i = 0; i < sol.nt(); ++i) {
    const double t = sol.t_grid[static_cast<std::size_t>(i)];
    out << fmt17(t) << ',' << fmt17(sol.M - sol.bulk_integral(i)) << ','
        << fmt17(sol.boundary_trace[static_cast<std::size_t>(i)]) << '\n';
  }
}

void write_report_csv(std::ofstream out, const StatReport& rep) {
  out << "test,N,theta,t,u,statistic,threshold,verdict\n";
  for (const auto& r : rep.rows)
    out << rep.test << ':' << r.label << ',' << r.N << ',' << fmt17(r.theta) << ','
        << fmt17(r.t) << ',' << fmt17(r.u) << ',' << fmt17(r.statistic) << ','
        << fmt17(r.threshold) << ',' << (r.pass ? "pass" : "fail") << '\n';
}

// ---------------------------------------------------------------------------
// shared option groups

void declare_model(Options& opt) {
  opt.declare("model", "rw | sep", "rw");
  opt.declare("N", "lattice size");
  opt.declare("theta", "reservoir slowdown exponent");
  opt.declare("alpha", "reservoir release strength", "1");
}

ModelParams model_from(const Options& opt) {
  const std::string m = opt.get("model");
  if (m != "rw" && m != "sep") throw InputError("--model must be rw or sep");
  return ModelParams(m == "rw" ? ModelKind::RW : ModelKind::SEP, opt.get_int("N"),
                     opt.get_double("theta"), opt.get_double("alpha"));
}

Profile profile_from(const Options& opt, const std::string& key = "profile") {
  return Profile::parse(opt.get(key));
}

std::vector<Profile> profiles_from(const Options& opt, const std::string& key) {
  std::vector<Profile> out;
  std::stringstream ss(opt.get(key));
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(Profile::parse(item));
  if (out.empty()) throw InputError("option --" + key + ": no profiles");
  return out;
}

PdeProblem problem_from(const Options& opt) {
  PdeProblem prob;
  prob.bc = bc_from_string(opt.get("bc"));
  prob.alpha = opt.get_double("alpha");
  prob.gamma = profile_from(opt);
  prob.T = opt.get_double("T");
  prob.record_dt = opt.get_double("record-dt");
  if (opt.get("M") != "auto") prob.M = opt.get_double("M");
  prob.validate();
  return prob;
}

PdeSolution solve_from(const PdeProblem& prob, const Options& opt) {
  const std::string backend = opt.get("backend");
  if (backend == "fd") return solve_fd(prob, opt.get_int("nx"), opt.get_double("dt"));
  if (backend == "spectral")
    return solve_spectral(prob, opt.get_int("K"), opt.get_double("dt"), opt.get_int("nx"));
  throw InputError("--backend must be fd or spectral");
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_solve(Options& opt) {
  const PdeProblem prob = problem_from(opt);
  const PdeSolution sol = solve_from(prob, opt);
  RunDir run(opt.get("out"));
  run.echo_config(opt);
  write_density_csv(run.open("density.csv"), sol);
  if (bc_uses_mass(sol.bc)) write_reservoir_csv(run.open("reservoir.csv"), sol);
  if (sol.tail_warning) {
    std::ofstream w = run.open("warnings.txt");
    w << "spectral tail energy ratio " << fmt17(sol.tail_energy_ratio)
      << " exceeds 1e-6; consider a larger K\n";
  }
  run.finish();
  return 0;
}

int cmd_simulate(Options& opt) {
  const ModelParams p = model_from(opt);
  const Profile gamma = profile_from(opt);
  const ProductMeasure mu = initial_measure(gamma, p);
  const std::uint64_t seed = opt.get_seed("seed");
  std::vector<double> times = opt.get_double_list("times");
  const Configuration init = sample(mu, derive_seed(seed, 0));
  const Trajectory traj = simulate(init, p, times, derive_seed(seed, 1));

  RunDir run(opt.get("out"));
  run.echo_config(opt);
  {
    std::ofstream out = run.open("density.csv");
    out << "t,u,value\n";
    for (std::size_t i = 0; i < traj.sample_times.size(); ++i) {
      const EmpiricalDensity d = empirical_density(traj.states[i]);
      for (int x = 1; x <= d.N; ++x)
        out << fmt17(traj.sample_times[i]) << ','
            << fmt17(static_cast<double>(x) / d.N) << ','
            << fmt17(d.values[static_cast<std::size_t>(x - 1)]) << '\n';
    }
  }
  {
    // reservoir trace in macroscopic units: eta(0)/N^theta is the scale on
    // which the reservoir mass converges
    std::ofstream out = run.open("reservoir.csv");
    out << "t,m,boundary_value\n";
    const double scale = std::pow(static_cast<double>(p.N), p.theta);
    for (std::size_t i = 0; i < traj.sample_times.size(); ++i)
      out << fmt17(traj.sample_times[i]) << ','
          << fmt17(static_cast<double>(traj.states[i](0)) / scale) << ','
          << fmt17(static_cast<double>(traj.states[i](1))) << '\n';
  }
  run.finish();
  return 0;
}

int cmd_oracle(Options& opt) {
  opt.values["model"] = "rw";
  const ModelParams p = model_from(opt);
  const Profile gamma = profile_from(opt);
  const double t = opt.get_double("t");
  const std::vector<double> psi = poisson_field(gamma, t, p);
  const std::vector<double> pi = stationary_pi(p);

  RunDir run(opt.get("out"));
  run.echo_config(opt);
  {
    std::ofstream out = run.open("field.csv");
    out << "t,u,value\n";
    for (int x = 0; x <= p.N; ++x)
      out << fmt17(t) << ',' << fmt17(static_cast<double>(x) / p.N) << ','
          << fmt17(psi[static_cast<std::size_t>(x)]) << '\n';
  }
  {
    std::ofstream out = run.open("pi.csv");
    out << "u,value\n";
    for (int x = 0; x <= p.N; ++x)
      out << fmt17(static_cast<double>(x) / p.N) << ','
          << fmt17(pi[static_cast<std::size_t>(x)]) << '\n';
  }
  run.finish();
  return 0;
}

int report_out(Options& opt, const StatReport& rep) {
  RunDir run(opt.get("out"));
  run.echo_config(opt);
  write_report_csv(run.open("report.csv"), rep);
  run.finish();
  std::cout << rep.test << ": " << (rep.pass() ? "pass" : "fail") << " ("
            << rep.rows.size() << " checks)\n";
  return rep.pass() ? 0 : 1;
}

int cmd_verify_local_eq(Options& opt) {
  const ModelParams p = model_from(opt);
  const StatReport rep = local_equilibrium_test(
      p, profile_from(opt), opt.get_double("t"), opt.get_double_list("u"),
      opt.get_int("k"), opt.get_int("replicas"), opt.get_seed("seed"),
      opt.get_double("tv-tol"));
  return report_out(opt, rep);
}

int cmd_verify_hydro(Options& opt) {
  const std::string m = opt.get("model");
  if (m != "rw" && m != "sep") throw InputError("--model must be rw or sep");
  const std::vector<int> ladder = opt.get_int_list("ladder");
  const ModelParams p(m == "rw" ? ModelKind::RW : ModelKind::SEP, ladder.back(),
                      opt.get_double("theta"), opt.get_double("alpha"));
  const StatReport rep =
      hydro_test(p, profile_from(opt), opt.get_double("t"), profiles_from(opt, "H"),
                 ladder, opt.get_int("replicas"), opt.get_seed("seed"),
                 opt.get_double("tol"));
  return report_out(opt, rep);
}

int cmd_verify_stationarity(Options& opt) {
  const ModelParams p = model_from(opt);
  const StatReport rep =
      stationarity_test(p, opt.get_double("level"), opt.get_double("t"),
                        opt.get_int("replicas"), opt.get_seed("seed"),
                        opt.get_double("tv-tol"));
  return report_out(opt, rep);
}

// "--left wentzell:fd --right nonlocal:spectral"
std::pair<Bc, std::string> side_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw InputError("side must be <bc>:<backend>, e.g. wentzell:fd");
  return {bc_from_string(text.substr(0, colon)), text.substr(colon + 1)};
}

int cmd_equivalence(Options& opt) {
  PdeProblem base;
  base.alpha = opt.get_double("alpha");
  base.gamma = profile_from(opt);
  base.T = opt.get_double("T");
  base.record_dt = opt.get_double("record-dt");
  if (opt.get("M") != "auto") base.M = opt.get_double("M");

  auto solve_side = [&](const std::string& text) {
    const auto [bc, backend] = side_spec(text);
    PdeProblem prob = base;
    prob.bc = bc;
    prob.validate();
    if (backend == "fd") return solve_fd(prob, opt.get_int("nx"), opt.get_double("dt"));
    if (backend == "spectral")
      return solve_spectral(prob, opt.get_int("K"), opt.get_double("dt"), opt.get_int("nx"));
    throw InputError("backend must be fd or spectral");
  };

  const PdeSolution left = solve_side(opt.get("left"));
  const PdeSolution right = solve_side(opt.get("right"));
  const StatReport rep = equivalence_report(left, right, opt.get_double("tol"));

  RunDir run(opt.get("out"));
  run.echo_config(opt);
  write_density_csv(run.open("left.csv"), left);
  write_density_csv(run.open("right.csv"), right);
  write_report_csv(run.open("report.csv"), rep);
  run.finish();
  std::cout << "equivalence: " << (rep.pass() ? "pass" : "fail") << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_entropy(Options& opt) {
  opt.values["model"] = "sep";
  const ModelParams p = model_from(opt);
  const Profile gamma = profile_from(opt);
  const double g0 = gamma(0.0);
  if (!(g0 > 0.0)) throw InputError("entropy: gamma(0) must be positive");
  const double p_ref = g0 / (1.0 + g0);
  const double h = relative_entropy(gamma, p_ref, p);
  const double bound = p.N * std::log(1.0 / std::min(p_ref, 1.0 - p_ref));

  StatReport rep;
  rep.test = "entropy";
  rep.rows.push_back({"H-vs-linear-bound", p.N, p.theta, 0.0, 0.0, h, bound, h <= bound});
  return report_out(opt, rep);
}

int dispatch(Options& opt, const std::vector<std::string>& args);

int cmd_sweep(Options& opt, const std::vector<std::string>& args) {
  const std::string cmd = opt.get("cmd");
  if (cmd == "sweep") throw InputError("sweep cannot nest");
  const std::vector<double> thetas = opt.get_double_list("thetas");
  std::vector<int> ns;
  if (opt.has("Ns")) ns = opt.get_int_list("Ns");
  const std::string out = opt.get("out");

  // passthrough: everything except the sweep controls
  std::vector<std::string> rest;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--cmd" || a == "--thetas" || a == "--Ns" || a == "--out") {
      ++i;
      continue;
    }
    if (a.rfind("--cmd=", 0) == 0 || a.rfind("--thetas=", 0) == 0 ||
        a.rfind("--Ns=", 0) == 0 || a.rfind("--out=", 0) == 0)
      continue;
    rest.push_back(a);
  }

  int worst = 0;
  auto run_point = [&](double theta, std::optional<int> n) {
    std::vector<std::string> sub{cmd};
    sub.insert(sub.end(), rest.begin(), rest.end());
    sub.push_back("--theta");
    sub.push_back(fmt17(theta));
    std::string dir = out + "/theta" + fmt17(theta);
    if (n) {
      sub.push_back("--N");
      sub.push_back(std::to_string(*n));
      dir += "_N" + std::to_string(*n);
    }
    sub.push_back("--out");
    sub.push_back(dir);
    const int rc = run(sub);
    worst = std::max(worst, rc);
  };

  for (double theta : thetas) {
    if (ns.empty()) {
      run_point(theta, std::nullopt);
    } else {
      for (int n : ns) run_point(theta, n);
    }
  }
  return worst;
}

int dispatch(Options& opt, const std::vector<std::string>& args) {
  const std::string& cmd = opt.command;
  opt.declare("config", "key = value config file; flags win");
  opt.declare("out", "output directory", "out/" + cmd);

  if (cmd == "solve" || cmd == "equivalence") {
    opt.declare("alpha", "reservoir strength", "1");
    opt.declare("profile", "initial profile expression");
    opt.declare("M", "total mass, or 'auto'", "auto");
    opt.declare("T", "time horizon", "1");
    opt.declare("record-dt", "output cadence", "0.01");
    opt.declare("nx", "spatial intervals", "512");
    opt.declare("K", "spectral modes", "128");
    opt.declare("dt", "time step", "2e-5");
    if (cmd == "solve") {
      opt.declare("bc", "boundary condition");
      opt.declare("backend", "fd | spectral", "fd");
    } else {
      opt.declare("left", "<bc>:<backend>");
      opt.declare("right", "<bc>:<backend>");
      opt.declare("tol", "max L2 tolerance", "1e-3");
    }
  } else if (cmd == "simulate") {
    declare_model(opt);
    opt.declare("profile", "initial profile expression");
    opt.declare("times", "comma-separated sample times");
    opt.declare("seed", "rng seed", "1");
  } else if (cmd == "oracle") {
    declare_model(opt);
    opt.declare("profile", "initial profile expression");
    opt.declare("t", "time");
  } else if (cmd == "verify-local-eq") {
    declare_model(opt);
    opt.declare("profile", "initial profile expression");
    opt.declare("t", "time");
    opt.declare("u", "window positions (comma list)", "0.25,0.5,0.75");
    opt.declare("k", "half window width", "1");
    opt.declare("replicas", "replica count", "20000");
    opt.declare("seed", "rng seed", "1");
    opt.declare("tv-tol", "TV threshold", "0.03");
  } else if (cmd == "verify-hydro") {
    opt.declare("model", "rw | sep", "rw");
    opt.declare("theta", "reservoir slowdown exponent");
    opt.declare("alpha", "reservoir release strength", "1");
    opt.declare("profile", "initial profile expression");
    opt.declare("t", "time");
    opt.declare("ladder", "N ladder", "64,128,256,512");
    opt.declare("H", "test functions (semicolon-separated profiles)",
                "const(1);affine(0,1);cos(0,1,1)");
    opt.declare("replicas", "replicas at the largest N", "96");
    opt.declare("seed", "rng seed", "1");
    opt.declare("tol", "final deviation threshold", "0.02");
  } else if (cmd == "verify-stationarity") {
    declare_model(opt);
    opt.declare("level", "reversible level (lambda or p)");
    opt.declare("t", "time");
    opt.declare("replicas", "replica count", "20000");
    opt.declare("seed", "rng seed", "1");
    opt.declare("tv-tol", "TV threshold", "0.02");
  } else if (cmd == "entropy") {
    declare_model(opt);
    opt.declare("profile", "initial profile expression");
  } else if (cmd == "sweep") {
    opt.declare("cmd", "subcommand to expand");
    opt.declare("thetas", "theta values");
    opt.declare("Ns", "N values (optional)");
    // accept and forward any flag of the nested command
    for (std::size_t i = 1; i < args.size(); ++i)
      if (args[i].rfind("--", 0) == 0) {
        std::string key = args[i].substr(2);
        const auto eq = key.find('=');
        if (eq != std::string::npos) key = key.substr(0, eq);
        if (!opt.known.count(key)) opt.declare(key, "forwarded");
      }
  } else {
    throw InputError("unknown command '" + cmd +
                     "'; expected one of simulate, oracle, solve, verify-local-eq, "
                     "verify-hydro, verify-stationarity, equivalence, entropy, sweep");
  }

  apply_flags(opt, args, 1);
  if (opt.has("config")) {
    load_config_into(opt, opt.get("config"));
  }

  if (cmd == "solve") return cmd_solve(opt);
  if (cmd == "simulate") return cmd_simulate(opt);
  if (cmd == "oracle") return cmd_oracle(opt);
  if (cmd == "verify-local-eq") return cmd_verify_local_eq(opt);
  if (cmd == "verify-hydro") return cmd_verify_hydro(opt);
  if (cmd == "verify-stationarity") return cmd_verify_stationarity(opt);
  if (cmd == "equivalence") return cmd_equivalence(opt);
  if (cmd == "entropy") return cmd_entropy(opt);
  if (cmd == "sweep") return cmd_sweep(opt, args);
  throw InputError("unhandled command");
}

void error_record(const char* kind, const std::string& message) {
  nlohmann::json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args) {
  try {
    if (args.empty()) throw InputError("usage: rhydro <command> [--flags]");
    Options opt;
    opt.command = args[0];
    return dispatch(opt, args);
  } catch (const InputError& e) {
    error_record("input", e.what());
    return 2;
  } catch (const ResourceError& e) {
    error_record("resource", e.what());
    return 3;
  } catch (const NumericError& e) {
    error_record("numeric", e.what());
    return 3;
  } catch (const std::exception& e) {
    error_record("internal", e.what());
    return 3;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace rhydro::cli
