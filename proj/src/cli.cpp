#include "ew/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>

#include "ew/errors.hpp"
#include "ew/problems.hpp"
#include "ew/stability.hpp"
#include "ew/timestepper.hpp"

namespace ew::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view token, std::size_t line, std::string_view key) {
  token = trim(token);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v)) {
    throw ConfigError(line, std::string(key) + ": '" + std::string(token) + "' is not a number");
  }
  return v;
}

std::size_t parse_count(std::string_view token, std::size_t line, std::string_view key) {
  token = trim(token);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ConfigError(line, std::string(key) + ": '" + std::string(token) + "' is not a non-negative integer");
  }
  return v;
}

std::vector<double> parse_list(std::string_view token, std::size_t line, std::string_view key) {
  std::vector<double> out;
  token = trim(token);
  if (token.empty()) {
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = token.find(',', start);
    out.push_back(parse_real(token.substr(start, comma - start), line, key));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) {
      out += ',';
    }
    out += shortest(values[i]);
  }
  return out;
}

std::size_t step_of(double t, double dt) { return static_cast<std::size_t>(std::llround(t / dt)); }

std::size_t total_steps(const RunConfig& config) { return step_of(config.T, config.dt); }

void validate(const RunConfig& c) {
  if (!(c.b > c.a)) {
    throw ConfigError(0, "domain needs b > a");
  }
  if (c.N < 2) {
    throw ConfigError(0, "N must be at least 2");
  }
  if (!(c.dt > 0.0) || !(c.T > 0.0) || !(c.mu > 0.0)) {
    throw ConfigError(0, "dt, T and mu must be positive");
  }
  if (total_steps(c) == 0) {
    throw ConfigError(0, "T is shorter than half a time step");
  }
  if (c.report_times.empty() && !(c.report_every > 0.0)) {
    throw ConfigError(0, "report_every must be positive");
  }
  const double horizon = static_cast<double>(total_steps(c)) * c.dt + 0.5 * c.dt;
  for (const double t : c.report_times) {
    if (t < 0.0 || t > horizon) {
      throw ConfigError(0, "report time " + shortest(t) + " outside [0, T]");
    }
  }
  for (const double t : c.snapshots) {
    if (t < 0.0 || t > horizon) {
      throw ConfigError(0, "snapshot time " + shortest(t) + " outside [0, T]");
    }
  }
  try {
    (void)make_problem(c);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::logic_error& e) {
    throw ConfigError(0, e.what());
  }
}

std::vector<std::size_t> unique_sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void write_snapshot(const RunState& state, const std::string& path) {
  std::ofstream f(path);
  if (!f) {
    throw std::runtime_error("cannot open " + path);
  }
  f << "x,U\n";
  const Mesh& mesh = state.mesh;
  const std::size_t samples = 5 * mesh.elements;
  for (std::size_t k = 0; k <= samples; ++k) {
    const double x = k == samples ? mesh.b : mesh.a + static_cast<double>(k) * mesh.h / 5.0;
    f << format_number(x) << ',' << format_number(evaluate(state, x).u) << '\n';
  }
}

std::string csv_row(const DiagnosticsRow& row, const Drift& drift) {
  std::string s = format_number(row.t);
  for (const double v : {row.inv.i1, row.inv.i2, row.inv.i3}) {
    s += ',' + format_number(v);
  }
  if (row.err) {
    s += ',' + format_number(row.err->l2) + ',' + format_number(row.err->linf);
  } else {
    s += ",,";
  }
  for (const double v : {drift.value.i1, drift.value.i2, drift.value.i3}) {
    s += ',' + format_number(v);
  }
  return s;
}

void print_row(std::ostream& out, const DiagnosticsRow& row) {
  char buf[160];
  if (row.err) {
    std::snprintf(buf, sizeof buf, "%10.4f %16.10f %16.10f %16.10f %12.6f %12.6f", row.t, row.inv.i1, row.inv.i2,
                  row.inv.i3, 1e3 * row.err->l2, 1e3 * row.err->linf);
  } else {
    std::snprintf(buf, sizeof buf, "%10.4f %16.10f %16.10f %16.10f %12s %12s", row.t, row.inv.i1, row.inv.i2,
                  row.inv.i3, "-", "-");
  }
  out << buf << '\n';
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 10);
  return {buf, res.ptr};
}

RunConfig parse_config(std::string_view text) {
  struct Entry {
    std::string key;
    std::string_view value;
    std::size_t line;
  };
  std::vector<Entry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected key=value");
    }
    entries.push_back({std::string(trim(line.substr(0, eq))), trim(line.substr(eq + 1)), line_no});
  }

  std::set<std::string> seen;
  const Entry* problem = nullptr;
  for (const auto& e : entries) {
    if (!seen.insert(e.key).second) {
      throw ConfigError(e.line, "duplicate key '" + e.key + "'");
    }
    if (e.key == "problem") {
      problem = &e;
    }
  }
  if (problem == nullptr) {
    throw ConfigError(0, "missing required key 'problem'");
  }
  RunConfig c;
  try {
    c = default_run(std::string(problem->value));
  } catch (const ConfigError& err) {
    throw ConfigError(problem->line, err.what());
  }

  // report_every after report_times would clear an explicit list; apply it first.
  std::stable_partition(entries.begin(), entries.end(), [](const Entry& e) { return e.key == "report_every"; });
  for (const auto& e : entries) {
    const std::string& k = e.key;
    if (k == "problem") {
    } else if (k == "a") {
      c.a = parse_real(e.value, e.line, k);
    } else if (k == "b") {
      c.b = parse_real(e.value, e.line, k);
    } else if (k == "N") {
      c.N = parse_count(e.value, e.line, k);
    } else if (k == "dt") {
      c.dt = parse_real(e.value, e.line, k);
    } else if (k == "T") {
      c.T = parse_real(e.value, e.line, k);
    } else if (k == "mu") {
      c.mu = parse_real(e.value, e.line, k);
    } else if (k == "roots") {
      if (e.value == "legendre") {
        c.roots = RootFamily::Legendre;
      } else if (e.value == "chebyshev") {
        c.roots = RootFamily::Chebyshev;
      } else {
        throw ConfigError(e.line, "roots must be legendre or chebyshev");
      }
    } else if (k == "c") {
      c.c = parse_list(e.value, e.line, k);
    } else if (k == "x0") {
      c.x0 = parse_list(e.value, e.line, k);
    } else if (k == "U0") {
      c.U0 = parse_real(e.value, e.line, k);
    } else if (k == "d") {
      c.d = parse_real(e.value, e.line, k);
    } else if (k == "report_every") {
      c.report_every = parse_real(e.value, e.line, k);
      c.report_times.clear();
    } else if (k == "report_times") {
      c.report_times = parse_list(e.value, e.line, k);
    } else if (k == "snapshots") {
      c.snapshots = parse_list(e.value, e.line, k);
    } else if (k == "out_diag") {
      c.out_diag = std::string(e.value);
    } else if (k == "out_snap") {
      c.out_snap = std::string(e.value);
    } else {
      throw ConfigError(e.line, "unknown key '" + k + "'");
    }
  }
  validate(c);
  return c;
}

std::string emit_config(const RunConfig& c) {
  std::ostringstream s;
  s << "problem=" << c.problem << '\n'
    << "a=" << shortest(c.a) << '\n'
    << "b=" << shortest(c.b) << '\n'
    << "N=" << c.N << '\n'
    << "dt=" << shortest(c.dt) << '\n'
    << "T=" << shortest(c.T) << '\n'
    << "mu=" << shortest(c.mu) << '\n'
    << "roots=" << (c.roots == RootFamily::Legendre ? "legendre" : "chebyshev") << '\n'
    << "c=" << join(c.c) << '\n'
    << "x0=" << join(c.x0) << '\n'
    << "U0=" << shortest(c.U0) << '\n'
    << "d=" << shortest(c.d) << '\n'
    << "report_every=" << shortest(c.report_every) << '\n'
    << "report_times=" << join(c.report_times) << '\n'
    << "snapshots=" << join(c.snapshots) << '\n'
    << "out_diag=" << c.out_diag << '\n'
    << "out_snap=" << c.out_snap << '\n';
  return s.str();
}

std::vector<std::size_t> report_steps(const RunConfig& c) {
  const std::size_t last = total_steps(c);
  std::vector<std::size_t> steps{0, last};
  if (!c.report_times.empty()) {
    for (const double t : c.report_times) {
      steps.push_back(std::min(step_of(t, c.dt), last));
    }
  } else {
    for (std::size_t m = 1;; ++m) {
      const std::size_t k = step_of(static_cast<double>(m) * c.report_every, c.dt);
      if (k > last) {
        break;
      }
      steps.push_back(k);
    }
  }
  return unique_sorted(std::move(steps));
}

std::vector<std::size_t> snapshot_steps(const RunConfig& c) {
  std::vector<std::size_t> steps;
  for (const double t : c.snapshots) {
    steps.push_back(std::min(step_of(t, c.dt), total_steps(c)));
  }
  return unique_sorted(std::move(steps));
}

std::string snapshot_path(const std::string& stem, double t) { return stem + "_t" + format_number(t) + ".csv"; }

RunOutcome run(const RunConfig& config, std::ostream& out) {
  RunOutcome outcome;
  std::ofstream diag;
  auto fail = [&](int status, const std::string& what) {
    outcome.status = status;
    outcome.error = what;
    if (diag.is_open()) {
      diag << "# error: " << what << '\n';
      diag.flush();
    }
    out << "# error: " << what << '\n';
    return outcome;
  };

  ProblemSpec problem;
  std::optional<RunState> state;
  try {
    validate(config);
    problem = make_problem(config);
    const Mesh mesh = build_mesh(config.a, config.b, config.N);
    state = initialize(mesh, build_tables(config.roots, mesh.h), problem.u0, problem.bc, config.mu, config.dt);
  } catch (const ConfigError& e) {
    return fail(kExitConfig, e.what());
  } catch (const NumericalError& e) {
    return fail(kExitNumerical, e.what());
  } catch (const std::logic_error& e) {
    return fail(kExitConfig, e.what());
  }

  if (!config.out_diag.empty()) {
    diag.open(config.out_diag);
    if (!diag) {
      return fail(kExitConfig, "cannot open " + config.out_diag);
    }
    diag << "t,I1,I2,I3,L2,Linf,I1rel,I2rel,I3rel\n";
  }
  char header[160];
  std::snprintf(header, sizeof header, "%10s %16s %16s %16s %12s %12s", "t", "I1", "I2", "I3", "L2*1e3",
                "Linf*1e3");
  out << header << '\n';

  const auto reports = report_steps(config);
  const auto snaps = snapshot_steps(config);
  const std::size_t last = total_steps(config);
  auto record = [&](const RunState& s) {
    if (std::binary_search(reports.begin(), reports.end(), s.step_count)) {
      DiagnosticsRow row{s.t, invariants(s), std::nullopt};
      if (problem.exact) {
        row.err = error_norms(s, *problem.exact);
      }
      outcome.rows.push_back(row);
      const auto drift = relative_changes(outcome.rows).back();
      if (diag.is_open()) {
        diag << csv_row(row, drift) << '\n';
      }
      print_row(out, row);
    }
    if (!config.out_snap.empty() && std::binary_search(snaps.begin(), snaps.end(), s.step_count)) {
      write_snapshot(s, snapshot_path(config.out_snap, s.t));
    }
  };

  try {
    record(*state);
    while (state->step_count < last) {
      advance(*state);
      record(*state);
    }
  } catch (const NumericalError& e) {
    return fail(kExitNumerical, e.what());
  } catch (const std::runtime_error& e) {
    return fail(kExitConfig, e.what());
  }
  return outcome;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw ConfigError(0, "cannot read " + path);
  }
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int run_command(const std::string& path) {
  try {
    return run(parse_config(read_file(path)), std::cout).status;
  } catch (const ConfigError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kExitConfig;
  }
}

int sweep_command(const std::vector<std::string>& paths) {
  std::vector<RunConfig> configs;
  std::set<std::string> outputs;
  try {
    for (const auto& p : paths) {
      configs.push_back(parse_config(read_file(p)));
      for (const auto& o : {configs.back().out_diag, configs.back().out_snap}) {
        if (!o.empty() && !outputs.insert(o).second) {
          throw ConfigError(0, p + ": output '" + o + "' is shared with another run");
        }
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  }

  std::vector<std::ostringstream> logs(configs.size());
  std::vector<std::future<RunOutcome>> jobs;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] { return run(configs[i], logs[i]); }));
  }
  int status = kExitOk;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const RunOutcome r = jobs[i].get();
    std::cout << "== " << paths[i] << '\n' << logs[i].str();
    status = std::max(status, r.status);
  }
  return status;
}

struct StabilityArgs {
  std::string config;
  double value = 0.0;
  double slope = 0.0;
  double dt = 0.05;
  double h = 0.03;
  double mu = 1.0;
  std::string roots = "legendre";
  std::size_t grid = 4096;
  std::string out;
};

int stability_command(StabilityArgs args, const CLI::App& sub) {
  try {
    if (!args.config.empty()) {
      const RunConfig c = parse_config(read_file(args.config));
      const ProblemSpec p = make_problem(c);
      const double h = (c.b - c.a) / static_cast<double>(c.N);
      if (sub.count("--dt") == 0) args.dt = c.dt;
      if (sub.count("--width") == 0) args.h = h;
      if (sub.count("--mu") == 0) args.mu = c.mu;
      if (sub.count("--roots") == 0) args.roots = c.roots == RootFamily::Legendre ? "legendre" : "chebyshev";
      if (sub.count("--value") == 0) {
        double peak = 0.0;
        for (std::size_t k = 0; k <= 10 * c.N; ++k) {
          peak = std::max(peak, std::abs(p.u0(c.a + static_cast<double>(k) * h / 10.0)));
        }
        args.value = peak;
      }
    }
    const RootFamily family = args.roots == "chebyshev" ? RootFamily::Chebyshev : RootFamily::Legendre;
    const StabilityScan s = scan(build_tables(family, args.h), args.value, args.slope, args.dt, args.mu, args.grid);

    std::ofstream file;
    if (!args.out.empty()) {
      file.open(args.out);
      if (!file) {
        throw ConfigError(0, "cannot open " + args.out);
      }
    }
    std::ostream& csv = args.out.empty() ? std::cout : file;
    csv << "phi,xi_row1,xi_row2\n";
    for (std::size_t k = 0; k < s.angles.size(); ++k) {
      csv << format_number(s.angles[k]) << ',' << format_number(s.modulus[0][k]) << ','
          << format_number(s.modulus[1][k]) << '\n';
    }
    std::cerr << "max|xi| = " << format_number(s.max_modulus) << '\n';
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::cerr << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::logic_error& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"Equal Width wave equation solver (cubic Hermite collocation)"};
  app.require_subcommand(1);

  std::string run_path;
  auto* run_cmd = app.add_subcommand("run", "run one configuration file");
  run_cmd->add_option("config", run_path, "key=value configuration")->required();

  std::vector<std::string> sweep_paths;
  auto* sweep_cmd = app.add_subcommand("sweep", "run several configurations concurrently");
  sweep_cmd->add_option("configs", sweep_paths, "configuration files")->required();

  StabilityArgs st;
  auto* stab_cmd = app.add_subcommand("stability", "amplification factor scan, CSV phi,xi_row1,xi_row2");
  stab_cmd->add_option("config", st.config, "take h, dt, mu and the frozen value from a configuration");
  stab_cmd->add_option("--value", st.value, "frozen U");
  stab_cmd->add_option("--slope", st.slope, "frozen U_x");
  stab_cmd->add_option("--dt", st.dt)->check(CLI::PositiveNumber);
  stab_cmd->add_option("--width", st.h, "element width h")->check(CLI::PositiveNumber);
  stab_cmd->add_option("--mu", st.mu)->check(CLI::PositiveNumber);
  stab_cmd->add_option("--roots", st.roots)->check(CLI::IsMember({"legendre", "chebyshev"}));
  stab_cmd->add_option("--grid", st.grid)->check(CLI::Range(std::size_t{64}, std::size_t{1} << 24));
  stab_cmd->add_option("--out", st.out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (*run_cmd) {
    return run_command(run_path);
  }
  if (*sweep_cmd) {
    return sweep_command(sweep_paths);
  }
  return stability_command(st, *stab_cmd);
}

}  // namespace ew::cli
