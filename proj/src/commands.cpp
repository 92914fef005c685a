#include "mzcorr/commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <utility>

#include <CLI11.hpp>

#include "mzcorr/audit.hpp"
#include "mzcorr/dephasing.hpp"
#include "mzcorr/modulation.hpp"
#include "mzcorr/numeric.hpp"
#include "mzcorr/output.hpp"

namespace mzcorr::cli {

namespace {

using Writer = std::function<void(std::ostream&)>;

// Writes to `path`, or to `fallback` when path is empty.
bool write_to(const std::string& path, std::ostream& fallback, std::ostream& err, const Writer& writer) {
  if (path.empty()) {
    writer(fallback);
    fallback.flush();
    return static_cast<bool>(fallback);
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: output: cannot open '" << path << "' for writing\n";
    return false;
  }
  writer(file);
  file.close();
  if (!file) {
    err << "error: output: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

int write_curve(const RunConfig& cfg, const CorrelationCurve& curve, std::ostream& out, std::ostream& err) {
  bool ok = true;
  if (cfg.format == OutputFormat::csv) {
    ok = write_to(cfg.output_path, out, err, [&](std::ostream& os) { write_curve_csv(os, curve); });
    if (ok && !cfg.output_path.empty()) {
      ok = write_to(metadata_path(cfg.output_path), out, err, [&](std::ostream& os) { os << to_toml(cfg); });
    }
  } else {
    ok = write_to(cfg.output_path, out, err,
                  [&](std::ostream& os) { os << curve_to_json(curve, cfg).dump(2) << '\n'; });
  }
  if (ok && !cfg.gnuplot_path.empty()) {
    ok = write_to(cfg.gnuplot_path, out, err, [&](std::ostream& os) { write_curve_gnuplot(os, curve); });
  }
  return ok ? kOk : kIo;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kConfig;
  }
}

}  // namespace

CorrelationCurve compute_sweep(const RunConfig& cfg, std::ostream& warn) {
  cfg.validate();
  const std::vector<double> grid = linspace(cfg.phi_min, cfg.phi_max, cfg.phi_steps);
  const DetuningConfig detuning = cfg.detuning();

  if (cfg.engine == Engine::matrix) {
    if (cfg.bandwidth_sigma > 0.0) {
      throw ConfigError("engine", "the matrix engine has no bandwidth model; use engine=closed with bandwidth");
    }
    const PulseSequence seq = make_sequence(detuning, 2, SequencePolicy::alternate, 0, cfg.port_layout);
    return g2_ensemble(seq, grid, Engine::matrix, cfg.normalization);
  }

  const QuadratureCheck quad = quadrature_check(detuning);
  if (cfg.bandwidth_sigma == 0.0 && quad.is_quadrature) return g2_closed(grid, cfg.normalization);

  if (!quad.is_quadrature) {
    warn << "warning: zeta = " << format_number(zeta_of(detuning)) << " is off quadrature by "
         << format_number(quad.deviation) << " rad; using the general-zeta curve\n";
  }
  const SpectrumModel spectrum = cfg.bandwidth_sigma > 0.0
                                     ? SpectrumModel::gaussian(cfg.bandwidth_sigma, cfg.quadrature_points)
                                     : SpectrumModel::line();
  const DephasingSetup setup{zeta_of(detuning), cfg.period, cfg.path_delay};
  return dephase(setup, grid, spectrum, cfg.normalization);
}

CorrelationCurve compute_ensemble(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.bandwidth_sigma > 0.0) {
    throw ConfigError("bandwidth", "not supported by the ensemble command; use sweep");
  }
  const std::vector<double> grid = linspace(cfg.phi_min, cfg.phi_max, cfg.phi_steps);
  const PulseSequence seq = make_sequence(cfg.detuning(), cfg.segments, cfg.policy, cfg.seed, cfg.port_layout);
  return g2_ensemble(seq, grid, cfg.engine, cfg.normalization);
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return write_curve(cfg, compute_sweep(cfg, err), out, err); });
}

int cmd_ensemble(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return write_curve(cfg, compute_ensemble(cfg), out, err); });
}

int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    const AuditReport report = audit_consistency();
    nlohmann::ordered_json doc;
    doc["config"] = to_json(cfg);
    doc["checks"] = audit_to_json(report);
    const bool ok = write_to(cfg.output_path, out, err, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
    return ok ? kOk : kIo;
  });
}

int cmd_sequence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    const PulseSequence seq = make_sequence(cfg.detuning(), cfg.segments, cfg.policy, cfg.seed, cfg.port_layout);
    bool ok = write_to(cfg.output_path, out, err, [&](std::ostream& os) { write_sequence_csv(os, seq); });
    if (ok && !cfg.output_path.empty()) {
      ok = write_to(metadata_path(cfg.output_path), out, err, [&](std::ostream& os) { os << to_toml(cfg); });
    }
    return ok ? kOk : kIo;
  });
}

namespace {

struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr FlagSpec kFlags[] = {
    {"--delta", "delta", "rf detuning Delta (rad/s)"},
    {"--period", "period", "toggle period T (s); each pulse lasts T/2"},
    {"--phi-min", "phi_min", "first phi grid point (rad)"},
    {"--phi-max", "phi_max", "last phi grid point (rad)"},
    {"--phi-steps", "phi_steps", "number of phi grid points"},
    {"--normalization", "normalization", "paper|derived"},
    {"--policy", "policy", "alternate|random"},
    {"--segments", "segments", "pulse segments in the sequence"},
    {"--seed", "seed", "seed for the random policy"},
    {"--bandwidth", "bandwidth", "Gaussian source bandwidth sigma (rad/s)"},
    {"--quadrature-points", "quadrature_points", "Gauss-Hermite nodes (odd, >= 11)"},
    {"--path-delay", "path_delay", "arm imbalance dL/c (s) for dephasing"},
    {"--engine", "engine", "closed|matrix"},
    {"--port-layout", "port_layout", "alternating|swapped|shared"},
    {"--format", "format", "csv|json"},
    {"--output", "output", "output file (default: stdout)"},
    {"--gnuplot", "gnuplot", "also write a two-column phi/g2 file"},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase-basis MZI intensity correlation simulator", "mzcorr"};
  app.require_subcommand(1);

  std::vector<std::pair<std::string, std::string>> overrides;
  std::string config_path;

  using Command = int (*)(const RunConfig&, std::ostream&, std::ostream&);
  const std::pair<const char*, std::pair<const char*, Command>> commands[] = {
      {"sweep", {"write the g2(phi) curve (closed form or dephased)", cmd_sweep}},
      {"ensemble", {"write the segment-averaged g2(phi) curve for a pulse sequence", cmd_ensemble}},
      {"audit", {"cross-check the field, intensity and matrix layers", cmd_audit}},
      {"sequence", {"write the pulse sequence table", cmd_sequence}},
  };

  Command selected = nullptr;
  for (const auto& [name, info] : commands) {
    CLI::App* sub = app.add_subcommand(name, info.first);
    for (const FlagSpec& f : kFlags) {
      const std::string key = f.key;
      sub->add_option_function<std::string>(
          f.flag, [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); }, f.help);
    }
    sub->add_option("--config", config_path, "TOML file with defaults; flags override it");
    const Command cmd = info.second;
    sub->callback([&selected, cmd] { selected = cmd; });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (selected == nullptr) return kUsage;

  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_toml_file(config_path);
    for (const auto& [key, value] : overrides) set_config_value(cfg, key, value);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfig;
  }
  return selected(cfg, out, err);
}

}  // namespace mzcorr::cli
