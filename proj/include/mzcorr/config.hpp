#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mzcorr/correlation.hpp"
#include "mzcorr/modulation.hpp"
#include "mzcorr/numeric.hpp"

namespace mzcorr {

enum class OutputFormat { csv, json };

std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view text);

/// Invalid configuration; field() names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Everything a run depends on. Defaults give zeta = pi/2 over [-pi, pi].
struct RunConfig {
  double delta = kPi;
  double period = 1.0;
  double phi_min = -kPi;
  double phi_max = kPi;
  std::size_t phi_steps = 1001;
  NormalizationMode normalization = NormalizationMode::paper;
  SequencePolicy policy = SequencePolicy::alternate;
  std::size_t segments = 2;
  std::uint64_t seed = 0;
  double bandwidth_sigma = 0.0;
  std::size_t quadrature_points = 61;
  double path_delay = 0.0;
  Engine engine = Engine::closed_form;
  PortLayout port_layout = PortLayout::alternating;
  std::string output_path;  // empty: standard output
  OutputFormat format = OutputFormat::csv;
  std::string gnuplot_path;  // empty: none

  friend bool operator==(const RunConfig&, const RunConfig&) = default;

  void validate() const;
  DetuningConfig detuning() const { return {delta, period, 0.0}; }
};

/// Flat TOML: one `key = value` per line, keys as in to_toml().
std::string to_toml(const RunConfig& cfg);
/// Starts from `base` and overrides every key present in `text`.
RunConfig parse_toml(std::string_view text, RunConfig base = {});
RunConfig load_toml_file(const std::string& path, RunConfig base = {});

nlohmann::ordered_json to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});

/// Applies one textual key/value (TOML key names) to cfg.
void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value);

}  // namespace mzcorr
