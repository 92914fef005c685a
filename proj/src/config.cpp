#include "mzcorr/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mzcorr {

std::string_view to_string(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "json"; }

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

void RunConfig::validate() const {
  if (!std::isfinite(delta) || delta < 0.0) throw ConfigError("delta", "must be finite and >= 0");
  if (!std::isfinite(period) || period <= 0.0) throw ConfigError("period", "must be finite and > 0");
  if (!std::isfinite(phi_min)) throw ConfigError("phi_min", "must be finite");
  if (!std::isfinite(phi_max)) throw ConfigError("phi_max", "must be finite");
  if (!(phi_min < phi_max)) throw ConfigError("phi_min", "must be less than phi_max");
  if (phi_steps < 2) throw ConfigError("phi_steps", "must be >= 2");
  if (segments < 1) throw ConfigError("segments", "must be >= 1");
  if (!std::isfinite(bandwidth_sigma) || bandwidth_sigma < 0.0) {
    throw ConfigError("bandwidth", "must be finite and >= 0");
  }
  if (quadrature_points < 11 || quadrature_points % 2 == 0) {
    throw ConfigError("quadrature_points", "must be odd and >= 11");
  }
  if (!std::isfinite(path_delay)) throw ConfigError("path_delay", "must be finite");
}

namespace {

double parse_double(std::string_view key, std::string_view text) {
  std::string_view t = text;
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(std::string(key), "expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
  std::string_view t = text;
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(std::string(key), "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

template <typename Parse>
auto parse_enum(std::string_view key, std::string_view text, Parse parse) {
  try {
    return parse(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(key), e.what());
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  out += '"';
  return out;
}

// Parses a basic TOML string starting at s[0] == '"'; returns the decoded
// text and the remainder after the closing quote.
std::pair<std::string, std::string_view> unquote(std::string_view s, std::size_t line_no) {
  std::string out;
  std::size_t i = 1;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '"') return {out, s.substr(i + 1)};
    if (c != '\\') {
      out += c;
      continue;
    }
    if (++i >= s.size()) break;
    switch (s[i]) {
      case '"':
        out += '"';
        break;
      case '\\':
        out += '\\';
        break;
      case 'n':
        out += '\n';
        break;
      case 't':
        out += '\t';
        break;
      default:
        throw ConfigError("line " + std::to_string(line_no), "unsupported escape in string");
    }
  }
  throw ConfigError("line " + std::to_string(line_no), "unterminated string");
}

}  // namespace

void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value) {
  const std::string k(key);
  if (key == "delta") {
    cfg.delta = parse_double(key, value);
  } else if (key == "period") {
    cfg.period = parse_double(key, value);
  } else if (key == "phi_min") {
    cfg.phi_min = parse_double(key, value);
  } else if (key == "phi_max") {
    cfg.phi_max = parse_double(key, value);
  } else if (key == "phi_steps") {
    cfg.phi_steps = static_cast<std::size_t>(parse_unsigned(key, value));
  } else if (key == "normalization") {
    cfg.normalization = parse_enum(key, value, parse_normalization);
  } else if (key == "policy") {
    cfg.policy = parse_enum(key, value, parse_sequence_policy);
  } else if (key == "segments") {
    cfg.segments = static_cast<std::size_t>(parse_unsigned(key, value));
  } else if (key == "seed") {
    cfg.seed = parse_unsigned(key, value);
  } else if (key == "bandwidth") {
    cfg.bandwidth_sigma = parse_double(key, value);
  } else if (key == "quadrature_points") {
    cfg.quadrature_points = static_cast<std::size_t>(parse_unsigned(key, value));
  } else if (key == "path_delay") {
    cfg.path_delay = parse_double(key, value);
  } else if (key == "engine") {
    cfg.engine = parse_enum(key, value, parse_engine);
  } else if (key == "port_layout") {
    cfg.port_layout = parse_enum(key, value, parse_port_layout);
  } else if (key == "output") {
    cfg.output_path = std::string(value);
  } else if (key == "format") {
    cfg.format = parse_enum(key, value, parse_output_format);
  } else if (key == "gnuplot") {
    cfg.gnuplot_path = std::string(value);
  } else {
    throw ConfigError(k, "unknown configuration key");
  }
}

std::string to_toml(const RunConfig& cfg) {
  std::ostringstream os;
  os << "delta = " << format_number(cfg.delta) << '\n'
     << "period = " << format_number(cfg.period) << '\n'
     << "phi_min = " << format_number(cfg.phi_min) << '\n'
     << "phi_max = " << format_number(cfg.phi_max) << '\n'
     << "phi_steps = " << cfg.phi_steps << '\n'
     << "normalization = " << quote(to_string(cfg.normalization)) << '\n'
     << "policy = " << quote(to_string(cfg.policy)) << '\n'
     << "segments = " << cfg.segments << '\n'
     << "seed = " << cfg.seed << '\n'
     << "bandwidth = " << format_number(cfg.bandwidth_sigma) << '\n'
     << "quadrature_points = " << cfg.quadrature_points << '\n'
     << "path_delay = " << format_number(cfg.path_delay) << '\n'
     << "engine = " << quote(to_string(cfg.engine)) << '\n'
     << "port_layout = " << quote(to_string(cfg.port_layout)) << '\n'
     << "output = " << quote(cfg.output_path) << '\n'
     << "format = " << quote(to_string(cfg.format)) << '\n'
     << "gnuplot = " << quote(cfg.gnuplot_path) << '\n';
  return os.str();
}

RunConfig parse_toml(std::string_view text, RunConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      throw ConfigError("line " + std::to_string(line_no), "tables are not supported; use top-level keys");
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(line_no), "expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    std::string_view rest = trim(line.substr(eq + 1));

    std::string value;
    if (!rest.empty() && rest.front() == '"') {
      auto [decoded, tail] = unquote(rest, line_no);
      value = std::move(decoded);
      rest = trim(tail);
    } else {
      const auto hash = rest.find('#');
      value = std::string(trim(rest.substr(0, hash)));
      rest = hash == std::string_view::npos ? std::string_view{} : rest.substr(hash);
    }
    if (!rest.empty() && rest.front() != '#') {
      throw ConfigError(std::string(key), "trailing characters after value");
    }
    set_config_value(base, key, value);
  }
  return base;
}

RunConfig load_toml_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_toml(buf.str(), std::move(base));
}

nlohmann::ordered_json to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["delta"] = cfg.delta;
  j["period"] = cfg.period;
  j["phi_min"] = cfg.phi_min;
  j["phi_max"] = cfg.phi_max;
  j["phi_steps"] = cfg.phi_steps;
  j["normalization"] = to_string(cfg.normalization);
  j["policy"] = to_string(cfg.policy);
  j["segments"] = cfg.segments;
  j["seed"] = cfg.seed;
  j["bandwidth"] = cfg.bandwidth_sigma;
  j["quadrature_points"] = cfg.quadrature_points;
  j["path_delay"] = cfg.path_delay;
  j["engine"] = to_string(cfg.engine);
  j["port_layout"] = to_string(cfg.port_layout);
  j["output"] = cfg.output_path;
  j["format"] = to_string(cfg.format);
  j["gnuplot"] = cfg.gnuplot_path;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j, RunConfig base) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      set_config_value(base, key, value.get<std::string>());
    } else if (value.is_number_unsigned()) {
      set_config_value(base, key, std::to_string(value.get<std::uint64_t>()));
    } else if (value.is_number()) {
      set_config_value(base, key, format_number(value.get<double>()));
    } else {
      throw ConfigError(key, "unsupported JSON value type");
    }
  }
  return base;
}

}  // namespace mzcorr
