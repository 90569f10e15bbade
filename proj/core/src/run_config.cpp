#include "sidewinder/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace sidewinder {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string config_format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "model.n_links",      "model.span",        "model.body_length",
      "model.amplitude",    "model.contact_tol", "model.dt",
      "model.cycle_period", "gait.time_constant", "gait.inflation_time",
      "gait.high_time",     "gait.low_time",     "gait.actuator_delay",
      "gait.pair_offset",   "gait.direction",    "run.cycles",
      "run.mode",           "run.seed",          "run.out_dir",
  };
  return keys;
}

}  // namespace

ConfigError::ConfigError(std::string field, int line, const std::string& message)
    : std::runtime_error(line > 0 ? field + " (line " + std::to_string(line) + "): " + message
                                  : field + ": " + message),
      field_(std::move(field)),
      line_(line) {}

ConfigMap ConfigMap::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open config file");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str(), path);
}

ConfigMap ConfigMap::from_text(const std::string& text, const std::string& source_name) {
  ConfigMap map;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source_name, line_no, "expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(source_name, line_no, "expected key = value");
    }
    map.entries_[key] = Entry{value, line_no, source_name};
  }
  return map;
}

void ConfigMap::set(const std::string& key, const std::string& value,
                    const std::string& source) {
  entries_[key] = Entry{value, 0, source};
}

bool ConfigMap::contains(const std::string& key) const { return entries_.count(key) > 0; }

RunConfig ConfigMap::finalize() const {
  for (const auto& [key, entry] : entries_) {
    if (known_keys().count(key) == 0) {
      throw ConfigError(key, entry.line, "unknown configuration key");
    }
  }

  auto get_double = [&](const std::string& key, double fallback) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    try {
      size_t pos = 0;
      const double v = std::stod(it->second.value, &pos);
      if (pos != it->second.value.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ConfigError(key, it->second.line, "not a number: '" + it->second.value + "'");
    }
  };
  auto get_long = [&](const std::string& key, long fallback) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    try {
      size_t pos = 0;
      const long v = std::stol(it->second.value, &pos);
      if (pos != it->second.value.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ConfigError(key, it->second.line, "not an integer: '" + it->second.value + "'");
    }
  };
  auto entry_line = [&](const std::string& key) {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  };

  RunConfig cfg;

  // Gait timing, derived from the pressurization time constant unless
  // given explicitly: inflation 5T, square dwells equal to it, the
  // inter-actuator delay half of it.
  cfg.gait.time_constant = get_double("gait.time_constant", 0.15);
  cfg.gait.inflation_time = get_double("gait.inflation_time", 5.0 * cfg.gait.time_constant);
  cfg.gait.high_time = get_double("gait.high_time", cfg.gait.inflation_time);
  cfg.gait.low_time = get_double("gait.low_time", cfg.gait.inflation_time);
  cfg.gait.actuator_delay = get_double("gait.actuator_delay", 0.5 * cfg.gait.inflation_time);
  cfg.gait.pair_offset = get_double("gait.pair_offset", M_PI / 2.0);

  auto dir_it = entries_.find("gait.direction");
  if (dir_it != entries_.end()) {
    const std::string& v = dir_it->second.value;
    if (v == "forward") {
      cfg.gait.direction = Direction::kForward;
    } else if (v == "reversed") {
      cfg.gait.direction = Direction::kReversed;
    } else {
      throw ConfigError("gait.direction", dir_it->second.line,
                        "must be 'forward' or 'reversed' (got '" + v + "')");
    }
  }

  cfg.model.n_links = static_cast<int>(get_long("model.n_links", 30));
  if (cfg.model.n_links < 2) {
    throw ConfigError("model.n_links", entry_line("model.n_links"),
                      "must be >= 2 (got " + std::to_string(cfg.model.n_links) + ")");
  }
  const double span = get_double("model.span", 2.0 * M_PI);
  if (!(span > 0.0) || !std::isfinite(span)) {
    throw ConfigError("model.span", entry_line("model.span"), "must be > 0");
  }
  cfg.model.delta_s = span / cfg.model.n_links;
  cfg.model.body_length = get_double("model.body_length", 0.91);
  cfg.model.amplitude = get_double("model.amplitude", 1.0);
  cfg.gait.amplitude = cfg.model.amplitude;
  cfg.model.contact_tol = get_double("model.contact_tol", 0.002);
  cfg.model.cycle_period = get_double("model.cycle_period", cfg.gait.wave_period());
  cfg.model.dt = get_double("model.dt", cfg.model.cycle_period / 500.0);

  cfg.cycles = static_cast<int>(get_long("run.cycles", 10));
  if (cfg.cycles < 1) {
    throw ConfigError("run.cycles", entry_line("run.cycles"), "must be >= 1");
  }
  cfg.seed = get_long("run.seed", 0);
  auto out_it = entries_.find("run.out_dir");
  if (out_it != entries_.end()) cfg.out_dir = out_it->second.value;

  auto mode_it = entries_.find("run.mode");
  if (mode_it != entries_.end()) {
    const std::string& v = mode_it->second.value;
    if (v == "ideal") {
      cfg.mode = SignalMode::kIdeal;
    } else if (v == "square") {
      cfg.mode = SignalMode::kSquare;
    } else {
      throw ConfigError("run.mode", mode_it->second.line,
                        "must be 'ideal' or 'square' (got '" + v + "')");
    }
  }

  try {
    cfg.model.validate();
    cfg.gait.validate();
  } catch (const std::invalid_argument& e) {
    // validate() messages start with the dotted field name
    const std::string msg = e.what();
    const auto cut = msg.find(' ');
    const std::string field = msg.substr(0, cut == std::string::npos ? msg.size() : cut);
    const std::string rest = cut == std::string::npos ? msg : msg.substr(cut + 1);
    throw ConfigError(field, entry_line(field), rest);
  }

  // Sampling guard for the pressure dynamics.
  if (cfg.mode == SignalMode::kSquare && cfg.model.dt > cfg.gait.time_constant / 5.0 + 1e-12) {
    throw ConfigError("model.dt", entry_line("model.dt"),
                      "square mode requires dt <= gait.time_constant / 5");
  }
  return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
  std::string out;
  out += "model.n_links = " + std::to_string(cfg.model.n_links) + "\n";
  out += "model.span = " + config_format(cfg.model.span()) + "\n";
  out += "model.body_length = " + config_format(cfg.model.body_length) + "\n";
  out += "model.amplitude = " + config_format(cfg.model.amplitude) + "\n";
  out += "model.contact_tol = " + config_format(cfg.model.contact_tol) + "\n";
  out += "model.dt = " + config_format(cfg.model.dt) + "\n";
  out += "model.cycle_period = " + config_format(cfg.model.cycle_period) + "\n";
  out += "gait.time_constant = " + config_format(cfg.gait.time_constant) + "\n";
  out += "gait.inflation_time = " + config_format(cfg.gait.inflation_time) + "\n";
  out += "gait.high_time = " + config_format(cfg.gait.high_time) + "\n";
  out += "gait.low_time = " + config_format(cfg.gait.low_time) + "\n";
  out += "gait.actuator_delay = " + config_format(cfg.gait.actuator_delay) + "\n";
  out += "gait.pair_offset = " + config_format(cfg.gait.pair_offset) + "\n";
  out += "gait.direction = " + std::string(to_string(cfg.gait.direction)) + "\n";
  out += "run.cycles = " + std::to_string(cfg.cycles) + "\n";
  out += "run.mode = " + std::string(to_string(cfg.mode)) + "\n";
  out += "run.seed = " + std::to_string(cfg.seed) + "\n";
  out += "run.out_dir = " + cfg.out_dir + "\n";
  return out;
}

const char* to_string(SignalMode mode) {
  return mode == SignalMode::kIdeal ? "ideal" : "square";
}

const char* to_string(Direction dir) {
  return dir == Direction::kForward ? "forward" : "reversed";
}

}  // namespace sidewinder
