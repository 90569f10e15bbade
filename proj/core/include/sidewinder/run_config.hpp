#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "sidewinder/backbone.hpp"
#include "sidewinder/gait.hpp"

namespace sidewinder {

/// Configuration error with the offending field and, when it came from a
/// file, the line it was set on.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, int line, const std::string& message);
  const std::string& field() const { return field_; }
  int line() const { return line_; }  ///< 0 when not from a file

 private:
  std::string field_;
  int line_;
};

/// One full run description.
struct RunConfig {
  ModelConfig model;
  GaitParams gait;
  int cycles = 10;
  SignalMode mode = SignalMode::kIdeal;
  long seed = 0;  ///< reserved for future stochastic features
  std::string out_dir = "out";
};

/// Raw key = value settings with their source locations. Keys use dotted
/// section prefixes (model.n_links, gait.high_time, run.cycles).
class ConfigMap {
 public:
  /// Parses a flat key = value file ('#' starts a comment).
  static ConfigMap from_file(const std::string& path);
  static ConfigMap from_text(const std::string& text, const std::string& source_name);

  /// Applies a KEY=VALUE override (later settings win).
  void set(const std::string& key, const std::string& value, const std::string& source = "--set");

  bool contains(const std::string& key) const;

  /// Resolves defaults, derives dependent values, validates everything.
  /// Throws ConfigError with a field/line diagnostic.
  RunConfig finalize() const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
    std::string source;
  };
  std::map<std::string, Entry> entries_;
};

/// Effective configuration as a parseable key = value document.
/// Parsing it back reproduces the same serialization.
std::string serialize_config(const RunConfig& cfg);

const char* to_string(SignalMode mode);
const char* to_string(Direction dir);

}  // namespace sidewinder
