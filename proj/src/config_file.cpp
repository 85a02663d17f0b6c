#include "rssikit/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "rssikit/errors.hpp"

namespace rssikit {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double to_double(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
  }
}

int to_int(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const int i = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (const std::exception&) {
    throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
  }
}

bool to_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: '" + key + "' expects a boolean, got '" + v + "'");
}

void apply_baseline(BaselineConfig& cfg, const std::string& key,
                    const std::string& value, const std::string& where) {
  if (key == "threshold")
    cfg.threshold = to_double(value, where);
  else if (key == "window")
    cfg.window = to_int(value, where);
  else if (key == "alpha")
    cfg.fixed_alpha = to_double(value, where);
  else if (key == "warmup")
    cfg.warmup = to_int(value, where);
  else
    throw ConfigError("config: unknown key '" + where + "'");
}

}  // namespace

KMode parse_k_mode(const std::string& s) {
  if (s == "literal" || s == "paper_literal") return KMode::paper_literal;
  if (s == "derived" || s == "derivation_consistent")
    return KMode::derivation_consistent;
  throw ConfigError("k-mode must be 'literal' or 'derived', got '" + s + "'");
}

Normalization parse_normalization(const std::string& s) {
  if (s == "none") return Normalization::none;
  if (s == "zscore") return Normalization::zscore;
  if (s == "minmax") return Normalization::minmax;
  throw ConfigError("normalize must be none|zscore|minmax, got '" + s + "'");
}

SigmaZSource parse_sigma_z_source(const std::string& s) {
  if (s == "zstream" || s == "z_stream") return SigmaZSource::z_stream;
  if (s == "closedform" || s == "closed_form") return SigmaZSource::closed_form;
  throw ConfigError("sigma-z source must be zstream|closedform, got '" + s + "'");
}

void load_config(std::istream& in, ToolConfig& config) {
  std::string line;
  std::string section;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') continue;
    if (stripped.front() == '[' && stripped.back() == ']') {
      section = trim(stripped.substr(1, stripped.size() - 2));
      continue;
    }
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    const std::string where = section.empty() ? key : section + "." + key;

    if (section == "detector") {
      if (key == "delta")
        config.detector.delta = to_double(value, where);
      else if (key == "k_mode")
        config.detector.k_mode = parse_k_mode(value);
      else if (key == "warmup")
        config.detector.warmup = to_int(value, where);
      else if (key == "exclude_outliers")
        config.detector.exclude_outliers_from_stats = to_bool(value, where);
      else if (key == "normalize")
        config.detector.normalization = parse_normalization(value);
      else if (key == "sigma_z_source")
        config.detector.sigma_z_source = parse_sigma_z_source(value);
      else
        throw ConfigError("config: unknown key '" + where + "'");
    } else if (section == "alpha") {
      auto& p = config.detector.alpha_policy;
      if (key == "mode") {
        if (value == "fixed")
          p.mode = AlphaMode::fixed;
        else if (value == "calibrated")
          p.mode = AlphaMode::calibrated;
        else
          throw ConfigError("config: alpha.mode must be fixed|calibrated");
      } else if (key == "fixed")
        p.fixed_alpha = to_double(value, where);
      else if (key == "pilot")
        p.pilot_alpha = to_double(value, where);
      else if (key == "clamp_lo")
        p.clamp_lo = to_double(value, where);
      else if (key == "clamp_hi")
        p.clamp_hi = to_double(value, where);
      else if (key == "tol")
        p.tol = to_double(value, where);
      else if (key == "max_iter")
        p.max_iter = to_int(value, where);
      else
        throw ConfigError("config: unknown key '" + where + "'");
    } else if (section == "baseline.zscore") {
      apply_baseline(config.zscore, key, value, where);
    } else if (section == "baseline.moving_average") {
      apply_baseline(config.moving_average, key, value, where);
    } else if (section == "baseline.mad") {
      apply_baseline(config.mad, key, value, where);
    } else if (section == "baseline.basic_ema") {
      apply_baseline(config.basic_ema, key, value, where);
    } else if (section == "suite") {
      if (key == "duration_s")
        config.suite.duration_s = to_double(value, where);
      else if (key == "inject_fraction")
        config.suite.inject_fraction = to_double(value, where);
      else if (key == "inject_min_db")
        config.suite.inject_min_db = to_double(value, where);
      else if (key == "inject_max_db")
        config.suite.inject_max_db = to_double(value, where);
      else
        throw ConfigError("config: unknown key '" + where + "'");
    } else {
      throw ConfigError("config: unknown section '" + section + "'");
    }
  }
}

void load_config_file(const std::string& path, ToolConfig& config) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file: " + path);
  load_config(in, config);
}

}  // namespace rssikit
