#include "sppn/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "sppn/errors.hpp"

namespace sppn {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError("scenario config: " + where + ": " + what);
}

double to_double(const std::string& where, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) fail(where, "not a number: '" + v + "'");
    return d;
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
    fail(where, "not a number: '" + v + "'");
  }
}

long to_long(const std::string& where, const std::string& v) {
  const double d = to_double(where, v);
  if (d != std::floor(d)) fail(where, "not an integer: '" + v + "'");
  return static_cast<long>(d);
}

std::uint64_t to_u64(const std::string& where, const std::string& v) {
  try {
    std::size_t used = 0;
    const std::uint64_t u = std::stoull(v, &used);
    if (used != v.size()) fail(where, "not an unsigned integer: '" + v + "'");
    return u;
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
    fail(where, "not an unsigned integer: '" + v + "'");
  }
}

bool to_bool(const std::string& where, const std::string& v) {
  if (v == "true" || v == "on" || v == "1") return true;
  if (v == "false" || v == "off" || v == "0") return false;
  fail(where, "not a boolean: '" + v + "'");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double deg_to_rad(double deg) { return deg * kPi / 180.0; }

// "(x, y)"
Point2D to_point(const std::string& where, const std::string& v) {
  if (v.size() < 2 || v.front() != '(' || v.back() != ')') fail(where, "expected (x, y)");
  const std::string inner = v.substr(1, v.size() - 2);
  const std::size_t comma = inner.find(',');
  if (comma == std::string::npos) fail(where, "expected (x, y)");
  return {to_double(where, trim(inner.substr(0, comma))),
          to_double(where, trim(inner.substr(comma + 1)))};
}

// "[(x, y), (x, y), ...]" or "[]"
std::vector<Point2D> to_points(const std::string& where, const std::string& v) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') fail(where, "expected [(x, y), ...]");
  std::vector<Point2D> pts;
  const std::string inner = trim(v.substr(1, v.size() - 2));
  std::size_t pos = 0;
  while (pos < inner.size()) {
    const std::size_t open = inner.find('(', pos);
    if (open == std::string::npos) break;
    const std::size_t close = inner.find(')', open);
    if (close == std::string::npos) fail(where, "unterminated point");
    pts.push_back(to_point(where, inner.substr(open, close - open + 1)));
    pos = close + 1;
  }
  return pts;
}

using Section = std::map<std::string, std::string>;
using Raw = std::map<std::string, Section>;

Raw parse_raw(const std::string& text) {
  Raw raw;
  std::string section;  // "" = top level
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    const std::string s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        fail("line " + std::to_string(line_no), "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      raw[section];
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      fail("line " + std::to_string(line_no), "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail("line " + std::to_string(line_no), "empty key");
    if (!raw[section].emplace(key, value).second)
      fail("line " + std::to_string(line_no), "duplicate key '" + key + "'");
  }
  return raw;
}

// Pulls known keys out of a section and rejects leftovers.
class SectionReader {
 public:
  SectionReader(std::string name, Section section)
      : name_(std::move(name)), section_(std::move(section)) {}

  ~SectionReader() = default;

  std::optional<std::string> take(const std::string& key) {
    auto it = section_.find(key);
    if (it == section_.end()) return std::nullopt;
    std::string v = it->second;
    section_.erase(it);
    return v;
  }

  std::string where(const std::string& key) const {
    return name_.empty() ? key : "[" + name_ + "] " + key;
  }

  void finish() const {
    if (!section_.empty())
      fail(name_.empty() ? "top level" : "[" + name_ + "]",
           "unknown key '" + section_.begin()->first + "'");
  }

 private:
  std::string name_;
  Section section_;
};

RoleConfig read_role(Raw& raw, const std::string& name) {
  RoleConfig cfg;
  auto it = raw.find(name);
  if (it == raw.end()) return cfg;
  SectionReader r(name, std::move(it->second));
  raw.erase(it);
  if (auto v = r.take("positions")) cfg.positions = to_points(r.where("positions"), *v);
  if (auto v = r.take("density")) cfg.density = to_double(r.where("density"), *v);
  r.finish();
  return cfg;
}

}  // namespace

SimConfig parse_sim_config(const std::string& text) {
  Raw raw = parse_raw(text);
  SimConfig cfg;

  {
    SectionReader r("", std::move(raw[""]));
    raw.erase("");
    if (auto v = r.take("seed")) cfg.scenario.seed = to_u64(r.where("seed"), *v);
    if (auto v = r.take("sinr_threshold_db"))
      cfg.scenario.sinr_threshold = db_to_linear(to_double(r.where("sinr_threshold_db"), *v));
    if (auto v = r.take("fading")) {
      if (*v == "rayleigh")
        cfg.scenario.fading = FadingModel::Rayleigh;
      else if (*v == "none")
        cfg.scenario.fading = FadingModel::None;
      else
        fail(r.where("fading"), "expected rayleigh or none");
    }
    r.finish();
  }

  if (auto it = raw.find("region"); it != raw.end()) {
    SectionReader r("region", std::move(it->second));
    raw.erase(it);
    if (auto v = r.take("x_min_m")) cfg.scenario.region.x_min = to_double(r.where("x_min_m"), *v);
    if (auto v = r.take("x_max_m")) cfg.scenario.region.x_max = to_double(r.where("x_max_m"), *v);
    if (auto v = r.take("y_min_m")) cfg.scenario.region.y_min = to_double(r.where("y_min_m"), *v);
    if (auto v = r.take("y_max_m")) cfg.scenario.region.y_max = to_double(r.where("y_max_m"), *v);
    r.finish();
  }

  if (auto it = raw.find("radio"); it != raw.end()) {
    SectionReader r("radio", std::move(it->second));
    raw.erase(it);
    RadioParams& radio = cfg.scenario.radio;
    if (auto v = r.take("tx_power_w")) radio.tx_power_w = to_double(r.where("tx_power_w"), *v);
    if (auto v = r.take("jam_power_w")) radio.jam_power_w = to_double(r.where("jam_power_w"), *v);
    if (auto v = r.take("noise_power_w"))
      radio.noise_power_w = to_double(r.where("noise_power_w"), *v);
    if (auto v = r.take("pathloss_exponent"))
      radio.pathloss_exponent = to_double(r.where("pathloss_exponent"), *v);
    if (auto v = r.take("reference_distance_m"))
      radio.reference_distance_m = to_double(r.where("reference_distance_m"), *v);
    if (auto v = r.take("reference_gain_db"))
      radio.reference_gain = db_to_linear(to_double(r.where("reference_gain_db"), *v));
    if (auto v = r.take("min_distance_m"))
      radio.min_distance_m = to_double(r.where("min_distance_m"), *v);
    r.finish();
  }

  cfg.scenario.transmitters = read_role(raw, "transmitters");
  cfg.scenario.receivers = read_role(raw, "receivers");
  cfg.scenario.sensing_targets = read_role(raw, "sensing_targets");
  cfg.scenario.private_users = read_role(raw, "private_users");
  cfg.scenario.eavesdroppers = read_role(raw, "eavesdroppers");

  if (auto it = raw.find("jammers"); it != raw.end()) {
    SectionReader r("jammers", std::move(it->second));
    raw.erase(it);
    std::string kind = "sector";
    double main_gain = 4.0;
    double half_bw = kPi / 8.0;
    if (auto v = r.take("pattern")) kind = *v;
    if (auto v = r.take("main_gain")) main_gain = to_double(r.where("main_gain"), *v);
    if (auto v = r.take("half_beamwidth_deg"))
      half_bw = deg_to_rad(to_double(r.where("half_beamwidth_deg"), *v));
    r.finish();
    if (kind == "omni") {
      cfg.scenario.jammer_pattern = BeamPattern::omni();
    } else if (kind == "sector") {
      try {
        cfg.scenario.jammer_pattern = BeamPattern::sector(main_gain, half_bw);
      } catch (const std::invalid_argument& e) {
        fail("[jammers]", e.what());
      }
    } else {
      fail("[jammers] pattern", "expected omni or sector");
    }
  }

  if (auto it = raw.find("ris"); it != raw.end()) {
    SectionReader r("ris", std::move(it->second));
    raw.erase(it);
    RisDeployment dep;
    if (auto v = r.take("position"))
      dep.position = to_point(r.where("position"), *v);
    else
      fail("[ris]", "missing position");
    if (auto v = r.take("n_elements"))
      dep.array.n_elements = static_cast<int>(to_long(r.where("n_elements"), *v));
    dep.array.grid_cols = dep.array.n_elements;  // linear unless told otherwise
    if (auto v = r.take("grid_cols"))
      dep.array.grid_cols = static_cast<int>(to_long(r.where("grid_cols"), *v));
    if (auto v = r.take("element_spacing_wl"))
      dep.array.element_spacing = to_double(r.where("element_spacing_wl"), *v);
    if (auto v = r.take("orientation_deg"))
      dep.array.orientation = deg_to_rad(to_double(r.where("orientation_deg"), *v));
    if (auto v = r.take("include_direct_path"))
      dep.include_direct_path = to_bool(r.where("include_direct_path"), *v);
    if (auto v = r.take("tradeoff_weight"))
      cfg.ris.tradeoff_weight = to_double(r.where("tradeoff_weight"), *v);
    if (auto v = r.take("init")) {
      if (*v == "random")
        cfg.ris.init = PhaseInit::Random;
      else if (*v == "zero")
        cfg.ris.init = PhaseInit::Zero;
      else if (*v == "align_target")
        cfg.ris.init = PhaseInit::AlignTarget;
      else
        fail(r.where("init"), "expected random, zero or align_target");
    }
    if (auto v = r.take("tolerance")) cfg.ris.tolerance = to_double(r.where("tolerance"), *v);
    if (auto v = r.take("max_sweeps"))
      cfg.ris.max_sweeps = static_cast<int>(to_long(r.where("max_sweeps"), *v));
    if (auto v = r.take("user_index"))
      cfg.ris.user_index = static_cast<std::size_t>(to_u64(r.where("user_index"), *v));
    if (auto v = r.take("target_index"))
      cfg.ris.target_index = static_cast<std::size_t>(to_u64(r.where("target_index"), *v));
    r.finish();
    cfg.scenario.ris = dep;
  }

  if (auto it = raw.find("aco"); it != raw.end()) {
    SectionReader r("aco", std::move(it->second));
    raw.erase(it);
    if (auto v = r.take("n_ants")) cfg.aco.n_ants = static_cast<int>(to_long(r.where("n_ants"), *v));
    if (auto v = r.take("n_iterations"))
      cfg.aco.n_iterations = static_cast<int>(to_long(r.where("n_iterations"), *v));
    if (auto v = r.take("evaporation")) cfg.aco.evaporation = to_double(r.where("evaporation"), *v);
    if (auto v = r.take("pheromone_init"))
      cfg.aco.pheromone_init = to_double(r.where("pheromone_init"), *v);
    if (auto v = r.take("heuristic_weight"))
      cfg.aco.heuristic_weight = to_double(r.where("heuristic_weight"), *v);
    if (auto v = r.take("exploitation_prob"))
      cfg.aco.exploitation_prob = to_double(r.where("exploitation_prob"), *v);
    if (auto v = r.take("penalty_weight"))
      cfg.aco.penalty_weight = to_double(r.where("penalty_weight"), *v);
    if (auto v = r.take("impact_budget_db"))
      cfg.aco.impact_budget_db = to_double(r.where("impact_budget_db"), *v);
    if (auto v = r.take("grid_resolution_m"))
      cfg.aco_grid_resolution_m = to_double(r.where("grid_resolution_m"), *v);
    r.finish();
  }

  if (!raw.empty()) fail("[" + raw.begin()->first + "]", "unknown section");
  return cfg;
}

SimConfig load_sim_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read scenario file: " + path.string());
  return parse_sim_config(buf.str());
}

}  // namespace sppn
