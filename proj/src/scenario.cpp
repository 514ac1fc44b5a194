#include "latticepol/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "latticepol/error.hpp"
#include "latticepol/units.hpp"

namespace latticepol {
namespace {

using Json = nlohmann::ordered_json;

// Shared parameter block for the cavity-polariton presets: 2 eV exciton,
// 2 e*A dipole, a = 2000 A, L/m = 3100 A tuned to resonance.
constexpr std::string_view kFigure4 = R"({
  "name": "figure4",
  "atom": {"omega_a_eV": 2.0, "dipole_eA": 2.0},
  "lattice": {"constant_A": 2000, "nx": 100, "ny": 100},
  "cavity": {"length_A": 3100, "mode_index": 1, "epsilon": 1.0},
  "exciton": {"zero_detuning": true}
})";

constexpr std::string_view kFigure7 = R"({
  "name": "figure7",
  "atom": {"omega_a_eV": 2.0, "dipole_eA": 2.0},
  "lattice": {"constant_A": 2000, "nx": 100, "ny": 100},
  "cavity": {"length_A": 3100, "mode_index": 1, "epsilon": 1.0,
             "gamma_up": 7.5e10, "gamma_low": 7.5e10},
  "exciton": {"Gamma_ex": 1.5e9, "zero_detuning": true},
  "sweep": {"k_list": [0, 2.5e5, 5e5, 7.5e5, 1e6]}
})";

constexpr std::string_view kTransferEstimate = R"({
  "name": "transfer-estimate",
  "atom": {"omega_a_eV": 2.0, "dipole_eA": 2.0, "linewidth_eV": 2.5e-8},
  "lattice": {"constant_A": 1000, "nx": 6, "ny": 6},
  "cavity": {"length_A": 3100, "mode_index": 1, "epsilon": 1.0},
  "exciton": {"zero_detuning": true}
})";

// 85Rb D2 line. The cavity is set to half the transition wavelength.
constexpr std::string_view kRb85 = R"({
  "name": "rb85",
  "atom": {"omega_a_eV": 1.56, "dipole_eA": 2.0, "linewidth_eV": 2.5e-8},
  "lattice": {"constant_A": 1000, "nx": 6, "ny": 6},
  "cavity": {"length_A": 3974.5, "mode_index": 1, "epsilon": 1.0},
  "exciton": {"zero_detuning": true}
})";

// 23Na D2 line.
constexpr std::string_view kNa23 = R"({
  "name": "na23",
  "atom": {"omega_a_eV": 2.1, "dipole_eA": 2.0, "linewidth_eV": 4e-8},
  "lattice": {"constant_A": 1000, "nx": 6, "ny": 6},
  "cavity": {"length_A": 2952.0, "mode_index": 1, "epsilon": 1.0},
  "exciton": {"zero_detuning": true}
})";

const std::map<std::string, std::string_view, std::less<>>& presets() {
  static const std::map<std::string, std::string_view, std::less<>> table{
      {"figure4", kFigure4},   {"figure5", kFigure4},   {"figure6", kFigure4},
      {"figure7", kFigure7},   {"figure8", kFigure7},   {"figure9", kFigure7},
      {"rb85", kRb85},         {"na23", kNa23},         {"transfer-estimate", kTransferEstimate},
  };
  return table;
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Reads one object block, rejecting unknown keys.
class Block {
 public:
  Block(const Json& parent, std::string name, bool required) : name_(std::move(name)) {
    auto it = parent.find(name_);
    if (it == parent.end()) {
      if (required) throw ConfigError("missing required block '" + name_ + "'");
      return;
    }
    if (!it->is_object()) throw ConfigError("'" + name_ + "' must be an object");
    obj_ = &*it;
  }

  void allow(std::initializer_list<const char*> keys) const {
    if (!obj_) return;
    std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [key, value] : obj_->items()) {
      if (!ok.count(key)) throw ConfigError("unknown key '" + path(key) + "'");
    }
  }

  [[nodiscard]] const Json* find(const std::string& key) const {
    if (!obj_) return nullptr;
    auto it = obj_->find(key);
    return it == obj_->end() ? nullptr : &*it;
  }

  void number(const std::string& key, double& out, bool required = false) const {
    const Json* v = find(key);
    if (!v) {
      if (required) throw ConfigError("missing required key '" + path(key) + "'");
      return;
    }
    if (!v->is_number()) throw ConfigError("'" + path(key) + "' must be a number");
    out = v->get<double>();
    if (!std::isfinite(out)) throw ConfigError("'" + path(key) + "' must be finite");
  }

  void optional_number(const std::string& key, std::optional<double>& out) const {
    if (!find(key)) return;
    double v = 0.0;
    number(key, v);
    out = v;
  }

  void integer(const std::string& key, int& out) const {
    const Json* v = find(key);
    if (!v) return;
    if (!v->is_number_integer()) throw ConfigError("'" + path(key) + "' must be an integer");
    const auto raw = v->get<long long>();
    if (raw < -1000000000LL || raw > 1000000000LL) {
      throw ConfigError("'" + path(key) + "' is out of range");
    }
    out = static_cast<int>(raw);
  }

  void boolean(const std::string& key, bool& out) const {
    const Json* v = find(key);
    if (!v) return;
    if (!v->is_boolean()) throw ConfigError("'" + path(key) + "' must be true or false");
    out = v->get<bool>();
  }

  [[nodiscard]] std::optional<std::string> string(const std::string& key) const {
    const Json* v = find(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) throw ConfigError("'" + path(key) + "' must be a string");
    return v->get<std::string>();
  }

  [[nodiscard]] std::string path(const std::string& key) const { return name_ + "." + key; }

 private:
  std::string name_;
  const Json* obj_ = nullptr;
};

void require(bool ok, const std::string& key, const std::string& constraint) {
  if (!ok) throw ConfigError("'" + key + "' " + constraint);
}

void validate(const ScenarioConfig& c) {
  require(c.atom.omega_a_eV > 0.0, "atom.omega_a_eV", "must be > 0");
  require(c.atom.dipole_eA >= 0.0, "atom.dipole_eA", "must be >= 0");
  require(c.atom.linewidth_eV >= 0.0, "atom.linewidth_eV", "must be >= 0");
  require(c.lattice.constant_A > 0.0, "lattice.constant_A", "must be > 0");
  require(c.lattice.nx >= 1, "lattice.nx", "must be >= 1");
  require(c.lattice.ny >= 1, "lattice.ny", "must be >= 1");
  require(c.cavity.length_A > 0.0, "cavity.length_A", "must be > 0");
  require(c.cavity.mode_index >= 1, "cavity.mode_index", "must be >= 1");
  require(c.cavity.epsilon > 0.0, "cavity.epsilon", "must be > 0");
  require(c.cavity.gamma_up >= 0.0, "cavity.gamma_up", "must be >= 0");
  require(c.cavity.gamma_low >= 0.0, "cavity.gamma_low", "must be >= 0");
  require(c.exciton.Gamma_ex >= 0.0, "exciton.Gamma_ex", "must be >= 0");
  require(c.sweep.k_max >= 0.0, "sweep.k_max", "must be >= 0");
  require(c.sweep.k_samples >= 1, "sweep.k_samples", "must be >= 1");
  require(!c.sweep.k_list.empty(), "sweep.k_list", "must not be empty");
  for (double k : c.sweep.k_list) require(k >= 0.0, "sweep.k_list", "entries must be >= 0");
  require(c.sweep.omega_samples >= 3, "sweep.omega_samples", "must be >= 3");
  require(c.sweep.omega_min.has_value() == c.sweep.omega_max.has_value(), "sweep.omega_min",
          "and sweep.omega_max must be given together");
  if (c.sweep.omega_min) {
    require(*c.sweep.omega_min < *c.sweep.omega_max, "sweep.omega_min",
            "must be below sweep.omega_max");
  }
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ConfigError("config parse error at " + line_col(text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be a JSON object");
  for (const auto& [key, value] : root.items()) {
    static const std::set<std::string> top{"name", "atom", "lattice", "cavity", "exciton", "sweep"};
    if (!top.count(key)) throw ConfigError("unknown key '" + key + "'");
  }

  ScenarioConfig c;
  if (auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) throw ConfigError("'name' must be a string");
    c.name = it->get<std::string>();
  }

  const Block atom(root, "atom", true);
  atom.allow({"omega_a_eV", "dipole_eA", "linewidth_eV"});
  atom.number("omega_a_eV", c.atom.omega_a_eV, true);
  atom.number("dipole_eA", c.atom.dipole_eA, true);
  atom.number("linewidth_eV", c.atom.linewidth_eV);

  const Block lattice(root, "lattice", true);
  lattice.allow({"constant_A", "nx", "ny"});
  lattice.number("constant_A", c.lattice.constant_A, true);
  lattice.integer("nx", c.lattice.nx);
  lattice.integer("ny", c.lattice.ny);

  const Block cavity(root, "cavity", true);
  cavity.allow({"length_A", "mode_index", "epsilon", "gamma_up", "gamma_low"});
  cavity.number("length_A", c.cavity.length_A, true);
  cavity.integer("mode_index", c.cavity.mode_index);
  cavity.number("epsilon", c.cavity.epsilon);
  cavity.number("gamma_up", c.cavity.gamma_up);
  cavity.number("gamma_low", c.cavity.gamma_low);

  const Block exciton(root, "exciton", false);
  exciton.allow({"Gamma_ex", "dispersion_mode", "geometry_mode", "zero_detuning",
                 "exact_dispersion", "j1_eV", "j2_eV"});
  exciton.number("Gamma_ex", c.exciton.Gamma_ex);
  if (auto s = exciton.string("dispersion_mode")) {
    c.exciton.dispersion_mode = parse_dispersion_mode(*s);
  }
  if (auto s = exciton.string("geometry_mode")) c.exciton.geometry_mode = parse_geometry_mode(*s);
  exciton.boolean("zero_detuning", c.exciton.zero_detuning);
  exciton.boolean("exact_dispersion", c.exciton.exact_dispersion);
  exciton.optional_number("j1_eV", c.exciton.j1_eV);
  exciton.optional_number("j2_eV", c.exciton.j2_eV);

  const Block sweep(root, "sweep", false);
  sweep.allow({"k_max", "k_samples", "k_list", "omega_min", "omega_max", "omega_samples"});
  sweep.number("k_max", c.sweep.k_max);
  sweep.integer("k_samples", c.sweep.k_samples);
  if (const Json* list = sweep.find("k_list")) {
    if (!list->is_array()) throw ConfigError("'sweep.k_list' must be an array of numbers");
    c.sweep.k_list.clear();
    for (const auto& v : *list) {
      if (!v.is_number()) throw ConfigError("'sweep.k_list' must be an array of numbers");
      c.sweep.k_list.push_back(v.get<double>());
    }
  }
  sweep.optional_number("omega_min", c.sweep.omega_min);
  sweep.optional_number("omega_max", c.sweep.omega_max);
  sweep.integer("omega_samples", c.sweep.omega_samples);

  validate(c);
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string emit_config(const ScenarioConfig& c) {
  Json j;
  j["name"] = c.name;
  j["atom"] = {{"omega_a_eV", c.atom.omega_a_eV},
               {"dipole_eA", c.atom.dipole_eA},
               {"linewidth_eV", c.atom.linewidth_eV}};
  j["lattice"] = {{"constant_A", c.lattice.constant_A}, {"nx", c.lattice.nx}, {"ny", c.lattice.ny}};
  j["cavity"] = {{"length_A", c.cavity.length_A},   {"mode_index", c.cavity.mode_index},
                 {"epsilon", c.cavity.epsilon},     {"gamma_up", c.cavity.gamma_up},
                 {"gamma_low", c.cavity.gamma_low}};
  Json ex = {{"Gamma_ex", c.exciton.Gamma_ex},
             {"dispersion_mode", std::string(to_string(c.exciton.dispersion_mode))},
             {"geometry_mode", std::string(to_string(c.exciton.geometry_mode))},
             {"zero_detuning", c.exciton.zero_detuning},
             {"exact_dispersion", c.exciton.exact_dispersion}};
  if (c.exciton.j1_eV) ex["j1_eV"] = *c.exciton.j1_eV;
  if (c.exciton.j2_eV) ex["j2_eV"] = *c.exciton.j2_eV;
  j["exciton"] = ex;
  Json sw = {{"k_max", c.sweep.k_max},
             {"k_samples", c.sweep.k_samples},
             {"k_list", c.sweep.k_list},
             {"omega_samples", c.sweep.omega_samples}};
  if (c.sweep.omega_min) sw["omega_min"] = *c.sweep.omega_min;
  if (c.sweep.omega_max) sw["omega_max"] = *c.sweep.omega_max;
  j["sweep"] = sw;
  return j.dump();
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : presets()) names.push_back(name);
  return names;
}

std::string preset_text(std::string_view name) {
  auto it = presets().find(name);
  if (it == presets().end()) {
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown preset '" + std::string(name) + "' (known: " + known + ")");
  }
  return std::string(it->second);
}

ScenarioConfig preset_config(std::string_view name) {
  ScenarioConfig c = parse_config(preset_text(name));
  c.name = std::string(name);
  return c;
}

double Scenario::exciton_frequency(double k) const {
  if (!config.exciton.exact_dispersion) return exciton_bottom;
  const double lift = dispersion_shift(band, {k, 0.0}) + 4.0 * (band.couplings.j1 + band.couplings.j2);
  return exciton_bottom + lift;
}

double Scenario::photon_frequency(double k) const { return photon_dispersion(cavity, k); }

std::complex<double> Scenario::coupling(double k) const {
  return coupling_strength(cavity, atom, lattice, k);
}

PolaritonPair Scenario::polaritons(double k) const {
  return branches(exciton_frequency(k), photon_frequency(k), coupling(k), damping.gamma_ex);
}

std::vector<double> Scenario::k_sweep() const {
  const int n = config.sweep.k_samples;
  if (n == 1) return {0.0};
  return uniform_grid(0.0, config.sweep.k_max, static_cast<std::size_t>(n));
}

std::vector<double> Scenario::omega_grid(const PolaritonPair& pair) const {
  const auto n = static_cast<std::size_t>(config.sweep.omega_samples);
  if (config.sweep.omega_min) return uniform_grid(*config.sweep.omega_min, *config.sweep.omega_max, n);
  return default_grid(pair, damping, n);
}

Scenario resolve(const ScenarioConfig& config) {
  validate(config);
  Scenario s;
  s.config = config;
  s.atom = {ev_to_angular(config.atom.omega_a_eV), eangstrom_to_cm(config.atom.dipole_eA),
            ev_to_angular(config.atom.linewidth_eV)};
  s.lattice = {angstrom_to_m(config.lattice.constant_A), config.lattice.nx, config.lattice.ny};
  s.cavity = {angstrom_to_m(config.cavity.length_A), config.cavity.mode_index,
              config.cavity.epsilon, config.cavity.gamma_up, config.cavity.gamma_low};
  s.damping = {config.cavity.gamma_up, config.cavity.gamma_low, config.exciton.Gamma_ex};
  s.atom.validate();
  s.lattice.validate();
  s.cavity.validate();
  s.damping.validate();

  s.couplings = transfer_parameters(s.atom, s.lattice, config.exciton.geometry_mode);
  if (config.exciton.j1_eV) s.couplings.j1 = ev_to_angular(*config.exciton.j1_eV);
  if (config.exciton.j2_eV) s.couplings.j2 = ev_to_angular(*config.exciton.j2_eV);
  s.couplings_overridden = config.exciton.j1_eV.has_value() || config.exciton.j2_eV.has_value();

  s.band = {s.atom.omega_a, s.couplings, s.lattice.a, config.exciton.dispersion_mode};
  const double natural = s.band.bottom();
  s.exciton_bottom = config.exciton.zero_detuning ? s.photon_frequency(0.0) : natural;
  s.detuning_adjust = s.exciton_bottom - natural;
  s.band.omega_a += s.detuning_adjust;
  return s;
}

}  // namespace latticepol
