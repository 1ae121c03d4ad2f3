#include "irvs/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace irvs {

double planar_distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

int SystemConfig::total_elements() const {
  return std::accumulate(elements_per_surface.begin(), elements_per_surface.end(), 0);
}

void SystemConfig::resolve_elements() {
  if (elements_per_surface.size() == 1 && n_surfaces > 1) {
    elements_per_surface.assign(static_cast<std::size_t>(n_surfaces),
                                elements_per_surface.front());
  }
}

void SystemConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("config: " + msg); };
  if (n_bs_antennas < 1) fail("n_bs_antennas must be >= 1");
  if (n_users < 1) fail("n_users must be >= 1");
  if (n_surfaces < 1) fail("n_surfaces must be >= 1");
  if (elements_per_surface.size() != static_cast<std::size_t>(n_surfaces))
    fail("elements_per_surface needs one entry per surface");
  for (int n : elements_per_surface)
    if (n < 1) fail("every surface needs >= 1 elements");
  if (tx_power_watts <= 0.0) fail("tx_power_watts must be > 0");
  if (bandwidth_hz <= 0.0) fail("bandwidth_hz must be > 0");
  if (carrier_freq_mhz <= 0.0) fail("carrier_freq_mhz must be > 0");
  if (bs_height_m <= 0.0 || surface_height_m <= 0.0 || ue_height_m <= 0.0)
    fail("heights must be > 0");
  if (area_m <= 0.0) fail("area_m must be > 0");
  if (!(breakpoint_d0_km < breakpoint_d1_km))
    fail("breakpoint_d0_km must be < breakpoint_d1_km");
  if (breakpoint_d0_km <= 0.0) fail("breakpoint_d0_km must be > 0");
  if (shadow_sigma_db < 0.0) fail("shadow_sigma_db must be >= 0");
  if (rician_factor < 0.0) fail("rician_factor must be >= 0");
  if (temperature_k <= 0.0) fail("temperature_k must be > 0");
  if (quantizer_bits < 1) fail("quantizer_bits must be >= 1");
  if (ao_iterations < 1) fail("ao_iterations must be >= 1");
  if (n_drops < 1) fail("n_drops must be >= 1");
}

namespace {

std::vector<double> parse_number_list(const std::string& value, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      throw std::invalid_argument("config: bad number '" + item + "' for key " + key);
    }
  }
  if (out.empty()) throw std::invalid_argument("config: empty value for key " + key);
  return out;
}

}  // namespace

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  SystemConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    // key = value, '=' optional
    std::string key, value;
    if (auto eq = line.find('='); eq != std::string::npos) {
      key = line.substr(0, eq);
      value = line.substr(eq + 1);
    } else {
      std::istringstream ss(line);
      ss >> key;
      std::getline(ss, value);
    }
    auto trim = [](std::string& s) {
      const char* ws = " \t\r\n";
      s.erase(0, s.find_first_not_of(ws));
      s.erase(s.find_last_not_of(ws) + 1);
    };
    trim(key);
    trim(value);
    if (key.empty()) continue;
    if (value.empty())
      throw std::invalid_argument("config: missing value for '" + key + "' at line " +
                                  std::to_string(line_no));

    auto num = [&] { return parse_number_list(value, key).front(); };
    if (key == "n_bs_antennas") cfg.n_bs_antennas = static_cast<int>(num());
    else if (key == "n_users") cfg.n_users = static_cast<int>(num());
    else if (key == "n_surfaces") cfg.n_surfaces = static_cast<int>(num());
    else if (key == "elements_per_surface") {
      cfg.elements_per_surface.clear();
      for (double v : parse_number_list(value, key))
        cfg.elements_per_surface.push_back(static_cast<int>(v));
    } else if (key == "tx_power_watts") cfg.tx_power_watts = num();
    else if (key == "bandwidth_hz") cfg.bandwidth_hz = num();
    else if (key == "carrier_freq_mhz") cfg.carrier_freq_mhz = num();
    else if (key == "bs_height_m") cfg.bs_height_m = num();
    else if (key == "surface_height_m") cfg.surface_height_m = num();
    else if (key == "ue_height_m") cfg.ue_height_m = num();
    else if (key == "area_m") cfg.area_m = num();
    else if (key == "bs_position") {
      auto v = parse_number_list(value, key);
      if (v.size() != 2) throw std::invalid_argument("config: bs_position needs x,y");
      cfg.bs_position = {v[0], v[1]};
    } else if (key == "breakpoint_d0_km") cfg.breakpoint_d0_km = num();
    else if (key == "breakpoint_d1_km") cfg.breakpoint_d1_km = num();
    else if (key == "shadow_sigma_db") cfg.shadow_sigma_db = num();
    else if (key == "rician_factor") cfg.rician_factor = num();
    else if (key == "los_ref_loss_db") cfg.los_ref_loss_db = num();
    else if (key == "los_exponent") cfg.los_exponent = num();
    else if (key == "noise_figure_db") cfg.noise_figure_db = num();
    else if (key == "temperature_k") cfg.temperature_k = num();
    else if (key == "quantizer_bits") cfg.quantizer_bits = static_cast<int>(num());
    else if (key == "ao_iterations") cfg.ao_iterations = static_cast<int>(num());
    else if (key == "n_drops") cfg.n_drops = static_cast<int>(num());
    else if (key == "master_seed") cfg.master_seed = static_cast<std::uint64_t>(num());
    else if (key == "bs_surf_gain_model") {
      if (value == "unit") cfg.bs_surf_gain_model = BsSurfGainModel::kUnit;
      else if (value == "powerlaw") cfg.bs_surf_gain_model = BsSurfGainModel::kPowerLaw;
      else throw std::invalid_argument("config: bs_surf_gain_model must be unit or powerlaw");
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "' at line " +
                                  std::to_string(line_no));
    }
  }
  cfg.resolve_elements();
  return cfg;
}

DropGeometry sample_geometry(const SystemConfig& config, int drop_index) {
  Rng rng(derive_seed(config.master_seed, static_cast<std::uint64_t>(drop_index),
                      kGeometryStream));
  DropGeometry geo;
  geo.bs = config.bs_position;
  geo.users.resize(static_cast<std::size_t>(config.n_users));
  for (auto& u : geo.users) {
    u.x = rng.uniform(0.0, config.area_m);
    u.y = rng.uniform(0.0, config.area_m);
  }
  geo.surfaces.resize(static_cast<std::size_t>(config.n_surfaces));
  for (auto& s : geo.surfaces) {
    s.x = rng.uniform(0.0, config.area_m);
    s.y = rng.uniform(0.0, config.area_m);
  }
  return geo;
}

}  // namespace irvs
