#pragma once

// Loader for the checked-in tolerance file. Plain key = value text, '#'
// comments; unknown keys are rejected so a typo cannot silently fall back to
// a default. Values are frozen in config/tolerances.conf with the
// calibration grid recorded next to each number; code never hardcodes them.

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qrank {

class Tolerances {
 public:
  Tolerances() {
    // Defaults match config/tolerances.conf; the file is the authority and
    // tests load it explicitly.
    v_ = {
        {"moment_ratio_final_exp", 0.25},  {"moment_ratio_final_dm", 0.5},
        {"moment_ratio_u0_n1200", 0.15},   {"moment_ratio_u2_n1200", 0.25},
        {"abs_moment_k3_final", 0.3},      {"ks_logistic_n1000", 0.05},
        {"em_slope_margin", 0.2},          {"em_noise_floor_rel", 1e-13},
        {"ingham_p500_rel", 0.10},         {"lemma_disc_final", 0.2},
        {"lemma_disc_m_gap", 0.05},        {"bessel_u_m0_n500_rel", 0.02},
        {"crank_moment_j1_w008_band", 0.2}, {"pochhammer_w01_band", 0.01},
        {"symbolic_rel", 1e-12},
    };
  }

  static Tolerances load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tolerance file: " + path);
    Tolerances t;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      std::string key, eq;
      double value = 0.0;
      if (!(ss >> key)) continue;  // blank line
      if (!(ss >> eq >> value) || eq != "=")
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
      if (t.v_.find(key) == t.v_.end())
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown tolerance key '" +
                                 key + "'");
      t.v_[key] = value;
    }
    return t;
  }

  double get(const std::string& key) const {
    auto it = v_.find(key);
    if (it == v_.end()) throw std::runtime_error("unknown tolerance key: " + key);
    return it->second;
  }

  const std::map<std::string, double>& all() const { return v_; }

 private:
  std::map<std::string, double> v_;
};

}  // namespace qrank
