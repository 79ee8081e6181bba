#pragma once

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace cubedist {

// Every hidden constant behind an O(.) sample bound, in one place. Library
// code never hard-codes these; they flow in from here (or from a JSON config
// produced by `cubedist calibrate`). Defaults are the calibrated values for
// the default seed grid, reproducible via:
//   cubedist calibrate --seed 1 --trials 400
struct Constants {
  double c_tester = 4.5;     // tolerant identity tester: m = C*eps^-2*(s+ln(1/delta))
  double c_fourier = 0.25;   // full-spectrum learner: m >= C*eps^-2*2^k*(k+ln(1/delta))
  double c_coeff = 2.0;      // single-coefficient estimate: m = C*eps^-2*ln(1/delta)
  double c_learner = 6.0;    // junta learner budget: m = C*(k/eps^2)*(2^k+ln n)
  double c_rounds = 4.0;     // heavy-coefficient outer rounds: R = C*k*2^{2k}
  double c_lpn = 6.0;        // brute-force LPN: m = C*ln(#candidates/delta)*(1-2eta)^-2
  double c_queries = 4.0;    // parity-from-queries votes: C*ln(n/delta)/(1-4eps)^2

  friend bool operator==(const Constants&, const Constants&) = default;
};

inline nlohmann::json to_json(const Constants& c) {
  return nlohmann::json{{"c_tester", c.c_tester},   {"c_fourier", c.c_fourier},
                        {"c_coeff", c.c_coeff},     {"c_learner", c.c_learner},
                        {"c_rounds", c.c_rounds},   {"c_lpn", c.c_lpn},
                        {"c_queries", c.c_queries}};
}

inline Constants constants_from_json(const nlohmann::json& j) {
  Constants c;
  c.c_tester = j.value("c_tester", c.c_tester);
  c.c_fourier = j.value("c_fourier", c.c_fourier);
  c.c_coeff = j.value("c_coeff", c.c_coeff);
  c.c_learner = j.value("c_learner", c.c_learner);
  c.c_rounds = j.value("c_rounds", c.c_rounds);
  c.c_lpn = j.value("c_lpn", c.c_lpn);
  c.c_queries = j.value("c_queries", c.c_queries);
  return c;
}

inline Constants load_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open constants file: " + path);
  nlohmann::json j;
  in >> j;
  return constants_from_json(j);
}

// Resolution order: explicit --config flag, CUBEDIST_CONFIG env var, defaults.
inline Constants default_constants(const std::string& config_path = "") {
  if (!config_path.empty()) return load_constants(config_path);
  if (const char* env = std::getenv("CUBEDIST_CONFIG"); env && *env) return load_constants(env);
  return Constants{};
}

}  // namespace cubedist
