#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubedist/junta.hpp"
#include "cubedist/samples.hpp"

namespace cubedist {

// A plantable distribution: an explicit junta, or a noisy parity kept in
// closed form so the branch sampler and exact spectrum stay available.
struct DistSpec {
  JuntaDistribution junta;
  std::optional<NoisyParityDistribution> noisy_parity;

  int dim() const { return junta.n; }

  SampleBatch sample(std::size_t m, Rng& rng) const {
    if (noisy_parity) return cubedist::sample(*noisy_parity, m, rng);
    return cubedist::sample(junta, m, rng);
  }

  static DistSpec from_junta(JuntaDistribution j) {
    DistSpec s{std::move(j), std::nullopt};
    return s;
  }
  static DistSpec from_noisy_parity(NoisyParityDistribution np) {
    DistSpec s{np.to_junta(), std::move(np)};
    return s;
  }
};

// Coordinate lists in files are 1-based and sorted.
inline nlohmann::json dist_spec_to_json(const DistSpec& s) {
  nlohmann::json j;
  if (s.noisy_parity) {
    const auto& np = *s.noisy_parity;
    j["type"] = "noisy_parity";
    j["n"] = np.n;
    std::vector<int> coords;
    for (int i : np.relevant.indices()) coords.push_back(i + 1);
    j["J"] = coords;
    j["sign"] = np.sign;
    j["eta"] = np.eta;
    return j;
  }
  j["type"] = "junta";
  j["n"] = s.junta.n;
  std::vector<int> coords;
  for (int i : s.junta.relevant.indices()) coords.push_back(i + 1);
  j["relevant"] = coords;
  j["core"] = s.junta.core.probs;
  return j;
}

inline DistSpec parse_dist_spec(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const std::string type = j.value("type", "junta");
  if (type == "noisy_parity") {
    std::vector<int> coords = j.at("J").get<std::vector<int>>();
    for (int& c : coords) --c;
    return DistSpec::from_noisy_parity(NoisyParityDistribution(
        n, BitVec::from_indices(n, coords), j.at("sign").get<int>(), j.at("eta").get<double>()));
  }
  if (type != "junta" && type != "uniform")
    throw std::runtime_error("dist spec: unknown type '" + type + "'");
  std::vector<int> coords;
  if (j.contains("relevant")) coords = j.at("relevant").get<std::vector<int>>();
  for (int& c : coords) --c;
  const BitVec relevant = BitVec::from_indices(n, coords);
  DensePmf core = j.contains("core")
                      ? DensePmf::validated(relevant.popcount(), j.at("core").get<std::vector<double>>())
                      : DensePmf::uniform(relevant.popcount());
  return DistSpec::from_junta(JuntaDistribution(n, relevant, std::move(core)));
}

inline void save_dist_spec(const DistSpec& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write dist spec: " + path);
  out << dist_spec_to_json(s).dump(2) << '\n';
}

inline DistSpec load_dist_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dist spec: " + path);
  nlohmann::json j;
  in >> j;
  return parse_dist_spec(j);
}

// Sample files: one point per line as an n-character 0/1 string (character i
// is coordinate i+1; '1' encodes -1), optionally "\t+1" or "\t-1" labels.
inline void write_samples(std::ostream& out, const SampleBatch& batch,
                          const std::vector<std::int8_t>* labels = nullptr) {
  for (std::size_t i = 0; i < batch.size(); ++i) {
    out << batch.get(i).to_string01();
    if (labels) out << '\t' << ((*labels)[i] > 0 ? "+1" : "-1");
    out << '\n';
  }
}

inline LabeledSampleBatch read_samples(std::istream& in) {
  std::vector<std::string> points;
  std::vector<std::int8_t> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      points.push_back(line);
    } else {
      points.push_back(line.substr(0, tab));
      const std::string lab = line.substr(tab + 1);
      if (lab == "+1" || lab == "1")
        labels.push_back(+1);
      else if (lab == "-1")
        labels.push_back(-1);
      else
        throw std::runtime_error("sample file: bad label '" + lab + "'");
    }
  }
  if (!labels.empty() && labels.size() != points.size())
    throw std::runtime_error("sample file: labels on some lines only");
  LabeledSampleBatch out;
  if (points.empty()) return out;
  const int n = static_cast<int>(points.front().size());
  out.points = SampleBatch(n, points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string& s = points[i];
    if (static_cast<int>(s.size()) != n) throw std::runtime_error("sample file: ragged line widths");
    auto pt = out.points.point(i);
    for (int c = 0; c < n; ++c) {
      if (s[static_cast<std::size_t>(c)] == '1')
        pt[static_cast<std::size_t>(c) >> 6] |= std::uint64_t{1} << (c & 63);
      else if (s[static_cast<std::size_t>(c)] != '0')
        throw std::runtime_error("sample file: bad character in point");
    }
  }
  out.labels = std::move(labels);
  return out;
}

inline void save_samples(const std::string& path, const SampleBatch& batch,
                         const std::vector<std::int8_t>* labels = nullptr) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write samples: " + path);
  write_samples(out, batch, labels);
}

inline LabeledSampleBatch load_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open samples: " + path);
  return read_samples(in);
}

}  // namespace cubedist
