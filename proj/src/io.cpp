#include "polar/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

namespace polar {

namespace {

using json = nlohmann::ordered_json;

json crc_to_json(const CrcSpec& crc) {
  if (!crc.enabled()) return nullptr;
  return json{{"degree", crc.degree}, {"taps", crc.taps}};
}

CrcSpec crc_from_json(const json& j) {
  if (j.is_null()) return CrcSpec::none();
  CrcSpec crc;
  crc.degree = j.at("degree").get<int>();
  crc.taps = j.at("taps").get<std::vector<int>>();
  crc.validate();
  return crc;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace

void save_code_config(const CodeConfig& cfg, const std::string& path) {
  cfg.validate();
  json j{{"n", cfg.n},
         {"K", cfg.info_count},
         {"design_snr_db", cfg.design_snr_db},
         {"info_set", cfg.info_set},
         {"crc", crc_to_json(cfg.crc)},
         {"mu_profile", cfg.mu_profile}};
  save_file(j, path);
}

CodeConfig load_code_config(const std::string& path) {
  json j = load_file(path);
  int n = j.at("n").get<int>();
  auto info_set = j.at("info_set").get<std::vector<int>>();
  double design = j.at("design_snr_db").get<double>();
  CrcSpec crc = crc_from_json(j.contains("crc") ? j.at("crc") : json(nullptr));
  int K = j.at("K").get<int>();
  if (K != static_cast<int>(info_set.size()))
    throw std::runtime_error(path + ": K disagrees with info_set size");
  CodeConfig cfg = make_code_config(n, std::move(info_set), design, crc);
  if (j.contains("mu_profile") && !j.at("mu_profile").is_null()) {
    auto mu = j.at("mu_profile").get<std::vector<double>>();
    if (mu.size() != static_cast<std::size_t>(cfg.block_length))
      throw std::runtime_error(path + ": mu_profile length != N");
    cfg.mu_profile = std::move(mu);
  }
  cfg.validate();
  return cfg;
}

void save_flip_params(const FlipParamsFile& params, const std::string& path) {
  json omega = json::array();
  for (const auto& w : params.prune.omega)
    omega.push_back(w.has_value() ? json(*w) : json(nullptr));
  json gr = std::isfinite(params.prune.gamma_right) ? json(params.prune.gamma_right)
                                                    : json(nullptr);
  json j{{"gamma_left", params.prune.gamma_left},
         {"gamma_right", gr},
         {"omega", omega},
         {"max_level", params.max_level},
         {"node_budget", params.node_budget}};
  save_file(j, path);
}

FlipParamsFile load_flip_params(const std::string& path) {
  json j = load_file(path);
  FlipParamsFile out;
  out.prune.gamma_left = j.value("gamma_left", 0.0);
  if (j.contains("gamma_right") && !j.at("gamma_right").is_null())
    out.prune.gamma_right = j.at("gamma_right").get<double>();
  else
    out.prune.gamma_right = std::numeric_limits<double>::infinity();
  out.prune.omega.clear();
  if (j.contains("omega"))
    for (const auto& w : j.at("omega"))
      out.prune.omega.push_back(w.is_null() ? std::nullopt
                                            : std::optional<double>(w.get<double>()));
  out.max_level = j.value("max_level", 1);
  out.node_budget = j.value("node_budget", static_cast<std::uint64_t>(0));
  if (out.prune.gamma_left < 0.0)
    throw std::runtime_error(path + ": gamma_left must be >= 0");
  for (const auto& w : out.prune.omega)
    if (w.has_value() && (*w < 0.0 || *w > 1.0))
      throw std::runtime_error(path + ": omega entries must lie in [0, 1]");
  if (out.max_level < 0) throw std::runtime_error(path + ": max_level must be >= 0");
  return out;
}

}  // namespace polar
