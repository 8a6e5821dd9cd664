#include <openssl/evp.h>

#include <array>
#include <stdexcept>

#include "smcov/cli.hpp"

namespace smcov::cli {

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

nlohmann::json settings_json(const Settings& s) {
  nlohmann::json j{{"rx", s.rx},
                   {"nt", s.n_t},
                   {"nr", s.n_r},
                   {"alpha", s.alpha},
                   {"lambda", s.lambda},
                   {"sigma2", s.sigma2},
                   {"zdb", s.zdb},
                   {"mc", s.mc},
                   {"trials", s.trials},
                   {"seed", s.seed},
                   {"window_factor", s.window_factor},
                   {"scheme", s.scheme},
                   {"quantiles", s.quantiles},
                   {"per_stream", s.per_stream},
                   {"format", s.format},
                   {"nt_list", s.nt_list},
                   {"nr_list", s.nr_list},
                   {"alpha_list", s.alpha_list},
                   {"sigma2_list", s.sigma2_list}};
  j["m"] = s.m ? nlohmann::json(*s.m) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const RunManifest& manifest) {
  nlohmann::json outputs = nlohmann::json::array();
  for (const auto& o : manifest.outputs) outputs.push_back({{"path", o.path}, {"sha256", o.sha256}});
  return {{"command", manifest.command},
          {"parameters", manifest.parameters},
          {"version", manifest.version},
          {"seeds", manifest.seeds},
          {"wall_time_seconds", manifest.wall_time_seconds},
          {"outputs", outputs}};
}

}  // namespace smcov::cli
