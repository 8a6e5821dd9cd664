#include <cmath>
#include <sstream>
#include <stdexcept>

#include "smcov/cli.hpp"
#include "smcov/curve.hpp"

namespace smcov::cli {

namespace {

double to_real(const std::string& token) {
  std::size_t used = 0;
  const double v = std::stod(token, &used);
  if (used != token.size()) throw std::invalid_argument("not a number: '" + token + "'");
  return v;
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text) {
  if (text.empty()) return {};
  try {
    if (text.find(':') != std::string::npos) {
      std::vector<std::string> fields;
      std::stringstream ss(text);
      for (std::string f; std::getline(ss, f, ':');) fields.push_back(f);
      if (fields.size() == 2) fields.emplace_back("1");
      if (fields.size() != 3) throw std::invalid_argument("range must be start:stop[:step]");
      return db_grid(to_real(fields[0]), to_real(fields[1]), to_real(fields[2]));
    }
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string f; std::getline(ss, f, ',');) out.push_back(to_real(f));
    return out;
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("cannot parse list '" + text + "': " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_real_list(text)) {
    if (v != std::floor(v)) throw std::invalid_argument("expected integers in '" + text + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace smcov::cli
