#include "graphhom/weighted_target.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace graphhom {

void WeightedTarget::validate() const {
  if (d == 0) throw std::invalid_argument("target needs at least one node");
  if (alpha.size() != d) throw std::invalid_argument("alpha size mismatch");
  if (beta.size() != d) throw std::invalid_argument("beta size mismatch");
  for (const auto& row : beta) {
    if (row.size() != d) throw std::invalid_argument("beta is not square");
  }
  for (const auto& a : alpha) {
    if (a <= 0) throw std::invalid_argument("node weights must be positive");
  }
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = i + 1; j < d; ++j)
      if (beta[i][j] != beta[j][i])
        throw std::invalid_argument("beta is not symmetric");
}

bool WeightedTarget::twin_free() const {
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = i + 1; j < d; ++j)
      if (beta[i] == beta[j]) return false;
  return true;
}

WeightedTarget complete_target(std::uint32_t q) {
  WeightedTarget h;
  h.d = q;
  h.alpha.assign(q, Rational(1));
  h.beta.assign(q, std::vector<Rational>(q, Rational(1)));
  for (std::uint32_t i = 0; i < q; ++i) h.beta[i][i] = 0;
  h.validate();
  return h;
}

WeightedTarget single_loop_target(const Rational& loop_weight) {
  WeightedTarget h;
  h.d = 1;
  h.alpha = {Rational(1)};
  h.beta = {{loop_weight}};
  h.validate();
  return h;
}

WeightedTarget target_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  WeightedTarget h;
  h.d = j.at("d").get<std::uint32_t>();
  for (const auto& a : j.at("alpha"))
    h.alpha.push_back(parse_rational(a.get<std::string>()));
  for (const auto& row : j.at("beta")) {
    std::vector<Rational> r;
    for (const auto& b : row) r.push_back(parse_rational(b.get<std::string>()));
    h.beta.push_back(std::move(r));
  }
  h.validate();
  return h;
}

std::string target_to_json(const WeightedTarget& h) {
  nlohmann::json j;
  j["d"] = h.d;
  nlohmann::json alpha = nlohmann::json::array();
  for (const auto& a : h.alpha) alpha.push_back(rational_to_string(a));
  j["alpha"] = std::move(alpha);
  nlohmann::json beta = nlohmann::json::array();
  for (const auto& row : h.beta) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& b : row) r.push_back(rational_to_string(b));
    beta.push_back(std::move(r));
  }
  j["beta"] = std::move(beta);
  return j.dump(2);
}

WeightedTarget read_target_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open target file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return target_from_json(buf.str());
}

void write_target_file(const std::string& path, const WeightedTarget& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write target file: " + path);
  out << target_to_json(h) << '\n';
}

}  // namespace graphhom
