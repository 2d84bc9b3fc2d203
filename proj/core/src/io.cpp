#include "cfbayes/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cfbayes/error.hpp"

namespace cfbayes {

using nlohmann::json;

JointDistribution parse_distribution(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
  if (!doc.is_object() || !doc.contains("attributes") || !doc.contains("probabilities")) {
    throw Error(ErrorKind::MalformedInput,
                "expected an object with \"attributes\" and \"probabilities\"");
  }
  const auto& attrs = doc.at("attributes");
  const auto& probs = doc.at("probabilities");
  if (!attrs.is_array() || !probs.is_array()) {
    throw Error(ErrorKind::MalformedInput, "\"attributes\" and \"probabilities\" must be arrays");
  }
  std::vector<std::string> names;
  for (const auto& a : attrs) {
    if (!a.is_string()) throw Error(ErrorKind::MalformedInput, "attribute names must be strings");
    names.push_back(a.get<std::string>());
  }
  std::vector<double> values;
  for (const auto& p : probs) {
    if (!p.is_number()) throw Error(ErrorKind::MalformedInput, "probabilities must be numbers");
    values.push_back(p.get<double>());
  }
  return JointDistribution::validate(std::move(names), std::move(values));
}

std::string serialize_distribution(const JointDistribution& dist) {
  json doc;
  doc["attributes"] = dist.space().names();
  auto probs = json::array();
  for (double p : dist.probabilities()) probs.push_back(p);
  doc["probabilities"] = std::move(probs);
  return doc.dump(2) + "\n";
}

JointDistribution load_distribution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_distribution(buf.str());
}

void save_distribution(const JointDistribution& dist, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::MalformedInput, "cannot write " + path.string());
  out << serialize_distribution(dist);
  if (!out) throw Error(ErrorKind::MalformedInput, "failed writing " + path.string());
}

std::string format_double(double value) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

}  // namespace cfbayes
