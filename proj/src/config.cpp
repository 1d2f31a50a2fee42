#include "msl/config.hpp"

#include <fstream>
#include <stdexcept>

namespace msl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  int x = 0;
  try {
    x = std::stoi(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw std::invalid_argument("config key '" + key + "' expects an integer");
  return x;
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, json or csv)");
}

void RunConfig::apply(const std::map<std::string, std::string>& values) {
  for (const auto& [key, v] : values) {
    if (key == "truncation") truncation = to_int(key, v);
    else if (key == "field") field = v;
    else if (key == "characteristic") characteristic = to_int(key, v);
    else if (key == "format") format = parse_format(v);
    else if (key == "suite") suite = v;
    else if (key == "max_degree") max_degree = to_int(key, v);
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

void RunConfig::validate() const {
  if (truncation < 2 || truncation > 16) throw std::invalid_argument("truncation must lie in 2..16");
  if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

}  // namespace msl
