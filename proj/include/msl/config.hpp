#pragma once

#include <map>
#include <string>

namespace msl {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
  int truncation = 12;
  std::string field = "c";
  long characteristic = 0;  // 0: kind default
  OutputFormat format = OutputFormat::Text;
  std::string suite = "all";
  int max_degree = 12;

  // Keys: truncation, field, characteristic, format, suite, max_degree.
  void apply(const std::map<std::string, std::string>& values);
  void validate() const;
};

// Flat key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path);

OutputFormat parse_format(const std::string& s);

}  // namespace msl
