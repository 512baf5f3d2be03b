#pragma once

#include <optional>
#include <string>

#include "iwkit/series.hpp"

namespace iwkit {

enum class OutputFormat { csv, json };

std::string format_name(OutputFormat f);
// Throws InputError for anything but "csv" or "json".
OutputFormat parse_format(const std::string& name);

struct Config {
  u64 prime = 3;
  int precision = 24;
  std::optional<int> degree_cap;  // defaults to p^{n_max} + 8
  int n_max = 4;
  int margin = 4;
  OutputFormat format = OutputFormat::csv;

  int effective_degree_cap() const;
  // Throws InputError unless p is an odd prime, p^N fits, N > margin >= 0,
  // n_max >= 1 and D >= p^{n_max}.
  void validate() const;
  SeriesRing ring() const;
};

}  // namespace iwkit
