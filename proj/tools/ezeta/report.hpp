#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eulerzeta/series.hpp"

namespace ezeta {

enum class OutputFormat { kPlain, kJson, kCsv };

OutputFormat parse_format(const std::string& name);

/// Printable digits for a precision request: floor(bits log10 2) - 2,
/// so no digit beyond the precision contract is ever emitted.
size_t digits_for(unsigned precision_bits);

/// One evaluated query, ready for rendering. Value and error bound are
/// decimal strings fixed at construction so output is deterministic.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string value;
  std::string error_bound;
  unsigned terms_used = 0;
  unsigned precision_bits = 0;
  double elapsed_ms = 0.0;
  bool converged = true;
  bool from_cache = false;
};

Report make_report(std::string command,
                   std::vector<std::pair<std::string, std::string>> parameters,
                   const eulerzeta::SeriesResult& result, unsigned precision_bits,
                   double elapsed_ms);

std::string render(const Report& report, OutputFormat format);
std::string render_pair(const Report& first, const Report& second, OutputFormat format);

}  // namespace ezeta
