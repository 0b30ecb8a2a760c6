#include "report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ezeta {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
  if (name == "plain") return OutputFormat::kPlain;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

size_t digits_for(unsigned precision_bits) {
  const double digits = std::floor(precision_bits * 0.30102999566398119521) - 2.0;
  return digits < 4.0 ? 4 : static_cast<size_t>(digits);
}

Report make_report(std::string command,
                   std::vector<std::pair<std::string, std::string>> parameters,
                   const eulerzeta::SeriesResult& result, unsigned precision_bits,
                   double elapsed_ms) {
  Report report;
  report.command = std::move(command);
  report.parameters = std::move(parameters);
  report.value = result.value.to_string(digits_for(precision_bits));
  report.error_bound = result.tail_bound.to_string(3);
  report.terms_used = result.terms_used;
  report.precision_bits = precision_bits;
  report.elapsed_ms = elapsed_ms;
  report.converged = result.converged;
  return report;
}

namespace {

std::string query_echo(const Report& report) {
  std::string echo = report.command;
  if (!report.parameters.empty()) {
    echo += "(";
    for (size_t idx = 0; idx < report.parameters.size(); ++idx) {
      if (idx) echo += ",";
      echo += report.parameters[idx].second;
    }
    echo += ")";
  }
  return echo;
}

json to_json(const Report& report) {
  json parameters = json::object();
  for (const auto& [key, value] : report.parameters) parameters[key] = value;
  return json{{"command", report.command},
              {"parameters", parameters},
              {"value", report.value},
              {"error_bound", report.error_bound},
              {"terms_used", report.terms_used},
              {"precision_bits", report.precision_bits},
              {"elapsed_ms", report.elapsed_ms},
              {"converged", report.converged},
              {"from_cache", report.from_cache}};
}

std::string to_plain(const Report& report) {
  std::ostringstream out;
  out << query_echo(report) << " = " << report.value << "\n";
  out << "  error_bound <= " << report.error_bound << "\n";
  out << "  terms_used   = " << report.terms_used << "\n";
  out << "  precision    = " << report.precision_bits << " bits\n";
  out << "  elapsed_ms   = " << report.elapsed_ms << "\n";
  if (report.from_cache) out << "  (served from cache)\n";
  if (!report.converged) out << "  WARNING: not converged within max_terms\n";
  return out.str();
}

const char* kCsvHeader =
    "command,value,error_bound,terms_used,precision_bits,elapsed_ms,converged\n";

std::string csv_row(const Report& report) {
  std::ostringstream out;
  out << query_echo(report) << "," << report.value << "," << report.error_bound << ","
      << report.terms_used << "," << report.precision_bits << "," << report.elapsed_ms
      << "," << (report.converged ? 1 : 0) << "\n";
  return out.str();
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kPlain:
      return to_plain(report);
    case OutputFormat::kJson:
      return to_json(report).dump(2) + "\n";
    case OutputFormat::kCsv:
      return std::string(kCsvHeader) + csv_row(report);
  }
  return {};
}

std::string render_pair(const Report& first, const Report& second, OutputFormat format) {
  switch (format) {
    case OutputFormat::kPlain:
      return to_plain(first) + to_plain(second);
    case OutputFormat::kJson: {
      json out{{first.command, to_json(first)}, {second.command, to_json(second)}};
      return out.dump(2) + "\n";
    }
    case OutputFormat::kCsv:
      return std::string(kCsvHeader) + csv_row(first) + csv_row(second);
  }
  return {};
}

}  // namespace ezeta
