#pragma once

// Output records of the command-line tool and their json, csv and plain-text
// renderings. Every big integer is carried as a decimal string.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffsubsum/counts.hpp"
#include "ffsubsum/rscodes.hpp"

namespace ffsubsum {

struct CountRecord {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  std::vector<std::string> exclusions;
  std::uint64_t k = 0;
  std::string b;
  std::string N;
  std::string M;
  std::string main_term;  ///< "num/den"
  std::string error;
  std::optional<std::string> bound;
  std::string bound_mode = "none";
  std::string method;

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

CountRecord make_count_record(const CountReport& report);

void to_json(nlohmann::json& j, const CountRecord& r);
void from_json(const nlohmann::json& j, CountRecord& r);

/// Column names of the csv form, in order.
const std::string& count_csv_header();
std::string to_csv_row(const CountRecord& r);
/// Aligned text rendering of a batch of records with a display value of the
/// main term.
void write_count_table(std::ostream& os, const std::vector<CountRecord>& rows);

struct RsRecord {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> degree;  ///< empty for the zero word
  std::optional<std::size_t> distance;
  std::optional<std::string> verdict;  ///< "codeword", "deep_hole", "ordinary", "unclassified"
  std::optional<std::size_t> lower;
  std::optional<std::size_t> upper;

  friend bool operator==(const RsRecord&, const RsRecord&) = default;
};

void to_json(nlohmann::json& j, const RsRecord& r);
void from_json(const nlohmann::json& j, RsRecord& r);
const std::string& rs_csv_header();
std::string to_csv_row(const RsRecord& r);
void write_rs_text(std::ostream& os, const RsRecord& r);

nlohmann::json scan_to_json(const ScanReport& r);
const std::string& scan_csv_header();
void write_scan_csv(std::ostream& os, const ScanReport& r);
void write_scan_text(std::ostream& os, const ScanReport& r);

/// RFC 4180 quoting: fields holding a comma, quote or newline are quoted.
std::string csv_field(const std::string& s);

}  // namespace ffsubsum
