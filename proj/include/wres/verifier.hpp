#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wres/operators.hpp"
#include "wres/report.hpp"

namespace wres {

enum class OutputFormat { json, markdown };

struct CheckInfo {
  std::string name;
  std::string anchor;
};

/// Suite checks in run order.
const std::vector<CheckInfo>& check_catalog();

struct SuiteSpec {
  std::vector<Family> families = {Family::dirac, Family::signature};
  std::vector<std::string> checks;  // empty means all
  int oracle_rank = 2;
  int oracle_seeds = 100;
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::json;

  bool runs(const std::string& check) const;
};

/// Parse error with 1-based position.
class SpecError : public std::runtime_error {
 public:
  SpecError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// key = value lines, `#` comments, lists in brackets.
SuiteSpec parse_spec(std::string_view text);
/// Normalized text form; parse_spec(spec_text(s)) == s.
std::string spec_text(const SuiteSpec& s);
bool operator==(const SuiteSpec& a, const SuiteSpec& b);

/// Closest candidate within edit distance 2, or empty.
std::string suggest(std::string_view word, const std::vector<std::string>& candidates);

struct VerificationReport {
  SuiteSpec spec;
  std::vector<CheckRecord> records;
  double wall_seconds = 0;

  int passed() const;
  int failed() const;
  int flagged() const;
  int exit_code() const { return failed() == 0 ? 0 : 1; }
};

/// Runs the selected checks; engine errors become failed records. Check tasks run in
/// parallel when `parallel` is set and are assembled in catalog order.
VerificationReport run_suite(const SuiteSpec& spec, bool parallel = true);

std::string render_json(const VerificationReport& r);
std::string render_markdown(const VerificationReport& r);
std::string render_report(const VerificationReport& r, OutputFormat f);

}  // namespace wres
