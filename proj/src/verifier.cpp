#include "wres/verifier.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <exception>
#include <functional>
#include <nlohmann/json.hpp>
#include <set>

#include "wres/identities.hpp"
#include "wres/oracle.hpp"

namespace wres {

namespace {

const std::vector<std::string> kKeys = {"family", "checks", "oracle_rank", "oracle_seeds", "seed", "output"};
const std::vector<std::string> kFamilies = {"dirac", "signature", "both"};
const std::vector<std::string> kOutputs = {"json", "markdown"};

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : check_catalog()) out.push_back(c.name);
  return out;
}

std::string anchor_of(const std::string& check) {
  for (const auto& c : check_catalog())
    if (c.name == check) return c.anchor;
  return "";
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Token with its 1-based column.
struct Token {
  std::string_view text;
  int column;
};

Token trim(std::string_view s, int column) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return {s.substr(b, e - b), column + static_cast<int>(b)};
}

[[noreturn]] void fail_choice(int line, const Token& t, const std::string& what, const std::vector<std::string>& options) {
  std::string msg = "unknown " + what + " '" + std::string(t.text) + "'";
  const std::string hint = suggest(t.text, options);
  if (!hint.empty()) msg += "; did you mean '" + hint + "'?";
  throw SpecError(line, t.column, msg);
}

template <class Int>
Int parse_int(int line, const Token& t, Int lo, Int hi, const std::string& key) {
  Int v{};
  const char* end = t.text.data() + t.text.size();
  auto [p, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || p != end || t.text.empty())
    throw SpecError(line, t.column, key + " expects an unsigned integer, got '" + std::string(t.text) + "'");
  if (v < lo || v > hi)
    throw SpecError(line, t.column, key + " must be in " + std::to_string(lo) + ".." + std::to_string(hi));
  return v;
}

std::vector<std::string> parse_list(int line, const Token& t) {
  if (t.text.size() < 2 || t.text.front() != '[' || t.text.back() != ']')
    throw SpecError(line, t.column, "malformed list: expected [item, ...]");
  std::vector<std::string> out;
  const std::string_view body = t.text.substr(1, t.text.size() - 2);
  if (trim(body, 0).text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string_view piece = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
    const Token item = trim(piece, t.column + 1 + static_cast<int>(start));
    if (item.text.empty()) throw SpecError(line, item.column, "malformed list: empty item");
    if (item.text.find_first_of("[] \t") != std::string_view::npos)
      throw SpecError(line, item.column, "malformed list: bad item '" + std::string(item.text) + "'");
    const auto names = check_names();
    if (std::find(names.begin(), names.end(), item.text) == names.end()) fail_choice(line, item, "check", names);
    if (std::find(out.begin(), out.end(), item.text) != out.end())
      throw SpecError(line, item.column, "duplicate check '" + std::string(item.text) + "'");
    out.emplace_back(item.text);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

CheckRecord error_record(const std::string& check, const std::string& what) {
  return {check, check + ".error", std::string("error: ") + what, "", false, anchor_of(check), {}};
}

std::vector<CheckRecord> oracle_records(const SuiteSpec& spec, bool parallel) {
  const auto ids = oracle_identities(spec.families);
  const auto results = run_oracle(ids, spec.seed, spec.oracle_seeds, spec.oracle_rank, parallel);
  std::vector<CheckRecord> out;
  for (const auto& r : results) {
    std::string computed = std::to_string(r.exact) + "/" + std::to_string(r.seeds) + " seeds exact";
    if (!r.failing.empty()) {
      computed += "; failing seeds";
      for (auto s : r.failing) computed += " " + std::to_string(s);
    }
    CheckRecord rec{"oracle", "oracle." + r.name, computed,
                    std::to_string(r.seeds) + "/" + std::to_string(r.seeds) + " seeds exact", r.all_exact(),
                    anchor_of("oracle") + ", rank " + std::to_string(spec.oracle_rank), {}};
    if (r.name == "interior.signature.display" && !r.all_exact())
      rec.flags.push_back("the displayed signature integrand disagrees under substitution as it does symbolically");
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> cat = {
      {"identities", "half-plane projections, line integrals and Clifford trace relations"},
      {"parametrix", "parametrix symbols by the composition formula"},
      {"cases", "five boundary cases of the residue sum and their cancellations"},
      {"psi", "total boundary term and the assembled residue statement"},
      {"lichnerowicz", "squared twisted operators as Laplace-type operators"},
      {"interior", "interior integrand 4 pi^2 tr(s/6 + E)"},
      {"theorem57", "squared signature operator under both sign conventions"},
      {"oracle", "random exact matrix substitution"},
  };
  return cat;
}

bool SuiteSpec::runs(const std::string& check) const {
  return checks.empty() || std::find(checks.begin(), checks.end(), check) != checks.end();
}

SpecError::SpecError(int line, int column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::string suggest(std::string_view word, const std::vector<std::string>& candidates) {
  std::string best;
  std::size_t best_d = 3;
  for (const auto& c : candidates) {
    const std::size_t d = edit_distance(word, c);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

SuiteSpec parse_spec(std::string_view text) {
  SuiteSpec spec;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line, 1).text.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      const Token t = trim(line, 1);
      throw SpecError(line_no, t.column, "expected key = value");
    }
    const Token key = trim(line.substr(0, eq), 1);
    const Token value = trim(line.substr(eq + 1), static_cast<int>(eq) + 2);
    if (key.text.empty()) throw SpecError(line_no, key.column, "missing key before '='");
    if (std::find(kKeys.begin(), kKeys.end(), key.text) == kKeys.end()) fail_choice(line_no, key, "key", kKeys);
    if (!seen.insert(std::string(key.text)).second)
      throw SpecError(line_no, key.column, "duplicate key '" + std::string(key.text) + "'");
    if (value.text.empty()) throw SpecError(line_no, value.column, "missing value for '" + std::string(key.text) + "'");

    if (key.text == "family") {
      if (value.text == "dirac")
        spec.families = {Family::dirac};
      else if (value.text == "signature")
        spec.families = {Family::signature};
      else if (value.text == "both")
        spec.families = {Family::dirac, Family::signature};
      else
        fail_choice(line_no, value, "family", kFamilies);
    } else if (key.text == "checks") {
      spec.checks = parse_list(line_no, value);
      // Catalog order keeps the report stable regardless of list order.
      std::vector<std::string> ordered;
      for (const auto& c : check_names())
        if (std::find(spec.checks.begin(), spec.checks.end(), c) != spec.checks.end()) ordered.push_back(c);
      spec.checks = ordered.size() == check_catalog().size() ? std::vector<std::string>{} : ordered;
    } else if (key.text == "oracle_rank") {
      spec.oracle_rank = parse_int<int>(line_no, value, 1, 4, "oracle_rank");
    } else if (key.text == "oracle_seeds") {
      spec.oracle_seeds = parse_int<int>(line_no, value, 1, 10000, "oracle_seeds");
    } else if (key.text == "seed") {
      spec.seed = parse_int<std::uint64_t>(line_no, value, 0, UINT64_MAX, "seed");
    } else if (key.text == "output") {
      if (value.text == "json")
        spec.output = OutputFormat::json;
      else if (value.text == "markdown")
        spec.output = OutputFormat::markdown;
      else
        fail_choice(line_no, value, "output", kOutputs);
    }
  }
  return spec;
}

std::string spec_text(const SuiteSpec& s) {
  std::string out = "family = ";
  out += s.families.size() == 2 ? "both" : family_name(s.families.front());
  out += "\nchecks = [";
  const std::vector<std::string> checks = s.checks.empty() ? check_names() : s.checks;
  for (std::size_t k = 0; k < checks.size(); ++k) out += (k ? ", " : "") + checks[k];
  out += "]\noracle_rank = " + std::to_string(s.oracle_rank);
  out += "\noracle_seeds = " + std::to_string(s.oracle_seeds);
  out += "\nseed = " + std::to_string(s.seed);
  out += std::string("\noutput = ") + (s.output == OutputFormat::json ? "json" : "markdown") + "\n";
  return out;
}

bool operator==(const SuiteSpec& a, const SuiteSpec& b) {
  return a.families == b.families && a.checks == b.checks && a.oracle_rank == b.oracle_rank &&
         a.oracle_seeds == b.oracle_seeds && a.seed == b.seed && a.output == b.output;
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.match; }));
}

int VerificationReport::failed() const { return static_cast<int>(records.size()) - passed(); }

int VerificationReport::flagged() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.flags.empty(); }));
}

VerificationReport run_suite(const SuiteSpec& spec, bool parallel) {
  const auto start = std::chrono::steady_clock::now();
  struct Task {
    std::string check;
    std::function<std::vector<CheckRecord>()> run;
  };
  std::vector<Task> tasks;
  const bool has_signature = std::find(spec.families.begin(), spec.families.end(), Family::signature) != spec.families.end();
  if (spec.runs("identities")) {
    tasks.push_back({"identities", [] { return halfplane_identities(); }});
    tasks.push_back({"identities", [] { return trace_identities(); }});
  }
  for (Family f : spec.families) {
    if (spec.runs("parametrix")) tasks.push_back({"parametrix", [f] { return parametrix_identities(f); }});
    if (spec.runs("cases")) tasks.push_back({"cases", [f, parallel] { return case_identities(f, parallel); }});
    if (spec.runs("psi")) tasks.push_back({"psi", [f] { return psi_identities(f); }});
    if (spec.runs("lichnerowicz")) tasks.push_back({"lichnerowicz", [f] { return lichnerowicz_identities(f); }});
    if (spec.runs("interior")) tasks.push_back({"interior", [f] { return interior_identities(f); }});
  }
  if (spec.runs("theorem57") && has_signature) tasks.push_back({"theorem57", [] { return theorem57_identities(); }});

  std::vector<std::vector<CheckRecord>> results(tasks.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    try {
      results[t] = tasks[t].run();
    } catch (const std::exception& e) {
      results[t] = {error_record(tasks[t].check, e.what())};
    }
  }

  VerificationReport rep{spec, {}, 0};
  for (auto& r : results)
    for (auto& rec : r) {
      rec.anchor = rec.anchor.empty() ? anchor_of(rec.check) : rec.anchor;
      rep.records.push_back(std::move(rec));
    }
  // The oracle sweep is parallel over seeds on its own.
  if (spec.runs("oracle")) {
    try {
      auto recs = oracle_records(spec, parallel);
      rep.records.insert(rep.records.end(), recs.begin(), recs.end());
    } catch (const std::exception& e) {
      rep.records.push_back(error_record("oracle", e.what()));
    }
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string render_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  ordered_json spec;
  ordered_json fams = ordered_json::array();
  for (Family f : r.spec.families) fams.push_back(family_name(f));
  ordered_json checks = ordered_json::array();
  for (const auto& c : check_catalog())
    if (r.spec.runs(c.name)) checks.push_back(c.name);
  spec["families"] = fams;
  spec["checks"] = checks;
  spec["oracle_rank"] = r.spec.oracle_rank;
  spec["oracle_seeds"] = r.spec.oracle_seeds;
  spec["seed"] = r.spec.seed;

  ordered_json records = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json j;
    j["check"] = rec.check;
    j["name"] = rec.name;
    j["computed"] = rec.computed;
    j["expected"] = rec.expected;
    j["match"] = rec.match;
    j["anchor"] = rec.anchor;
    j["flags"] = rec.flags;
    records.push_back(std::move(j));
  }
  ordered_json summary;
  summary["records"] = r.records.size();
  summary["passed"] = r.passed();
  summary["failed"] = r.failed();
  summary["flagged"] = r.flagged();
  summary["exit_code"] = r.exit_code();

  ordered_json doc;
  doc["version"] = "wres-verifier/1";
  doc["spec"] = spec;
  doc["records"] = records;
  doc["summary"] = summary;
  return doc.dump(2) + "\n";
}

std::string render_markdown(const VerificationReport& r) {
  std::string out = "# wres verification report\n\n";
  out += "Families:";
  for (Family f : r.spec.families) out += " " + family_name(f);
  out += ". Oracle: rank " + std::to_string(r.spec.oracle_rank) + ", " + std::to_string(r.spec.oracle_seeds) +
         " seeds from " + std::to_string(r.spec.seed) + ".\n\n";
  out += "| check | record | match | flags |\n|---|---|---|---|\n";
  for (const auto& rec : r.records) {
    std::string flags;
    for (const auto& f : rec.flags) flags += (flags.empty() ? "" : "; ") + f;
    out += "| " + rec.check + " | " + rec.name + " | " + (rec.match ? "yes" : "**no**") + " | " + flags + " |\n";
  }
  out += "\n" + std::to_string(r.passed()) + " passed, " + std::to_string(r.failed()) + " failed, " +
         std::to_string(r.flagged()) + " flagged. Exit code " + std::to_string(r.exit_code()) + ".\n";
  for (const auto& rec : r.records) {
    if (rec.match) continue;
    out += "\n## " + rec.name + "\n\ncomputed:\n\n```\n" + rec.computed + "\n```\n\nexpected:\n\n```\n" + rec.expected +
           "\n```\n";
  }
  return out;
}

std::string render_report(const VerificationReport& r, OutputFormat f) {
  return f == OutputFormat::json ? render_json(r) : render_markdown(r);
}

}  // namespace wres
