#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wres/verifier.hpp"

namespace {

void list_checks() {
  for (const auto& c : wres::check_catalog()) std::cout << c.name << "\t" << c.anchor << "\n";
}

std::vector<std::string> split_only(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for residue computations of twisted Dirac and signature operators"};
  app.require_subcommand(0, 1);
  bool top_list = false;
  app.add_flag("--list-checks", top_list, "List check names with their anchors");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string spec_path, format, only;
  std::uint64_t seed = 0;
  bool verify_list = false, serial = false;
  verify->add_option("--spec", spec_path, "Suite spec file (key = value lines)");
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md", "markdown"}));
  auto* seed_opt = verify->add_option("--seed", seed, "Base oracle seed");
  verify->add_option("--only", only, "Comma-separated checks to run");
  verify->add_flag("--list-checks", verify_list, "List check names with their anchors");
  verify->add_flag("--serial", serial, "Run without OpenMP parallelism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (top_list || verify_list) {
    list_checks();
    return 0;
  }
  if (!verify->parsed()) {
    std::cerr << app.help();
    return 2;
  }

  wres::SuiteSpec spec;
  if (!spec_path.empty()) {
    std::ifstream in(spec_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read spec file '" << spec_path << "'\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      spec = wres::parse_spec(buf.str());
    } catch (const wres::SpecError& e) {
      std::cerr << spec_path << ": " << e.what() << "\n";
      return 2;
    }
  }
  if (!format.empty()) spec.output = format == "json" ? wres::OutputFormat::json : wres::OutputFormat::markdown;
  if (seed_opt->count() > 0) spec.seed = seed;
  if (!only.empty()) {
    std::vector<std::string> names;
    for (const auto& c : wres::check_catalog()) names.push_back(c.name);
    std::vector<std::string> picked;
    for (const auto& item : split_only(only)) {
      if (std::find(names.begin(), names.end(), item) == names.end()) {
        std::cerr << "error: unknown check '" << item << "'";
        const std::string hint = wres::suggest(item, names);
        if (!hint.empty()) std::cerr << "; did you mean '" << hint << "'?";
        std::cerr << "\n";
        return 2;
      }
    }
    for (const auto& n : names) {
      const auto items = split_only(only);
      if (std::find(items.begin(), items.end(), n) != items.end()) picked.push_back(n);
    }
    spec.checks = picked.size() == names.size() ? std::vector<std::string>{} : picked;
  }

  const wres::VerificationReport report = wres::run_suite(spec, !serial);
  std::cout << wres::render_report(report, spec.output);
  return report.exit_code();
}
