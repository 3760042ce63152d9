#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "gen.hpp"
#include "wres/oracle.hpp"
#include "wres/verifier.hpp"

using namespace wres;

namespace {

SpecError parse_error(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return SpecError(0, 0, "");
}

}  // namespace

TEST(SpecParser, Examples) {
  const SuiteSpec s = parse_spec("family = dirac\nchecks = [cases, psi]");
  EXPECT_EQ(s.families, std::vector<Family>{Family::dirac});
  EXPECT_EQ(s.checks, (std::vector<std::string>{"cases", "psi"}));
  EXPECT_EQ(parse_spec(""), SuiteSpec{});
  EXPECT_EQ(parse_spec("# only a comment\n\n   \n"), SuiteSpec{});
}

TEST(SpecParser, Defaults) {
  const SuiteSpec s;
  EXPECT_EQ(s.families, (std::vector<Family>{Family::dirac, Family::signature}));
  EXPECT_TRUE(s.checks.empty());
  EXPECT_EQ(s.oracle_rank, 2);
  EXPECT_EQ(s.oracle_seeds, 100);
  EXPECT_EQ(s.seed, 0u);
}

TEST(SpecParser, MisspelledFamilySuggests) {
  const SpecError e = parse_error("family = diracc");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 10);
  EXPECT_NE(std::string(e.what()).find("did you mean 'dirac'"), std::string::npos) << e.what();
}

TEST(SpecParser, ErrorPositions) {
  SpecError e = parse_error("family = both\nfamly = dirac");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 1);
  EXPECT_NE(std::string(e.what()).find("did you mean 'family'"), std::string::npos);

  e = parse_error("checks = [cases, psii]");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 18);
  EXPECT_NE(std::string(e.what()).find("'psi'"), std::string::npos);

  e = parse_error("checks = cases, psi");
  EXPECT_EQ(e.column(), 10);
  EXPECT_NE(std::string(e.what()).find("malformed list"), std::string::npos);

  e = parse_error("checks = [cases,, psi]");
  EXPECT_NE(std::string(e.what()).find("empty item"), std::string::npos);

  e = parse_error("seed = 1\nseed = 2");
  EXPECT_EQ(e.line(), 2);
  EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);

  e = parse_error("oracle_rank = 0");
  EXPECT_EQ(e.column(), 15);

  e = parse_error("output = yaml");
  EXPECT_EQ(e.column(), 10);

  e = parse_error("  seed 5");
  EXPECT_EQ(e.column(), 3);
}

TEST(SpecParser, RoundTripProperty) {
  gen::Rng r(41);
  for (int trial = 0; trial < 300; ++trial) {
    const SuiteSpec s = gen::suite_spec(r);
    const std::string text = spec_text(s);
    const SuiteSpec back = parse_spec(text);
    EXPECT_EQ(back, s) << text;
    EXPECT_EQ(spec_text(back), text);
  }
}

TEST(SpecParser, ListOrderNormalized) {
  EXPECT_EQ(parse_spec("checks = [psi, cases]").checks, (std::vector<std::string>{"cases", "psi"}));
}

TEST(Suggest, EditDistance) {
  const std::vector<std::string> c = {"identities", "parametrix", "cases"};
  EXPECT_EQ(suggest("casse", c), "cases");
  EXPECT_EQ(suggest("parametric", c), "parametrix");
  EXPECT_EQ(suggest("zzz", c), "");
}

TEST(Report, EmptyRecordListIsValidJson) {
  VerificationReport rep;
  const auto j = nlohmann::json::parse(render_json(rep));
  EXPECT_EQ(j["version"], "wres-verifier/1");
  EXPECT_EQ(j["records"].size(), 0u);
  EXPECT_EQ(j["summary"]["records"], 0);
  EXPECT_EQ(j["summary"]["passed"], 0);
  EXPECT_EQ(j["summary"]["failed"], 0);
  EXPECT_EQ(j["summary"]["exit_code"], 0);
}

TEST(Report, FailingRecordAdvertisesExit) {
  VerificationReport rep;
  rep.records.push_back({"cases", "cases.dirac.b", "1", "2", false, "x", {}});
  rep.records.push_back({"cases", "cases.dirac.c", "1", "1", true, "x", {"note"}});
  EXPECT_EQ(rep.exit_code(), 1);
  const auto j = nlohmann::json::parse(render_json(rep));
  EXPECT_EQ(j["summary"]["exit_code"], 1);
  EXPECT_EQ(j["summary"]["flagged"], 1);
  const std::string md = render_markdown(rep);
  EXPECT_NE(md.find("| cases | cases.dirac.b | **no** |"), std::string::npos);
  EXPECT_NE(md.find("Exit code 1"), std::string::npos);
}

TEST(Report, RenderingsAgreeOnMatchFlags) {
  SuiteSpec s = parse_spec("family = dirac\nchecks = [identities, psi]");
  const VerificationReport rep = run_suite(s);
  const auto j = nlohmann::json::parse(render_json(rep));
  const std::string md = render_markdown(rep);
  ASSERT_EQ(j["records"].size(), rep.records.size());
  for (const auto& rec : j["records"]) {
    const std::string row = "| " + rec["check"].get<std::string>() + " | " + rec["name"].get<std::string>() + " | " +
                            (rec["match"].get<bool>() ? "yes" : "**no**") + " |";
    EXPECT_NE(md.find(row), std::string::npos) << row;
  }
}

TEST(Suite, DeterministicJson) {
  const SuiteSpec s = parse_spec("family = both\nchecks = [identities, cases, oracle]\noracle_seeds = 3\nseed = 9");
  const std::string a = render_json(run_suite(s, true));
  const std::string b = render_json(run_suite(s, false));
  EXPECT_EQ(a, b);
}

TEST(Suite, SelectsOnlyRequestedChecks) {
  const VerificationReport rep = run_suite(parse_spec("family = signature\nchecks = [psi]"));
  ASSERT_FALSE(rep.records.empty());
  for (const auto& r : rep.records) EXPECT_EQ(r.check, "psi");
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Oracle, SerialAndParallelAgree) {
  const auto ids = oracle_identities({Family::dirac});
  const auto a = run_oracle(ids, 5, 4, 2, false);
  const auto b = run_oracle(ids, 5, 4, 2, true);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].exact, b[k].exact) << a[k].name;
    EXPECT_EQ(a[k].failing, b[k].failing);
    EXPECT_TRUE(a[k].all_exact()) << a[k].name;
  }
}

TEST(Oracle, SubstitutionIsLinear) {
  gen::Rng r(42);
  const CliffordModel& m = CliffordModel::spin();
  for (int trial = 0; trial < 20; ++trial) {
    const SymbolExpr x = SymbolExpr::c(m, 1) * SymbolExpr::word(m, gen::word(r, 2));
    const SymbolExpr y = SymbolExpr::c(m, 2) * SymbolExpr::word(m, gen::word(r, 2));
    const GaussRational c = gen::gauss(r);
    Assignment a(static_cast<std::uint64_t>(trial), 2);
    EXPECT_EQ(substitute(field_plan(x + y.scaled(c)), a), substitute(field_plan(x), a) + substitute(field_plan(y), a).scaled(c));
  }
}

TEST(Oracle, DetectsPlantedError) {
  // A wrong coefficient on a twist word must fail under substitution.
  const CliffordModel& m = CliffordModel::spin();
  const SymbolExpr x = SymbolExpr::c(m, 1) * SymbolExpr::atom(m, Phi(1)) * SymbolExpr::atom(m, Phi(2));
  const SymbolExpr y = SymbolExpr::c(m, 1) * SymbolExpr::atom(m, Phi(2)) * SymbolExpr::atom(m, Phi(1));
  int detected = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Assignment a(seed, 2);
    if (!(substitute(field_plan(x), a) == substitute(field_plan(y), a))) ++detected;
  }
  EXPECT_GE(detected, 9);
}
