#include <gtest/gtest.h>

#include <random>

#include "tsym/commands.hpp"
#include "tsym/report.hpp"

using namespace tsym;

namespace {

ReportRow full_row() {
  ReportRow r;
  r.ell = 3;
  r.p1 = -17;
  r.p2 = -593;
  r.p3 = -53;
  r.solution = std::array<BigInt, 3>{9, 2, -1};
  r.z = "136/729";
  r.symbol_exponent = 1;
  r.symbol_rendered = "z3";
  r.mu = 1;
  r.li2_z = -1;
  r.li2_one_minus_z = 1;
  return r;
}

}  // namespace

TEST(Report, JsonFieldNamesAndOrder) {
  const auto j = to_json(full_row());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"ell", "p1", "p2", "p3", "solution", "z", "symbol_exponent",
                                            "symbol_rendered", "mu", "li2_z", "li2_one_minus_z", "status"}));
  EXPECT_EQ(j["solution"].dump(), "[9,2,-1]");
}

TEST(Report, JsonRoundTrip) {
  const ReportRow r = full_row();
  EXPECT_EQ(report_row_from_json(to_json(r).dump()), r);

  ReportRow failed;
  failed.ell = 3;
  failed.p1 = -17;
  failed.p2 = -593;
  failed.p3 = -19;
  failed.status = "IneligibleTriple";
  const auto j = to_json(failed);
  EXPECT_TRUE(j["solution"].is_null());
  EXPECT_TRUE(j["li2_z"].is_null());
  EXPECT_EQ(report_row_from_json(j.dump()), failed);
}

TEST(Report, JsonRoundTripRandomized) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> d(-1000000000, 1000000000);
  for (int i = 0; i < 500; ++i) {
    ReportRow r = full_row();
    r.ell = 2 + (i % 2);
    r.p1 = d(rng);
    r.p2 = BigInt(d(rng)) * d(rng) * d(rng);  // beyond 64 bits: carried as a string
    r.solution = std::array<BigInt, 3>{d(rng), BigInt(d(rng)) * d(rng) * d(rng), d(rng)};
    if (i % 3 == 0) r.z.reset();
    if (i % 5 == 0) r.li2_one_minus_z.reset();
    EXPECT_EQ(report_row_from_json(to_json(r).dump()), r);
  }
}

TEST(Report, Csv) {
  EXPECT_EQ(std::string(report_csv_header()),
            "ell,p1,p2,p3,x,y,w,z,symbol_exponent,symbol_rendered,mu,li2_z,li2_one_minus_z,status");
  EXPECT_EQ(to_csv(full_row()), "3,-17,-593,-53,9,2,-1,136/729,1,z3,1,-1,1,ok");
  ReportRow failed;
  failed.p1 = -17;
  failed.p2 = -593;
  failed.p3 = -19;
  failed.status = "IneligibleTriple";
  EXPECT_EQ(to_csv(failed), "3,-17,-593,-19,,,,,,,,,,IneligibleTriple");
}

TEST(Report, FormatParsing) {
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
  EXPECT_EQ(parse_format("text"), OutputFormat::Text);
  EXPECT_THROW(parse_format("xml"), Error);
}

TEST(Report, ParallelMapKeepsOrder) {
  for (int jobs : {1, 2, 4, 16}) {
    const auto out = parallel_map(100, jobs, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  }
  EXPECT_TRUE(parallel_map(0, 4, [](std::size_t i) { return i; }).empty());
}

TEST(Report, ParallelMapRethrowsFirstFailureByIndex) {
  try {
    parallel_map(50, 4, [](std::size_t i) -> int {
      if (i == 7 || i == 30) throw std::runtime_error(std::to_string(i));
      return 0;
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
}

TEST(Report, RowsCarryStatus) {
  RunConfig cfg;
  const auto ok = cmd_symbol(3, -17, -593, -53, cfg);
  EXPECT_EQ(ok.row, full_row());
  const auto bad = cmd_symbol(3, -17, -593, -19, cfg);
  EXPECT_EQ(bad.row.status, "IneligibleTriple");
  EXPECT_NE(bad.message.find("NotInert(-19)"), std::string::npos);
  EXPECT_EQ(exit_code_for({&ok.row}), 0);
  EXPECT_EQ(exit_code_for({&ok.row, &bad.row}), 1);
  ReportRow broken;
  broken.status = "InternalInvariantViolation";
  EXPECT_EQ(exit_code_for({&bad.row, &broken}), 2);
}

TEST(Report, QuadraticRow) {
  const auto out = cmd_symbol(2, 13, 17, 101, RunConfig{});
  ASSERT_TRUE(out.row.ok()) << out.message;
  EXPECT_EQ(out.row.symbol_rendered, "+1");
  EXPECT_EQ(out.row.li2_z, 1);
  EXPECT_EQ(out.row.li2_one_minus_z, 0);  // 101 = 5 mod 8
  EXPECT_EQ(out.row.z, "208/225");
}

TEST(Report, RunConfigValidation) {
  RunConfig cfg;
  cfg.search_bound = 0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.search_bound = 10;
  cfg.jobs = 0;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(Report, TableDrivers) {
  RunConfig cfg;
  const auto t1 = cmd_table1(cfg);
  ASSERT_EQ(t1.size(), 27u);
  EXPECT_EQ(t1[2].p3, -89);
  EXPECT_EQ(table1_csv_line(t1[2]), "-89,z3,z3^-1,-1,1");
  EXPECT_EQ(table1_csv_line(t1.back()), "-971,1,1,0,0");
  const auto t2 = cmd_table2(cfg);
  ASSERT_EQ(t2.size(), 18u);
  EXPECT_EQ(t2[15].outcome.row.symbol_rendered, "z3");  // ((-773,-593), -17)
  EXPECT_EQ(t2[15].outcome.row.li2_z, -1);
  EXPECT_EQ(t2[4].outcome.row.symbol_rendered, "1");  // ((-53,-431), -17)
  EXPECT_EQ(t2[4].outcome.row.li2_z, 0);
}

TEST(Report, VerifyFallsBackToSymbolsWhenZIsNotAUnit) {
  RunConfig cfg;
  cfg.search_bound = 200;
  const auto rep = cmd_verify(3, 1000, 0, cfg);
  EXPECT_EQ(rep.failures(), 0u);
  bool seen = false;
  for (const auto& e : rep.entries) {
    if (e.forward.row.p1 != -89 || e.forward.row.p2 != -809 || e.forward.row.p3 != -71) continue;
    seen = true;
    EXPECT_EQ(e.coverage, Coverage::SymbolOnly);  // x = 71
    EXPECT_EQ(e.c_forward, 0);
    EXPECT_TRUE(e.reciprocity);
  }
  EXPECT_TRUE(seen);
  EXPECT_GT(rep.count(Coverage::Full), 2000u);
}
