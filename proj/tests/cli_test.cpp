#include "tripleforge/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "tripleforge/records.hpp"

using namespace tripleforge;
using namespace tripleforge::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(CliTriples, Examples) {
  Result r = run_cli({"triples", "3"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "3 4 5 d=1 primitive\n");

  r = run_cli({"triples", "12", "--primitive-only"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "12 5 13 d=8 primitive\n12 35 37 d=2 primitive\n");

  r = run_cli({"triples", "1"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "");
}

TEST(CliTriples, FormatsCarrySameNumbers) {
  const Result table = run_cli({"triples", "60"});
  const Result json = run_cli({"triples", "60", "--format", "json"});
  const Result csv = run_cli({"triples", "60", "--format", "csv"});
  ASSERT_EQ(table.code, kSuccess);
  ASSERT_EQ(json.code, kSuccess);
  ASSERT_EQ(csv.code, kSuccess);

  const auto t = lines(table.out), j = lines(json.out), c = lines(csv.out);
  ASSERT_EQ(t.size(), j.size());
  ASSERT_EQ(c.size(), t.size() + 1);
  EXPECT_EQ(c.front(), "x,y,z,d,primitive");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Triple tr = std::get<Triple>(parse_line(j[i]));
    const std::string d = to_decimal(tr.d());
    EXPECT_EQ(t[i], "60 " + to_decimal(tr.y()) + " " + to_decimal(tr.z()) + " d=" + d + " " +
                        (tr.primitive() ? "primitive" : "non-primitive"));
    EXPECT_EQ(c[i + 1], "60," + to_decimal(tr.y()) + "," + to_decimal(tr.z()) + "," + d + "," +
                            (tr.primitive() ? "true" : "false"));
  }
}

TEST(CliTriples, PaperStrictMode) {
  const Result r = run_cli({"triples", "6", "--mode", "paper-strict"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "");
  const Result any = run_cli({"triples", "20", "--mode", "paper-strict", "--interpretation", "any-l"});
  EXPECT_EQ(lines(any.out).size(), 4u);
}

TEST(CliTriples, UsageErrors) {
  EXPECT_EQ(run_cli({"triples", "0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"triples", "-3"}).code, kUsageError);
  EXPECT_EQ(run_cli({"triples", "abc"}).code, kUsageError);
  EXPECT_EQ(run_cli({"triples"}).code, kUsageError);
  EXPECT_EQ(run_cli({"triples", "3", "--mode", "loose"}).code, kUsageError);
  EXPECT_EQ(run_cli({"triples", "3", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run_cli({"--help"}).code, kSuccess);
}

TEST(CliRelate, Examples) {
  Result r = run_cli({"relate", "3", "4"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "x=3 m=4 y'=3280 z'=3281 agreed\n");

  r = run_cli({"relate", "3", "1"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "x=3 m=1 y'=4 z'=5 agreed\n");

  r = run_cli({"relate", "7", "3"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "x=7 m=3 y'=58824 z'=58825 agreed\n");
}

TEST(CliRelate, ShowPathsLabelsEachFormula) {
  const Result r = run_cli({"relate", "3", "3", "--show-paths"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out,
            "x=3 m=3 y'=364 z'=365 agreed\n"
            "  direct: y'=364 z'=365\n"
            "  eq2.1: y'=364 z'=365\n"
            "  eq2.2-2.3: y'=364 z'=365\n"
            "  equivalent: y'=364 z'=365\n");

  const Result csv = run_cli({"relate", "3", "2", "--show-paths", "--format", "csv"});
  EXPECT_EQ(csv.out,
            "x,m,y_prime,z_prime,agreed,direct_y_prime,direct_z_prime,eq2.1_y_prime,eq2.1_z_prime,"
            "eq2.2-2.3_y_prime,eq2.2-2.3_z_prime,equivalent_y_prime,equivalent_z_prime\n"
            "3,2,40,41,true,40,41,40,41,40,41,40,41\n");
}

TEST(CliRelate, JsonRoundTripsBigValues) {
  const Result r = run_cli({"relate", "3", "200", "--format", "json", "--show-paths"});
  ASSERT_EQ(r.code, kSuccess);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1u);
  const RelationRecord rec = std::get<RelationRecord>(parse_line(ls[0]));
  EXPECT_EQ(rec.y_prime, (pow(Integer(3), 400) - 1) / 2);
  EXPECT_TRUE(rec.agreed);
  EXPECT_EQ(serialize_line(rec), ls[0]);
}

TEST(CliRelate, UsageErrors) {
  EXPECT_EQ(run_cli({"relate", "4", "2"}).code, kUsageError);
  EXPECT_EQ(run_cli({"relate", "1", "2"}).code, kUsageError);
  EXPECT_EQ(run_cli({"relate", "3", "0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"relate", "3"}).code, kUsageError);
  EXPECT_EQ(run_cli({"relate", "3", "99999999999999999999999"}).code, kUsageError);
}

TEST(CliVerify, Examples) {
  Result r = run_cli({"verify", "1..100", "--mode", "corrected"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "verify 1..100 mode=corrected interpretation=odd-l legs=100 discrepancies=0 clean\n");

  r = run_cli({"verify", "6..6", "--mode", "paper-strict"});
  EXPECT_EQ(r.code, kDiscrepancy);
  EXPECT_EQ(lines(r.out).front(), "x=6 missing (6, 8, 10)");

  // The inclusive bound d <= x admits d = x for odd legs, which is reported.
  r = run_cli({"verify", "3..3", "--mode", "paper-strict"});
  EXPECT_EQ(r.code, kDiscrepancy);
  EXPECT_EQ(lines(r.out).front(), "x=3 spurious d=3 DegenerateTriple");
}

TEST(CliVerify, JsonStream) {
  const Result r = run_cli({"verify", "1..30", "--mode", "paper-strict", "--interpretation", "any-l",
                            "--format", "json", "--jobs", "3"});
  EXPECT_EQ(r.code, kDiscrepancy);
  const auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 2u);
  std::uint64_t previous = 0;
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    const LegDiscrepancy e = std::get<LegDiscrepancy>(parse_line(ls[i]));
    EXPECT_GT(e.x, previous);
    previous = e.x;
  }
  const SummaryRecord s = std::get<SummaryRecord>(parse_line(ls.back()));
  EXPECT_EQ(s.legs_checked, 30u);
  EXPECT_EQ(s.discrepancies, ls.size() - 1);
  EXPECT_FALSE(s.clean);
  EXPECT_EQ(s.interpretation, LInterpretation::AnyDivisor);
}

TEST(CliVerify, CsvRows) {
  const Result r = run_cli({"verify", "20..20", "--mode", "paper-strict", "--interpretation", "any-l",
                            "--format", "csv"});
  EXPECT_EQ(r.code, kDiscrepancy);
  EXPECT_EQ(r.out,
            "x,kind,d,reason,y,z\n"
            "20,spurious,16,NonIntegerResult,,\n"
            "20,spurious,20,DegenerateTriple,,\n");
}

TEST(CliVerify, OutputIndependentOfJobs) {
  const Result one = run_cli({"verify", "1..80", "--mode", "paper-strict", "--jobs", "1"});
  const Result many = run_cli({"verify", "1..80", "--mode", "paper-strict", "--jobs", "8"});
  EXPECT_EQ(one.code, many.code);
  EXPECT_EQ(one.out, many.out);
}

TEST(CliVerify, RangeAndLimitErrors) {
  EXPECT_EQ(run_cli({"verify", "1-5"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "0..5"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "5..1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "..5"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "1..100001"}).code, kUsageError);
  {
    ScopedEnv env("TRIPLEFORGE_SWEEP_LIMIT", "10");
    EXPECT_EQ(run_cli({"verify", "1..11"}).code, kUsageError);
    EXPECT_EQ(run_cli({"verify", "1..10"}).code, kSuccess);
  }
  {
    ScopedEnv env("TRIPLEFORGE_SWEEP_LIMIT", "lots");
    EXPECT_EQ(run_cli({"verify", "1..10"}).code, kUsageError);
  }
}

TEST(CliVerify, ParseRange) {
  EXPECT_EQ(parse_range("1..500"), (LegRange{1, 500}));
  EXPECT_EQ(parse_range("7..7"), (LegRange{7, 7}));
  EXPECT_FALSE(parse_range("1..").has_value());
  EXPECT_FALSE(parse_range("1...5").has_value());
  EXPECT_FALSE(parse_range("a..5").has_value());
  EXPECT_FALSE(parse_range(" 1..5").has_value());
}
