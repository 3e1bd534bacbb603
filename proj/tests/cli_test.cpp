#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "kg/rational.hpp"
#include "kg/report.hpp"

namespace kg {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun kgl(const std::string& args) {
  const std::string cmd = std::string(KGL_BINARY) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kgl_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool has_line(const std::vector<std::string>& lines, const std::string& want) {
  return std::find(lines.begin(), lines.end(), want) != lines.end();
}

TEST(Spectrum, ThreeSites) {
  const CliRun r = kgl("spectrum --n 3 --a 1");
  ASSERT_EQ(r.code, 0);
  const Table t = parse_csv(r.out);
  EXPECT_EQ(t.header, (std::vector<std::string>{"k", "omega", "omega_squared"}));
  const double expected[3][3] = {{1, 2, 4}, {2, 2, 4}, {3, 1, 1}};
  ASSERT_EQ(t.rows.size(), 3u);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(parse_double(t.rows[i][j]), expected[i][j], 1e-14);
  EXPECT_TRUE(has_line(t.preamble, "command=spectrum"));
  EXPECT_TRUE(has_line(t.preamble, "n=3"));
  EXPECT_TRUE(has_line(t.preamble, "a=1"));
}

TEST(Spectrum, FourSites) {
  const Table t = parse_csv(kgl("spectrum --n 4").out);
  EXPECT_EQ(parse_double(t.rows[3][1]), 1.0);
  EXPECT_NEAR(parse_double(t.rows[1][1]), std::sqrt(5.0), 1e-15);
}

TEST(ExitCodes, UsageErrors) {
  EXPECT_EQ(kgl("spectrum --n 1").code, 2);
  EXPECT_EQ(kgl("spectrum").code, 2);
  EXPECT_EQ(kgl("spectrum --n 3 --bogus 1").code, 2);
  EXPECT_EQ(kgl("frobnicate").code, 2);
  EXPECT_EQ(kgl("simulate --boundary ring").code, 2);
  EXPECT_EQ(kgl("residue --eval a=1").code, 2);
  EXPECT_EQ(kgl("residue --order 4").code, 2);
  EXPECT_EQ(kgl("kam --n 4 --odd").code, 2);
  EXPECT_EQ(kgl("drift --eps 0.2,0.1").code, 2);
}

TEST(ExitCodes, NumericBudgetAndIo) {
  EXPECT_EQ(kgl("simulate --n 3 --beta -50 --amplitude 20 --dt 0.1 --steps 100000").code, 3);
  EXPECT_EQ(kgl("resonances --n 100").code, 4);
  EXPECT_EQ(kgl("spectrum --n 3 --output /nonexistent-dir/out.csv").code, 5);
}

TEST(Kam, ThreeSiteClosedForm) {
  const CliRun r = kgl("kam --n 3 --beta 1 --odd");
  ASSERT_EQ(r.code, 0);
  const Node n = parse_structured(r.out);
  EXPECT_NEAR(parse_double(n.at("closed_form_det").value), 5.0 / 1024, 1e-12);
  EXPECT_NEAR(parse_double(n.at("det_full").value), 5.0 / 512, 1e-12);
  EXPECT_EQ(n.at("nondegenerate").value, "true");
  const Node d = parse_structured(kgl("kam --n 3 --dirichlet").out);
  EXPECT_EQ(d.at("template_det").value, "-12");
}

TEST(Residue, ExactEvaluation) {
  const CliRun r = kgl("residue --order 12 --eval a=1,g3=1 --eval a=3/2,g3=0");
  ASSERT_EQ(r.code, 0);
  const Node n = parse_structured(r.out);
  EXPECT_EQ(n.at("evaluation").at("reference_value").value, "25/12");
  EXPECT_EQ(parse_rational(n.at("evaluation").at("reference_value").value), Rational(25) / 12);
  EXPECT_EQ(n.at("series").at("u").at("s^1").value, "1/6*a + 2/3");
  EXPECT_EQ(n.at("residue_positive_at_g3_1").value, "true");
}

TEST(Resonances, FiveSitesPass) {
  const CliRun r = kgl("resonances --n 5 --tol 1e-20");
  ASSERT_EQ(r.code, 0);
  const Node n = parse_structured(r.out);
  EXPECT_EQ(n.at("assertion").at("result").value, "PASS");
  EXPECT_EQ(n.at("assertion").at("nontrivial").value, "0");
  for (const auto& t : n.at("relations").children) EXPECT_EQ(t.at("trivial").value, "true");
}

TEST(Symmetry, ReportPasses) {
  const CliRun r = kgl("symmetry --n 6 --steps 1000");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_structured(r.out).at("result").value, "PASS");
}

TEST(NormalFormEval, ExplicitPoint) {
  const CliRun r = kgl("normalform-eval --n 5 --Q 1,0,0,1,0 --P 0,0,0,0,0");
  ASSERT_EQ(r.code, 0);
  const Node n = parse_structured(r.out);
  const Node& pair = n.at("hopf").at("pair");
  EXPECT_EQ(pair.at("a").value, "1");
  EXPECT_EQ(pair.at("d").value, "1");
  for (const auto& b : n.at("brackets_with_H4bar").children) EXPECT_LE(std::abs(parse_double(b.value)), 1e-12);
  EXPECT_EQ(kgl("normalform-eval --n 5 --Q 1,0 --P 0,0").code, 2);
}

TEST(Drift, SmallRun) {
  const CliRun r = kgl("drift --n 3 --eps 0.05,0.1 --horizon 0.5");
  ASSERT_EQ(r.code, 0);
  const Node n = parse_structured(r.out);
  EXPECT_EQ(n.at("config").at("eps").value, "0.050000000000000003 0.10000000000000001");
  EXPECT_FALSE(n.at("rows").children.empty());
  EXPECT_FALSE(n.at("slopes").children.empty());
}

TEST(Reproducibility, ByteIdenticalWithoutTimestamp) {
  for (const char* args : {"simulate --n 4 --steps 200 --seed 9 --no-timestamp",
                           "drift --n 3 --eps 0.05,0.1 --horizon 0.5 --no-timestamp",
                           "resonances --n 6 --no-timestamp", "residue --no-timestamp"}) {
    const CliRun x = kgl(args), y = kgl(args);
    ASSERT_EQ(x.code, 0) << args;
    EXPECT_EQ(x.out, y.out) << args;
    EXPECT_EQ(x.out.find("timestamp"), std::string::npos);
  }
  EXPECT_NE(kgl("spectrum --n 3").out.find("# timestamp="), std::string::npos);
  EXPECT_NE(kgl("simulate --n 4 --steps 10 --seed 9").out, kgl("simulate --n 4 --steps 10 --seed 10").out);
}

TEST(Output, FilesRoundTrip) {
  const auto csv = temp_path("sim.csv");
  ASSERT_EQ(kgl("simulate --n 4 --steps 50 --record-every 5 --output " + csv.string()).code, 0);
  const std::string text = slurp(csv);
  const Table t = parse_csv(text);
  EXPECT_EQ(emit_csv(t), text);
  EXPECT_EQ(t.rows.size(), 11u);
  EXPECT_EQ(t.header.size(), 2u + 8u);
  for (const auto& row : t.rows)
    for (const auto& cell : row) EXPECT_EQ(format_double(parse_double(cell)), cell);

  const auto txt = temp_path("kam.txt");
  ASSERT_EQ(kgl("kam --n 5 -o " + txt.string()).code, 0);
  const std::string report = slurp(txt);
  EXPECT_EQ(emit_structured(parse_structured(report)), report);
  std::filesystem::remove(csv);
  std::filesystem::remove(txt);
}

TEST(Config, FileMergedUnderFlags) {
  const auto cfg = temp_path("run.cfg");
  {
    std::ofstream out(cfg);
    out << "# comment\nn = 7\na=2\n";
  }
  const Table t = parse_csv(kgl("spectrum --config " + cfg.string()).out);
  EXPECT_EQ(t.rows.size(), 7u);
  EXPECT_TRUE(has_line(t.preamble, "a=2"));
  const Table o = parse_csv(kgl("spectrum --n 4 --config " + cfg.string()).out);
  EXPECT_EQ(o.rows.size(), 4u);
  EXPECT_TRUE(has_line(o.preamble, "n=4"));
  {
    std::ofstream out(cfg);
    out << "garbage line\n";
  }
  EXPECT_EQ(kgl("spectrum --n 3 --config " + cfg.string()).code, 2);
  EXPECT_EQ(kgl("spectrum --n 3 --config /nonexistent.cfg").code, 2);
  std::filesystem::remove(cfg);
}

}  // namespace
}  // namespace kg
