#include <gtest/gtest.h>

#include <cstdlib>
#include <string>

#include "cli_runner.hpp"

namespace {

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string golden(const std::string& name) { return cli::slurp(std::string(DQ_GOLDEN_DIR) + "/" + name); }

const char* kAllSchemes = "bb84,psi+,psi-,phi+,phi-,cluster";

}  // namespace

TEST(Cli, NoSubcommandIsUsageError) { EXPECT_EQ(cli::run("").exit_code, 1); }

TEST(Cli, HelpExitsZero) {
  const auto r = cli::run("--help");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("verify-table"), std::string::npos);
}

TEST(Cli, VerifyTablePassesAndPerturbationFails) {
  const auto ok = cli::run("verify-table --grid 5");
  EXPECT_EQ(ok.exit_code, 0) << ok.err;
  EXPECT_EQ(count_lines(ok.out), 1 + 24 * 5);
  EXPECT_EQ(ok.out.rfind("scheme,noise,parameter,fidelity_sim,fidelity_closed,abs_err\n", 0), 0u);

  const auto bad = cli::run("verify-table --grid 5 --perturb 1e-6");
  EXPECT_EQ(bad.exit_code, 2);
}

TEST(Cli, GridBelowTwoRejected) {
  const auto r = cli::run("sweep --noise ad --schemes psi+ --grid 1");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("grid must be"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, SweepIsDeterministicAndDataOnlyOnStdout) {
  const std::string args = std::string("sweep --noise cr --schemes ") + kAllSchemes + " --grid 33";
  const auto a = cli::run(args);
  const auto b = cli::run(args);
  ASSERT_EQ(a.exit_code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(count_lines(a.out), 1 + 6 * 33);
}

TEST(Cli, SweepOutFileMatchesStdout) {
  const std::string path = "/tmp/decoyq_cli_sweep_" + std::to_string(::getpid()) + ".csv";
  const auto to_stdout = cli::run("sweep --noise pd --schemes cluster,w --grid 7");
  const auto to_file = cli::run("sweep --noise pd --schemes cluster,w --grid 7 --out " + path);
  ASSERT_EQ(to_file.exit_code, 0) << to_file.err;
  EXPECT_TRUE(to_file.out.empty());
  EXPECT_EQ(cli::slurp(path), to_stdout.out);
  std::remove(path.c_str());
}

TEST(Cli, SweepMatchesGoldenFiles) {
  for (const char* noise : {"ad", "pd", "cd", "cr"}) {
    const auto r = cli::run(std::string("sweep --noise ") + noise + " --schemes " + kAllSchemes + " --grid 11");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_EQ(r.out, golden(std::string("sweep_") + noise + ".csv")) << noise;
  }
}

TEST(Cli, UnknownSchemeAndNoise) {
  EXPECT_EQ(cli::run("sweep --noise xx --schemes psi+").exit_code, 1);
  EXPECT_EQ(cli::run("sweep --noise ad --schemes ghz").exit_code, 1);
  EXPECT_EQ(cli::run("sweep --noise ad --schemes psi+ --from 0 --to 2").exit_code, 1);
}

TEST(Cli, RecommendNeedsMatchingParameter) {
  const auto r = cli::run("recommend --noise pd --eta 0.5");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("rank,scheme,noise,parameter,fidelity,tie_group\n1,bb84,pd,0.5,0.586181640625,1\n", 0),
            0u);
  EXPECT_EQ(cli::run("recommend --noise pd --theta 0.5").exit_code, 1);
  EXPECT_EQ(cli::run("recommend --noise cr --theta 0.5 --phi 0.2").exit_code, 1);
  EXPECT_EQ(cli::run("recommend --noise cr").exit_code, 1);
}

TEST(Cli, Crossover) {
  const auto r = cli::run("crossover --noise ad --schemes bb84,psi+ --from 0.3 --to 0.9");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("scheme_a,scheme_b,noise,lo,hi,crossover\nbb84,psi+,ad,0.29999999999999999,0.90000000000000002,0.58", 0), 0u) << r.out;
  const auto none = cli::run("crossover --noise cr --schemes phi-,psi+ --from 0 --to 1");
  EXPECT_EQ(none.exit_code, 1);
  EXPECT_NE(none.err.find("no crossover"), std::string::npos);
  EXPECT_EQ(cli::run("crossover --noise ad --schemes bb84 --from 0.3 --to 0.9").exit_code, 1);
}

TEST(Cli, EveSimExact) {
  const auto r = cli::run("eve-sim --attack intercept-resend --method exact");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("detection_probability,,0.25\n"), std::string::npos);

  const auto wp = cli::run("eve-sim --attack wrong-pair --bell psi- --pair 2,3 --method exact");
  ASSERT_EQ(wp.exit_code, 0) << wp.err;
  EXPECT_NE(wp.out.find("detection_probability,,0.75"), std::string::npos) << wp.out;
}

TEST(Cli, EveSimMonteCarloNeedsSeedAndIsReproducible) {
  EXPECT_EQ(cli::run("eve-sim --attack intercept-resend --method mc --trials 1000").exit_code, 1);
  const std::string args = "eve-sim --attack wrong-pair --bell phi+ --pair 2,3 --method mc --trials 20000 --seed 4";
  const auto a = cli::run(args);
  const auto b = cli::run(args);
  ASSERT_EQ(a.exit_code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed,,4\n"), std::string::npos);
}

TEST(Cli, EveSimRejectsBadPair) {
  EXPECT_EQ(cli::run("eve-sim --attack wrong-pair --bell psi+ --pair 2,5 --method exact").exit_code, 1);
  EXPECT_EQ(cli::run("eve-sim --attack wrong-pair --bell psi+ --pair 2 --method exact").exit_code, 1);
}
