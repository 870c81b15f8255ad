#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "decoyq/error.hpp"
#include "decoyq/fidelity.hpp"
#include "oracles.hpp"

using namespace decoyq;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<DecoyScheme> entangled() {
  return {GVBell{BellLabel::kPsiPlus}, GVBell{BellLabel::kPsiMinus}, GVBell{BellLabel::kPhiPlus},
          GVBell{BellLabel::kPhiMinus}, Cluster{}};
}

// Every product block factorizes under both local and collective noise, so
// the 256-block mean equals (mean single-qubit fidelity)^4. The single-qubit
// fidelities are simulated here with Eigen.
double bb84_average_oracle(const NoiseModel& noise) {
  using oracle::Mat;
  std::vector<Mat> ops;
  const double p = noise.parameter();
  switch (noise.family()) {
    case NoiseFamily::kAmplitudeDamping: {
      Mat e0 = Mat::Zero(2, 2), e1 = Mat::Zero(2, 2);
      e0(0, 0) = 1.0;
      e0(1, 1) = std::sqrt(1.0 - p);
      e1(0, 1) = std::sqrt(p);
      ops = {e0, e1};
      break;
    }
    case NoiseFamily::kPhaseDamping: {
      Mat e0 = std::sqrt(1.0 - p) * Mat::Identity(2, 2), e1 = Mat::Zero(2, 2), e2 = Mat::Zero(2, 2);
      e1(0, 0) = std::sqrt(p);
      e2(1, 1) = std::sqrt(p);
      ops = {e0, e1, e2};
      break;
    }
    case NoiseFamily::kCollectiveDephasing: {
      Mat u = Mat::Identity(2, 2);
      u(1, 1) = std::polar(1.0, p);
      ops = {u};
      break;
    }
    case NoiseFamily::kCollectiveRotation: {
      Mat u(2, 2);
      u << std::cos(p), -std::sin(p), std::sin(p), std::cos(p);
      ops = {u};
      break;
    }
  }
  const double h = 1.0 / std::sqrt(2.0);
  const oracle::Vec kets[4] = {oracle::Vec::Unit(2, 0), oracle::Vec::Unit(2, 1),
                               (oracle::Vec(2) << h, h).finished(), (oracle::Vec(2) << h, -h).finished()};
  double mean = 0.0;
  for (const auto& k : kets) {
    const Mat rho = k * k.adjoint();
    Mat out = Mat::Zero(2, 2);
    for (const auto& e : ops) out += e * rho * e.adjoint();
    mean += (k.adjoint() * out * k)(0, 0).real() / 4.0;
  }
  return std::pow(mean, 4);
}

}  // namespace

TEST(Fidelity, SelfAndOrthogonal) {
  const auto psi = make_cluster();
  EXPECT_NEAR(fidelity(psi, DensityMatrix::from_pure(psi)), 1.0, 1e-12);
  EXPECT_NEAR(fidelity(make_single(SingleLabel::kZero),
                       DensityMatrix::from_pure(make_single(SingleLabel::kOne))),
              0.0, 1e-15);
}

TEST(Fidelity, DimensionMismatch) {
  try {
    fidelity(make_single(SingleLabel::kZero), DensityMatrix::maximally_mixed(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  EXPECT_THROW(conventional_fidelity(make_cluster(), DensityMatrix::maximally_mixed(3)), Error);
}

TEST(Fidelity, TwoPsiPlusUnderFullDamping) {
  const auto s = GVBell{BellLabel::kPsiPlus};
  const auto rho = apply_noise(DensityMatrix::from_pure(make_decoy_state(s)), NoiseModel::amplitude_damping(1.0));
  EXPECT_NEAR(fidelity(make_decoy_state(s), rho), 0.25, 1e-12);
  EXPECT_NEAR(conventional_fidelity(make_decoy_state(s), rho), 0.5, 1e-12);
}

TEST(ConventionalFidelity, SquareMatchesFidelityAndUhlmannOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = std::size_t{1} << (1 + trial % 4);
    const PureState psi(oracle::random_amplitudes(rng, dim));
    const auto rho_e = oracle::random_density(rng, dim);
    const DensityMatrix rho(oracle::from_eigen(rho_e));
    const double fc = conventional_fidelity(psi, rho);
    EXPECT_NEAR(fc * fc, fidelity(psi, rho), 1e-12);
    const oracle::Mat sigma = oracle::to_eigen(DensityMatrix::from_pure(psi).matrix());
    EXPECT_NEAR(fc, oracle::uhlmann_fidelity(sigma, rho_e), 1e-9);
  }
}

TEST(SimulateFidelity, TableSpotValues) {
  EXPECT_NEAR(simulate_fidelity(GVBell{BellLabel::kPhiMinus}, NoiseModel::collective_rotation(1.234)), 1.0, 1e-12);
  EXPECT_NEAR(simulate_fidelity(Cluster{}, NoiseModel::collective_dephasing(kPi / 2)), 0.0, 1e-12);
  EXPECT_NEAR(simulate_fidelity(GVBell{BellLabel::kPhiPlus}, NoiseModel::amplitude_damping(0.5)), 0.25, 1e-12);
  EXPECT_THROW(simulate_fidelity(BB84Average{}, NoiseModel::phase_damping(0.1)), Error);
}

TEST(BB84Average, Endpoints) {
  EXPECT_NEAR(bb84_average_fidelity(NoiseModel::amplitude_damping(0.0)), 1.0, 1e-12);
  EXPECT_NEAR(bb84_average_fidelity(NoiseModel::amplitude_damping(1.0)), 0.0625, 1e-12);
  EXPECT_NEAR(bb84_average_fidelity(NoiseModel::phase_damping(1.0)), 81.0 / 256.0, 1e-12);
}

TEST(BB84Average, MatchesFactorizedOracle) {
  for (double p : {0.0, 0.13, 0.5, 0.77, 1.0}) {
    for (auto noise : {NoiseModel::amplitude_damping(p), NoiseModel::phase_damping(p),
                       NoiseModel::collective_dephasing(6 * p), NoiseModel::collective_rotation(6 * p)})
      EXPECT_NEAR(bb84_average_fidelity(noise), bb84_average_oracle(noise), 1e-12)
          << to_string(noise.family()) << " " << p;
  }
}

TEST(ClosedForm, SpotValues) {
  for (double phi : {0.0, 0.4, 2.0}) {
    const double c = std::cos(phi);
    EXPECT_NEAR(closed_form(GVBell{BellLabel::kPsiPlus}, NoiseModel::collective_dephasing(phi)), c * c * c * c, 1e-15);
  }
  EXPECT_NEAR(closed_form(Cluster{}, NoiseModel::amplitude_damping(1.0)), 0.25, 1e-15);
  EXPECT_NEAR(closed_form(BB84Average{}, NoiseModel::collective_rotation(kPi / 4)), 0.0625, 1e-15);
  EXPECT_NEAR(closed_form(GVBell{BellLabel::kPsiPlus}, NoiseModel::amplitude_damping(1.0)), 0.25, 1e-15);
}

TEST(ClosedForm, NoCellForWOrSingleProduct) {
  try {
    closed_form(WState{}, NoiseModel::collective_dephasing(0.3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoClosedForm);
  }
  EXPECT_THROW(closed_form(parse_scheme("bb84:0000"), NoiseModel::phase_damping(0.3)), Error);
}

// Merged table cells: PD is shared by all entangled blocks, psi-/phi+ share
// the CR entry. Each resolution is pinned against simulation.
TEST(ClosedForm, MergedCellsResolvedAgainstSimulation) {
  for (double eta = 0.0; eta <= 1.0; eta += 0.05) {
    const auto pd = NoiseModel::phase_damping(std::min(eta, 1.0));
    const double ref = simulate_fidelity(Cluster{}, pd);
    for (const auto& s : entangled()) {
      EXPECT_NEAR(simulate_fidelity(s, pd), ref, 1e-12) << scheme_name(s);
      EXPECT_NEAR(closed_form(s, pd), ref, 1e-12) << scheme_name(s);
    }
  }
  for (double theta = 0.0; theta < 2 * kPi; theta += 0.3) {
    const auto cr = NoiseModel::collective_rotation(theta);
    EXPECT_NEAR(simulate_fidelity(GVBell{BellLabel::kPsiMinus}, cr),
                simulate_fidelity(GVBell{BellLabel::kPhiPlus}, cr), 1e-12);
    EXPECT_NEAR(bb84_average_fidelity(cr), simulate_fidelity(Cluster{}, cr), 1e-12);
  }
}

TEST(SimulateFidelity, SameParityEqualUnderAmplitudeDamping) {
  for (double eta = 0.0; eta <= 1.0; eta += 0.1) {
    const auto ad = NoiseModel::amplitude_damping(std::min(eta, 1.0));
    EXPECT_NEAR(simulate_fidelity(GVBell{BellLabel::kPsiPlus}, ad),
                simulate_fidelity(GVBell{BellLabel::kPsiMinus}, ad), 1e-12);
    EXPECT_NEAR(simulate_fidelity(GVBell{BellLabel::kPhiPlus}, ad),
                simulate_fidelity(GVBell{BellLabel::kPhiMinus}, ad), 1e-12);
  }
}

TEST(SimulateFidelity, ZeroNoiseIsPerfect) {
  std::vector<DecoyScheme> schemes = entangled();
  schemes.push_back(WState{});
  schemes.push_back(parse_scheme("bb84:1+-0"));
  for (const auto& s : schemes)
    for (auto noise : {NoiseModel::amplitude_damping(0.0), NoiseModel::phase_damping(0.0),
                       NoiseModel::collective_dephasing(0.0), NoiseModel::collective_rotation(0.0)})
      EXPECT_NEAR(simulate_fidelity(s, noise), 1.0, 1e-12) << scheme_name(s);
  for (auto noise : {NoiseModel::amplitude_damping(0.0), NoiseModel::collective_rotation(0.0)})
    EXPECT_NEAR(bb84_average_fidelity(noise), 1.0, 1e-12);
}

TEST(VerifyTable, ElevenPointGridWithinTolerance) {
  const auto reports = verify_table(11);
  ASSERT_EQ(reports.size(), 24u);
  for (const auto& r : reports) {
    ASSERT_TRUE(r.max_abs_deviation.has_value());
    EXPECT_LT(*r.max_abs_deviation, 1e-12) << scheme_name(r.scheme) << " " << to_string(r.family);
    for (double f : r.simulated) {
      EXPECT_GE(f, -1e-12);
      EXPECT_LE(f, 1.0 + 1e-12);
    }
  }
}

TEST(VerifyTable, TwoPointGridIsEndpoints) {
  const auto reports = verify_table(2);
  for (const auto& r : reports) {
    ASSERT_EQ(r.grid.size(), 2u);
    EXPECT_EQ(r.grid.front(), default_range(r.family).first);
    EXPECT_EQ(r.grid.back(), default_range(r.family).second);
    if (r.family == NoiseFamily::kAmplitudeDamping) EXPECT_NEAR(r.simulated.front(), 1.0, 1e-12);
  }
}

TEST(VerifyTable, DegenerateGridRejected) { EXPECT_THROW(verify_table(1), Error); }

TEST(VerifyTable, OffsetIsDetected) {
  const auto reports = verify_table(3, {1e-6});
  for (const auto& r : reports) EXPECT_NEAR(*r.max_abs_deviation, 1e-6, 1e-11);
}

TEST(EvaluateReport, WStateHasNoClosedColumn) {
  const auto r = evaluate_report(WState{}, NoiseFamily::kCollectiveDephasing, uniform_grid(0, 1, 5));
  EXPECT_FALSE(r.closed_form.has_value());
  EXPECT_FALSE(r.max_abs_deviation.has_value());
  EXPECT_EQ(r.simulated.size(), 5u);
}
