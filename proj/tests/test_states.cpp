#include <gtest/gtest.h>

#include <cmath>

#include "decoyq/error.hpp"
#include "decoyq/states.hpp"

using namespace decoyq;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

void expect_amplitudes(const PureState& s, const std::vector<double>& expected) {
  ASSERT_EQ(s.dim(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    EXPECT_NEAR(std::abs(s[i] - Complex(expected[i])), 0.0, 1e-15) << "index " << i;
}

std::vector<DecoyScheme> all_state_schemes() {
  std::vector<DecoyScheme> out = {Cluster{}, WState{}};
  for (auto b : kAllBellLabels) out.push_back(GVBell{b});
  for (auto a : kAllSingleLabels)
    for (auto b : kAllSingleLabels)
      out.push_back(BB84Product{{a, b, SingleLabel::kPlus, SingleLabel::kMinus}});
  return out;
}

}  // namespace

TEST(Singles, BasisVectors) {
  expect_amplitudes(make_single(SingleLabel::kZero), {1.0, 0.0});
  expect_amplitudes(make_single(SingleLabel::kOne), {0.0, 1.0});
  expect_amplitudes(make_single(SingleLabel::kPlus), {kH, kH});
  expect_amplitudes(make_single(SingleLabel::kMinus), {kH, -kH});
}

TEST(Singles, UnknownLabelRejected) { EXPECT_THROW(parse_single_label("x"), Error); }

TEST(Bell, TableConventionParallelIsPsi) {
  expect_amplitudes(make_bell(BellLabel::kPsiPlus), {kH, 0.0, 0.0, kH});
  expect_amplitudes(make_bell(BellLabel::kPsiMinus), {kH, 0.0, 0.0, -kH});
  expect_amplitudes(make_bell(BellLabel::kPhiPlus), {0.0, kH, kH, 0.0});
  expect_amplitudes(make_bell(BellLabel::kPhiMinus), {0.0, kH, -kH, 0.0});
}

TEST(Bell, PairwiseOrthogonal) {
  for (auto a : kAllBellLabels)
    for (auto b : kAllBellLabels) {
      const double overlap = std::abs(inner_product(make_bell(a), make_bell(b)));
      EXPECT_NEAR(overlap, a == b ? 1.0 : 0.0, 1e-12);
    }
}

TEST(Bell, UnknownLabelRejected) { EXPECT_THROW(parse_bell_label("bell"), Error); }

TEST(Cluster, AmplitudesAreExactHalves) {
  const auto c = make_cluster();
  ASSERT_EQ(c.n_qubits(), 4);
  for (std::size_t i = 0; i < 16; ++i) {
    if (i == 0 || i == 3 || i == 12)
      EXPECT_EQ(c[i], Complex(0.5));
    else if (i == 15)
      EXPECT_EQ(c[i], Complex(-0.5));
    else
      EXPECT_EQ(c[i], Complex(0.0));
  }
  EXPECT_NEAR(c.norm_squared(), 1.0, 1e-15);
}

TEST(Cluster, OverlapWithTwoPsiPlusIsQuarter) {
  const auto b = make_bell(BellLabel::kPsiPlus);
  EXPECT_NEAR(std::norm(inner_product(tensor_product(b, b), make_cluster())), 0.25, 1e-15);
}

TEST(WState, ThreeQubits) {
  const double a = 1.0 / std::sqrt(3.0);
  expect_amplitudes(make_w(3), {0.0, a, a, 0.0, a, 0.0, 0.0, 0.0});
  EXPECT_NEAR(make_w(3).norm_squared(), 1.0, 1e-15);
  EXPECT_THROW(make_w(4), Error);
}

TEST(DecoyState, GVIsTwoBellCopies) {
  expect_amplitudes(make_decoy_state(GVBell{BellLabel::kPsiPlus}),
                    {0.5, 0, 0, 0.5, 0, 0, 0, 0, 0, 0, 0, 0, 0.5, 0, 0, 0.5});
}

TEST(DecoyState, BB84ProductIsTensorOfSingles) {
  const auto s = make_decoy_state(parse_scheme("bb84:01+-"));
  ASSERT_EQ(s.n_qubits(), 4);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  // |0>|1>|+>|-> has support on 01xx with signs from the last qubit.
  expect_amplitudes(s, {0, 0, 0, 0, 0.5, -0.5, 0.5, -0.5, 0, 0, 0, 0, 0, 0, 0, 0});
}

TEST(DecoyState, AverageHasNoState) { EXPECT_THROW(make_decoy_state(BB84Average{}), Error); }

TEST(DecoyState, EveryStateNormalized) {
  for (const auto& s : all_state_schemes())
    EXPECT_NEAR(make_decoy_state(s).norm_squared(), 1.0, 1e-12) << scheme_name(s);
}

TEST(SchemeNames, ParseRoundTrip) {
  for (const char* name : {"bb84", "bb84:0+1-", "psi+", "psi-", "phi+", "phi-", "cluster", "w"})
    EXPECT_EQ(scheme_name(parse_scheme(name)), name);
  EXPECT_THROW(parse_scheme("bb84:01+"), Error);
  EXPECT_THROW(parse_scheme("bb84:01+x"), Error);
  EXPECT_THROW(parse_scheme("ghz"), Error);
}
