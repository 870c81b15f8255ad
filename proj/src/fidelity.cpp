#include "decoyq/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "decoyq/error.hpp"

namespace decoyq {

namespace {

double pow2(double x) { return x * x; }
double pow4(double x) { return pow2(pow2(x)); }

// (2 - 2 eta + eta^2)^2 / 4, shared by every entangled block under PD and by
// the parallel-spin Bell pairs under AD.
double two_pair_dephasing(double eta) { return pow2(2.0 - 2.0 * eta + eta * eta) / 4.0; }

double closed_form_bb84(const NoiseModel& noise) {
  const double p = noise.parameter();
  switch (noise.family()) {
    case NoiseFamily::kAmplitudeDamping: return pow4(3.0 + std::sqrt(1.0 - p) - p) / 256.0;
    case NoiseFamily::kPhaseDamping: return pow4(-4.0 + p) / 256.0;
    case NoiseFamily::kCollectiveDephasing: return pow4(3.0 + std::cos(p)) / 256.0;
    case NoiseFamily::kCollectiveRotation: return pow4(pow2(std::cos(p)));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown noise family");
}

double closed_form_bell(BellLabel label, const NoiseModel& noise) {
  const double p = noise.parameter();
  const bool parallel = label == BellLabel::kPsiPlus || label == BellLabel::kPsiMinus;
  switch (noise.family()) {
    case NoiseFamily::kAmplitudeDamping:
      return parallel ? two_pair_dephasing(p) : pow2(-1.0 + p);
    case NoiseFamily::kPhaseDamping: return two_pair_dephasing(p);
    case NoiseFamily::kCollectiveDephasing: return parallel ? pow4(std::cos(p)) : 1.0;
    case NoiseFamily::kCollectiveRotation:
      if (label == BellLabel::kPsiPlus || label == BellLabel::kPhiMinus) return 1.0;
      return pow4(std::cos(2.0 * p));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown noise family");
}

double closed_form_cluster(const NoiseModel& noise) {
  const double p = noise.parameter();
  switch (noise.family()) {
    case NoiseFamily::kAmplitudeDamping:
      return (4.0 - 8.0 * p + 6.0 * p * p - 2.0 * p * p * p + p * p * p * p) / 4.0;
    case NoiseFamily::kPhaseDamping: return two_pair_dephasing(p);
    case NoiseFamily::kCollectiveDephasing: return pow4(std::cos(p));
    case NoiseFamily::kCollectiveRotation: return pow4(pow2(std::cos(p)));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown noise family");
}

}  // namespace

double fidelity(const PureState& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim())
    throw Error(ErrorCode::kDimensionMismatch, "fidelity: state and density matrix differ in qubit count");
  Complex f = 0.0;
  for (std::size_t r = 0; r < psi.dim(); ++r) {
    const Complex bra = std::conj(psi[r]);
    if (bra == Complex{}) continue;
    for (std::size_t c = 0; c < psi.dim(); ++c) f += bra * rho(r, c) * psi[c];
  }
  if (std::abs(f.imag()) >= kTolerance)
    throw Error(ErrorCode::kNumerical,
                "fidelity has imaginary part " + std::to_string(f.imag()));
  return f.real();
}

double conventional_fidelity(const PureState& psi, const DensityMatrix& rho) {
  return std::sqrt(std::max(0.0, fidelity(psi, rho)));
}

double simulate_fidelity(const DecoyScheme& scheme, const NoiseModel& noise) {
  if (std::holds_alternative<BB84Average>(scheme))
    throw Error(ErrorCode::kInvalidArgument,
                "BB84 average has no single state; use bb84_average_fidelity");
  const PureState psi = make_decoy_state(scheme);
  const DensityMatrix out = apply_noise(DensityMatrix::from_pure(psi), noise);
  return fidelity(psi, out);
}

double bb84_average_fidelity(const NoiseModel& noise) {
  double sum = 0.0;
  int count = 0;
  BB84Product block{};
  for (auto a : kAllSingleLabels)
    for (auto b : kAllSingleLabels)
      for (auto c : kAllSingleLabels)
        for (auto d : kAllSingleLabels) {
          block.labels = {a, b, c, d};
          sum += simulate_fidelity(block, noise);
          ++count;
        }
  return sum / count;
}

double scheme_fidelity(const DecoyScheme& scheme, const NoiseModel& noise) {
  if (std::holds_alternative<BB84Average>(scheme)) return bb84_average_fidelity(noise);
  return simulate_fidelity(scheme, noise);
}

bool has_closed_form(const DecoyScheme& scheme) noexcept {
  return std::holds_alternative<BB84Average>(scheme) || std::holds_alternative<GVBell>(scheme) ||
         std::holds_alternative<Cluster>(scheme);
}

double closed_form(const DecoyScheme& scheme, const NoiseModel& noise) {
  if (std::holds_alternative<BB84Average>(scheme)) return closed_form_bb84(noise);
  if (const auto* gv = std::get_if<GVBell>(&scheme)) return closed_form_bell(gv->label, noise);
  if (std::holds_alternative<Cluster>(scheme)) return closed_form_cluster(noise);
  throw Error(ErrorCode::kNoClosedForm,
              "no closed form in the reference table for scheme '" + scheme_name(scheme) + "'");
}

std::vector<std::pair<DecoyScheme, NoiseFamily>> table_cells() {
  const std::vector<DecoyScheme> schemes = {
      BB84Average{},
      GVBell{BellLabel::kPsiPlus},
      GVBell{BellLabel::kPsiMinus},
      GVBell{BellLabel::kPhiPlus},
      GVBell{BellLabel::kPhiMinus},
      Cluster{},
  };
  const NoiseFamily families[] = {NoiseFamily::kAmplitudeDamping, NoiseFamily::kPhaseDamping,
                                  NoiseFamily::kCollectiveDephasing,
                                  NoiseFamily::kCollectiveRotation};
  std::vector<std::pair<DecoyScheme, NoiseFamily>> cells;
  for (const auto& s : schemes)
    for (auto f : families) cells.emplace_back(s, f);
  return cells;
}

std::pair<double, double> default_range(NoiseFamily family) {
  switch (family) {
    case NoiseFamily::kAmplitudeDamping:
    case NoiseFamily::kPhaseDamping: return {0.0, 1.0};
    case NoiseFamily::kCollectiveDephasing:
    case NoiseFamily::kCollectiveRotation: return {0.0, 2.0 * std::numbers::pi};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown noise family");
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2) throw Error(ErrorCode::kInvalidArgument, "grid must be >= 2");
  if (!(lo < hi)) throw Error(ErrorCode::kInvalidArgument, "grid start must be below grid end");
  std::vector<double> grid(points);
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo + step * i;
  grid.back() = hi;
  return grid;
}

FidelityReport evaluate_report(const DecoyScheme& scheme, NoiseFamily family,
                               std::vector<double> grid, double closed_form_offset) {
  FidelityReport report{scheme, family, std::move(grid), {}, std::nullopt, std::nullopt};
  report.simulated.reserve(report.grid.size());
  const bool tabulated = has_closed_form(scheme);
  std::vector<double> analytic;
  double worst = 0.0;
  for (double p : report.grid) {
    const NoiseModel noise = NoiseModel::make(family, p);
    const double sim = scheme_fidelity(scheme, noise);
    report.simulated.push_back(sim);
    if (tabulated) {
      const double cf = closed_form(scheme, noise) + closed_form_offset;
      analytic.push_back(cf);
      worst = std::max(worst, std::abs(sim - cf));
    }
  }
  if (tabulated) {
    report.closed_form = std::move(analytic);
    report.max_abs_deviation = worst;
  }
  return report;
}

std::vector<FidelityReport> verify_table(int grid_size, const VerifyOptions& options) {
  if (grid_size < 2) throw Error(ErrorCode::kInvalidArgument, "grid must be >= 2");
  std::vector<FidelityReport> reports;
  for (const auto& [scheme, family] : table_cells()) {
    const auto [lo, hi] = default_range(family);
    reports.push_back(
        evaluate_report(scheme, family, uniform_grid(lo, hi, grid_size), options.closed_form_offset));
  }
  return reports;
}

}  // namespace decoyq
