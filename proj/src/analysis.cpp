#include "decoyq/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "decoyq/error.hpp"

namespace decoyq {

std::vector<FidelityReport> sweep(const SweepSpec& spec) {
  if (spec.schemes.empty()) throw Error(ErrorCode::kInvalidArgument, "sweep needs at least one scheme");
  const auto grid = uniform_grid(spec.start, spec.end, spec.points);
  std::vector<FidelityReport> reports;
  reports.reserve(spec.schemes.size());
  for (const auto& scheme : spec.schemes) reports.push_back(evaluate_report(scheme, spec.family, grid));
  return reports;
}

double find_crossover(const DecoyScheme& a, const DecoyScheme& b, NoiseFamily family,
                      double lo, double hi) {
  if (!(lo < hi)) throw Error(ErrorCode::kInvalidArgument, "crossover interval must satisfy lo < hi");
  auto gap = [&](double p) {
    const NoiseModel noise = NoiseModel::make(family, p);
    return scheme_fidelity(a, noise) - scheme_fidelity(b, noise);
  };

  double g_lo = gap(lo);
  const double g_hi = gap(hi);
  if (g_lo == 0.0 && g_hi != 0.0) return lo;
  if (g_hi == 0.0 && g_lo != 0.0) return hi;
  if (!(g_lo * g_hi < 0.0)) throw Error(ErrorCode::kNoCrossover, "no crossover in interval");

  while (hi - lo > kCrossoverTolerance) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = gap(mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool is_decoherence_free(const DecoyScheme& scheme, NoiseFamily family, int samples, double tol) {
  if (samples < 8) throw Error(ErrorCode::kInvalidArgument, "decoherence-free check needs >= 8 samples");
  const auto [lo, hi] = default_range(family);
  for (double p : uniform_grid(lo, hi, samples))
    if (!(std::abs(scheme_fidelity(scheme, NoiseModel::make(family, p)) - 1.0) < tol)) return false;
  return true;
}

std::vector<DecoyScheme> default_candidates() {
  return {BB84Average{},           GVBell{BellLabel::kPsiPlus}, GVBell{BellLabel::kPsiMinus},
          GVBell{BellLabel::kPhiPlus}, GVBell{BellLabel::kPhiMinus}, Cluster{}};
}

Ranking recommend(const NoiseModel& noise, const std::vector<DecoyScheme>& candidates) {
  Ranking ranking{noise, {}, {}};
  ranking.ordered.reserve(candidates.size());
  for (const auto& s : candidates) ranking.ordered.push_back({s, scheme_fidelity(s, noise)});

  // Name as secondary key makes the order independent of the input order.
  std::sort(ranking.ordered.begin(), ranking.ordered.end(),
            [](const RankedScheme& x, const RankedScheme& y) {
              if (x.fidelity != y.fidelity) return x.fidelity > y.fidelity;
              return scheme_name(x.scheme) < scheme_name(y.scheme);
            });

  for (std::size_t i = 0; i < ranking.ordered.size(); ++i) {
    if (!ranking.ties.empty()) {
      const double head = ranking.ordered[ranking.ties.back().front()].fidelity;
      if (head - ranking.ordered[i].fidelity < kTieTolerance) {
        ranking.ties.back().push_back(i);
        continue;
      }
    }
    ranking.ties.push_back({i});
  }
  return ranking;
}

}  // namespace decoyq
