#pragma once

#include <vector>

#include "decoyq/channels.hpp"
#include "decoyq/fidelity.hpp"
#include "decoyq/states.hpp"

namespace decoyq {

inline constexpr double kTieTolerance = 1e-9;
inline constexpr double kCrossoverTolerance = 1e-9;

struct SweepSpec {
  std::vector<DecoyScheme> schemes;
  NoiseFamily family;
  double start;
  double end;
  int points;
};

// One report per scheme, in input order.
std::vector<FidelityReport> sweep(const SweepSpec& spec);

// Bisection root of F_a(p) - F_b(p) on [lo, hi], |bracket| <= 1e-9 at exit.
// Throws kNoCrossover when the difference does not change sign.
double find_crossover(const DecoyScheme& a, const DecoyScheme& b, NoiseFamily family,
                      double lo, double hi);

// True iff |F - 1| < tol at `samples` uniform points of the family's default
// range. samples >= 8.
bool is_decoherence_free(const DecoyScheme& scheme, NoiseFamily family, int samples, double tol);

struct RankedScheme {
  DecoyScheme scheme;
  double fidelity;
};

struct Ranking {
  NoiseModel noise;
  std::vector<RankedScheme> ordered;  // non-increasing fidelity
  // Indices into `ordered`; each group spans fidelities within kTieTolerance
  // of its first member.
  std::vector<std::vector<std::size_t>> ties;
};

// BB84 average, the four Bell pairs and the cluster state.
std::vector<DecoyScheme> default_candidates();

// Uses simulated fidelities, so schemes without a table cell can take part.
Ranking recommend(const NoiseModel& noise,
                  const std::vector<DecoyScheme>& candidates = default_candidates());

}  // namespace decoyq
