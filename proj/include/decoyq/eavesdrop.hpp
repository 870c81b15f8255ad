#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>

#include "decoyq/states.hpp"

namespace decoyq {

struct ExactEnumeration {};
struct MonteCarlo {
  std::uint64_t trials;
  std::uint64_t seed;
};
using AttackMethod = std::variant<ExactEnumeration, MonteCarlo>;

struct AttackOutcome {
  double detection_probability = 0.0;
  // Outcome label -> probability (exact) or relative frequency (Monte Carlo).
  std::map<std::string, double> outcome_distribution;
  // Detection probability conditioned on each of the eavesdropper's outcomes.
  std::map<std::string, double> conditional_detection;
  AttackMethod method;
};

// BB84 decoys: the sender picks one of |0>,|1>,|+>,|-> uniformly, the
// eavesdropper measures in a uniformly chosen basis and resends her result,
// and the receiver measures in the sender's basis. Detection is the error
// rate on those sifted positions. With eve_present = false the channel is the
// identity.
AttackOutcome intercept_resend_bb84(const AttackMethod& method = ExactEnumeration{},
                                    bool eve_present = true);

// 1-based qubit positions within the 4-qubit block.
struct QubitPair {
  int first;
  int second;
};

// Two copies of `bell` on qubits (1,2) and (3,4). The eavesdropper performs a
// Bell measurement on `eve_pair`; the receiver then Bell-measures (1,2) and
// (3,4). Detection means the receiver's outcome pair is not (bell, bell).
// outcome_distribution is keyed "<label12>/<label34>" over all 16 pairs;
// conditional_detection is keyed by the eavesdropper's outcome label.
AttackOutcome wrong_pair_bell_attack(BellLabel bell, QubitPair eve_pair,
                                     const AttackMethod& method = ExactEnumeration{});

}  // namespace decoyq
