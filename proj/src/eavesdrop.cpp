#include "decoyq/eavesdrop.hpp"

#include <array>
#include <random>
#include <vector>

#include "decoyq/error.hpp"

namespace decoyq {

namespace {

using Amplitudes = std::vector<Complex>;

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Index into `weights` drawn with the given (unnormalized) weights.
std::size_t sample_index(std::mt19937_64& rng, const double* weights, std::size_t count) {
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) total += weights[i];
  double u = unit_uniform(rng) * total;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  return count - 1;
}

// ---- BB84 intercept-resend --------------------------------------------------

// Unnormalized integer kets: |0> = (1,0), |1> = (0,1), |+-> = (1,+-1). Born
// probabilities |<a|b>|^2 / (<a|a><b|b>) are then exact dyadic rationals.
struct Ket {
  double a0;
  double a1;
};

Ket ket_of(SingleLabel l) {
  switch (l) {
    case SingleLabel::kZero: return {1.0, 0.0};
    case SingleLabel::kOne: return {0.0, 1.0};
    case SingleLabel::kPlus: return {1.0, 1.0};
    case SingleLabel::kMinus: return {1.0, -1.0};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown single-qubit label");
}

double born(SingleLabel outcome, SingleLabel state) {
  const Ket a = ket_of(outcome);
  const Ket b = ket_of(state);
  const double overlap = a.a0 * b.a0 + a.a1 * b.a1;
  return overlap * overlap / ((a.a0 * a.a0 + a.a1 * a.a1) * (b.a0 * b.a0 + b.a1 * b.a1));
}

struct Basis {
  SingleLabel states[2];
};
constexpr Basis kZ{{SingleLabel::kZero, SingleLabel::kOne}};
constexpr Basis kX{{SingleLabel::kPlus, SingleLabel::kMinus}};

const Basis& basis_of(SingleLabel l) {
  return (l == SingleLabel::kZero || l == SingleLabel::kOne) ? kZ : kX;
}

// Probability that the receiver, measuring `received` in the sender's basis,
// reports something other than `sent`.
double receiver_error(SingleLabel sent, SingleLabel received) { return 1.0 - born(sent, received); }

AttackOutcome finish_bb84(double p_error, AttackMethod method) {
  AttackOutcome out;
  out.detection_probability = p_error;
  out.outcome_distribution = {{"error", p_error}, {"no_error", 1.0 - p_error}};
  out.method = std::move(method);
  return out;
}

// ---- Bell measurements on a 4-qubit register --------------------------------

constexpr int kBlockQubits = 4;

int bit_of(std::size_t index, int qubit) { return static_cast<int>((index >> (kBlockQubits - 1 - qubit)) & 1u); }

std::size_t with_bits(std::size_t index, int qa, int va, int qb, int vb) {
  const std::size_t ma = std::size_t{1} << (kBlockQubits - 1 - qa);
  const std::size_t mb = std::size_t{1} << (kBlockQubits - 1 - qb);
  index = va ? (index | ma) : (index & ~ma);
  return vb ? (index | mb) : (index & ~mb);
}

// (|e><e| on qubits qa,qb) x identity on the rest; 0-based qubits.
Amplitudes project_pair(const Amplitudes& v, int qa, int qb, const PureState& e) {
  Amplitudes out(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) {
    Complex overlap = 0.0;
    for (int ya = 0; ya < 2; ++ya)
      for (int yb = 0; yb < 2; ++yb)
        overlap += std::conj(e[2 * ya + yb]) * v[with_bits(x, qa, ya, qb, yb)];
    out[x] = e[2 * bit_of(x, qa) + bit_of(x, qb)] * overlap;
  }
  return out;
}

Amplitudes amplitudes_of(const PureState& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

double norm_squared(const Amplitudes& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

// Probability tree of the attack: Eve's outcome, then the receiver's (1,2)
// outcome, then the receiver's (3,4) outcome. Entries are joint probabilities.
struct BellTree {
  std::array<double, 4> eve{};
  std::array<std::array<double, 4>, 4> first{};
  std::array<std::array<std::array<double, 4>, 4>, 4> joint{};
};

BellTree build_tree(BellLabel bell, QubitPair pair) {
  const PureState b = make_bell(bell);
  const Amplitudes start = amplitudes_of(tensor_product(b, b));
  std::array<PureState, 4> basis = {make_bell(kAllBellLabels[0]), make_bell(kAllBellLabels[1]),
                                    make_bell(kAllBellLabels[2]), make_bell(kAllBellLabels[3])};
  BellTree tree;
  for (std::size_t e = 0; e < 4; ++e) {
    const Amplitudes after_eve = project_pair(start, pair.first - 1, pair.second - 1, basis[e]);
    tree.eve[e] = norm_squared(after_eve);
    for (std::size_t r1 = 0; r1 < 4; ++r1) {
      const Amplitudes after_r1 = project_pair(after_eve, 0, 1, basis[r1]);
      tree.first[e][r1] = norm_squared(after_r1);
      for (std::size_t r2 = 0; r2 < 4; ++r2)
        tree.joint[e][r1][r2] = norm_squared(project_pair(after_r1, 2, 3, basis[r2]));
    }
  }
  return tree;
}

std::string outcome_key(std::size_t r1, std::size_t r2) {
  return std::string(to_string(kAllBellLabels[r1])) + "/" + std::string(to_string(kAllBellLabels[r2]));
}

void require_trials(const MonteCarlo& mc) {
  if (mc.trials == 0) throw Error(ErrorCode::kInvalidArgument, "Monte Carlo needs at least one trial");
}

}  // namespace

AttackOutcome intercept_resend_bb84(const AttackMethod& method, bool eve_present) {
  if (const auto* mc = std::get_if<MonteCarlo>(&method)) {
    require_trials(*mc);
    std::mt19937_64 rng(mc->seed);
    std::uint64_t errors = 0;
    for (std::uint64_t t = 0; t < mc->trials; ++t) {
      const SingleLabel sent = kAllSingleLabels[rng() >> 62];
      SingleLabel in_flight = sent;
      if (eve_present) {
        const Basis& eve_basis = (rng() >> 63) ? kX : kZ;
        const double w[2] = {born(eve_basis.states[0], in_flight), born(eve_basis.states[1], in_flight)};
        in_flight = eve_basis.states[sample_index(rng, w, 2)];
      }
      const Basis& rx = basis_of(sent);
      const double w[2] = {born(rx.states[0], in_flight), born(rx.states[1], in_flight)};
      if (rx.states[sample_index(rng, w, 2)] != sent) ++errors;
    }
    return finish_bb84(static_cast<double>(errors) / static_cast<double>(mc->trials), method);
  }

  double p_error = 0.0;
  for (SingleLabel sent : kAllSingleLabels) {
    if (!eve_present) {
      p_error += 0.25 * receiver_error(sent, sent);
      continue;
    }
    for (const Basis* eve_basis : {&kZ, &kX})
      for (SingleLabel eve_result : eve_basis->states)
        p_error += 0.25 * 0.5 * born(eve_result, sent) * receiver_error(sent, eve_result);
  }
  return finish_bb84(p_error, method);
}

AttackOutcome wrong_pair_bell_attack(BellLabel bell, QubitPair eve_pair, const AttackMethod& method) {
  if (eve_pair.first < 1 || eve_pair.first > kBlockQubits || eve_pair.second < 1 ||
      eve_pair.second > kBlockQubits || eve_pair.first == eve_pair.second)
    throw Error(ErrorCode::kInvalidArgument,
                "eavesdropper pair must be two distinct qubits in 1..4, got (" +
                    std::to_string(eve_pair.first) + "," + std::to_string(eve_pair.second) + ")");
  const BellTree tree = build_tree(bell, eve_pair);
  const auto prepared = static_cast<std::size_t>(bell);

  AttackOutcome out;
  out.method = method;
  std::array<std::array<double, 4>, 4> joint{};
  std::array<double, 4> eve_mass{};
  std::array<double, 4> eve_undetected{};

  if (const auto* mc = std::get_if<MonteCarlo>(&method)) {
    require_trials(*mc);
    std::mt19937_64 rng(mc->seed);
    std::array<std::array<std::uint64_t, 4>, 4> counts{};
    std::array<std::uint64_t, 4> eve_counts{};
    std::array<std::uint64_t, 4> eve_clean{};
    for (std::uint64_t t = 0; t < mc->trials; ++t) {
      const std::size_t e = sample_index(rng, tree.eve.data(), 4);
      const std::size_t r1 = sample_index(rng, tree.first[e].data(), 4);
      const std::size_t r2 = sample_index(rng, tree.joint[e][r1].data(), 4);
      ++counts[r1][r2];
      ++eve_counts[e];
      if (r1 == prepared && r2 == prepared) ++eve_clean[e];
    }
    const auto n = static_cast<double>(mc->trials);
    for (std::size_t r1 = 0; r1 < 4; ++r1)
      for (std::size_t r2 = 0; r2 < 4; ++r2) joint[r1][r2] = counts[r1][r2] / n;
    for (std::size_t e = 0; e < 4; ++e) {
      eve_mass[e] = eve_counts[e] / n;
      eve_undetected[e] = eve_clean[e] / n;
    }
  } else {
    for (std::size_t e = 0; e < 4; ++e) {
      eve_mass[e] = tree.eve[e];
      for (std::size_t r1 = 0; r1 < 4; ++r1)
        for (std::size_t r2 = 0; r2 < 4; ++r2) joint[r1][r2] += tree.joint[e][r1][r2];
      eve_undetected[e] = tree.joint[e][prepared][prepared];
    }
  }

  for (std::size_t r1 = 0; r1 < 4; ++r1)
    for (std::size_t r2 = 0; r2 < 4; ++r2) out.outcome_distribution[outcome_key(r1, r2)] = joint[r1][r2];
  out.detection_probability = 1.0 - joint[prepared][prepared];
  for (std::size_t e = 0; e < 4; ++e)
    if (eve_mass[e] > 0.0)
      out.conditional_detection[std::string(to_string(kAllBellLabels[e]))] =
          1.0 - eve_undetected[e] / eve_mass[e];
  return out;
}

}  // namespace decoyq
