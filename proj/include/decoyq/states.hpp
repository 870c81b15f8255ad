#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include "decoyq/linalg.hpp"

namespace decoyq {

enum class SingleLabel { kZero, kOne, kPlus, kMinus };

// WARNING: Bell labels follow the convention used by the fidelity table, which
// is swapped relative to the usual textbook Phi/Psi naming:
//   psi+- = (|00> +- |11>)/sqrt(2)   (parallel spins)
//   phi+- = (|01> +- |10>)/sqrt(2)   (anti-parallel spins)
enum class BellLabel { kPsiPlus, kPsiMinus, kPhiPlus, kPhiMinus };

inline constexpr std::array<SingleLabel, 4> kAllSingleLabels = {
    SingleLabel::kZero, SingleLabel::kOne, SingleLabel::kPlus, SingleLabel::kMinus};
inline constexpr std::array<BellLabel, 4> kAllBellLabels = {
    BellLabel::kPsiPlus, BellLabel::kPsiMinus, BellLabel::kPhiPlus, BellLabel::kPhiMinus};

// Decoy verification blocks. Every block except the W state spans four qubits
// so schemes are compared on equal qubit count.
struct BB84Product {
  std::array<SingleLabel, 4> labels;
  friend bool operator==(const BB84Product&, const BB84Product&) = default;
};
// Uniform average over all 256 BB84Product blocks; has no single state.
struct BB84Average {
  friend bool operator==(const BB84Average&, const BB84Average&) = default;
};
// Two copies of one Bell pair on qubits (0,1) and (2,3).
struct GVBell {
  BellLabel label;
  friend bool operator==(const GVBell&, const GVBell&) = default;
};
struct Cluster {
  friend bool operator==(const Cluster&, const Cluster&) = default;
};
struct WState {
  friend bool operator==(const WState&, const WState&) = default;
};

using DecoyScheme = std::variant<BB84Product, BB84Average, GVBell, Cluster, WState>;

PureState make_single(SingleLabel label);
PureState make_bell(BellLabel label);
// (|0000> + |0011> + |1100> - |1111>) / 2
PureState make_cluster();
// (|001> + |010> + |100>) / sqrt(3). Only n = 3 is supported.
PureState make_w(int n = 3);
// Throws for BB84Average; use bb84_average_fidelity instead.
PureState make_decoy_state(const DecoyScheme& scheme);

// Text forms: "0" "1" "+" "-"; "psi+" "psi-" "phi+" "phi-".
SingleLabel parse_single_label(std::string_view text);
BellLabel parse_bell_label(std::string_view text);
std::string_view to_string(SingleLabel label);
std::string_view to_string(BellLabel label);

// Scheme names: "bb84" (average), "bb84:01+-" (one product block), "psi+",
// "psi-", "phi+", "phi-", "cluster", "w".
DecoyScheme parse_scheme(std::string_view text);
std::string scheme_name(const DecoyScheme& scheme);

}  // namespace decoyq
