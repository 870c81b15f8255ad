#include "decoyq/states.hpp"

#include <cmath>
#include <string>

#include "decoyq/error.hpp"

namespace decoyq {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

PureState make_single(SingleLabel label) {
  switch (label) {
    case SingleLabel::kZero: return PureState({1.0, 0.0});
    case SingleLabel::kOne: return PureState({0.0, 1.0});
    case SingleLabel::kPlus: return PureState({kInvSqrt2, kInvSqrt2});
    case SingleLabel::kMinus: return PureState({kInvSqrt2, -kInvSqrt2});
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown single-qubit label");
}

PureState make_bell(BellLabel label) {
  switch (label) {
    case BellLabel::kPsiPlus: return PureState({kInvSqrt2, 0.0, 0.0, kInvSqrt2});
    case BellLabel::kPsiMinus: return PureState({kInvSqrt2, 0.0, 0.0, -kInvSqrt2});
    case BellLabel::kPhiPlus: return PureState({0.0, kInvSqrt2, kInvSqrt2, 0.0});
    case BellLabel::kPhiMinus: return PureState({0.0, kInvSqrt2, -kInvSqrt2, 0.0});
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown Bell label");
}

PureState make_cluster() {
  std::vector<Complex> amp(16);
  amp[0b0000] = 0.5;
  amp[0b0011] = 0.5;
  amp[0b1100] = 0.5;
  amp[0b1111] = -0.5;
  return PureState(std::move(amp));
}

PureState make_w(int n) {
  if (n != 3)
    throw Error(ErrorCode::kInvalidArgument,
                "W state is only supported for 3 qubits, got " + std::to_string(n));
  const double a = 1.0 / std::sqrt(3.0);
  std::vector<Complex> amp(8);
  amp[0b001] = a;
  amp[0b010] = a;
  amp[0b100] = a;
  return PureState(std::move(amp));
}

PureState make_decoy_state(const DecoyScheme& scheme) {
  return std::visit(
      Overloaded{
          [](const BB84Product& p) {
            PureState s = make_single(p.labels[0]);
            for (std::size_t i = 1; i < p.labels.size(); ++i)
              s = tensor_product(s, make_single(p.labels[i]));
            return s;
          },
          [](const BB84Average&) -> PureState {
            throw Error(ErrorCode::kInvalidArgument,
                        "BB84 average has no single state; use bb84_average_fidelity");
          },
          [](const GVBell& g) { return tensor_product(make_bell(g.label), make_bell(g.label)); },
          [](const Cluster&) { return make_cluster(); },
          [](const WState&) { return make_w(3); },
      },
      scheme);
}

SingleLabel parse_single_label(std::string_view text) {
  if (text == "0") return SingleLabel::kZero;
  if (text == "1") return SingleLabel::kOne;
  if (text == "+") return SingleLabel::kPlus;
  if (text == "-") return SingleLabel::kMinus;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown single-qubit label '" + std::string(text) + "'");
}

BellLabel parse_bell_label(std::string_view text) {
  if (text == "psi+") return BellLabel::kPsiPlus;
  if (text == "psi-") return BellLabel::kPsiMinus;
  if (text == "phi+") return BellLabel::kPhiPlus;
  if (text == "phi-") return BellLabel::kPhiMinus;
  throw Error(ErrorCode::kInvalidArgument, "unknown Bell label '" + std::string(text) + "'");
}

std::string_view to_string(SingleLabel label) {
  switch (label) {
    case SingleLabel::kZero: return "0";
    case SingleLabel::kOne: return "1";
    case SingleLabel::kPlus: return "+";
    case SingleLabel::kMinus: return "-";
  }
  return "?";
}

std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::kPsiPlus: return "psi+";
    case BellLabel::kPsiMinus: return "psi-";
    case BellLabel::kPhiPlus: return "phi+";
    case BellLabel::kPhiMinus: return "phi-";
  }
  return "?";
}

DecoyScheme parse_scheme(std::string_view text) {
  if (text == "bb84") return BB84Average{};
  if (text == "cluster") return Cluster{};
  if (text == "w") return WState{};
  if (text.starts_with("bb84:")) {
    const auto labels = text.substr(5);
    if (labels.size() != 4)
      throw Error(ErrorCode::kInvalidArgument,
                  "BB84 product block needs exactly 4 labels, got '" + std::string(labels) + "'");
    BB84Product p{};
    for (std::size_t i = 0; i < 4; ++i) p.labels[i] = parse_single_label(labels.substr(i, 1));
    return p;
  }
  if (text.starts_with("psi") || text.starts_with("phi")) return GVBell{parse_bell_label(text)};
  throw Error(ErrorCode::kInvalidArgument, "unknown scheme '" + std::string(text) + "'");
}

std::string scheme_name(const DecoyScheme& scheme) {
  return std::visit(Overloaded{
                        [](const BB84Product& p) {
                          std::string s = "bb84:";
                          for (auto l : p.labels) s += to_string(l);
                          return s;
                        },
                        [](const BB84Average&) { return std::string("bb84"); },
                        [](const GVBell& g) { return std::string(to_string(g.label)); },
                        [](const Cluster&) { return std::string("cluster"); },
                        [](const WState&) { return std::string("w"); },
                    },
                    scheme);
}

}  // namespace decoyq
