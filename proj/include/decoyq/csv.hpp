#pragma once

#include <ostream>
#include <span>
#include <string>

#include "decoyq/analysis.hpp"
#include "decoyq/eavesdrop.hpp"
#include "decoyq/fidelity.hpp"

namespace decoyq {

inline constexpr const char* kFidelityCsvHeader =
    "scheme,noise,parameter,fidelity_sim,fidelity_closed,abs_err";

// printf("%.17g"): 17 significant digits, round-trips every double.
std::string format_double(double x);

// One row per (report, grid point). fidelity_closed and abs_err are empty for
// schemes without a closed form.
void write_fidelity_csv(std::ostream& os, std::span<const FidelityReport> reports);

// scheme,noise,points,max_abs_deviation
void write_verify_summary(std::ostream& os, std::span<const FidelityReport> reports);

// rank,scheme,noise,parameter,fidelity,tie_group
void write_ranking_csv(std::ostream& os, const Ranking& ranking);

// quantity,label,value
void write_attack_csv(std::ostream& os, const AttackOutcome& outcome);

}  // namespace decoyq
