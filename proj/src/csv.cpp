#include "decoyq/csv.hpp"

#include <cmath>
#include <cstdio>

namespace decoyq {

std::string format_double(double x) {
  // Normalize -0 so golden files do not depend on the sign of a zero.
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_fidelity_csv(std::ostream& os, std::span<const FidelityReport> reports) {
  os << kFidelityCsvHeader << '\n';
  for (const auto& r : reports) {
    const std::string scheme = scheme_name(r.scheme);
    const auto noise = to_string(r.family);
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
      os << scheme << ',' << noise << ',' << format_double(r.grid[i]) << ','
         << format_double(r.simulated[i]) << ',';
      if (r.closed_form) {
        const double cf = (*r.closed_form)[i];
        os << format_double(cf) << ',' << format_double(std::abs(r.simulated[i] - cf));
      } else {
        os << ',';
      }
      os << '\n';
    }
  }
}

void write_verify_summary(std::ostream& os, std::span<const FidelityReport> reports) {
  os << "scheme,noise,points,max_abs_deviation\n";
  for (const auto& r : reports) {
    os << scheme_name(r.scheme) << ',' << to_string(r.family) << ',' << r.grid.size() << ',';
    if (r.max_abs_deviation) os << format_double(*r.max_abs_deviation);
    os << '\n';
  }
}

void write_ranking_csv(std::ostream& os, const Ranking& ranking) {
  os << "rank,scheme,noise,parameter,fidelity,tie_group\n";
  const auto noise = to_string(ranking.noise.family());
  const std::string param = format_double(ranking.noise.parameter());
  for (std::size_t g = 0; g < ranking.ties.size(); ++g)
    for (std::size_t idx : ranking.ties[g]) {
      const auto& entry = ranking.ordered[idx];
      os << idx + 1 << ',' << scheme_name(entry.scheme) << ',' << noise << ',' << param << ','
         << format_double(entry.fidelity) << ',' << g + 1 << '\n';
    }
}

void write_attack_csv(std::ostream& os, const AttackOutcome& outcome) {
  os << "quantity,label,value\n";
  if (const auto* mc = std::get_if<MonteCarlo>(&outcome.method))
    os << "method,monte-carlo," << mc->trials << '\n' << "seed,," << mc->seed << '\n';
  else
    os << "method,exact,\n";
  os << "detection_probability,," << format_double(outcome.detection_probability) << '\n';
  for (const auto& [label, p] : outcome.outcome_distribution)
    os << "outcome," << label << ',' << format_double(p) << '\n';
  for (const auto& [label, p] : outcome.conditional_detection)
    os << "conditional_detection," << label << ',' << format_double(p) << '\n';
}

}  // namespace decoyq
