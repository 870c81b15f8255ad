#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "decoyq/channels.hpp"
#include "decoyq/linalg.hpp"
#include "decoyq/states.hpp"

namespace decoyq {

// F = <psi|rho|psi>. This is the square of the conventional (Uhlmann)
// fidelity when the reference is pure. Throws if the imaginary part of the
// expectation exceeds 1e-12.
double fidelity(const PureState& psi, const DensityMatrix& rho);

// Tr sqrt(sigma^1/2 rho sigma^1/2) for sigma = |psi><psi|, i.e. sqrt(F).
double conventional_fidelity(const PureState& psi, const DensityMatrix& rho);

// Prepare the scheme's block, send it through the channel, compare with the
// prepared state. Throws for BB84Average.
double simulate_fidelity(const DecoyScheme& scheme, const NoiseModel& noise);

// Mean of simulate_fidelity over all 4^4 BB84 product blocks.
double bb84_average_fidelity(const NoiseModel& noise);

// simulate_fidelity, routing BB84Average through the 256-block enumeration.
double scheme_fidelity(const DecoyScheme& scheme, const NoiseModel& noise);

// Analytic fidelity for one cell of the reference table.
// Throws kNoClosedForm for WState and for individual BB84 product blocks.
double closed_form(const DecoyScheme& scheme, const NoiseModel& noise);
bool has_closed_form(const DecoyScheme& scheme) noexcept;

struct FidelityReport {
  DecoyScheme scheme;
  NoiseFamily family;
  std::vector<double> grid;
  std::vector<double> simulated;
  // Empty for schemes without a table cell.
  std::optional<std::vector<double>> closed_form;
  std::optional<double> max_abs_deviation;
};

// Schemes x families covered by the reference table (24 cells).
std::vector<std::pair<DecoyScheme, NoiseFamily>> table_cells();

// [0, 1] for AD/PD, [0, 2 pi] for CD/CR.
std::pair<double, double> default_range(NoiseFamily family);

// points >= 2, endpoints included, last point exactly hi.
std::vector<double> uniform_grid(double lo, double hi, int points);

// Evaluates scheme fidelity (and the closed form when one exists) over a grid.
// closed_form_offset shifts every closed-form value; it exists so a
// regression harness can prove that a perturbed table is caught.
FidelityReport evaluate_report(const DecoyScheme& scheme, NoiseFamily family,
                               std::vector<double> grid, double closed_form_offset = 0.0);

struct VerifyOptions {
  double closed_form_offset = 0.0;
};

// One report per table cell on a uniform grid over the family's default range.
std::vector<FidelityReport> verify_table(int grid_size, const VerifyOptions& options = {});

}  // namespace decoyq
