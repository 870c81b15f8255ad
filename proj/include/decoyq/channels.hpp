#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "decoyq/linalg.hpp"

namespace decoyq {

enum class NoiseFamily { kAmplitudeDamping, kPhaseDamping, kCollectiveDephasing, kCollectiveRotation };

// Noise family plus its single parameter: the decoherence rate eta in [0, 1]
// for AD/PD, an angle in radians (any real) for CD/CR.
class NoiseModel {
 public:
  static NoiseModel amplitude_damping(double eta);
  static NoiseModel phase_damping(double eta);
  static NoiseModel collective_dephasing(double phi);
  static NoiseModel collective_rotation(double theta);
  static NoiseModel make(NoiseFamily family, double parameter);

  NoiseFamily family() const noexcept { return family_; }
  double parameter() const noexcept { return parameter_; }
  bool is_collective() const noexcept {
    return family_ == NoiseFamily::kCollectiveDephasing ||
           family_ == NoiseFamily::kCollectiveRotation;
  }

 private:
  NoiseModel(NoiseFamily family, double parameter) : family_(family), parameter_(parameter) {}

  NoiseFamily family_;
  double parameter_;
};

// Text forms: "ad", "pd", "cd", "cr".
NoiseFamily parse_noise_family(std::string_view text);
std::string_view to_string(NoiseFamily family);

// Single-qubit Kraus operators applied identically to every qubit.
struct KrausChannel {
  std::string name;
  std::vector<ComplexMatrix> operators;

  // max-abs deviation of sum_i E_i^dagger E_i from I_2
  double completeness_error() const;
};

// E0 = diag(1, sqrt(1-eta)), E1 = sqrt(eta) |0><1|
KrausChannel kraus_ad(double eta);
// E0 = sqrt(1-eta) I, E1 = sqrt(eta) |0><0|, E2 = sqrt(eta) |1><1|
KrausChannel kraus_pd(double eta);
// diag(1, e^{i phi})
ComplexMatrix unitary_cd(double phi);
// [[cos, -sin], [sin, cos]]
ComplexMatrix unitary_cr(double theta);

// Independent identical channel on each qubit, written as the explicit sum
// over all m^n operator tensors E_{i1} x ... x E_{in}.
DensityMatrix apply_kraus_channel(const DensityMatrix& rho, const KrausChannel& channel);

// u^{x n} rho u^{dagger x n}; throws unless u is a 2x2 unitary.
DensityMatrix apply_collective(const DensityMatrix& rho, const ComplexMatrix& u);

// Dispatches on the noise family.
DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseModel& noise);

}  // namespace decoyq
