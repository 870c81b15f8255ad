#include "decoyq/channels.hpp"

#include <cmath>
#include <string>

#include "decoyq/error.hpp"

namespace decoyq {

namespace {

void require_rate(double eta, const char* channel) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw Error(ErrorCode::kInvalidArgument,
                std::string(channel) + " decoherence rate must lie in [0, 1], got " +
                    std::to_string(eta));
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x))
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be finite");
}

ComplexMatrix kron_power(const ComplexMatrix& u, int n) {
  ComplexMatrix out = u;
  for (int i = 1; i < n; ++i) out = tensor_product(out, u);
  return out;
}

}  // namespace

NoiseModel NoiseModel::amplitude_damping(double eta) {
  require_rate(eta, "AD");
  return {NoiseFamily::kAmplitudeDamping, eta};
}

NoiseModel NoiseModel::phase_damping(double eta) {
  require_rate(eta, "PD");
  return {NoiseFamily::kPhaseDamping, eta};
}

NoiseModel NoiseModel::collective_dephasing(double phi) {
  require_finite(phi, "CD phase");
  return {NoiseFamily::kCollectiveDephasing, phi};
}

NoiseModel NoiseModel::collective_rotation(double theta) {
  require_finite(theta, "CR angle");
  return {NoiseFamily::kCollectiveRotation, theta};
}

NoiseModel NoiseModel::make(NoiseFamily family, double parameter) {
  switch (family) {
    case NoiseFamily::kAmplitudeDamping: return amplitude_damping(parameter);
    case NoiseFamily::kPhaseDamping: return phase_damping(parameter);
    case NoiseFamily::kCollectiveDephasing: return collective_dephasing(parameter);
    case NoiseFamily::kCollectiveRotation: return collective_rotation(parameter);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown noise family");
}

NoiseFamily parse_noise_family(std::string_view text) {
  if (text == "ad") return NoiseFamily::kAmplitudeDamping;
  if (text == "pd") return NoiseFamily::kPhaseDamping;
  if (text == "cd") return NoiseFamily::kCollectiveDephasing;
  if (text == "cr") return NoiseFamily::kCollectiveRotation;
  throw Error(ErrorCode::kInvalidArgument, "unknown noise family '" + std::string(text) + "'");
}

std::string_view to_string(NoiseFamily family) {
  switch (family) {
    case NoiseFamily::kAmplitudeDamping: return "ad";
    case NoiseFamily::kPhaseDamping: return "pd";
    case NoiseFamily::kCollectiveDephasing: return "cd";
    case NoiseFamily::kCollectiveRotation: return "cr";
  }
  return "?";
}

double KrausChannel::completeness_error() const {
  ComplexMatrix sum(2, 2);
  for (const auto& e : operators) sum = sum + e.adjoint() * e;
  return max_abs_diff(sum, ComplexMatrix::identity(2));
}

KrausChannel kraus_ad(double eta) {
  require_rate(eta, "AD");
  return {"ad",
          {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - eta)}},
           ComplexMatrix{{0.0, std::sqrt(eta)}, {0.0, 0.0}}}};
}

KrausChannel kraus_pd(double eta) {
  require_rate(eta, "PD");
  const double keep = std::sqrt(1.0 - eta);
  const double hit = std::sqrt(eta);
  return {"pd",
          {ComplexMatrix{{keep, 0.0}, {0.0, keep}},
           ComplexMatrix{{hit, 0.0}, {0.0, 0.0}},
           ComplexMatrix{{0.0, 0.0}, {0.0, hit}}}};
}

ComplexMatrix unitary_cd(double phi) {
  return ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, phi)}};
}

ComplexMatrix unitary_cr(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return ComplexMatrix{{c, -s}, {s, c}};
}

DensityMatrix apply_kraus_channel(const DensityMatrix& rho, const KrausChannel& channel) {
  const int n = rho.n_qubits();
  const std::size_t m = channel.operators.size();
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "Kraus channel has no operators");
  for (const auto& e : channel.operators)
    if (e.rows() != 2 || e.cols() != 2)
      throw Error(ErrorCode::kDimensionMismatch, "Kraus operators must be 2x2");

  // Odometer over the multi-index (i_1, ..., i_n), i_1 most significant.
  std::vector<std::size_t> index(n, 0);
  ComplexMatrix sum(rho.dim(), rho.dim());
  while (true) {
    ComplexMatrix term = channel.operators[index[0]];
    for (int q = 1; q < n; ++q) term = tensor_product(term, channel.operators[index[q]]);
    sum = sum + conjugate_apply(term, rho.matrix());

    int q = n - 1;
    while (q >= 0 && ++index[q] == m) index[q--] = 0;
    if (q < 0) break;
  }
  return DensityMatrix(std::move(sum));
}

DensityMatrix apply_collective(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2)
    throw Error(ErrorCode::kDimensionMismatch, "collective noise acts through a 2x2 unitary");
  if (!u.is_unitary(kTolerance))
    throw Error(ErrorCode::kInvalidArgument, "collective noise operator is not unitary");
  return conjugate_apply(kron_power(u, rho.n_qubits()), rho);
}

DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseModel& noise) {
  switch (noise.family()) {
    case NoiseFamily::kAmplitudeDamping: return apply_kraus_channel(rho, kraus_ad(noise.parameter()));
    case NoiseFamily::kPhaseDamping: return apply_kraus_channel(rho, kraus_pd(noise.parameter()));
    case NoiseFamily::kCollectiveDephasing: return apply_collective(rho, unitary_cd(noise.parameter()));
    case NoiseFamily::kCollectiveRotation: return apply_collective(rho, unitary_cr(noise.parameter()));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown noise family");
}

}  // namespace decoyq
