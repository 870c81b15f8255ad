#pragma once

// Dense complex kernel for registers of at most four qubits (dimension 16).
//
// Basis ordering: qubit 0 is the leftmost tensor factor, i.e. the most
// significant bit of the basis-state index. |q0 q1 q2 q3> has index
// q0*8 + q1*4 + q2*2 + q3.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace decoyq {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 4;
inline constexpr double kTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  // Row-major nested initializer: {{a, b}, {c, d}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix column(std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  // Max-abs entrywise test of U^dagger U = I.
  bool is_unitary(double tol = kTolerance) const;
  bool is_hermitian(double tol = kTolerance) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

// Largest |a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product, a's indices major.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Normalized amplitude vector of 1..4 qubits.
class PureState {
 public:
  // Throws unless amplitudes has length 2^n (1 <= n <= 4) and unit norm.
  explicit PureState(std::vector<Complex> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

// <a|b>
Complex inner_product(const PureState& a, const PureState& b);
PureState tensor_product(const PureState& a, const PureState& b);

// Hermitian, trace-1 operator on 1..4 qubits. Construction checks Hermiticity
// and trace; positivity is the caller's contract (channels preserve it).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);
  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Complex operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

 private:
  int n_qubits_;
  ComplexMatrix matrix_;
};

// u * m * u^dagger. Zero entries of u are skipped, so the monomial Kraus
// tensors used by the channels cost O(dim^2) instead of O(dim^3).
ComplexMatrix conjugate_apply(const ComplexMatrix& u, const ComplexMatrix& m);
DensityMatrix conjugate_apply(const ComplexMatrix& u, const DensityMatrix& rho);

// Number of qubits for a power-of-two dimension in [2, 16]; throws otherwise.
int qubits_for_dim(std::size_t dim);

}  // namespace decoyq
