#include "decoyq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "decoyq/error.hpp"

namespace decoyq {

namespace {

void require_shape(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kDimensionMismatch, what);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0)
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  require_shape(entries_.size() == rows * cols, "entry count does not match rows x cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0)
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require_shape(row.size() == cols_, "ragged matrix initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) {
  return ComplexMatrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  require_shape(is_square(), "trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (!is_square()) return false;
  return max_abs_diff(adjoint() * (*this), identity(rows_)) <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_shape(a.cols_ == b.rows_, "matrix product shape mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum shape mismatch");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
  ComplexMatrix out = m;
  for (auto& e : out.entries_) e *= s;
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "comparison shape mismatch");
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      if (s == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

int qubits_for_dim(std::size_t dim) {
  for (int n = 1; n <= kMaxQubits; ++n)
    if (dim == (std::size_t{1} << n)) return n;
  throw Error(ErrorCode::kDimensionMismatch,
              "dimension " + std::to_string(dim) + " is not 2^n for 1 <= n <= 4");
}

PureState::PureState(std::vector<Complex> amplitudes)
    : n_qubits_(qubits_for_dim(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
  if (std::abs(norm_squared() - 1.0) > kTolerance)
    throw Error(ErrorCode::kInvalidArgument, "state is not normalized");
}

double PureState::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return s;
}

Complex inner_product(const PureState& a, const PureState& b) {
  require_shape(a.dim() == b.dim(), "inner product of states with different qubit counts");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

PureState tensor_product(const PureState& a, const PureState& b) {
  std::vector<Complex> out;
  out.reserve(a.dim() * b.dim());
  for (auto x : a.amplitudes())
    for (auto y : b.amplitudes()) out.push_back(x * y);
  return PureState(std::move(out));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : n_qubits_(0), matrix_(std::move(matrix)) {
  require_shape(matrix_.is_square(), "density matrix must be square");
  n_qubits_ = qubits_for_dim(matrix_.rows());
  if (!matrix_.is_hermitian(kTolerance))
    throw Error(ErrorCode::kNumerical, "density matrix is not Hermitian");
  if (std::abs(matrix_.trace() - Complex{1.0}) > kTolerance)
    throw Error(ErrorCode::kNumerical, "density matrix trace differs from 1");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  ComplexMatrix m(psi.dim(), psi.dim());
  for (std::size_t r = 0; r < psi.dim(); ++r)
    for (std::size_t c = 0; c < psi.dim(); ++c) m(r, c) = psi[r] * std::conj(psi[c]);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw Error(ErrorCode::kInvalidArgument, "qubit count must be in [1, 4]");
  const std::size_t dim = std::size_t{1} << n_qubits;
  return DensityMatrix((1.0 / static_cast<double>(dim)) * ComplexMatrix::identity(dim));
}

ComplexMatrix conjugate_apply(const ComplexMatrix& u, const ComplexMatrix& m) {
  require_shape(u.is_square() && m.is_square() && u.rows() == m.rows(),
                "conjugate_apply dimension mismatch");
  const std::size_t d = u.rows();
  const ComplexMatrix um = u * m;
  // out(i, j) = sum_k um(i, k) * conj(u(j, k))
  ComplexMatrix out(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const Complex ujk = std::conj(u(j, k));
      if (ujk == Complex{}) continue;
      for (std::size_t i = 0; i < d; ++i) out(i, j) += um(i, k) * ujk;
    }
  return out;
}

DensityMatrix conjugate_apply(const ComplexMatrix& u, const DensityMatrix& rho) {
  return DensityMatrix(conjugate_apply(u, rho.matrix()));
}

}  // namespace decoyq
