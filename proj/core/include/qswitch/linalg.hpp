#pragma once

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>
#include <vector>

#include "qswitch/tolerances.hpp"

namespace qswitch {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Ordered tensor-factor dimensions. Big-endian convention throughout:
// the first factor is the most significant index, so for dims {a, b}
// the composite index is i_a * b + i_b.
class SubsystemDims {
 public:
  SubsystemDims(std::initializer_list<int> dims);
  explicit SubsystemDims(std::vector<int> dims);

  int factor(int k) const { return dims_[static_cast<size_t>(k)]; }
  int count() const { return static_cast<int>(dims_.size()); }
  int total() const;
  // Stride of factor k under the big-endian layout.
  int stride(int k) const;
  const std::vector<int>& factors() const { return dims_; }

 private:
  std::vector<int> dims_;
};

// Kronecker product, result[(i*rb+k), (j*cb+l)] = a(i,j) * b(k,l).
Matrix tensor(const Matrix& a, const Matrix& b);
Matrix tensor(const std::vector<Matrix>& factors);

// Trace over every factor not listed in `keep` (strictly increasing indices).
Matrix partial_trace(const Matrix& m, const SubsystemDims& dims,
                     const std::vector<int>& keep);

// Transpose on the single factor `on`, identity elsewhere.
Matrix partial_transpose(const Matrix& m, const SubsystemDims& dims, int on);

struct EigSystem {
  Eigen::VectorXd values;  // descending
  Matrix vectors;          // columns match values
};

// Eigendecomposition of a Hermitian matrix (checked to tol::hermiticity).
EigSystem herm_eig(const Matrix& m);

// Sum of singular values.
double trace_norm(const Matrix& m);

// Validated density operator: Hermitian, PSD and unit trace within the
// shared tolerances. Eigenvalues in [-tol, 0) read back as 0.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  Eigen::VectorXd eigenvalues() const;  // descending, clamped at 0

 private:
  Matrix mat_;
};

// -sum lambda log2 lambda with 0 log 0 = 0. Result in bits.
double von_neumann_entropy(const DensityMatrix& rho);

// Shannon entropy in bits of a nonnegative vector (need not be normalized
// by the caller; zero entries are skipped).
double shannon_entropy_bits(const std::vector<double>& p);

// Common small objects.
Matrix identity(int d);
Vector basis_ket(int i, int d);
Matrix pauli(int i);  // 0..3 -> I, X, Y, Z
Matrix projector(const Vector& v);
Vector max_entangled_ket(int d);  // sum_n |n>|n> / sqrt(d)

double max_abs(const Matrix& m);

}  // namespace qswitch
