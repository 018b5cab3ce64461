#include "qswitch/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qswitch {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

SubsystemDims::SubsystemDims(std::initializer_list<int> dims)
    : SubsystemDims(std::vector<int>(dims)) {}

SubsystemDims::SubsystemDims(std::vector<int> dims) : dims_(std::move(dims)) {
  require(!dims_.empty(), "SubsystemDims: empty factor list");
  for (int d : dims_) require(d >= 1, "SubsystemDims: factors must be positive");
}

int SubsystemDims::total() const {
  int t = 1;
  for (int d : dims_) t *= d;
  return t;
}

int SubsystemDims::stride(int k) const {
  int s = 1;
  for (size_t i = static_cast<size_t>(k) + 1; i < dims_.size(); ++i) s *= dims_[i];
  return s;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix tensor(const std::vector<Matrix>& factors) {
  require(!factors.empty(), "tensor: empty factor list");
  Matrix out = factors.front();
  for (size_t k = 1; k < factors.size(); ++k) out = tensor(out, factors[k]);
  return out;
}

Matrix partial_trace(const Matrix& m, const SubsystemDims& dims,
                     const std::vector<int>& keep) {
  require(m.rows() == m.cols(), "partial_trace: matrix not square");
  require(m.rows() == dims.total(), "partial_trace: dims do not match matrix");
  const int n = dims.count();
  std::vector<bool> kept(static_cast<size_t>(n), false);
  for (size_t i = 0; i < keep.size(); ++i) {
    require(keep[i] >= 0 && keep[i] < n, "partial_trace: keep index out of range");
    require(i == 0 || keep[i] > keep[i - 1], "partial_trace: keep indices must increase");
    kept[static_cast<size_t>(keep[i])] = true;
  }
  std::vector<int> traced;
  for (int k = 0; k < n; ++k)
    if (!kept[static_cast<size_t>(k)]) traced.push_back(k);

  // Composite offsets of every kept / traced multi-index into the full index.
  auto offsets = [&](const std::vector<int>& factors) {
    std::vector<int> off{0};
    for (int k : factors) {
      const int d = dims.factor(k), s = dims.stride(k);
      std::vector<int> next;
      next.reserve(off.size() * static_cast<size_t>(d));
      for (int base : off)
        for (int i = 0; i < d; ++i) next.push_back(base + i * s);
      off = std::move(next);
    }
    return off;
  };
  const std::vector<int> ko = offsets(keep);
  const std::vector<int> to = offsets(traced);

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(ko.size()),
                            static_cast<Eigen::Index>(ko.size()));
  for (size_t a = 0; a < ko.size(); ++a)
    for (size_t b = 0; b < ko.size(); ++b) {
      Complex s = 0.0;
      for (int t : to) s += m(ko[a] + t, ko[b] + t);
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = s;
    }
  return out;
}

Matrix partial_transpose(const Matrix& m, const SubsystemDims& dims, int on) {
  require(m.rows() == m.cols(), "partial_transpose: matrix not square");
  require(m.rows() == dims.total(), "partial_transpose: dims do not match matrix");
  require(on >= 0 && on < dims.count(), "partial_transpose: factor index out of range");
  const int d = dims.factor(on), s = dims.stride(on);
  const Eigen::Index total = m.rows();
  Matrix out(total, total);
  for (Eigen::Index r = 0; r < total; ++r) {
    const int ra = (static_cast<int>(r) / s) % d;
    for (Eigen::Index c = 0; c < total; ++c) {
      const int ca = (static_cast<int>(c) / s) % d;
      const Eigen::Index r2 = r + static_cast<Eigen::Index>((ca - ra) * s);
      const Eigen::Index c2 = c + static_cast<Eigen::Index>((ra - ca) * s);
      out(r2, c2) = m(r, c);
    }
  }
  return out;
}

EigSystem herm_eig(const Matrix& m) {
  require(m.rows() == m.cols(), "herm_eig: matrix not square");
  require(max_abs(m - m.adjoint()) <= tol::hermiticity,
          "herm_eig: matrix not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0);
  require(solver.info() == Eigen::Success, "herm_eig: eigensolver failed");
  const Eigen::Index n = m.rows();
  EigSystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {  // Eigen sorts ascending; flip
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

DensityMatrix::DensityMatrix(Matrix m) {
  require(m.rows() == m.cols(), "DensityMatrix: matrix not square");
  require(m.rows() >= 1, "DensityMatrix: empty matrix");
  require(m.allFinite(), "DensityMatrix: non-finite entries");
  require(max_abs(m - m.adjoint()) <= tol::hermiticity,
          "DensityMatrix: not Hermitian within tolerance");
  require(std::abs(m.trace().real() - 1.0) <= tol::trace_one &&
              std::abs(m.trace().imag()) <= tol::trace_one,
          "DensityMatrix: trace not 1 within tolerance");
  mat_ = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(mat_);
  require(solver.info() == Eigen::Success, "DensityMatrix: eigensolver failed");
  require(solver.eigenvalues().minCoeff() >= -tol::psd_eigenvalue,
          "DensityMatrix: matrix not positive semidefinite within tolerance");
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::VectorXd v = herm_eig(mat_).values;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < 0.0) v(i) = 0.0;
  return v;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigen::VectorXd ev = rho.eigenvalues();
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > 0.0) s -= ev(i) * std::log2(ev(i));
  return s;
}

double shannon_entropy_bits(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s -= x * std::log2(x);
  return s;
}

Matrix identity(int d) { return Matrix::Identity(d, d); }

Vector basis_ket(int i, int d) {
  Vector v = Vector::Zero(d);
  v(i) = 1.0;
  return v;
}

Matrix pauli(int i) {
  Matrix m(2, 2);
  switch (i) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 0..3");
  }
  return m;
}

Matrix projector(const Vector& v) { return v * v.adjoint(); }

Vector max_entangled_ket(int d) {
  Vector v = Vector::Zero(d * d);
  for (int n = 0; n < d; ++n) v(n * d + n) = 1.0 / std::sqrt(double(d));
  return v;
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace qswitch
