#include "qswitch/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace qswitch {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

Matrix kraus_vec(const Matrix& k) {
  // |K>> = (K tensor I)|I>>: row-major flatten, component (i*din + n) = K(i,n).
  Matrix v(k.rows() * k.cols(), 1);
  for (Eigen::Index i = 0; i < k.rows(); ++i)
    for (Eigen::Index n = 0; n < k.cols(); ++n) v(i * k.cols() + n, 0) = k(i, n);
  return v;
}

Matrix kraus_unvec(const Vector& v, int dim_out, int dim_in) {
  Matrix k(dim_out, dim_in);
  for (int i = 0; i < dim_out; ++i)
    for (int n = 0; n < dim_in; ++n) k(i, n) = v(i * dim_in + n);
  return k;
}

}  // namespace

Channel::Channel(int dim_in, int dim_out, std::vector<Matrix> kraus)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
  require(dim_in_ >= 1 && dim_out_ >= 1, "Channel: dimensions must be positive");
  require(!kraus_.empty(), "Channel: empty Kraus list");
  for (const Matrix& k : kraus_) {
    require(k.rows() == dim_out_ && k.cols() == dim_in_,
            "Channel: Kraus operator shape mismatch");
    require(k.allFinite(), "Channel: non-finite Kraus entries");
  }
}

Channel Channel::identity(int d) { return Channel(d, d, {qswitch::identity(d)}); }

Channel Channel::from_unitary(const Matrix& u) {
  require(u.rows() == u.cols(), "Channel::from_unitary: matrix not square");
  require(max_abs(u.adjoint() * u - qswitch::identity(static_cast<int>(u.cols()))) <=
              tol::trace_preserving,
          "Channel::from_unitary: matrix not unitary");
  return Channel(static_cast<int>(u.cols()), static_cast<int>(u.rows()), {u});
}

ValidationReport Channel::validate() const {
  Matrix s = Matrix::Zero(dim_in_, dim_in_);
  for (const Matrix& k : kraus_) s += k.adjoint() * k;
  ValidationReport rep;
  rep.max_deviation = max_abs(s - qswitch::identity(dim_in_));
  rep.passed = rep.max_deviation <= tol::trace_preserving;
  return rep;
}

PauliVector::PauliVector(const std::array<double, 4>& p) : p_(p) {
  double sum = 0.0;
  for (double x : p_) {
    require(x >= 0.0 && x <= 1.0, "PauliVector: probabilities must be in [0,1]");
    sum += x;
  }
  require(std::abs(sum - 1.0) <= 1e-12, "PauliVector: probabilities must sum to 1");
}

PauliVector PauliVector::from_fractions(const std::array<Fraction, 4>& p) {
  Fraction sum;
  for (const Fraction& f : p) {
    require(!(f < Fraction(0, 1)) && !(Fraction(1, 1) < f),
            "PauliVector: probabilities must be in [0,1]");
    sum = sum + f;
  }
  require(sum == Fraction(1, 1), "PauliVector: probabilities must sum to 1");
  PauliVector v(std::array<double, 4>{p[0].value(), p[1].value(), p[2].value(),
                                      p[3].value()});
  v.exact_ = p;
  return v;
}

Channel pauli_channel(const PauliVector& p) {
  std::vector<Matrix> kraus;
  for (int i = 0; i < 4; ++i)
    if (p[i] > 0.0) kraus.push_back(std::sqrt(p[i]) * pauli(i));
  return Channel(2, 2, std::move(kraus));
}

Channel erasure_channel(const Vector& phi, int dim_in) {
  require(dim_in >= 1, "erasure_channel: dim_in must be positive");
  require(std::abs(phi.norm() - 1.0) <= 1e-9, "erasure_channel: phi must be a unit vector");
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<size_t>(dim_in));
  for (int n = 0; n < dim_in; ++n)
    kraus.push_back(phi * basis_ket(n, dim_in).adjoint());
  return Channel(dim_in, static_cast<int>(phi.size()), std::move(kraus));
}

DensityMatrix apply(const Channel& ch, const DensityMatrix& rho) {
  require(rho.dim() == ch.dim_in(), "apply: state dimension mismatch");
  Matrix out = Matrix::Zero(ch.dim_out(), ch.dim_out());
  for (const Matrix& k : ch.kraus()) out += k * rho.mat() * k.adjoint();
  return DensityMatrix(out);
}

DensityMatrix apply_extended(const Channel& ch, const DensityMatrix& rho,
                             const SubsystemDims& dims) {
  require(dims.count() == 2, "apply_extended: dims must be bipartite");
  require(dims.total() == rho.dim(), "apply_extended: dims do not match state");
  require(dims.factor(1) == ch.dim_in(), "apply_extended: second factor must match dim_in");
  const Matrix ident = identity(dims.factor(0));
  Matrix out = Matrix::Zero(dims.factor(0) * ch.dim_out(), dims.factor(0) * ch.dim_out());
  for (const Matrix& k : ch.kraus()) {
    const Matrix ext = tensor(ident, k);
    out += ext * rho.mat() * ext.adjoint();
  }
  return DensityMatrix(out);
}

ChoiOperator kraus_to_choi(const Channel& ch, bool normalized) {
  const int d = ch.dim_in() * ch.dim_out();
  Matrix c = Matrix::Zero(d, d);
  for (const Matrix& k : ch.kraus()) {
    const Matrix v = kraus_vec(k);
    c += v * v.adjoint();
  }
  if (normalized) c /= static_cast<double>(ch.dim_in());
  return ChoiOperator{ch.dim_in(), ch.dim_out(), std::move(c), normalized};
}

Channel choi_to_kraus(const ChoiOperator& c) {
  const int d = c.dim_in * c.dim_out;
  require(c.matrix.rows() == d && c.matrix.cols() == d,
          "choi_to_kraus: matrix does not match dimensions");
  Matrix m = c.matrix;
  if (c.normalized) m *= static_cast<double>(c.dim_in);
  const EigSystem eig = herm_eig(m);
  require(eig.values.minCoeff() >= -tol::ppt_eigenvalue,
          "choi_to_kraus: Choi operator not positive semidefinite");
  const Matrix marginal =
      partial_trace(m, SubsystemDims{c.dim_out, c.dim_in}, {1});
  require(max_abs(marginal - identity(c.dim_in)) <= tol::choi_roundtrip,
          "choi_to_kraus: output marginal is not the identity (not trace preserving)");
  std::vector<Matrix> kraus;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) > 1e-10)
      kraus.push_back(std::sqrt(eig.values(k)) *
                      kraus_unvec(eig.vectors.col(k), c.dim_out, c.dim_in));
  }
  return Channel(c.dim_in, c.dim_out, std::move(kraus));
}

Channel compose_serial(const Channel& f, const Channel& e) {
  require(f.dim_in() == e.dim_out(), "compose_serial: dimension mismatch");
  std::vector<Matrix> kraus;
  kraus.reserve(f.kraus().size() * e.kraus().size());
  for (const Matrix& fj : f.kraus())
    for (const Matrix& ei : e.kraus()) kraus.push_back(fj * ei);
  return Channel(e.dim_in(), f.dim_out(), std::move(kraus));
}

Channel compose_parallel(const Channel& e, const Channel& f) {
  std::vector<Matrix> kraus;
  kraus.reserve(e.kraus().size() * f.kraus().size());
  for (const Matrix& ei : e.kraus())
    for (const Matrix& fj : f.kraus()) kraus.push_back(tensor(ei, fj));
  return Channel(e.dim_in() * f.dim_in(), e.dim_out() * f.dim_out(), std::move(kraus));
}

EBVerdict is_entanglement_breaking(const Channel& ch) {
  const ChoiOperator choi = kraus_to_choi(ch, /*normalized=*/true);
  const Matrix pt = partial_transpose(
      choi.matrix, SubsystemDims{ch.dim_out(), ch.dim_in()}, /*on=*/1);
  const EigSystem eig = herm_eig(pt);
  EBVerdict verdict;
  verdict.min_pt_eigenvalue = eig.values.minCoeff();
  if (verdict.min_pt_eigenvalue < -tol::ppt_eigenvalue) {
    verdict.status = EBStatus::NotEB;
    verdict.witness = "negative partial-transpose eigenvalue";
  } else if (ch.dim_in() * ch.dim_out() <= 6) {
    verdict.status = EBStatus::EntanglementBreaking;
    verdict.witness = "PPT decisive at this dimension (separable Choi state)";
  } else {
    verdict.status = EBStatus::Undetermined;
    verdict.witness = "PPT holds but is only necessary at this dimension";
  }
  return verdict;
}

int gram_rank(std::span<const Matrix> ops) {
  const int r = static_cast<int>(ops.size());
  Matrix g(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g(i, j) = (ops[i].adjoint() * ops[j]).trace();
  const EigSystem eig = herm_eig((g + g.adjoint()) / 2.0);
  int rank = 0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k)
    if (eig.values(k) > tol::gram_rank) ++rank;
  return rank;
}

int kraus_rank(const Channel& ch) {
  return gram_rank(std::span<const Matrix>(ch.kraus()));
}

double choi_distance(const Channel& a, const Channel& b) {
  require(a.dim_in() == b.dim_in() && a.dim_out() == b.dim_out(),
          "choi_distance: channel dimensions differ");
  return max_abs(kraus_to_choi(a, false).matrix - kraus_to_choi(b, false).matrix);
}

}  // namespace qswitch
