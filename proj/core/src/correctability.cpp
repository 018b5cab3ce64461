#include "qswitch/correctability.hpp"

#include <cmath>
#include <stdexcept>

#include "qswitch/capacity.hpp"

namespace qswitch {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

constexpr double kDegenerateGap = 1e-7;  // Choi eigenvalue gap below which the
                                         // rank-2 eigenspace is treated as one

// Pauli coordinates (a0, ax, ay, az) of a 2x2 matrix: M = a0 I + a.s.
Eigen::Vector4cd pauli_coords(const Matrix& m) {
  Eigen::Vector4cd a;
  for (int k = 0; k < 4; ++k) a(k) = (m * pauli(k)).trace() / 2.0;
  return a;
}

// Fix the sign so the first component above threshold is positive.
Eigen::Vector3d canonical_sign(Eigen::Vector3d v) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v(i)) > 1e-9) {
      if (v(i) < 0.0) v = -v;
      break;
    }
  }
  return v;
}

// SU(2) element with U sigma_k U^dag = sum_l R(l,k) sigma_l for the
// rotation R = [m1 | m2 | m1 x m2] (columns orthonormal, det +1).
Matrix su2_from_rotation(const Eigen::Matrix3d& r) {
  double w, x, y, z;
  const double t = r.trace();
  if (t > 0.0) {
    const double s = std::sqrt(t + 1.0) * 2.0;
    w = 0.25 * s;
    x = (r(2, 1) - r(1, 2)) / s;
    y = (r(0, 2) - r(2, 0)) / s;
    z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
    w = (r(2, 1) - r(1, 2)) / s;
    x = 0.25 * s;
    y = (r(0, 1) + r(1, 0)) / s;
    z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) >= r(2, 2)) {
    const double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
    w = (r(0, 2) - r(2, 0)) / s;
    x = (r(0, 1) + r(1, 0)) / s;
    y = 0.25 * s;
    z = (r(1, 2) + r(2, 1)) / s;
  } else {
    const double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
    w = (r(1, 0) - r(0, 1)) / s;
    x = (r(0, 2) + r(2, 0)) / s;
    y = (r(1, 2) + r(2, 1)) / s;
    z = 0.25 * s;
  }
  return w * pauli(0) -
         Complex(0, 1) * (x * pauli(1) + y * pauli(2) + z * pauli(3));
}

Matrix bloch_unitary(const Eigen::Vector3d& m) {
  return m(0) * pauli(1) + m(1) * pauli(2) + m(2) * pauli(3);
}

QubitClassification classified_pair(const Channel& e, double q,
                                    Eigen::Vector3d m1, Eigen::Vector3d m2) {
  QubitClassification c;
  c.kind = QubitKind::SelfAdjointPair;
  c.q = q;
  c.m1 = canonical_sign(std::move(m1));
  c.m2 = canonical_sign(std::move(m2));
  Eigen::Matrix3d r;
  r.col(0) = c.m1;
  r.col(1) = c.m2;
  r.col(2) = c.m1.cross(c.m2);
  c.basis_unitary = su2_from_rotation(r);
  c.reconstruction_residual = choi_distance(reconstruct(c), e);
  if (c.reconstruction_residual > tol::choi_equality) c.kind = QubitKind::None;
  return c;
}

}  // namespace

KLReport kl_check(std::span<const Matrix> kraus) {
  require(!kraus.empty(), "kl_check: empty Kraus list");
  const Eigen::Index d = kraus[0].cols();
  const int r = static_cast<int>(kraus.size());
  KLReport rep;
  rep.sigma = Matrix(r, r);
  const Matrix ident = identity(static_cast<int>(d));
  for (int i = 0; i < r; ++i) {
    require(kraus[static_cast<size_t>(i)].cols() == d,
            "kl_check: Kraus operators must share the input dimension");
    for (int j = 0; j < r; ++j) {
      const Matrix m = kraus[static_cast<size_t>(i)].adjoint() * kraus[static_cast<size_t>(j)];
      const Complex s = m.trace() / static_cast<double>(d);
      rep.sigma(i, j) = s;
      rep.residual = std::max(rep.residual, max_abs(m - s * ident));
    }
  }
  rep.satisfied = rep.residual <= tol::kl_residual;
  return rep;
}

KLReport switched_kl_check(const Channel& e, const Vector& gamma) {
  const std::vector<Matrix> kraus = switch_kraus(e, e, gamma);
  return kl_check(std::span<const Matrix>(kraus));
}

bool switched_correctable(const Channel& e, const ControlState& omega) {
  for (const auto& [lambda, gamma] : omega.support()) {
    (void)lambda;
    if (!switched_kl_check(e, gamma).satisfied) return false;
  }
  const SwitchedChannel sw = switch_channel(e, e, omega);
  return kl_check(std::span<const Matrix>(sw.base.kraus())).satisfied;
}

QubitClassification classify(const Channel& e) {
  require(e.dim_in() == 2 && e.dim_out() == 2, "classify: channel must act on qubits");

  const ChoiOperator choi = kraus_to_choi(e, /*normalized=*/false);
  const EigSystem eig = herm_eig(choi.matrix);
  int rank = 0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k)
    if (eig.values(k) > 1e-10) ++rank;

  QubitClassification none;
  if (rank == 1) {
    Matrix u(2, 2);
    const Vector v = std::sqrt(eig.values(0)) * eig.vectors.col(0);
    u << v(0), v(1), v(2), v(3);
    if (max_abs(u.adjoint() * u - identity(2)) > 1e-8) return none;
    // Fix the global phase: largest entry real positive.
    Eigen::Index imax = 0;
    for (Eigen::Index i = 1; i < 4; ++i)
      if (std::abs(v(i)) > std::abs(v(imax))) imax = i;
    const Complex phase = v(imax) / std::abs(v(imax));
    QubitClassification c;
    c.kind = QubitKind::Unitary;
    c.basis_unitary = u / phase;
    return c;
  }
  if (rank != 2) return none;

  Matrix a1(2, 2), a2(2, 2);
  const Vector v1 = std::sqrt(eig.values(0)) * eig.vectors.col(0);
  const Vector v2 = std::sqrt(eig.values(1)) * eig.vectors.col(1);
  a1 << v1(0), v1(1), v1(2), v1(3);
  a2 << v2(0), v2(1), v2(2), v2(3);
  const Eigen::Vector4cd c1 = pauli_coords(a1);
  const Eigen::Vector4cd c2 = pauli_coords(a2);
  if (std::abs(c1(0)) > 1e-8 || std::abs(c2(0)) > 1e-8) return none;  // traceless

  if (eig.values(0) - eig.values(1) > kDegenerateGap) {
    // Unique eigenvectors: each must be a common-phase real Bloch vector.
    Eigen::Vector3d m[2];
    double weight[2];
    const Eigen::Vector4cd* coords[2] = {&c1, &c2};
    for (int k = 0; k < 2; ++k) {
      Eigen::Vector3cd a = coords[k]->tail<3>();
      Eigen::Index imax = 0;
      for (Eigen::Index i = 1; i < 3; ++i)
        if (std::abs(a(i)) > std::abs(a(imax))) imax = i;
      if (std::abs(a(imax)) < 1e-9) return none;
      const Complex phase = a(imax) / std::abs(a(imax));
      const Eigen::Vector3cd w = a / phase;
      if (w.imag().norm() > 1e-7 * w.norm()) return none;
      const Eigen::Vector3d re = w.real();
      weight[k] = re.squaredNorm();
      m[k] = re.normalized();
    }
    if (std::abs(m[0].dot(m[1])) > 1e-7) return none;
    if (std::abs(weight[0] + weight[1] - 1.0) > 1e-7) return none;
    return classified_pair(e, weight[0], m[0], m[1]);
  }

  // Degenerate eigenspace: any orthonormal basis diagonalizes, so look for
  // a real 2-plane carrying the Bloch vectors of the whole subspace.
  Eigen::Matrix<double, 3, 4> span;
  span.col(0) = c1.tail<3>().real();
  span.col(1) = c1.tail<3>().imag();
  span.col(2) = c2.tail<3>().real();
  span.col(3) = c2.tail<3>().imag();
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(span, Eigen::ComputeFullU);
  if (svd.singularValues()(2) > 1e-7) return none;  // plane is 3-dimensional
  if (svd.singularValues()(1) < 1e-7) return none;  // collapsed to a line
  const Eigen::Vector3d u1 = svd.matrixU().col(0);
  const Eigen::Vector3d u2 = svd.matrixU().col(1);
  // Canonical in-plane basis: the standard axis with the largest footprint
  // in the plane, then its in-plane orthogonal complement.
  int best_axis = 0;
  double best_norm = -1.0;
  for (int ax = 0; ax < 3; ++ax) {
    Eigen::Vector3d axis = Eigen::Vector3d::Zero();
    axis(ax) = 1.0;
    const double n = std::hypot(u1.dot(axis), u2.dot(axis));
    if (n > best_norm + 1e-12) {
      best_norm = n;
      best_axis = ax;
    }
  }
  Eigen::Vector3d axis = Eigen::Vector3d::Zero();
  axis(best_axis) = 1.0;
  Eigen::Vector3d e1 = u1.dot(axis) * u1 + u2.dot(axis) * u2;
  e1.normalize();
  Eigen::Vector3d e2 = u2 - e1.dot(u2) * e1;
  if (e2.norm() < 1e-9) e2 = u1 - e1.dot(u1) * e1;
  e2.normalize();
  return classified_pair(e, (eig.values(0) + eig.values(1)) / 4.0, e1, e2);
}

Channel reconstruct(const QubitClassification& c) {
  switch (c.kind) {
    case QubitKind::Unitary:
      return Channel(2, 2, {c.basis_unitary});
    case QubitKind::SelfAdjointPair: {
      std::vector<Matrix> kraus;
      if (c.q > 0.0) kraus.push_back(std::sqrt(c.q) * bloch_unitary(c.m1));
      if (c.q < 1.0) kraus.push_back(std::sqrt(1.0 - c.q) * bloch_unitary(c.m2));
      return Channel(2, 2, std::move(kraus));
    }
    case QubitKind::None:
      break;
  }
  throw std::invalid_argument("reconstruct: classification has no channel form");
}

Channel synthesize_recovery(const Channel& e, const Vector& gamma) {
  require(gamma.size() == 2 && std::abs(gamma.norm() - 1.0) <= 1e-9,
          "synthesize_recovery: control ket must be a unit 2-vector");
  const QubitClassification c = classify(e);
  if (c.kind == QubitKind::Unitary) {
    // Both uses apply the gate, so discard the control and undo it twice.
    const Matrix u_inv = (c.basis_unitary * c.basis_unitary).adjoint();
    std::vector<Matrix> kraus;
    for (int b = 0; b < 2; ++b)
      kraus.push_back(tensor(u_inv, basis_ket(b, 2).adjoint()));
    return Channel(4, 2, std::move(kraus));
  }
  if (c.kind == QubitKind::SelfAdjointPair) {
    require(std::abs(std::abs(gamma(0)) - std::abs(gamma(1))) <= 1e-9,
            "synthesize_recovery: pair form needs equal-weight control ket");
    const Vector gamma_minus = pauli(3) * gamma;
    const Eigen::Vector3d k = c.m1.cross(c.m2).normalized();
    std::vector<Matrix> kraus;
    kraus.push_back(tensor(identity(2), gamma.adjoint()));
    kraus.push_back(tensor(bloch_unitary(k), gamma_minus.adjoint()));
    return Channel(4, 2, std::move(kraus));
  }
  throw std::invalid_argument(
      "synthesize_recovery: channel is not unitary or a self-adjoint pair; "
      "no exact recovery of this form exists");
}

ActivationVerdict verify_maximal_activation(const Channel& e) {
  ActivationVerdict v;
  v.classification = classify(e);
  v.eb = is_entanglement_breaking(e);
  if (v.classification.kind == QubitKind::SelfAdjointPair) {
    v.hashing_lower = hashing_bound(v.classification.q);
    const bool half = std::abs(v.classification.q - 0.5) <= tol::classification_q;
    if (half && v.eb.status == EBStatus::EntanglementBreaking) {
      v.kind = ActivationKind::MaximalActivation;
    } else if (v.hashing_lower > 0.0) {
      v.kind = ActivationKind::PositiveCapacity;
    }
  }
  return v;
}

}  // namespace qswitch
