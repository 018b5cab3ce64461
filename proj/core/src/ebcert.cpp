#include "qswitch/ebcert.hpp"

#include <cmath>
#include <stdexcept>

namespace qswitch {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Orthonormal span of the given vectors, completed to rank 2 with
// computational-basis kets. The completion is symmetric in the input
// order, so the swap identity on Xi sees the same projector.
Matrix rank2_projector(const std::vector<Vector>& vs, int d) {
  std::vector<Vector> basis;
  auto add = [&](const Vector& v) {
    Vector w = v;
    for (const Vector& b : basis) w -= b.dot(w) * b;
    if (w.norm() > 1e-9) basis.push_back(w.normalized());
  };
  for (const Vector& v : vs) add(v);
  for (int i = 0; i < d && basis.size() < 2; ++i) add(basis_ket(i, d));
  Matrix p = Matrix::Zero(d, d);
  for (const Vector& b : basis) p += b * b.adjoint();
  return p;
}

struct Blocks {
  Matrix k00, k01, k10, k11;  // |a><b| on the control qubit
};

Blocks control_blocks() {
  const Vector k0 = basis_ket(0, 2), k1 = basis_ket(1, 2);
  return {k0 * k0.adjoint(), k0 * k1.adjoint(), k1 * k0.adjoint(), k1 * k1.adjoint()};
}

Matrix xi_matrix(const Matrix& omega, const Vector& phi, const Vector& psi, int d) {
  const Vector phib = phi.conjugate();
  const Vector psib = psi.conjugate();
  const Matrix p = rank2_projector({phib, psib}, d);
  const Blocks c = control_blocks();
  return 0.5 * (omega(0, 0) * tensor(p, c.k00) +
                omega(0, 1) * tensor(phib * psib.adjoint(), c.k01) +
                omega(1, 0) * tensor(psib * phib.adjoint(), c.k10) +
                omega(1, 1) * tensor(p, c.k11));
}

}  // namespace

void validate(const ErasurePair& pair) {
  require(pair.d >= 2, "ErasurePair: dimension must be at least 2");
  require(pair.phi.size() == pair.d && pair.psi.size() == pair.d,
          "ErasurePair: vectors must have dimension d");
  require(std::abs(pair.phi.norm() - 1.0) <= 1e-9 &&
              std::abs(pair.psi.norm() - 1.0) <= 1e-9,
          "ErasurePair: phi and psi must be unit vectors");
}

DensityMatrix switched_erasure_choi(const ErasurePair& pair) {
  validate(pair);
  const Channel e0 = erasure_channel(pair.phi, pair.d);
  const Channel f0 = erasure_channel(pair.psi, pair.d);
  const SwitchedChannel sw = switch_channel(e0, f0, pair.omega);
  const Vector mes = max_entangled_ket(pair.d);
  return apply_extended(sw.base, DensityMatrix(mes * mes.adjoint()),
                        SubsystemDims{pair.d, pair.d});
}

SigmaThetaDecomposition decompose_sigma_theta(const ErasurePair& pair) {
  validate(pair);
  const int d = pair.d;
  const Matrix& omega = pair.omega.density().mat();
  const Vector phib = pair.phi.conjugate();
  const Vector psib = pair.psi.conjugate();
  const Matrix p = rank2_projector({phib, psib}, d);
  const Blocks c = control_blocks();

  const Matrix phi_out = pair.phi * pair.phi.adjoint();
  const Matrix psi_out = pair.psi * pair.psi.adjoint();

  SigmaThetaDecomposition dec;
  dec.projector = p;
  dec.sigma_weight = 2.0 / d;
  dec.theta_weight = static_cast<double>(d - 2) / d;
  dec.sigma =
      0.5 * (omega(0, 0) * tensor(tensor(p, phi_out), c.k00) +
             omega(0, 1) * tensor(tensor(phib * psib.adjoint(),
                                         pair.phi * pair.psi.adjoint()),
                                  c.k01) +
             omega(1, 0) * tensor(tensor(psib * phib.adjoint(),
                                         pair.psi * pair.phi.adjoint()),
                                  c.k10) +
             omega(1, 1) * tensor(tensor(p, psi_out), c.k11));
  if (d > 2) {
    const Matrix rest = (identity(d) - p) / static_cast<double>(d - 2);
    dec.theta = omega(0, 0) * tensor(tensor(rest, phi_out), c.k00) +
                omega(1, 1) * tensor(tensor(rest, psi_out), c.k11);
  } else {
    dec.theta = Matrix::Zero(4 * d, 4 * d);
  }
  dec.xi = xi_matrix(omega, pair.phi, pair.psi, d);
  return dec;
}

EBCertificate certify_entanglement_breaking(const ErasurePair& pair) {
  const DensityMatrix gamma = switched_erasure_choi(pair);
  SigmaThetaDecomposition dec = decompose_sigma_theta(pair);

  EBCertificate cert{gamma,
                     std::move(dec.sigma),
                     std::move(dec.theta),
                     {dec.sigma_weight, dec.theta_weight},
                     std::move(dec.xi),
                     false,
                     0.0,
                     0.0,
                     0.0};

  cert.reconstruction_residual = max_abs(
      gamma.mat() - cert.weights.first * cert.sigma_part -
      cert.weights.second * cert.theta_part);

  const SubsystemDims xi_dims{pair.d, 2};
  const Matrix xi_tc = partial_transpose(cert.xi, xi_dims, 1);
  const Matrix omega_t = pair.omega.density().mat().transpose();
  const Matrix xi_swapped = xi_matrix(omega_t, pair.psi, pair.phi, pair.d);
  cert.transpose_identity_residual = max_abs(xi_tc - xi_swapped);

  cert.min_pt_eig = herm_eig(xi_tc).values.minCoeff();
  cert.ppt_ok = cert.min_pt_eig >= -tol::ppt_eigenvalue;
  return cert;
}

}  // namespace qswitch
