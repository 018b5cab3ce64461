#pragma once

#include <utility>

#include "qswitch/channel.hpp"
#include "qswitch/switch.hpp"

namespace qswitch {

// A pair of constant channels rho -> |phi><phi| and rho -> |psi><psi| on a
// d-dimensional system, combined under a control state omega.
struct ErasurePair {
  int d = 2;
  Vector phi;
  Vector psi;
  ControlState omega;
};

void validate(const ErasurePair& pair);

// Choi state of the order-superposed pair: the extended action on the
// maximally entangled input, dims [d, d, 2] = [reference, system, control].
DensityMatrix switched_erasure_choi(const ErasurePair& pair);

// Block decomposition of that Choi state,
//   Gamma = (2/d) Sigma + ((d-2)/d) Theta,
// with Theta separable by inspection and Sigma = (I (x) V) Xi (I (x) V^dag)
// for an isometry V embedding the control into system (x) control. The
// reference-side projector spans the conjugated vectors, completed to rank
// 2 so the weights stay exact when phi and psi are proportional.
struct SigmaThetaDecomposition {
  Matrix sigma;             // on [d, d, 2]
  Matrix theta;             // zero matrix when d == 2 (weight vanishes)
  Matrix xi;                // on [d, 2]
  Matrix projector;         // rank-2 projector on the reference system
  double sigma_weight = 0;  // 2/d
  double theta_weight = 0;  // (d-2)/d
};

SigmaThetaDecomposition decompose_sigma_theta(const ErasurePair& pair);

struct EBCertificate {
  DensityMatrix gamma;
  Matrix sigma_part;
  Matrix theta_part;
  std::pair<double, double> weights;  // (2/d, (d-2)/d)
  Matrix xi;
  bool ppt_ok = false;
  double min_pt_eig = 0.0;
  double reconstruction_residual = 0.0;
  // Residual of [Xi(omega,phi,psi)]^{T_C} = Xi(omega^T,psi,phi).
  double transpose_identity_residual = 0.0;
};

// Certifies that the order-superposed pair of constant channels is
// entanglement-breaking: reconstruction of Gamma from the blocks, the
// partial-transpose exchange identity on Xi, and PPT of Xi (decisive
// because the reference marginal of Xi lives in a 2-dimensional subspace).
EBCertificate certify_entanglement_breaking(const ErasurePair& pair);

}  // namespace qswitch
