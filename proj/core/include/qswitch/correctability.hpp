#pragma once

#include <span>

#include "qswitch/channel.hpp"
#include "qswitch/switch.hpp"

namespace qswitch {

// Exact-correction check: K_i^dag K_j must be sigma_ij * I on the input
// space. `sigma` collects the proportionality constants; when the check
// passes it is a density matrix (PSD, unit trace).
struct KLReport {
  bool satisfied = false;
  Matrix sigma;
  double residual = 0.0;  // max_ij max-abs of K_i^dag K_j - sigma_ij I
};

KLReport kl_check(std::span<const Matrix> kraus);

// kl_check of the order-superposed channel of e with itself at pure
// control ket gamma.
KLReport switched_kl_check(const Channel& e, const Vector& gamma);

// True iff the switch of e with itself at omega admits exact correction:
// every pure state in the support of omega must pass, and so must the
// mixed-control channel as a whole.
bool switched_correctable(const Channel& e, const ControlState& omega);

enum class QubitKind { Unitary, SelfAdjointPair, None };

// Canonical form of a qubit channel that is correctable under the switch:
// either unitary, or a binary mixture of two traceless self-adjoint
// unitaries with orthogonal Bloch axes,
//   E(rho) = q (m1.s) rho (m1.s) + (1-q) (m2.s) rho (m2.s),
// with basis_unitary U satisfying U X U^dag = m1.s and U Y U^dag = m2.s.
struct QubitClassification {
  QubitKind kind = QubitKind::None;
  double q = 0.0;
  Eigen::Vector3d m1 = Eigen::Vector3d::Zero();
  Eigen::Vector3d m2 = Eigen::Vector3d::Zero();
  Matrix basis_unitary;  // the gate itself when kind == Unitary
  double reconstruction_residual = 0.0;
};

QubitClassification classify(const Channel& e);

// Channel described by a classification; identity of channels under
// (q, m1) <-> (1-q, m2) swap is a tested invariant.
Channel reconstruct(const QubitClassification& c);

// Recovery channel R (2d -> d) with R o S_gamma(e, e) = identity:
// measure the control qubit in {|gamma>, Z|gamma>}, then apply the
// identity or the unitary along m1 x m2 (unitary case: discard control,
// apply the inverse gate). Throws when classify(e) returns None, or when
// the pair case is requested with |<0|gamma>| != |<1|gamma>|.
Channel synthesize_recovery(const Channel& e, const Vector& gamma);

enum class ActivationKind { MaximalActivation, PositiveCapacity, NoActivation };

struct ActivationVerdict {
  ActivationKind kind = ActivationKind::NoActivation;
  QubitClassification classification;
  EBVerdict eb;
  double hashing_lower = 0.0;  // 1 - h(q) when classified as a pair
};

// MaximalActivation: entanglement-breaking channel whose canonical form is
// the q = 1/2 pair (perfectly corrected by the switch). PositiveCapacity:
// pair form with q != 1/2 (already has quantum capacity by the hashing
// bound). NoActivation otherwise.
ActivationVerdict verify_maximal_activation(const Channel& e);

}  // namespace qswitch
