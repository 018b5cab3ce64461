#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qswitch/channel.hpp"
#include "qswitch/linalg.hpp"

namespace qswitch {

// State of the order-control qubit.
class ControlState {
 public:
  explicit ControlState(DensityMatrix omega);
  static ControlState from_ket(const Vector& gamma);
  static ControlState plus();            // |+><+|
  static ControlState computational(int b);  // |b><b|
  static ControlState maximally_mixed();

  const DensityMatrix& density() const { return omega_; }

  // Spectral support: (eigenvalue, eigenvector) pairs with eigenvalue
  // above tol::support_eigenvalue, eigenvalues descending.
  std::vector<std::pair<double, Vector>> support() const;

 private:
  DensityMatrix omega_;
};

// Kraus operators of the order-superposed composition of e and f for a
// pure control ket gamma = c0|0> + c1|1>:
//   K_ij = c0 E_i F_j (x) |0>  +  c1 F_j E_i (x) |1>,
// mapping d -> 2d with factor order [system, control].
std::vector<Matrix> switch_kraus(const Channel& e, const Channel& f,
                                 const Vector& gamma);

struct SwitchedChannel {
  Channel base;  // d -> 2d, factor order [system, control]
  Channel e;
  Channel f;
  ControlState omega;
};

// Mixed omega is handled by eigendecomposition: the Kraus union of the
// pure-control switches weighted by sqrt(eigenvalue).
SwitchedChannel switch_channel(const Channel& e, const Channel& f,
                               const ControlState& omega);

struct PauliSwitchDecomposition {
  double q_plus = 0.0;
  double q_minus = 0.0;
  std::optional<Fraction> q_plus_exact;
  std::optional<Fraction> q_minus_exact;
  // Absent when the matching weight is zero.
  std::optional<PauliVector> c_plus;
  std::optional<PauliVector> c_minus;
  ControlState omega_plus;
  ControlState omega_minus;
};

// Closed form of the switch of a Pauli channel with itself:
//   S_omega(E_p, E_p)(rho) = q+ C+(rho) (x) omega  +  q- C-(rho) (x) Z omega Z,
//   q- = 2 (p1 p2 + p2 p3 + p3 p1),
//   C+ = [ |p|^2 rho + 2 p0 (p1 X rho X + p2 Y rho Y + p3 Z rho Z) ] / q+,
//   C- = [ 2 p1 p2 Z rho Z + 2 p2 p3 X rho X + 2 p1 p3 Y rho Y ] / q-.
PauliSwitchDecomposition pauli_switch_decomposition(const PauliVector& p,
                                                    const ControlState& omega);

// The d -> 2d channel rho -> q+ C+(rho) (x) omega+  +  q- C-(rho) (x) omega-.
Channel decomposition_channel(const PauliSwitchDecomposition& dec);

// Measure the control factor in the orthonormal basis {b0, b1}. Outcome
// probabilities must be input-independent (checked); entries with zero
// probability are dropped.
std::vector<std::pair<double, Channel>> condition_on_control(
    const SwitchedChannel& sw, const Vector& b0, const Vector& b1);

}  // namespace qswitch
