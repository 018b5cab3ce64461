#include "qswitch/switch.hpp"

#include <cmath>
#include <stdexcept>

namespace qswitch {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Channel rho -> C(rho) (x) |gamma><gamma| scaled by sqrt(weight) per Kraus.
void append_state_kraus(std::vector<Matrix>* out, const Channel& c,
                        const ControlState& omega, double weight) {
  for (const auto& [lambda, gamma] : omega.support()) {
    const double w = std::sqrt(weight * lambda);
    for (const Matrix& k : c.kraus()) out->push_back(w * tensor(k, gamma));
  }
}

}  // namespace

ControlState::ControlState(DensityMatrix omega) : omega_(std::move(omega)) {
  require(omega_.dim() == 2, "ControlState: control system must be a qubit");
}

ControlState ControlState::from_ket(const Vector& gamma) {
  require(gamma.size() == 2, "ControlState: ket must be 2-dimensional");
  require(std::abs(gamma.norm() - 1.0) <= 1e-9, "ControlState: ket must be normalized");
  return ControlState(DensityMatrix(gamma * gamma.adjoint()));
}

ControlState ControlState::plus() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return from_ket(v);
}

ControlState ControlState::computational(int b) {
  require(b == 0 || b == 1, "ControlState: computational index must be 0 or 1");
  return from_ket(basis_ket(b, 2));
}

ControlState ControlState::maximally_mixed() {
  return ControlState(DensityMatrix(identity(2) / 2.0));
}

std::vector<std::pair<double, Vector>> ControlState::support() const {
  const EigSystem eig = herm_eig(omega_.mat());
  std::vector<std::pair<double, Vector>> out;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k)
    if (eig.values(k) > tol::support_eigenvalue)
      out.emplace_back(eig.values(k), eig.vectors.col(k));
  return out;
}

std::vector<Matrix> switch_kraus(const Channel& e, const Channel& f,
                                 const Vector& gamma) {
  require(e.dim_in() == e.dim_out() && f.dim_in() == f.dim_out(),
          "switch_kraus: channels must be endomorphic");
  require(e.dim_in() == f.dim_in(), "switch_kraus: channel dimensions differ");
  require(gamma.size() == 2 && std::abs(gamma.norm() - 1.0) <= 1e-9,
          "switch_kraus: control ket must be a unit 2-vector");
  const Matrix ket0 = basis_ket(0, 2);
  const Matrix ket1 = basis_ket(1, 2);
  std::vector<Matrix> out;
  out.reserve(e.kraus().size() * f.kraus().size());
  for (const Matrix& ei : e.kraus())
    for (const Matrix& fj : f.kraus())
      out.push_back(gamma(0) * tensor(ei * fj, ket0) +
                    gamma(1) * tensor(fj * ei, ket1));
  return out;
}

SwitchedChannel switch_channel(const Channel& e, const Channel& f,
                               const ControlState& omega) {
  std::vector<Matrix> kraus;
  for (const auto& [lambda, gamma] : omega.support()) {
    const double w = std::sqrt(lambda);
    for (Matrix& k : switch_kraus(e, f, gamma)) kraus.push_back(w * k);
  }
  Channel base(e.dim_in(), 2 * e.dim_in(), std::move(kraus));
  return SwitchedChannel{std::move(base), e, f, omega};
}

PauliSwitchDecomposition pauli_switch_decomposition(const PauliVector& p,
                                                    const ControlState& omega) {
  const double p0 = p[0], p1 = p[1], p2 = p[2], p3 = p[3];
  const double q_minus = 2.0 * (p1 * p2 + p2 * p3 + p3 * p1);
  const double q_plus = 1.0 - q_minus;
  const double norm2 = p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3;

  const Matrix z = pauli(3);
  ControlState omega_minus(DensityMatrix(z * omega.density().mat() * z));

  PauliSwitchDecomposition dec{q_plus, q_minus, std::nullopt, std::nullopt,
                               std::nullopt,    std::nullopt, omega, omega_minus};

  if (q_plus > 0.0) {
    dec.c_plus = PauliVector({norm2 / q_plus, 2.0 * p0 * p1 / q_plus,
                              2.0 * p0 * p2 / q_plus, 2.0 * p0 * p3 / q_plus});
  }
  if (q_minus > 0.0) {
    dec.c_minus = PauliVector({0.0, 2.0 * p2 * p3 / q_minus,
                               2.0 * p1 * p3 / q_minus, 2.0 * p1 * p2 / q_minus});
  }

  if (p.exact()) {
    const auto& f = *p.exact();
    const Fraction two(2, 1);
    const Fraction qm = two * (f[1] * f[2] + f[2] * f[3] + f[3] * f[1]);
    const Fraction qp = Fraction(1, 1) - qm;
    dec.q_minus_exact = qm;
    dec.q_plus_exact = qp;
    dec.q_minus = qm.value();
    dec.q_plus = qp.value();
    if (qp.num() != 0) {
      const Fraction n2 = f[0] * f[0] + f[1] * f[1] + f[2] * f[2] + f[3] * f[3];
      dec.c_plus = PauliVector::from_fractions(
          {n2 / qp, two * f[0] * f[1] / qp, two * f[0] * f[2] / qp,
           two * f[0] * f[3] / qp});
    } else {
      dec.c_plus = std::nullopt;
    }
    if (qm.num() != 0) {
      dec.c_minus = PauliVector::from_fractions(
          {Fraction(0, 1), two * f[2] * f[3] / qm, two * f[1] * f[3] / qm,
           two * f[1] * f[2] / qm});
    } else {
      dec.c_minus = std::nullopt;
    }
  }
  return dec;
}

Channel decomposition_channel(const PauliSwitchDecomposition& dec) {
  std::vector<Matrix> kraus;
  if (dec.c_plus && dec.q_plus > 0.0)
    append_state_kraus(&kraus, pauli_channel(*dec.c_plus), dec.omega_plus, dec.q_plus);
  if (dec.c_minus && dec.q_minus > 0.0)
    append_state_kraus(&kraus, pauli_channel(*dec.c_minus), dec.omega_minus, dec.q_minus);
  return Channel(2, 4, std::move(kraus));
}

std::vector<std::pair<double, Channel>> condition_on_control(
    const SwitchedChannel& sw, const Vector& b0, const Vector& b1) {
  require(b0.size() == 2 && b1.size() == 2, "condition_on_control: basis must be 2-dim");
  require(std::abs(b0.norm() - 1.0) <= 1e-9 && std::abs(b1.norm() - 1.0) <= 1e-9 &&
              std::abs(b0.dot(b1)) <= 1e-9,
          "condition_on_control: basis must be orthonormal");
  const int d = sw.base.dim_in();
  const Matrix ident = identity(d);
  std::vector<std::pair<double, Channel>> out;
  for (const Vector& b : {b0, b1}) {
    const Matrix bra = tensor(ident, b.adjoint());  // d x 2d
    std::vector<Matrix> cond;
    cond.reserve(sw.base.kraus().size());
    Matrix acc = Matrix::Zero(d, d);
    for (const Matrix& k : sw.base.kraus()) {
      Matrix m = bra * k;
      acc += m.adjoint() * m;
      cond.push_back(std::move(m));
    }
    const double prob = acc.trace().real() / static_cast<double>(d);
    if (max_abs(acc - prob * ident) > tol::trace_preserving)
      throw std::invalid_argument(
          "condition_on_control: basis does not decompose the channel "
          "(outcome probability depends on the input)");
    if (prob <= tol::support_eigenvalue) continue;
    const double scale = 1.0 / std::sqrt(prob);
    for (Matrix& m : cond) m *= scale;
    out.emplace_back(prob, Channel(d, d, std::move(cond)));
  }
  return out;
}

}  // namespace qswitch
