#include "qswitch/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace qswitch {

namespace {

Matrix gaussian_matrix(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(rng.gaussian(), rng.gaussian());
  return m;
}

}  // namespace

Vector random_unit_vector(int d, Rng& rng) {
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
  const double n = v.norm();
  if (n < 1e-12) return basis_ket(0, d);
  return v / n;
}

Matrix random_isometry(int rows, int cols, Rng& rng) {
  if (rows < cols) throw std::invalid_argument("random_isometry: rows < cols");
  const Matrix g = gaussian_matrix(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  // Fix column phases so the decomposition is unique given the input.
  const Matrix r = q.adjoint() * g;
  for (int j = 0; j < cols; ++j) {
    const Complex diag = r(j, j);
    if (std::abs(diag) > 1e-12) q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

Matrix random_unitary(int d, Rng& rng) { return random_isometry(d, d, rng); }

DensityMatrix random_density(int d, Rng& rng) {
  const Matrix g = gaussian_matrix(d, d, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(m);
}

Channel random_channel(int d, int kraus_count, Rng& rng) {
  // Stinespring picture: isometry from the input into system (x) environment,
  // Kraus operators are the environment slices.
  const Matrix v = random_isometry(d * kraus_count, d, rng);
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<size_t>(kraus_count));
  for (int e = 0; e < kraus_count; ++e) {
    Matrix k(d, d);
    for (int s = 0; s < d; ++s)
      for (int t = 0; t < d; ++t) k(s, t) = v(s * kraus_count + e, t);
    kraus.push_back(std::move(k));
  }
  return Channel(d, d, std::move(kraus));
}

PauliVector random_pauli_vector(Rng& rng) {
  std::array<double, 4> p{};
  double sum = 0.0;
  for (double& x : p) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    x = -std::log(u);
    sum += x;
  }
  for (double& x : p) x /= sum;
  // Guard the exact-sum invariant of PauliVector against rounding.
  p[3] = 1.0 - p[0] - p[1] - p[2];
  if (p[3] < 0.0) p[3] = 0.0;
  return PauliVector(p);
}

ErasurePair random_erasure_pair(int d, Rng& rng) {
  ErasurePair pair{d, random_unit_vector(d, rng), random_unit_vector(d, rng),
                   ControlState(random_density(2, rng))};
  return pair;
}

}  // namespace qswitch
