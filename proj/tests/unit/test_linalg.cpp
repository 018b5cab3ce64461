#include <doctest.h>

#include <cmath>

#include "qswitch/linalg.hpp"
#include "qswitch/rng.hpp"
#include "qswitch/sampling.hpp"

using namespace qswitch;

namespace {

Matrix ketbra(int i, int j, int d) {
  return basis_ket(i, d) * basis_ket(j, d).adjoint();
}

}  // namespace

TEST_CASE("tensor: identity, shape and hand-expanded entries") {
  CHECK(max_abs(tensor(identity(2), identity(2)) - identity(4)) == 0.0);

  // X (x) |0><0|: nonzeros exactly at (2,0) and (0,2).
  const Matrix m = tensor(pauli(1), ketbra(0, 0, 2));
  CHECK(m(2, 0) == Complex(1, 0));
  CHECK(m(0, 2) == Complex(1, 0));
  Matrix expected = Matrix::Zero(4, 4);
  expected(2, 0) = 1;
  expected(0, 2) = 1;
  CHECK(max_abs(m - expected) == 0.0);

  CHECK(tensor(Matrix::Zero(2, 2), Matrix::Zero(3, 3)).rows() == 6);
  CHECK(tensor(Matrix::Zero(2, 2), Matrix::Zero(3, 3)).cols() == 6);
}

TEST_CASE("tensor is bilinear and associative up to reassociation") {
  Rng rng(42);
  const Matrix a = random_unitary(2, rng);
  const Matrix b = random_unitary(3, rng);
  const Matrix c = random_unitary(2, rng);
  CHECK(max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))) < 1e-14);
  CHECK(max_abs(tensor(a + c, b) - tensor(a, b) - tensor(c, b)) < 1e-14);
}

TEST_CASE("partial_trace: product states, entangled marginal, trace preserved") {
  Rng rng(7);
  const DensityMatrix rho = random_density(2, rng);
  const DensityMatrix sigma = random_density(3, rng);
  const Matrix prod = tensor(rho.mat(), sigma.mat());

  // Keeping B from rho (x) sigma recovers sigma (rho has unit trace).
  CHECK(max_abs(partial_trace(prod, SubsystemDims{2, 3}, {1}) - sigma.mat()) < 1e-14);
  CHECK(max_abs(partial_trace(prod, SubsystemDims{2, 3}, {0}) - rho.mat()) < 1e-14);

  const Vector phi = max_entangled_ket(2);
  const Matrix bell = phi * phi.adjoint();
  CHECK(max_abs(partial_trace(bell, SubsystemDims{2, 2}, {1}) - identity(2) / 2.0) <
        1e-14);

  // Trace preservation on a random tripartite state.
  const DensityMatrix big = random_density(12, rng);
  const Matrix red = partial_trace(big.mat(), SubsystemDims{2, 3, 2}, {1});
  CHECK(std::abs(red.trace().real() - 1.0) < 1e-12);
  CHECK(std::abs(red.trace().imag()) < 1e-12);
}

TEST_CASE("partial_trace rejects inconsistent dims") {
  CHECK_THROWS(partial_trace(identity(4), SubsystemDims{2, 3}, {0}));
}

TEST_CASE("partial_transpose: product case, Bell spectrum, involution") {
  Rng rng(11);
  const DensityMatrix rho = random_density(2, rng);
  const DensityMatrix sigma = random_density(2, rng);
  const Matrix prod = tensor(rho.mat(), sigma.mat());
  CHECK(max_abs(partial_transpose(prod, SubsystemDims{2, 2}, 1) -
                tensor(rho.mat(), sigma.mat().transpose())) < 1e-14);

  const Vector phi = max_entangled_ket(2);
  const Matrix pt = partial_transpose(phi * phi.adjoint(), SubsystemDims{2, 2}, 0);
  CHECK(herm_eig(pt).values.minCoeff() == doctest::Approx(-0.5).epsilon(1e-12));

  const DensityMatrix any = random_density(6, rng);
  const Matrix twice = partial_transpose(
      partial_transpose(any.mat(), SubsystemDims{2, 3}, 1), SubsystemDims{2, 3}, 1);
  CHECK(max_abs(twice - any.mat()) == 0.0);

  // Trace and Hermiticity preserved.
  const Matrix once = partial_transpose(any.mat(), SubsystemDims{2, 3}, 0);
  CHECK(std::abs((once.trace() - any.mat().trace()).real()) < 1e-14);
  CHECK(max_abs(once - once.adjoint()) < 1e-14);
}

TEST_CASE("herm_eig: known spectra, reconstruction, determinism") {
  const EigSystem z = herm_eig(pauli(3));
  CHECK(z.values(0) == doctest::Approx(1.0));
  CHECK(z.values(1) == doctest::Approx(-1.0));

  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const EigSystem p = herm_eig(projector(plus));
  CHECK(p.values(0) == doctest::Approx(1.0));
  CHECK(p.values(1) == doctest::Approx(0.0));

  const EigSystem xz = herm_eig(pauli(1) + pauli(3));
  CHECK(xz.values(0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(xz.values(1) == doctest::Approx(-std::sqrt(2.0)));

  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_density(5, rng);
    const EigSystem e = herm_eig(rho.mat());
    const Matrix rebuilt =
        e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK(max_abs(rebuilt - rho.mat()) < 1e-9);
    CHECK(max_abs(e.vectors.adjoint() * e.vectors - identity(5)) < 1e-9);
    for (Eigen::Index k = 1; k < e.values.size(); ++k)
      CHECK(e.values(k - 1) >= e.values(k));
  }

  // Deterministic for a fixed input.
  const Matrix m = random_density(4, rng).mat();
  const EigSystem a = herm_eig(m);
  const EigSystem b = herm_eig(m);
  CHECK(max_abs(a.vectors - b.vectors) == 0.0);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("herm_eig rejects non-Hermitian input") {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS(herm_eig(m));
}

TEST_CASE("trace_norm: unitary, density matrix, partially transposed Bell") {
  CHECK(trace_norm(pauli(1)) == doctest::Approx(2.0));
  Rng rng(3);
  CHECK(trace_norm(random_density(4, rng).mat()) == doctest::Approx(1.0));
  const Vector phi = max_entangled_ket(2);
  const Matrix pt = partial_transpose(phi * phi.adjoint(), SubsystemDims{2, 2}, 1);
  CHECK(trace_norm(pt) == doctest::Approx(2.0));
}

TEST_CASE("DensityMatrix validation") {
  CHECK_THROWS(DensityMatrix(pauli(1)));                 // trace 0
  CHECK_THROWS(DensityMatrix(2.0 * projector(basis_ket(0, 2))));  // trace 2
  Matrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;  // genuine negative eigenvalue
  CHECK_THROWS(DensityMatrix(neg));
  Matrix nh(2, 2);
  nh << 0.5, 0.1, 0.0, 0.5;  // not Hermitian
  CHECK_THROWS(DensityMatrix(nh));

  // Tiny negative eigenvalue within tolerance is accepted and clamps to 0.
  Matrix ok(2, 2);
  ok << 1.0 + 5e-11, 0, 0, -5e-11;
  const DensityMatrix rho(ok);
  CHECK(rho.eigenvalues().minCoeff() == 0.0);
}

TEST_CASE("von_neumann_entropy: pure, mixed, known value, unitary invariance") {
  CHECK(von_neumann_entropy(DensityMatrix(projector(basis_ket(0, 2)))) ==
        doctest::Approx(0.0));
  CHECK(von_neumann_entropy(DensityMatrix(identity(2) / 2.0)) == doctest::Approx(1.0));

  Matrix d(2, 2);
  d << 1.0 / 3.0, 0, 0, 2.0 / 3.0;
  // (1/3) log2 3 + (2/3) log2 (3/2) = log2 3 - 2/3
  CHECK(von_neumann_entropy(DensityMatrix(d)) ==
        doctest::Approx(std::log2(3.0) - 2.0 / 3.0).epsilon(1e-12));

  Rng rng(9);
  for (int t = 0; t < 5; ++t) {
    const DensityMatrix rho = random_density(4, rng);
    const Matrix u = random_unitary(4, rng);
    const DensityMatrix rotated(u * rho.mat() * u.adjoint());
    CHECK(std::abs(von_neumann_entropy(rho) - von_neumann_entropy(rotated)) < 1e-9);
    CHECK(von_neumann_entropy(rho) >= 0.0);
    CHECK(von_neumann_entropy(rho) <= 2.0 + 1e-12);
  }
}
