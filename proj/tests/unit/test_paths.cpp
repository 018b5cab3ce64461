#include <doctest.h>

#include <cmath>

#include "qswitch/paths.hpp"
#include "qswitch/rng.hpp"
#include "qswitch/sampling.hpp"
#include "qswitch/switch.hpp"

using namespace qswitch;

namespace {

PauliVector pv(double a, double b, double c, double d) {
  return PauliVector({a, b, c, d});
}

PathConfig uniform_config(std::vector<Channel> chans) {
  PathConfig cfg;
  const int n = static_cast<int>(chans.size());
  cfg.channels = std::move(chans);
  cfg.phi = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  return cfg;
}

Channel random_noisy_channel(int d, int kraus_count, Rng& rng) {
  for (;;) {
    Channel c = random_channel(d, kraus_count, rng);
    if (kraus_rank(c) >= 2) return c;
  }
}

}  // namespace

TEST_CASE("path_superposition: single path reduces to the channel itself") {
  const Channel xy = pauli_channel(pv(0, 0.5, 0.5, 0));
  const Channel sup = path_superposition(uniform_config({xy}));
  CHECK(sup.dim_in() == 2);
  CHECK(sup.dim_out() == 2);  // path register of size 1
  CHECK(sup.validate().passed);
  CHECK(choi_distance(sup, xy) < 1e-12);
}

TEST_CASE("path_superposition: two unitary paths have a single effective Kraus") {
  Rng rng(3);
  const Matrix u = random_unitary(2, rng);
  const Channel uc = Channel::from_unitary(u);
  const Channel sup = path_superposition(uniform_config({uc, uc}));
  CHECK(sup.validate().passed);
  CHECK(kraus_rank(sup) == 1);
  CHECK(packing_bound_correctable(sup));
}

TEST_CASE("path_superposition: two XY paths, rank 3, not correctable") {
  const Channel xy = pauli_channel(pv(0, 0.5, 0.5, 0));
  const Channel sup = path_superposition(uniform_config({xy, xy}));
  CHECK(sup.dim_in() == 2);
  CHECK(sup.dim_out() == 4);
  CHECK(sup.kraus().size() == 4);
  CHECK(sup.validate().passed);
  CHECK(kraus_rank(sup) == 3);
  CHECK_FALSE(packing_bound_correctable(sup));
}

TEST_CASE("path_superposition validates amplitudes") {
  const Channel xy = pauli_channel(pv(0, 0.5, 0.5, 0));
  PathConfig cfg = uniform_config({xy, xy});
  cfg.phi(0) = 1.0;  // not normalized
  CHECK_THROWS(path_superposition(cfg));
  cfg.phi = Vector::Constant(2, 1.0 / std::sqrt(2.0));
  cfg.alphas = {Vector::Constant(2, 0.5), Vector::Constant(2, 1.0)};  // bad norms
  CHECK_THROWS(path_superposition(cfg));
}

TEST_CASE("independence_witness: explicit XY case and hypothesis check") {
  const Channel xy = pauli_channel(pv(0, 0.5, 0.5, 0));
  const auto witness = independence_witness(uniform_config({xy, xy}));
  REQUIRE(witness.size() == 3);
  CHECK(gram_rank(std::span<const Matrix>(witness)) == 3);

  // Three-path case.
  const Channel xyz = pauli_channel(pv(0, 1. / 3, 1. / 3, 1. / 3));
  const auto witness3 = independence_witness(uniform_config({xy, xyz, xy}));
  REQUIRE(witness3.size() == 4);
  CHECK(gram_rank(std::span<const Matrix>(witness3)) == 4);

  // A noiseless path violates the hypothesis.
  CHECK_THROWS(independence_witness(uniform_config({xy, Channel::identity(2)})));
}

TEST_CASE("packing bound: unitary passes, switched channel needs rank <= 2") {
  CHECK(packing_bound_correctable(Channel::identity(3)));
  const Channel xy = pauli_channel(pv(0, 0.5, 0.5, 0));
  const SwitchedChannel sw = switch_channel(xy, xy, ControlState::plus());
  // d_out = 4 = 2 * d_in: correctable only if the rank stays at most 2.
  CHECK(kraus_rank(sw.base) <= 2);
  CHECK(packing_bound_correctable(sw.base));
}

TEST_CASE("randomized noisy configs always exceed the packing bound") {
  Rng rng(77);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 2;
    const int d = 2 + (t / 2) % 2;
    std::vector<Channel> chans;
    for (int j = 0; j < n; ++j)
      chans.push_back(random_noisy_channel(d, 2 + t % 2, rng));
    PathConfig cfg;
    cfg.channels = std::move(chans);
    // Random nonzero path amplitudes.
    Vector phi = random_unit_vector(n, rng);
    while (phi.cwiseAbs().minCoeff() < 0.05) phi = random_unit_vector(n, rng);
    cfg.phi = phi;
    const Channel sup = path_superposition(cfg);
    CHECK(sup.validate().passed);
    CHECK(kraus_rank(sup) >= n + 1);
    CHECK_FALSE(packing_bound_correctable(sup));
    const auto witness = independence_witness(cfg);
    CHECK(gram_rank(std::span<const Matrix>(witness)) == n + 1);
  }
}

TEST_CASE("contrast: the same noisy channel is switch-correctable but not "
          "path-correctable") {
  const Channel xy = pauli_channel(pv(0, 0.5, 0.5, 0));
  const SwitchedChannel sw = switch_channel(xy, xy, ControlState::plus());
  CHECK(packing_bound_correctable(sw.base));
  const Channel sup = path_superposition(uniform_config({xy, xy}));
  CHECK_FALSE(packing_bound_correctable(sup));
}
