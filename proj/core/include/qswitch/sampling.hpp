#pragma once

#include "qswitch/channel.hpp"
#include "qswitch/ebcert.hpp"
#include "qswitch/rng.hpp"

namespace qswitch {

// Deterministic-by-seed random objects used by the randomized sweeps.

Vector random_unit_vector(int d, Rng& rng);
Matrix random_unitary(int d, Rng& rng);  // QR of a Gaussian matrix
DensityMatrix random_density(int d, Rng& rng);

// Haar-ish random channel with `kraus_count` operators, built from a
// random isometry into system (x) environment.
Channel random_channel(int d, int kraus_count, Rng& rng);

// Random isometry with rows >= cols and V^dag V = I, for Kraus remixing.
Matrix random_isometry(int rows, int cols, Rng& rng);

// Probability 4-vector from a flat Dirichlet draw.
PauliVector random_pauli_vector(Rng& rng);

ErasurePair random_erasure_pair(int d, Rng& rng);  // random mixed control

}  // namespace qswitch
