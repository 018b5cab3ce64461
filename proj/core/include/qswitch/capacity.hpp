#pragma once

#include <optional>
#include <string>

#include "qswitch/channel.hpp"
#include "qswitch/optimize.hpp"
#include "qswitch/switch.hpp"

namespace qswitch {

enum class Direction { Exact, LowerBound, UpperBound, HeuristicLower };

struct CapacityEstimate {
  double value = 0.0;
  Direction direction = Direction::HeuristicLower;
  std::string method;
  std::optional<double> unclamped;        // pre-clamp value where one applies
  std::optional<Fraction> exact_value;    // set when rational arithmetic applied
  std::string note;
  // Optimizer provenance (zero for closed forms).
  int restarts = 0;
  int evaluations = 0;
  int best_restart = -1;
  std::uint64_t seed = 0;
};

// S(sigma_B) - S(sigma_AB) in bits, factor 0 of dims playing the role of A
// and the remaining factors jointly playing B.
double coherent_information_of_state(const DensityMatrix& sigma,
                                     const SubsystemDims& dims);

// Closed form for the one-shot coherent information of the switch of a
// Pauli channel with itself at control |+><+|, evaluated on the maximally
// entangled input and clamped below at zero. The signed formula value is
// kept in `unclamped`.
CapacityEstimate switched_pauli_coherent_info(const PauliVector& p);

// Heuristic maximization of the state coherent information over pure
// bipartite inputs (reference dimension = dim_in). Clamped below at 0.
CapacityEstimate one_shot_coherent_info(const Channel& ch, const OptimizerConfig& cfg);

// 1 - h(q) with h the binary entropy in bits.
double hashing_bound(double q);
double binary_entropy(double q);

// Lower bound on the two-way assisted quantum capacity of the switch of a
// Pauli channel with itself at control |+><+|: sum over measured-control
// branches of q_i * Q_lower(C_i), with Q_lower = 1 for a unitary branch,
// 0 for an entanglement-breaking branch, and the hashing bound otherwise.
// Exact rational weights propagate to an exact result when the branch
// capacities are integers.
CapacityEstimate two_way_assisted_lower_bound(const PauliVector& p,
                                              const ControlState& omega);

// Heuristic maximization of the Holevo quantity over ensembles of up to
// dim_in^2 pure states.
CapacityEstimate holevo_quantity(const Channel& ch, const OptimizerConfig& cfg);

// log2 of a heuristic estimate of || T_B o ch ||_diamond (maximum over
// pure bipartite inputs of the trace norm of the partially transposed
// output). An upper bound on Q only if the inner maximization is global;
// flagged as such in `note`.
CapacityEstimate transpose_bound(const Channel& ch, const OptimizerConfig& cfg);

}  // namespace qswitch
