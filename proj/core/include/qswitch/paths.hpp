#pragma once

#include <vector>

#include "qswitch/channel.hpp"

namespace qswitch {

// A message routed through N alternative paths with one channel per path.
// phi holds the path amplitudes; alphas holds, per channel, one vacuum
// extension amplitude per Kraus operator (sum |alpha|^2 = 1). An empty
// alphas list selects the uniform default 1/sqrt(r) for each channel.
struct PathConfig {
  std::vector<Channel> channels;      // all d -> d
  Vector phi;                         // N amplitudes, unit norm
  std::vector<Vector> alphas;         // empty => uniform defaults

  int path_count() const { return static_cast<int>(channels.size()); }
  int dim() const { return channels.empty() ? 0 : channels.front().dim_in(); }
};

// Throws unless the invariants above hold; returns the per-channel alpha
// vectors with defaults filled in.
std::vector<Vector> validated_alphas(const PathConfig& cfg);

// The d -> N*d channel with Kraus operators
//   E_{i1..iN} = sum_j phi_j alpha^(1)_{i1} .. E^(j)_{ij} .. alpha^(N)_{iN} (x) |j>,
// factor order [system, path].
Channel path_superposition(const PathConfig& cfg);

// N+1 Kraus operators of the superposition whose span has dimension N+1
// whenever every path channel is noisy and every phi_j is nonzero.
// Throws when some channel has fewer than two independent Kraus operators.
std::vector<Matrix> independence_witness(const PathConfig& cfg);

// Necessary condition for perfect correction: rank * dim_in <= dim_out.
bool packing_bound_correctable(const Channel& ch);

}  // namespace qswitch
