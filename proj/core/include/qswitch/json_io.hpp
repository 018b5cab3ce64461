#pragma once

#include <string>

#include "qswitch/channel.hpp"
#include "qswitch/ebcert.hpp"
#include "qswitch/paths.hpp"

namespace qswitch {

// JSON wire formats. Complex numbers are [re, im] pairs; matrices are flat
// row-major lists of such pairs.
//
//   Channel:     {"dim_in": n, "dim_out": m, "kraus": [[[re,im], ...], ...]}
//   Density:     {"dim": n, "matrix": [[re,im], ...]}
//   PathConfig:  {"phi": [[re,im], ...], "channels": [Channel, ...],
//                 "alphas": [[[re,im], ...], ...] | null}
//   ErasurePair: {"d": n, "phi": [[re,im], ...], "psi": [...], "omega": Density}
//
// Parsers throw (std::runtime_error for malformed documents, the domain
// types' std::invalid_argument for value-level violations) with a readable
// message; serializers emit compact single-line JSON.

std::string channel_to_json(const Channel& ch);
Channel channel_from_json(const std::string& text);

std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const std::string& text);

std::string path_config_to_json(const PathConfig& cfg);
PathConfig path_config_from_json(const std::string& text);

std::string erasure_pair_to_json(const ErasurePair& pair);
ErasurePair erasure_pair_from_json(const std::string& text);

}  // namespace qswitch
