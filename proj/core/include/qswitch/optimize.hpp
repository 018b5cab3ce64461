#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace qswitch {

struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 200;     // coordinate sweeps per restart
  double step_tol = 1e-7;  // stop once the pattern step shrinks below this
  std::uint64_t seed = 0;
};

struct OptResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
  int best_restart = -1;
  std::uint64_t seed = 0;
};

// Seeded multi-restart maximizer: random Gaussian starts (plus optional
// warm starts, consumed first), refined by coordinate pattern search with
// a quadratic fit through each probed triple. Deterministic for a fixed
// seed; the reported value only ever increases while running.
OptResult maximize(const std::function<double(const Eigen::VectorXd&)>& f, int n,
                   const OptimizerConfig& cfg,
                   const std::vector<Eigen::VectorXd>& warm_starts = {});

}  // namespace qswitch
