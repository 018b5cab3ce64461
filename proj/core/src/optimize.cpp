#include "qswitch/optimize.hpp"

#include <cmath>
#include <stdexcept>

#include "qswitch/rng.hpp"

namespace qswitch {

namespace {

struct LocalSearch {
  const std::function<double(const Eigen::VectorXd&)>& f;
  int evals = 0;

  double eval(const Eigen::VectorXd& x) {
    ++evals;
    return f(x);
  }

  // Coordinate pattern search with quadratic refinement.
  std::pair<Eigen::VectorXd, double> run(Eigen::VectorXd x, int max_sweeps,
                                         double step_tol) {
    double fx = eval(x);
    double step = 0.25;
    for (int sweep = 0; sweep < max_sweeps && step > step_tol; ++sweep) {
      bool improved = false;
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        Eigen::VectorXd xp = x, xm = x;
        xp(i) += step;
        xm(i) -= step;
        const double fp = eval(xp);
        const double fm = eval(xm);
        // Quadratic through (-step, fm), (0, fx), (+step, fp).
        const double denom = 2.0 * (fp + fm - 2.0 * fx);
        double best_f = fx;
        Eigen::VectorXd* best_x = nullptr;
        if (fp > best_f) {
          best_f = fp;
          best_x = &xp;
        }
        if (fm > best_f) {
          best_f = fm;
          best_x = &xm;
        }
        if (std::abs(denom) > 1e-300) {
          const double delta = step * (fm - fp) / denom;
          if (std::abs(delta) <= 2.0 * step) {
            Eigen::VectorXd xq = x;
            xq(i) += delta;
            const double fq = eval(xq);
            if (fq > best_f) {
              best_f = fq;
              x = xq;
              fx = fq;
              improved = true;
              continue;
            }
          }
        }
        if (best_x != nullptr) {
          x = *best_x;
          fx = best_f;
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
    return {std::move(x), fx};
  }
};

}  // namespace

OptResult maximize(const std::function<double(const Eigen::VectorXd&)>& f, int n,
                   const OptimizerConfig& cfg,
                   const std::vector<Eigen::VectorXd>& warm_starts) {
  if (cfg.restarts < 1) throw std::invalid_argument("maximize: restarts must be >= 1");
  if (n < 1) throw std::invalid_argument("maximize: dimension must be >= 1");

  OptResult best;
  best.seed = cfg.seed;
  best.value = -std::numeric_limits<double>::infinity();
  LocalSearch search{f};

  for (int r = 0; r < cfg.restarts; ++r) {
    Eigen::VectorXd x0(n);
    if (r < static_cast<int>(warm_starts.size())) {
      if (warm_starts[static_cast<size_t>(r)].size() != n)
        throw std::invalid_argument("maximize: warm start has wrong dimension");
      x0 = warm_starts[static_cast<size_t>(r)];
    } else {
      Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(r));
      for (int i = 0; i < n; ++i) x0(i) = rng.gaussian();
    }
    auto [x, fx] = search.run(std::move(x0), cfg.max_iters, cfg.step_tol);
    if (fx > best.value) {
      best.value = fx;
      best.x = std::move(x);
      best.best_restart = r;
    }
  }
  best.evaluations = search.evals;
  return best;
}

}  // namespace qswitch
