#include "qswitch/paths.hpp"

#include <cmath>
#include <stdexcept>

namespace qswitch {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

Matrix superposition_kraus_at(const PathConfig& cfg,
                              const std::vector<Vector>& alphas,
                              const std::vector<int>& idx) {
  const int n = cfg.path_count();
  const int d = cfg.dim();
  Matrix k = Matrix::Zero(n * d, d);
  for (int j = 0; j < n; ++j) {
    Complex coeff = cfg.phi(j);
    for (int l = 0; l < n; ++l)
      if (l != j) coeff *= alphas[static_cast<size_t>(l)](idx[static_cast<size_t>(l)]);
    const Matrix& ej = cfg.channels[static_cast<size_t>(j)]
                           .kraus()[static_cast<size_t>(idx[static_cast<size_t>(j)])];
    // system (x) |j>: row s*n + j
    for (int s = 0; s < d; ++s)
      for (int t = 0; t < d; ++t) k(s * n + j, t) += coeff * ej(s, t);
  }
  return k;
}

}  // namespace

std::vector<Vector> validated_alphas(const PathConfig& cfg) {
  const int n = cfg.path_count();
  require(n >= 1, "PathConfig: need at least one channel");
  const int d = cfg.dim();
  for (const Channel& c : cfg.channels)
    require(c.dim_in() == d && c.dim_out() == d,
            "PathConfig: all channels must be endomorphic with equal dimension");
  require(cfg.phi.size() == n, "PathConfig: phi length must match channel count");
  require(std::abs(cfg.phi.norm() - 1.0) <= 1e-9, "PathConfig: phi must be a unit vector");
  require(cfg.alphas.empty() || static_cast<int>(cfg.alphas.size()) == n,
          "PathConfig: alphas must be absent or one vector per channel");

  std::vector<Vector> out;
  out.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const auto r = static_cast<Eigen::Index>(cfg.channels[static_cast<size_t>(j)].kraus().size());
    if (cfg.alphas.empty()) {
      out.push_back(Vector::Constant(r, 1.0 / std::sqrt(static_cast<double>(r))));
    } else {
      const Vector& a = cfg.alphas[static_cast<size_t>(j)];
      require(a.size() == r, "PathConfig: alpha length must match Kraus count");
      require(std::abs(a.norm() - 1.0) <= 1e-9, "PathConfig: alphas must have unit norm");
      out.push_back(a);
    }
  }
  return out;
}

Channel path_superposition(const PathConfig& cfg) {
  const std::vector<Vector> alphas = validated_alphas(cfg);
  const int n = cfg.path_count();
  const int d = cfg.dim();
  std::vector<Matrix> kraus;
  std::vector<int> idx(static_cast<size_t>(n), 0);
  while (true) {
    kraus.push_back(superposition_kraus_at(cfg, alphas, idx));
    int j = n - 1;
    for (; j >= 0; --j) {
      idx[static_cast<size_t>(j)]++;
      if (idx[static_cast<size_t>(j)] <
          static_cast<int>(cfg.channels[static_cast<size_t>(j)].kraus().size()))
        break;
      idx[static_cast<size_t>(j)] = 0;
    }
    if (j < 0) break;
  }
  return Channel(d, n * d, std::move(kraus));
}

std::vector<Matrix> independence_witness(const PathConfig& cfg) {
  const std::vector<Vector> alphas = validated_alphas(cfg);
  const int n = cfg.path_count();
  for (int j = 0; j < n; ++j) {
    require(std::abs(cfg.phi(j)) > 1e-12,
            "independence_witness: every path amplitude must be nonzero");
    require(kraus_rank(cfg.channels[static_cast<size_t>(j)]) >= 2,
            "independence witness unavailable: every path channel must be noisy "
            "(at least two linearly independent Kraus operators)");
  }

  // p_j: largest vacuum amplitude; q_j: first Kraus operator independent
  // of the one at p_j.
  std::vector<int> p(static_cast<size_t>(n), 0), q(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    const Vector& a = alphas[static_cast<size_t>(j)];
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < a.size(); ++i)
      if (std::abs(a(i)) > std::abs(a(best))) best = i;
    p[static_cast<size_t>(j)] = static_cast<int>(best);
    const auto& ks = cfg.channels[static_cast<size_t>(j)].kraus();
    bool found = false;
    for (int i = 0; i < static_cast<int>(ks.size()); ++i) {
      if (i == p[static_cast<size_t>(j)]) continue;
      const Matrix pair[] = {ks[static_cast<size_t>(p[static_cast<size_t>(j)])],
                             ks[static_cast<size_t>(i)]};
      if (gram_rank(std::span<const Matrix>(pair, 2)) == 2) {
        q[static_cast<size_t>(j)] = i;
        found = true;
        break;
      }
    }
    require(found,
            "independence witness unavailable: no Kraus operator independent of "
            "the selected one");
  }

  std::vector<Matrix> witness;
  witness.reserve(static_cast<size_t>(n) + 1);
  witness.push_back(superposition_kraus_at(cfg, alphas, p));
  for (int j = 0; j < n; ++j) {
    std::vector<int> idx = p;
    idx[static_cast<size_t>(j)] = q[static_cast<size_t>(j)];
    witness.push_back(superposition_kraus_at(cfg, alphas, idx));
  }
  return witness;
}

bool packing_bound_correctable(const Channel& ch) {
  return kraus_rank(ch) * ch.dim_in() <= ch.dim_out();
}

}  // namespace qswitch
