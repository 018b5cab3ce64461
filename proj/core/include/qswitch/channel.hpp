#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qswitch/fraction.hpp"
#include "qswitch/linalg.hpp"

namespace qswitch {

struct ValidationReport {
  double max_deviation = 0.0;  // max-abs of sum K^dag K - I
  bool passed = false;
};

// Completely positive map in Kraus form. Construction checks shapes and
// finiteness; trace preservation is reported by validate() and enforced
// by the constructors that build named channels.
class Channel {
 public:
  Channel(int dim_in, int dim_out, std::vector<Matrix> kraus);

  static Channel identity(int d);
  static Channel from_unitary(const Matrix& u);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  ValidationReport validate() const;

 private:
  int dim_in_;
  int dim_out_;
  std::vector<Matrix> kraus_;
};

// Probability 4-vector (p0, p1, p2, p3) over {I, X, Y, Z}. May carry an
// exact rational representation alongside the doubles; weight arithmetic
// derived from such a vector stays exact.
class PauliVector {
 public:
  explicit PauliVector(const std::array<double, 4>& p);
  static PauliVector from_fractions(const std::array<Fraction, 4>& p);

  double operator[](int i) const { return p_[static_cast<size_t>(i)]; }
  const std::array<double, 4>& probs() const { return p_; }
  const std::optional<std::array<Fraction, 4>>& exact() const { return exact_; }

 private:
  std::array<double, 4> p_;
  std::optional<std::array<Fraction, 4>> exact_;
};

struct ChoiOperator {
  int dim_in = 0;
  int dim_out = 0;
  // Lives on out x in: built from |K>> = (K tensor I)|I>>, so the output
  // factor is the most significant index.
  Matrix matrix;
  bool normalized = false;  // true: divided by dim_in (Choi state)
};

enum class EBStatus { EntanglementBreaking, NotEB, Undetermined };

struct EBVerdict {
  EBStatus status = EBStatus::Undetermined;
  double min_pt_eigenvalue = 0.0;
  std::string witness;
};

Channel pauli_channel(const PauliVector& p);

// Constant channel rho -> |phi><phi| on dim_in-dimensional inputs.
Channel erasure_channel(const Vector& phi, int dim_in);

DensityMatrix apply(const Channel& ch, const DensityMatrix& rho);

// Identity on the first factor, ch on the second. dims must be bipartite
// with the second factor equal to ch.dim_in().
DensityMatrix apply_extended(const Channel& ch, const DensityMatrix& rho,
                             const SubsystemDims& dims);

ChoiOperator kraus_to_choi(const Channel& ch, bool normalized);
Channel choi_to_kraus(const ChoiOperator& c);

Channel compose_serial(const Channel& f, const Channel& e);    // f after e
Channel compose_parallel(const Channel& e, const Channel& f);  // e tensor f

// Tri-state verdict. PPT is decisive iff dim_in * dim_out <= 6; above that
// a positive partial transpose yields Undetermined, never a positive claim.
EBVerdict is_entanglement_breaking(const Channel& ch);

// Dimension of the span of a Kraus list (Gram-matrix rank at tol::gram_rank).
int gram_rank(std::span<const Matrix> ops);
int kraus_rank(const Channel& ch);

// Max-abs distance between unnormalized Choi matrices; the library's
// channel-equality metric.
double choi_distance(const Channel& a, const Channel& b);

}  // namespace qswitch
