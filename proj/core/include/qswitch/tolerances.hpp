#pragma once

// Central numeric tolerances. Every verdict reported by the library is
// decided against one of these constants; the CLI echoes the active set
// into each report so results are reproducible.
namespace qswitch::tol {

inline constexpr double hermiticity = 1e-10;     // max-abs of M - M^dag
inline constexpr double psd_eigenvalue = 1e-10;  // eigenvalues above -psd are clamped to 0
inline constexpr double trace_one = 1e-10;       // density-matrix trace deviation
inline constexpr double trace_preserving = 1e-9; // sum K^dag K vs identity
inline constexpr double gram_rank = 1e-9;        // Gram-matrix eigenvalue threshold
inline constexpr double kl_residual = 1e-8;      // Knill-Laflamme residual
inline constexpr double choi_roundtrip = 1e-8;   // Kraus <-> Choi reconstruction
inline constexpr double choi_equality = 1e-8;    // channel equality via Choi distance
inline constexpr double ppt_eigenvalue = 1e-9;   // partial-transpose PSD margin
inline constexpr double decomposition = 1e-9;    // block-decomposition residuals
inline constexpr double classification_q = 1e-6; // probability match in qubit classification
inline constexpr double capacity_value = 1e-6;   // closed-form capacity comparisons
inline constexpr double eigen_residual = 1e-9;   // eigensolver reconstruction quality
inline constexpr double support_eigenvalue = 1e-12; // state-support membership

} // namespace qswitch::tol
