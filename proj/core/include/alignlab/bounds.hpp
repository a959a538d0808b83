#pragma once

#include <cstdint>
#include <string>

#include "alignlab/model.hpp"

namespace alignlab {

/// Finite-n evaluations of the asymptotic feasibility conditions. Signed
/// margins stand in for the limit statements: a condition of the form
/// "expression -> infinity" is reported as the expression's value at this n.
struct MarginReport {
  double margin_thm1 = 0.0;      // n p11 + m psi_a - log n
  double margin_lemma2 = 0.0;    // n psi_u / 2 + m psi_a - log n
  double margin_converse = 0.0;  // n p11 + m q11 - log n

  // Sparse-regime condition ratios, each the left side scaled so that
  // boundedness of the ratio is the condition being probed.
  double sparse_p11_ratio = 0.0;        // p11 n / log n
  double sparse_cross_ratio = 0.0;      // (p10 + p01) log n
  double sparse_skew_ratio = 0.0;       // (p10 p01 / (p11 p00)) (log n)^3

  std::string region;  // R1 | R2 | R3 | R4 | UNDETERMINED
};

double margin_thm1(const ModelParams& params);
double margin_lemma2(const ModelParams& params);
double margin_converse(const ModelParams& params);

/// Feasibility-diagram label with slack eps around each margin. With m = 0
/// only R1 / R4 / UNDETERMINED are reachable.
std::string classify_region(const ModelParams& params, double eps = 0.0);

MarginReport margin_report(const ModelParams& params, double eps = 0.0);

/// Closed form of the misalignment union bound: with common ratio
/// rho = n (1-2 psi_u)^{(n-2)/4} (1-2 psi_a)^{m/2}, returns rho^2 / (1 - rho)
/// when rho < 1 and +infinity (vacuous) otherwise.
double union_bound_error(const ModelParams& params);

/// Inputs of the sparse-regime calculators. The O(1) constants the analysis
/// leaves unspecified are exposed here rather than guessed.
struct SparseBoundInputs {
  std::int64_t r = 0;             // co-occurring user edges
  std::int64_t r_tilde = 0;       // co-occurring user edges on the moving set
  int n = 2;
  int m = 0;
  std::int64_t t_user = 0;        // C(n,2)
  std::int64_t t_tilde_user = 0;  // moving user pairs
  double c_trunc = 0.0;           // additive O(1) constant inside z6
  double c_rstar = 2.718281828459045 + 1.01;  // truncation multiplier
};

/// Tilting point x11 = (r_tilde log n + p11 t_tilde_u) (1 - p11) / (p11 t_tilde_u);
/// positive for every valid input.
double tilted_x11(const SparseBoundInputs& inp, const JointEdgeDistribution& p_dist);

/// exp{(r n_moved / n)(-2 + e/(n-1) + 2 e z)}: dominates the exact
/// hypergeometric generating function of the moving-set co-occurrence count.
double hyp_pgf_bound(std::int64_t r, int n, int n_moved, double z);

/// min(1, 3 n^2 z6^2) with z6 = exp{-2r/n + (m/2) log(1 - 2 psi_a) + c_trunc}.
double truncated_union_bound(const SparseBoundInputs& inp, double psi_a);

}  // namespace alignlab
