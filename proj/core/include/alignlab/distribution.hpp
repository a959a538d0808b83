#pragma once

#include <array>

#include "alignlab/errors.hpp"

namespace alignlab {

inline constexpr double kProbabilityTolerance = 1e-12;

/// Joint law of one correlated edge indicator pair: P((G1,G2)(e) = (i,j)).
struct JointEdgeDistribution {
  double p11 = 0.0;
  double p10 = 0.0;
  double p01 = 0.0;
  double p00 = 1.0;

  /// Marginal edge probability in the first graph.
  double marginal1() const { return p11 + p10; }
  /// Marginal edge probability in the second graph.
  double marginal2() const { return p11 + p01; }

  bool positively_correlated() const { return p11 * p00 > p10 * p01; }
  bool all_positive() const { return p11 > 0.0 && p10 > 0.0 && p01 > 0.0 && p00 > 0.0; }

  /// Row-major {p11, p10, p01, p00}.
  std::array<double, 4> as_array() const { return {p11, p10, p01, p00}; }
};

/// Checks entries are nonnegative and sum to 1 within kProbabilityTolerance.
JointEdgeDistribution validate(double p11, double p10, double p01, double p00);
JointEdgeDistribution validate(const std::array<double, 4>& entries);

/// Pearson correlation of the two indicators. Both marginals must lie in (0,1).
double correlation(const JointEdgeDistribution& dist);

/// Base-graph density p subsampled twice with keep probabilities s1, s2.
struct SubsamplingParams {
  double p = 0.0;
  double s1 = 1.0;
  double s2 = 1.0;
};

JointEdgeDistribution from_subsampling(const SubsamplingParams& sp);

}  // namespace alignlab
