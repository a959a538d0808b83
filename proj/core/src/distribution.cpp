#include "alignlab/distribution.hpp"

#include <cmath>
#include <string>

namespace alignlab {

JointEdgeDistribution validate(double p11, double p10, double p01, double p00) {
  const double entries[4] = {p11, p10, p01, p00};
  for (double e : entries) {
    if (!(e >= 0.0)) fail(Errc::negative_entry, "entry " + std::to_string(e) + " < 0");
  }
  const double sum = p11 + p10 + p01 + p00;
  if (std::fabs(sum - 1.0) > kProbabilityTolerance)
    fail(Errc::sum_not_one, "entries sum to " + std::to_string(sum));
  return JointEdgeDistribution{p11, p10, p01, p00};
}

JointEdgeDistribution validate(const std::array<double, 4>& e) {
  return validate(e[0], e[1], e[2], e[3]);
}

double correlation(const JointEdgeDistribution& dist) {
  const double m1 = dist.marginal1();
  const double m2 = dist.marginal2();
  if (m1 <= 0.0 || m1 >= 1.0 || m2 <= 0.0 || m2 >= 1.0)
    fail(Errc::degenerate_marginal, "marginals " + std::to_string(m1) + ", " + std::to_string(m2));
  const double cov = dist.p11 - m1 * m2;
  return cov / std::sqrt(m1 * (1.0 - m1) * m2 * (1.0 - m2));
}

JointEdgeDistribution from_subsampling(const SubsamplingParams& sp) {
  for (double v : {sp.p, sp.s1, sp.s2}) {
    if (!(v >= 0.0 && v <= 1.0))
      fail(Errc::invalid_argument, "subsampling parameter " + std::to_string(v) + " outside [0,1]");
  }
  return JointEdgeDistribution{
      sp.p * sp.s1 * sp.s2,
      sp.p * sp.s1 * (1.0 - sp.s2),
      sp.p * (1.0 - sp.s1) * sp.s2,
      sp.p * (1.0 - sp.s1) * (1.0 - sp.s2) + 1.0 - sp.p,
  };
}

}  // namespace alignlab
