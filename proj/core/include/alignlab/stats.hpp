#pragma once

#include <cstdint>

namespace alignlab {

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval for a binomial proportion at confidence given by
/// the normal quantile z (1.96 for 95%, 2.576 for 99%).
WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double z = 1.96);

}  // namespace alignlab
