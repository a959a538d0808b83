#include "alignlab/errors.hpp"

namespace alignlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::negative_entry: return "NegativeEntry";
    case Errc::sum_not_one: return "SumNotOne";
    case Errc::degenerate_marginal: return "DegenerateMarginal";
    case Errc::zero_entry: return "ZeroEntry";
    case Errc::nonpositive_correlation: return "NonpositiveCorrelation";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::n_too_large: return "NTooLarge";
    case Errc::n_too_small: return "NTooSmall";
    case Errc::l_too_large: return "LTooLarge";
    case Errc::orbit_too_large: return "OrbitTooLarge";
    case Errc::psi_out_of_range: return "PsiOutOfRange";
    case Errc::z_out_of_range: return "ZOutOfRange";
    case Errc::degenerate_input: return "DegenerateInput";
    case Errc::zero_pair_probability: return "ZeroPairProbability";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace alignlab
