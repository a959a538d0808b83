#pragma once

#include "alignlab/model.hpp"
#include "alignlab/orbits.hpp"
#include "alignlab/weight_poly.hpp"

namespace alignlab {

inline constexpr int kMaxOrbitEnumeration = 12;  // 4^12 joint assignments

/// Exact law of the per-orbit distance excess on one size-l orbit, as a
/// generating polynomial in the integer exponent (a for user kind, b for
/// attr kind). Enumerates all 2^l x 2^l edge assignments; requires l <= 12.
WeightExponentPoly orbit_pgf(int l, const JointEdgeDistribution& dist, PairKind kind);

/// Closed form of the size-2 orbit generating function at z > 0:
/// 1 + 2 d11 d00 (z^{2w} - 1) + 2 d10 d01 (z^{-2w} - 1), w chosen by kind.
double a2_closed(const JointEdgeDistribution& dist, PairKind kind, double z, const Weights& w);

/// (sqrt(d11 d00) - sqrt(d10 d01))^2; the minimum of the size-2 closed form
/// over z in (0,1) is 1 - 2 psi, attained at z = e^{-1/4}.
double psi(const JointEdgeDistribution& dist);

/// Exact law of the weighted-distance excess of perm under the model, as the
/// product of per-orbit polynomials. Requires every orbit size <= 12.
WeightExponentPoly full_pgf(const Permutation& perm, const ModelParams& params);
WeightExponentPoly full_pgf(const OrbitDecomposition& dec, const ModelParams& params);

/// Mass of the excess-distance law on (-inf, 0], i.e. the misalignment event
/// probability of one permutation.
double prob_delta_leq_zero(const WeightExponentPoly& poly, const Weights& w);

/// (1 - 2 psi_u)^{n_moved (n-2)/4} * (1 - 2 psi_a)^{n_moved m / 2}; dominates
/// the exact misalignment probability of any permutation moving n_moved
/// vertices. Psi values must lie in [0, 1/2).
double misalignment_bound(int n, int n_moved, int m, double psi_u, double psi_a);

enum class TailDirection { leq, geq, point };

/// Chernoff-style coefficient bound z^{-j} Phi(z): valid for any z > 0 at a
/// point, z in (0,1] for lower tails, z >= 1 for upper tails.
double pgf_tail_bound(const WeightExponentPoly& poly, const Weights& w, double z, double j,
                        TailDirection direction);

}  // namespace alignlab
