#include "alignlab/genfunc.hpp"

#include <cmath>
#include <map>
#include <string>

namespace alignlab {

WeightExponentPoly orbit_pgf(int l, const JointEdgeDistribution& dist, PairKind kind) {
  if (l < 1) fail(Errc::invalid_argument, "orbit size must be >= 1");
  if (l > kMaxOrbitEnumeration)
    fail(Errc::l_too_large, "orbit size " + std::to_string(l) + " exceeds enumeration cap " +
                                std::to_string(kMaxOrbitEnumeration));

  // prob[g][h] of one pair's joint value
  const double prob[2][2] = {{dist.p00, dist.p01}, {dist.p10, dist.p11}};

  WeightExponentPoly out;
  const std::uint32_t count = 1u << l;
  for (std::uint32_t g = 0; g < count; ++g) {
    for (std::uint32_t h = 0; h < count; ++h) {
      double coeff = 1.0;
      int exponent = 0;
      for (int t = 0; t < l; ++t) {
        const int gt = (g >> t) & 1;
        const int ht = (h >> t) & 1;
        const int hnext = (h >> ((t + 1) % l)) & 1;
        coeff *= prob[gt][ht];
        exponent += (gt != hnext) - (gt != ht);
      }
      if (kind == PairKind::user)
        out.add_term(exponent, 0, coeff);
      else
        out.add_term(0, exponent, coeff);
    }
  }
  return out;
}

double a2_closed(const JointEdgeDistribution& dist, PairKind kind, double z, const Weights& w) {
  if (!(z > 0.0)) fail(Errc::z_out_of_range, "closed form needs z > 0");
  const double wk = kind == PairKind::user ? w.w1 : w.w2;
  return 1.0 + 2.0 * dist.p11 * dist.p00 * (std::pow(z, 2.0 * wk) - 1.0) +
         2.0 * dist.p10 * dist.p01 * (std::pow(z, -2.0 * wk) - 1.0);
}

double psi(const JointEdgeDistribution& dist) {
  const double s = std::sqrt(dist.p11 * dist.p00) - std::sqrt(dist.p10 * dist.p01);
  return s * s;
}

WeightExponentPoly full_pgf(const OrbitDecomposition& dec, const ModelParams& params) {
  const int max_l = dec.max_orbit_size();
  if (max_l > kMaxOrbitEnumeration)
    fail(Errc::orbit_too_large, "an orbit of size " + std::to_string(max_l) +
                                    " exceeds enumeration cap " +
                                    std::to_string(kMaxOrbitEnumeration));
  WeightExponentPoly result = WeightExponentPoly::one();
  for (const auto& [l, count] : dec.t_l_user) {
    if (l == 1) continue;  // size-1 orbits contribute the constant 1
    result = result * orbit_pgf(l, params.p_user, PairKind::user).pow(count);
  }
  for (const auto& [l, count] : dec.t_l_attr) {
    if (l == 1) continue;
    result = result * orbit_pgf(l, params.q_attr, PairKind::attr).pow(count);
  }
  return result;
}

WeightExponentPoly full_pgf(const Permutation& perm, const ModelParams& params) {
  check_params(params);
  if (perm.size() != params.n) fail(Errc::dimension_mismatch, "permutation length != n");
  return full_pgf(induced_orbits(perm, params.m), params);
}

double prob_delta_leq_zero(const WeightExponentPoly& poly, const Weights& w) {
  if (!poly.is_pgf()) fail(Errc::invalid_argument, "polynomial is not a probability law");
  return poly.mass_leq(0.0, w);
}

double misalignment_bound(int n, int n_moved, int m, double psi_u, double psi_a) {
  for (double p : {psi_u, psi_a}) {
    if (!(p >= 0.0 && p < 0.5))
      fail(Errc::psi_out_of_range, "psi " + std::to_string(p) + " outside [0, 1/2)");
  }
  const double eu = static_cast<double>(n_moved) * (n - 2) / 4.0;
  const double ea = static_cast<double>(n_moved) * m / 2.0;
  return std::pow(1.0 - 2.0 * psi_u, eu) * std::pow(1.0 - 2.0 * psi_a, ea);
}

double pgf_tail_bound(const WeightExponentPoly& poly, const Weights& w, double z, double j,
                        TailDirection direction) {
  switch (direction) {
    case TailDirection::point:
      if (!(z > 0.0)) fail(Errc::z_out_of_range, "point bound needs z > 0");
      break;
    case TailDirection::leq:
      if (!(z > 0.0 && z <= 1.0)) fail(Errc::z_out_of_range, "lower-tail bound needs z in (0,1]");
      break;
    case TailDirection::geq:
      if (!(z >= 1.0)) fail(Errc::z_out_of_range, "upper-tail bound needs z >= 1");
      break;
  }
  return std::pow(z, -j) * poly.evaluate(z, w);
}

}  // namespace alignlab
