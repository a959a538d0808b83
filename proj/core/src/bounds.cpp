#include "alignlab/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "alignlab/genfunc.hpp"

namespace alignlab {

double margin_thm1(const ModelParams& params) {
  check_params(params);
  return params.n * params.p_user.p11 + params.m * psi(params.q_attr) - std::log(params.n);
}

double margin_lemma2(const ModelParams& params) {
  check_params(params);
  return params.n * psi(params.p_user) / 2.0 + params.m * psi(params.q_attr) -
         std::log(params.n);
}

double margin_converse(const ModelParams& params) {
  check_params(params);
  return params.n * params.p_user.p11 + params.m * params.q_attr.p11 - std::log(params.n);
}

std::string classify_region(const ModelParams& params, double eps) {
  check_params(params);
  const double logn = std::log(params.n);
  const double user_only = params.n * params.p_user.p11 - logn;
  if (user_only > eps) return "R1";
  if (margin_converse(params) < -eps) return "R4";
  if (params.m > 0) {
    const double q11 = params.q_attr.p11;
    const double threshold = std::pow(static_cast<double>(params.m), -2.0 / 3.0);
    if (q11 <= threshold && margin_converse(params) > eps) return "R2";
    if (q11 > threshold && margin_thm1(params) > eps) return "R3";
  }
  return "UNDETERMINED";
}

MarginReport margin_report(const ModelParams& params, double eps) {
  check_params(params);
  MarginReport r;
  r.margin_thm1 = margin_thm1(params);
  r.margin_lemma2 = margin_lemma2(params);
  r.margin_converse = margin_converse(params);
  const double logn = std::log(params.n);
  const auto& p = params.p_user;
  r.sparse_p11_ratio = p.p11 * params.n / logn;
  r.sparse_cross_ratio = (p.p10 + p.p01) * logn;
  r.sparse_skew_ratio = p.p11 * p.p00 > 0.0
                            ? (p.p10 * p.p01) / (p.p11 * p.p00) * logn * logn * logn
                            : std::numeric_limits<double>::infinity();
  r.region = classify_region(params, eps);
  return r;
}

double union_bound_error(const ModelParams& params) {
  check_params(params);
  const double psi_u = psi(params.p_user);
  const double psi_a = psi(params.q_attr);
  const double ratio = params.n * std::pow(1.0 - 2.0 * psi_u, (params.n - 2) / 4.0) *
                       std::pow(1.0 - 2.0 * psi_a, params.m / 2.0);
  if (!(ratio < 1.0)) return std::numeric_limits<double>::infinity();
  return ratio * ratio / (1.0 - ratio);
}

double tilted_x11(const SparseBoundInputs& inp, const JointEdgeDistribution& p_dist) {
  if (inp.t_tilde_user <= 0 || !(p_dist.p11 > 0.0 && p_dist.p11 < 1.0))
    fail(Errc::degenerate_input, "tilting needs t_tilde_user > 0 and p11 in (0,1)");
  if (inp.n < 2) fail(Errc::degenerate_input, "tilting needs n >= 2");
  const double ttu = static_cast<double>(inp.t_tilde_user);
  const double numerator = static_cast<double>(inp.r_tilde) * std::log(inp.n) + p_dist.p11 * ttu;
  return numerator * (1.0 - p_dist.p11) / (p_dist.p11 * ttu);
}

double hyp_pgf_bound(std::int64_t r, int n, int n_moved, double z) {
  if (n < 2) fail(Errc::degenerate_input, "bound needs n >= 2");
  if (!(z > 0.0)) fail(Errc::z_out_of_range, "bound needs z > 0");
  constexpr double e = 2.718281828459045;
  const double scale = static_cast<double>(r) * n_moved / n;
  return std::exp(scale * (-2.0 + e / (n - 1) + 2.0 * e * z));
}

double truncated_union_bound(const SparseBoundInputs& inp, double psi_a) {
  if (!(psi_a >= 0.0 && psi_a < 0.5))
    fail(Errc::psi_out_of_range, "psi_a " + std::to_string(psi_a) + " outside [0, 1/2)");
  const double z6 = std::exp(-2.0 * static_cast<double>(inp.r) / inp.n +
                             inp.m / 2.0 * std::log(1.0 - 2.0 * psi_a) + inp.c_trunc);
  const double bound = 3.0 * static_cast<double>(inp.n) * inp.n * z6 * z6;
  return std::min(1.0, bound);
}

}  // namespace alignlab
