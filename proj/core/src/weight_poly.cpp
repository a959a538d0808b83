#include "alignlab/weight_poly.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "alignlab/errors.hpp"

namespace alignlab {

void WeightExponentPoly::add_term(int a, int b, double coeff) {
  if (coeff == 0.0) return;
  terms_[{a, b}] += coeff;
}

double WeightExponentPoly::coefficient(int a, int b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? 0.0 : it->second;
}

double WeightExponentPoly::total_mass() const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool WeightExponentPoly::is_pgf() const {
  for (const auto& [e, c] : terms_)
    if (c < -kCoeffTolerance) return false;
  return std::fabs(total_mass() - 1.0) <= kPgfNormTolerance;
}

WeightExponentPoly WeightExponentPoly::operator*(const WeightExponentPoly& other) const {
  WeightExponentPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_)
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

WeightExponentPoly WeightExponentPoly::pow(std::int64_t k) const {
  if (k < 0) fail(Errc::invalid_argument, "negative polynomial power");
  WeightExponentPoly result = one();
  WeightExponentPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

double WeightExponentPoly::evaluate(double z, const Weights& w) const {
  if (!(z > 0.0)) fail(Errc::z_out_of_range, "evaluation needs z > 0");
  const double lz = std::log(z);
  double s = 0.0;
  for (const auto& [e, c] : terms_)
    s += c * std::exp((e.first * w.w1 + e.second * w.w2) * lz);
  return s;
}

double WeightExponentPoly::mass_leq(double threshold, const Weights& w, double tol) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_)
    if (e.first * w.w1 + e.second * w.w2 <= threshold + tol) s += c;
  return s;
}

double WeightExponentPoly::mass_geq(double threshold, const Weights& w, double tol) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_)
    if (e.first * w.w1 + e.second * w.w2 >= threshold - tol) s += c;
  return s;
}

double WeightExponentPoly::mass_at(double value, const Weights& w, double tol) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_)
    if (std::fabs(e.first * w.w1 + e.second * w.w2 - value) <= tol) s += c;
  return s;
}

std::string WeightExponentPoly::dump() const {
  std::string out;
  char buf[96];
  for (const auto& [e, c] : terms_) {
    std::snprintf(buf, sizeof(buf), "((%d,%d), %.17g)\n", e.first, e.second, c);
    out += buf;
  }
  return out;
}

}  // namespace alignlab
