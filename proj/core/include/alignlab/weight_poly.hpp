#pragma once

#include <map>
#include <string>
#include <utility>

#include "alignlab/alignment.hpp"

namespace alignlab {

inline constexpr double kCoeffTolerance = 1e-12;
inline constexpr double kPgfNormTolerance = 1e-9;

/// Laurent polynomial sum_{(a,b)} c_{a,b} z^{a w1 + b w2} with integer
/// exponent pairs. The weighted-distance excess of any permutation is always
/// of the form a*w1 + b*w2 with integers a, b, so exponents stay exact and
/// coefficient extraction never compares floating-point exponents.
class WeightExponentPoly {
 public:
  using Exponent = std::pair<int, int>;

  WeightExponentPoly() = default;

  static WeightExponentPoly one() {
    WeightExponentPoly p;
    p.add_term(0, 0, 1.0);
    return p;
  }

  void add_term(int a, int b, double coeff);

  const std::map<Exponent, double>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  double coefficient(int a, int b) const;

  /// Sum of all coefficients; 1 for a probability generating function.
  double total_mass() const;
  bool is_pgf() const;

  WeightExponentPoly operator*(const WeightExponentPoly& other) const;
  WeightExponentPoly pow(std::int64_t k) const;

  /// Value at z > 0: sum c * z^(a w1 + b w2).
  double evaluate(double z, const Weights& w) const;

  /// Mass on exponents with a w1 + b w2 <= tol (tol absorbs exact zeros).
  double mass_leq(double threshold, const Weights& w, double tol = kCoeffTolerance) const;
  double mass_geq(double threshold, const Weights& w, double tol = kCoeffTolerance) const;
  double mass_at(double value, const Weights& w, double tol = kCoeffTolerance) const;

  /// "((a,b), c)" lines in lexicographic exponent order.
  std::string dump() const;

 private:
  std::map<Exponent, double> terms_;
};

}  // namespace alignlab
