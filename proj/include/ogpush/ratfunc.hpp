#pragma once

// Rational functions kept as numerator / product of explicit factors.
//
// Factors are stored normalized: non-constant, leading coefficient 1, merged
// by equality. Constants are folded into the numerator. Nothing here computes
// a gcd; cancellation is trial exact division of the numerator by each
// factor, which is enough when every denominator is a product of known
// linear and quadratic forms.

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ogpush/poly.hpp"

namespace ogpush {

class FactoredRatFunc {
 public:
  using Factor = std::pair<MultiPoly, int>;  // (polynomial, multiplicity)

  FactoredRatFunc() = default;
  explicit FactoredRatFunc(MultiPoly numerator);
  FactoredRatFunc(MultiPoly numerator, const std::vector<Factor>& factors);
  FactoredRatFunc(MultiPoly numerator, const std::vector<MultiPoly>& factors);

  int n() const { return num_.n(); }
  const MultiPoly& numerator() const { return num_; }
  const std::vector<Factor>& denominator_factors() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool depends_on(VarId v) const;

  // Expanded product of the denominator factors.
  MultiPoly denominator() const;

  // Divides the numerator by every factor it is exactly divisible by.
  FactoredRatFunc& cancel();

  FactoredRatFunc operator-() const;
  friend FactoredRatFunc operator+(const FactoredRatFunc& a, const FactoredRatFunc& b);
  friend FactoredRatFunc operator-(const FactoredRatFunc& a, const FactoredRatFunc& b);
  friend FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b);
  friend FactoredRatFunc operator*(const FactoredRatFunc& a, const Rat& c);

  // Semantic equality by cross-multiplication.
  friend bool operator==(const FactoredRatFunc& a, const FactoredRatFunc& b);

 private:
  void add_factor(MultiPoly f, int multiplicity);

  MultiPoly num_;
  std::vector<Factor> den_;  // sorted by polynomial, unique
};

std::ostream& operator<<(std::ostream& os, const FactoredRatFunc& f);

// Sum over a common denominator with a single cancellation pass.
FactoredRatFunc ratfunc_sum(int n, std::span<const FactoredRatFunc> terms);

// Substitutes into numerator and every factor. A factor that becomes zero is
// reported as NotSimplePole (a pole was hit).
FactoredRatFunc ratfunc_substitute(const FactoredRatFunc& f, const Bindings& bindings);

// The unique polynomial equal to f; NotPolynomial when a factor survives
// cancellation.
MultiPoly ratfunc_to_poly(FactoredRatFunc f);

}  // namespace ogpush
