#pragma once

// K-theoretic localization on the components of OG(n,2n).
//
// At the fixed point eps the tautological dual bundle has characters
// t_i^{eps_i}, so S_lambda(R^dual) restricts to s_lambda(t^eps) and the
// tangent bundle (wedge^2 R^dual) has K-theoretic Euler class
// prod_{i<j} (1 - (t_i^{eps_i} t_j^{eps_j})^{-1}).

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ogpush/pushforward.hpp"

namespace ogpush {

// Laurent polynomial in t1..tn with rational coefficients.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;

  LaurentPoly() = default;
  explicit LaurentPoly(int n) : n_(n) {}
  LaurentPoly(int n, const Rat& c);

  static LaurentPoly monomial(Exponents e, const Rat& c);
  // p * t^shift; p may only involve t variables.
  static LaurentPoly from_poly(const MultiPoly& p, const Exponents& shift);
  static Exponents uniform(int n, int k) { return Exponents(static_cast<std::size_t>(n), k); }

  int n() const { return n_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Per-variable minimum exponent over all terms (zeros when empty).
  Exponents min_exponents() const;
  // this * t^shift as an ordinary polynomial; NotPolynomial if some exponent
  // stays negative.
  MultiPoly to_poly(const Exponents& shift) const;

  void add_term(const Exponents& e, const Rat& c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Applies t_i -> t_{perm[i]}^{signs[i]} (perm 0-based, signs +/-1).
  LaurentPoly transform(const std::vector<int>& perm, const std::vector<int>& signs) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  int n_ = 0;
  std::map<Exponents, Rat> terms_;
};

// Terms in ascending total absolute degree, ties with t1 most significant
// (larger exponent first); e.g. "1 + t1*t2 + t1^-1*t2^-1".
std::string format_laurent(const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// One factor 1 - (t^eps_i t^eps_j)^{-1} per pair i < j.
std::vector<LaurentPoly> k_euler_class(const SignVector& eps);
LaurentPoly k_euler_product(const SignVector& eps);

// s_lambda(t_1^{eps_1}, ..., t_n^{eps_n}).
LaurentPoly schur_laurent(const Partition& lambda, const SignVector& eps);

LaurentPoly k_localize_pushforward(const Partition& lambda, Component component);

bool k_component_equality_check(const Partition& lambda);

}  // namespace ogpush
