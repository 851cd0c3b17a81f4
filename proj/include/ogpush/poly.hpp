#pragma once

// Exact multivariate polynomials over Q in the variables t1..tn, z1..zn.
//
// A polynomial carries its ambient n; arithmetic between polynomials of
// different ambient size is a DimensionMismatch. Terms are kept in
// graded-lexicographic order with t1 < ... < tn < z1 < ... < zn, leading
// term first, so iteration order is also the canonical printing order.

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ogpush/error.hpp"

namespace ogpush {

using Rat = mpq_class;

enum class VarClass { T, Z };

struct VarId {
  VarClass cls = VarClass::Z;
  int index = 1;  // 1-based

  friend auto operator<=>(const VarId&, const VarId&) = default;
  friend bool operator==(const VarId&, const VarId&) = default;
};

inline VarId t(int i) { return {VarClass::T, i}; }
inline VarId z(int i) { return {VarClass::Z, i}; }

std::string var_name(VarId v);

// Exponent vector over the 2n variables, laid out as t1..tn, z1..zn.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : n_(n), exps_(static_cast<std::size_t>(2 * n), 0) {}

  int n() const { return n_; }
  std::size_t size() const { return exps_.size(); }
  int degree() const;
  bool is_one() const { return degree() == 0; }

  int operator[](std::size_t pos) const { return exps_[pos]; }
  int& operator[](std::size_t pos) { return exps_[pos]; }
  int exponent(VarId v) const { return exps_[position(v)]; }
  void set_exponent(VarId v, int e) { exps_[position(v)] = e; }

  std::size_t position(VarId v) const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  int n_ = 0;
  std::vector<int> exps_;
};

// Strict graded-lex "greater than": used as the map comparator so that the
// leading monomial sorts first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Three-way graded-lex comparison: negative if a < b.
int grlex_compare(const Monomial& a, const Monomial& b);

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(int n) : n_(n) {}
  MultiPoly(int n, const Rat& c);

  static MultiPoly constant(int n, const Rat& c) { return MultiPoly(n, c); }
  static MultiPoly variable(int n, VarId v);
  static MultiPoly monomial(const Monomial& m, const Rat& c);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term value; zero when absent.
  Rat constant_term() const;
  int total_degree() const;
  int degree_in(VarId v) const;
  bool depends_on(VarId v) const { return degree_in(v) > 0; }
  bool is_homogeneous() const;

  // Requires !is_zero().
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rat& leading_coefficient() const { return terms_.begin()->second; }

  // Adds c * m in place.
  void add_term(const Monomial& m, const Rat& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  MultiPoly pow(unsigned k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  // Total order used to key denominator factors; not an algebraic order.
  friend bool operator<(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_same_n(const MultiPoly& o) const;

  int n_ = 0;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

using Bindings = std::map<VarId, MultiPoly>;

// Exact quotient; throws NotDivisible when b does not divide a.
MultiPoly poly_exact_div(const MultiPoly& a, const MultiPoly& b);
std::optional<MultiPoly> try_exact_div(const MultiPoly& a, const MultiPoly& b);

// Simultaneous substitution of the bound variables.
MultiPoly poly_substitute(const MultiPoly& p, const Bindings& bindings);

// Coefficients of p as a polynomial in v: result[k] multiplies v^k.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, VarId v);

// Product of the given polynomials (1 for an empty list).
MultiPoly product(int n, const std::vector<MultiPoly>& factors);

}  // namespace ogpush
