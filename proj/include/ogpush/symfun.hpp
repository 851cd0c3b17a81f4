#pragma once

// Partitions and symmetric functions: Schur polynomials by the bialternant
// formula and by tableaux, e/p/h generators, Schur-basis expansion, and the
// parity split lambda = 2 mu + rho(k) that decides which Schur classes push
// forward to nonzero values.

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogpush/poly.hpp"

namespace ogpush {

// Weakly decreasing nonnegative parts, padded with zeros to the ambient n.
class Partition {
 public:
  Partition() = default;
  // Throws NonPartition if parts increase or are negative, or if there are
  // more than n nonzero parts.
  Partition(std::vector<int> parts, int n);
  Partition(std::initializer_list<int> parts, int n) : Partition(std::vector<int>(parts), n) {}

  int n() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int size() const;    // |lambda|
  int length() const;  // number of nonzero parts
  bool is_empty() const { return size() == 0; }

  // "2,1,0" style key.
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// (k, k-1, ..., 1) padded to n; requires 0 <= k <= n.
Partition rho(int k, int n);

// All partitions with at most n parts, each part <= bound (lambda inside the
// n x bound box), in lexicographically decreasing order.
std::vector<Partition> partitions_in_box(int n, int bound);

// All partitions of `size` with at most n parts.
std::vector<Partition> partitions_of(int size, int n);

// The result lives in ambient_n variables. The bialternant needs
// vars.size() == lambda.n(); the tableau sum takes any number of variables
// and is zero when a column of lambda is longer than that.
MultiPoly schur_bialternant(const Partition& lambda, const std::vector<VarId>& vars, int ambient_n);
MultiPoly schur_tableaux(const Partition& lambda, const std::vector<VarId>& vars, int ambient_n);

// Convenience: s_lambda(z1..zn) with ambient n = lambda.n().
MultiPoly schur_z(const Partition& lambda);
MultiPoly schur_t(const Partition& lambda);

std::vector<VarId> z_vars(int n);
std::vector<VarId> t_vars(int n);

enum class ParityTag { RhoNMinus1, RhoN, Neither };

struct ParityCase {
  ParityTag tag = ParityTag::Neither;
  std::optional<Partition> mu;  // set unless Neither
};

const char* to_string(ParityTag tag);

ParityCase decompose_parity(const Partition& lambda);

enum class SymKind { E, P, H };

// e_k, p_k or h_k in vars; p_0 is the number of variables.
MultiPoly elementary_power_complete(int k, SymKind kind, const std::vector<VarId>& vars,
                                    int ambient_n);

// True when p is invariant under every permutation of vars.
bool is_symmetric(const MultiPoly& p, const std::vector<VarId>& vars);

// Coefficients c_lambda with p = sum c_lambda s_lambda(vars). p must be
// symmetric in vars (NotSymmetric otherwise) and may not involve any other
// variable (UnexpectedVariable).
std::map<Partition, Rat> schur_expand(const MultiPoly& p, const std::vector<VarId>& vars);

// Inverse of schur_expand.
MultiPoly schur_sum(const std::map<Partition, Rat>& coeffs, const std::vector<VarId>& vars,
                    int ambient_n);

}  // namespace ogpush
