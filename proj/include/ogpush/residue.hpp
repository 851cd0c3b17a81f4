#pragma once

// Residues of rational functions in one variable at a time.
//
// Two independent routes compute the residue at infinity:
//  - PoleSum negates the sum of residues at the finite poles, which must all
//    be simple and linear after splitting quadratics of the form a*v^2 - b;
//  - Series substitutes v = 1/w and reads off a Laurent coefficient by
//    truncated power-series inversion of the denominator.
// The residue at infinity follows the usual sign convention: it is minus the
// coefficient of v^-1 in the expansion at v = infinity.

#include <vector>

#include "ogpush/ratfunc.hpp"

namespace ogpush {

enum class ResidueAlgorithm { PoleSum, Series };

// Iteration order: vars.front() is taken first (innermost).
class ResidueOrder {
 public:
  explicit ResidueOrder(std::vector<VarId> vars);
  static ResidueOrder z_order(int n);  // z1, ..., zn

  const std::vector<VarId>& vars() const { return vars_; }

 private:
  std::vector<VarId> vars_;
};

// Residue of f at the simple pole var = a.
FactoredRatFunc residue_at_simple_pole(const FactoredRatFunc& f, VarId var, const MultiPoly& a);

// Finite poles of f in var, one entry per distinct root (after splitting).
std::vector<MultiPoly> finite_poles(const FactoredRatFunc& f, VarId var);

// Residues at every finite pole, in the order of finite_poles.
std::vector<FactoredRatFunc> finite_residues(const FactoredRatFunc& f, VarId var);

FactoredRatFunc residue_at_infinity_polesum(const FactoredRatFunc& f, VarId var);
FactoredRatFunc residue_at_infinity_series(const FactoredRatFunc& f, VarId var);

FactoredRatFunc residue_at_infinity(const FactoredRatFunc& f, VarId var,
                                    ResidueAlgorithm algorithm = ResidueAlgorithm::PoleSum);

FactoredRatFunc iterated_residue_at_infinity(const FactoredRatFunc& f, const ResidueOrder& order,
                                             ResidueAlgorithm algorithm = ResidueAlgorithm::PoleSum);

// Rewrites every denominator factor a*var^2 - b, with b a monomial whose
// square root exists over Q, as a*(var - r)(var + r).
FactoredRatFunc split_quadratics(const FactoredRatFunc& f, VarId var);

}  // namespace ogpush
