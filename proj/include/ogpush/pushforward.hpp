#pragma once

// Equivariant push-forward from the even orthogonal Grassmannian OG(n,2n)
// (or one of its two components) to a point.
//
// Torus fixed points are sign vectors eps in {+1,-1}^n; the fixed point eps
// lies on the plus component iff prod(eps) = +1. The tangent weights there
// are eps_i t_i + eps_j t_j for i < j, and a class phi(R^dual) restricts to
// phi(eps_1 t_1, ..., eps_n t_n).
//
// Every route below returns a polynomial in t1..tn:
//   Oracle  localization sum over fixed points (ground truth)
//   Long    residue formula with the full product over all (i, j) pairs
//   Short   residue formula with one factor per variable
//   Dp      residue formula with the z^i weights (whole space only)
//   Closed  closed form for a single Schur class (components only)

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogpush/ratfunc.hpp"
#include "ogpush/residue.hpp"
#include "ogpush/symfun.hpp"

namespace ogpush {

enum class Component { Plus, Minus, Full };
enum class Route { Oracle, Long, Short, Dp, Closed };

const char* to_string(Component c);
const char* to_string(Route r);
std::optional<Component> parse_component(const std::string& s);
std::optional<Route> parse_route(const std::string& s);

class SignVector {
 public:
  explicit SignVector(std::vector<int> eps);

  int n() const { return static_cast<int>(eps_.size()); }
  int operator[](std::size_t i) const { return eps_[i]; }
  const std::vector<int>& signs() const { return eps_; }
  int product() const;
  Component component() const { return product() == 1 ? Component::Plus : Component::Minus; }

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> eps_;
};

// A symmetric polynomial in z1..zn standing for phi(R^dual).
class CharClass {
 public:
  // Throws UnexpectedVariable if phi involves any t, NotSymmetric if it is
  // not symmetric in z1..zn.
  explicit CharClass(MultiPoly phi);

  int n() const { return phi_.n(); }
  const MultiPoly& phi() const { return phi_; }

 private:
  MultiPoly phi_;
};

std::vector<SignVector> enumerate_fixed_points(int n, Component component);

// Tangent weights eps_i t_i + eps_j t_j, i < j, in lexicographic (i, j) order.
std::vector<MultiPoly> tangent_weights(const SignVector& eps);
MultiPoly euler_class(const SignVector& eps);

// phi(eps_1 t_1, ..., eps_n t_n).
MultiPoly restrict_to_fixed_point(const MultiPoly& phi, const SignVector& eps);

MultiPoly localize_pushforward(const CharClass& phi, Component component);

// (prod t +/- prod z) / (2 prod t); Full is rejected.
FactoredRatFunc correction_factor(Component component, int n);

// The form under the residue and the constant in front of it, for one
// residue route; the push-forward is prefactor * res_{z = infinity}(integrand).
struct ResidueIntegrand {
  FactoredRatFunc integrand;
  FactoredRatFunc prefactor;
};

ResidueIntegrand residue_integrand(const CharClass& phi, Component component, Route route);

MultiPoly residue_pushforward(const CharClass& phi, Component component, Route route,
                              ResidueAlgorithm algorithm = ResidueAlgorithm::PoleSum);

// Closed form for pi_* s_lambda(R^dual) on a component.
MultiPoly schur_pushforward_closed(const Partition& lambda, Component component);

// Result written as sum c_mu s_mu(t^2) + (t1...tn) sum d_nu s_nu(t^2).
struct T2Expansion {
  std::map<Partition, Rat> even;
  std::map<Partition, Rat> with_t_factor;
};

// Throws InvalidArgument when some term is neither even in every t_i nor odd
// in every t_i.
T2Expansion schur_t2_expand(const MultiPoly& p);

struct ComponentResult {
  std::map<Route, MultiPoly> routes;
  bool agreement = false;
  T2Expansion schur_t2;
};

struct PushforwardReport {
  int n = 0;
  std::optional<Partition> schur_label;
  std::map<Component, ComponentResult> components;
  bool additivity = false;  // every route: Full = Plus + Minus
  bool agreement = false;   // all of the above and every component agreement
};

// All routes on all three components; closed form only when schur_label is
// given (phi must then equal s_label(z)).
PushforwardReport cross_validate(const CharClass& phi, const std::optional<Partition>& schur_label = {});

// The routes that exist for a component.
std::vector<Route> available_routes(Component component, bool single_schur);

MultiPoly compute_route(const CharClass& phi, Component component, Route route,
                        const std::optional<Partition>& schur_label = {});

}  // namespace ogpush
