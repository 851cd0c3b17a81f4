#include "ogpush/pushforward.hpp"

#include <algorithm>

namespace ogpush {

const char* to_string(Component c) {
  switch (c) {
    case Component::Plus: return "plus";
    case Component::Minus: return "minus";
    case Component::Full: return "full";
  }
  return "?";
}

const char* to_string(Route r) {
  switch (r) {
    case Route::Oracle: return "oracle";
    case Route::Long: return "long";
    case Route::Short: return "short";
    case Route::Dp: return "dp";
    case Route::Closed: return "closed";
  }
  return "?";
}

std::optional<Component> parse_component(const std::string& s) {
  for (Component c : {Component::Plus, Component::Minus, Component::Full}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

std::optional<Route> parse_route(const std::string& s) {
  for (Route r : {Route::Oracle, Route::Long, Route::Short, Route::Dp, Route::Closed}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

SignVector::SignVector(std::vector<int> eps) : eps_(std::move(eps)) {
  for (int e : eps_) {
    if (e != 1 && e != -1) throw Error(ErrorCode::InvalidArgument, "signs must be +1 or -1");
  }
}

int SignVector::product() const {
  int p = 1;
  for (int e : eps_) p *= e;
  return p;
}

CharClass::CharClass(MultiPoly phi) : phi_(std::move(phi)) {
  for (int i = 1; i <= phi_.n(); ++i) {
    if (phi_.depends_on(t(i))) {
      throw Error(ErrorCode::UnexpectedVariable, "characteristic class may only involve z1..zn");
    }
  }
  if (!is_symmetric(phi_, z_vars(phi_.n()))) {
    throw Error(ErrorCode::NotSymmetric, "characteristic class must be symmetric in z1..zn");
  }
}

std::vector<SignVector> enumerate_fixed_points(int n, Component component) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::vector<SignVector> out;
  // Bit i set means eps_{i+1} = -1; ordering starts at (+,...,+).
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> eps(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eps[i] = (mask >> i) & 1U ? -1 : 1;
    SignVector sv(std::move(eps));
    if (component == Component::Full || sv.component() == component) out.push_back(std::move(sv));
  }
  return out;
}

std::vector<MultiPoly> tangent_weights(const SignVector& eps) {
  const int n = eps.n();
  std::vector<MultiPoly> w;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      w.push_back(MultiPoly::variable(n, t(i + 1)) * Rat(eps[i]) +
                  MultiPoly::variable(n, t(j + 1)) * Rat(eps[j]));
    }
  }
  return w;
}

MultiPoly euler_class(const SignVector& eps) { return product(eps.n(), tangent_weights(eps)); }

MultiPoly restrict_to_fixed_point(const MultiPoly& phi, const SignVector& eps) {
  const int n = eps.n();
  Bindings b;
  for (int i = 0; i < n; ++i) b.emplace(z(i + 1), MultiPoly::variable(n, t(i + 1)) * Rat(eps[i]));
  return poly_substitute(phi, b);
}

MultiPoly localize_pushforward(const CharClass& phi, Component component) {
  const int n = phi.n();
  std::vector<FactoredRatFunc> terms;
  for (const auto& eps : enumerate_fixed_points(n, component)) {
    terms.emplace_back(restrict_to_fixed_point(phi.phi(), eps), tangent_weights(eps));
  }
  return ratfunc_to_poly(ratfunc_sum(n, terms));
}

namespace {

MultiPoly var(int n, VarId v) { return MultiPoly::variable(n, v); }

MultiPoly prod_t(int n) {
  MultiPoly p(n, 1);
  for (int i = 1; i <= n; ++i) p *= var(n, t(i));
  return p;
}

MultiPoly prod_z(int n) {
  MultiPoly p(n, 1);
  for (int i = 1; i <= n; ++i) p *= var(n, z(i));
  return p;
}

Rat power_of_two(int k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Rat(r);
}

Rat factorial(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return Rat(r);
}

// (prod t + prod z) for Plus, (prod t - prod z) for Minus.
MultiPoly component_selector(int n, Component c) {
  return c == Component::Plus ? prod_t(n) + prod_z(n) : prod_t(n) - prod_z(n);
}

std::vector<MultiPoly> all_pairs_t2_minus_z2(int n) {
  std::vector<MultiPoly> f;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) f.push_back(var(n, t(i)).pow(2) - var(n, z(j)).pow(2));
  }
  return f;
}

// prod_{i<j} (t_j^2 - t_i^2), one factor each.
std::vector<MultiPoly> t_square_differences(int n) {
  std::vector<MultiPoly> f;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) f.push_back(var(n, t(j)).pow(2) - var(n, t(i)).pow(2));
  }
  return f;
}

std::vector<MultiPoly> t_linear(int n) {
  std::vector<MultiPoly> f;
  for (int i = 1; i <= n; ++i) f.push_back(var(n, t(i)));
  return f;
}

ResidueIntegrand long_integrand(const CharClass& phi, Component component) {
  const int n = phi.n();
  MultiPoly num = phi.phi();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) num *= var(n, z(j)) - var(n, z(i));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) num *= var(n, z(i)) + var(n, z(j));
  }
  num *= prod_z(n);

  if (component == Component::Full) {
    std::vector<MultiPoly> den;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        den.push_back(var(n, z(i)) + var(n, t(j)));
        den.push_back(var(n, t(i)) - var(n, z(j)));
      }
    }
    return {FactoredRatFunc(num, den), FactoredRatFunc(MultiPoly(n, power_of_two(n) / factorial(n)))};
  }
  num *= component_selector(n, component);
  return {FactoredRatFunc(num, all_pairs_t2_minus_z2(n)),
          FactoredRatFunc(MultiPoly(n, power_of_two(n - 1) / factorial(n)), t_linear(n))};
}

ResidueIntegrand short_integrand(const CharClass& phi, Component component) {
  const int n = phi.n();
  MultiPoly num = phi.phi();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) num *= var(n, z(j)) - var(n, z(i));
  }
  num *= prod_z(n);
  std::vector<MultiPoly> den;
  for (int i = 1; i <= n; ++i) den.push_back(var(n, t(i)).pow(2) - var(n, z(i)).pow(2));

  auto pre_factors = t_square_differences(n);
  if (component == Component::Full) {
    return {FactoredRatFunc(num, den), FactoredRatFunc(MultiPoly(n, power_of_two(n)), pre_factors)};
  }
  num *= component_selector(n, component);
  for (auto& f : t_linear(n)) pre_factors.push_back(std::move(f));
  return {FactoredRatFunc(num, den), FactoredRatFunc(MultiPoly(n, power_of_two(n - 1)), pre_factors)};
}

ResidueIntegrand dp_integrand(const CharClass& phi) {
  const int n = phi.n();
  MultiPoly num = phi.phi();
  for (int i = 1; i <= n; ++i) num *= var(n, z(i)).pow(static_cast<unsigned>(i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) num *= var(n, z(i)).pow(2) - var(n, z(j)).pow(2);
  }
  return {FactoredRatFunc(num, all_pairs_t2_minus_z2(n)), FactoredRatFunc(MultiPoly(n, power_of_two(n)))};
}

}  // namespace

FactoredRatFunc correction_factor(Component component, int n) {
  if (component == Component::Full) {
    throw Error(ErrorCode::InvalidArgument, "correction factor is defined for one component");
  }
  return FactoredRatFunc(component_selector(n, component) * Rat(1, 2), t_linear(n));
}

ResidueIntegrand residue_integrand(const CharClass& phi, Component component, Route route) {
  switch (route) {
    case Route::Long: return long_integrand(phi, component);
    case Route::Short: return short_integrand(phi, component);
    case Route::Dp:
      if (component != Component::Full) {
        throw Error(ErrorCode::UnsupportedRoute, "dp route applies to the whole space only");
      }
      return dp_integrand(phi);
    case Route::Oracle:
    case Route::Closed:
      break;
  }
  throw Error(ErrorCode::UnsupportedRoute, std::string(to_string(route)) + " is not a residue route");
}

MultiPoly residue_pushforward(const CharClass& phi, Component component, Route route,
                              ResidueAlgorithm algorithm) {
  const auto [integrand, prefactor] = residue_integrand(phi, component, route);
  const FactoredRatFunc res =
      iterated_residue_at_infinity(integrand, ResidueOrder::z_order(phi.n()), algorithm);
  return ratfunc_to_poly(res * prefactor);
}

MultiPoly schur_pushforward_closed(const Partition& lambda, Component component) {
  if (component == Component::Full) {
    throw Error(ErrorCode::UnsupportedRoute, "closed form applies to one component");
  }
  const int n = lambda.n();
  const ParityCase pc = decompose_parity(lambda);
  if (pc.tag == ParityTag::Neither) return MultiPoly(n);

  Bindings squares;
  for (int i = 1; i <= n; ++i) squares.emplace(t(i), var(n, t(i)).pow(2));
  MultiPoly value = poly_substitute(schur_t(*pc.mu), squares) * power_of_two(n - 1);
  if (pc.tag == ParityTag::RhoN) {
    value *= prod_t(n);
    if (component == Component::Minus) value = -value;
  }
  return value;
}

T2Expansion schur_t2_expand(const MultiPoly& p) {
  const int n = p.n();
  MultiPoly even(n);
  MultiPoly odd(n);
  for (const auto& [m, c] : p.terms()) {
    for (int i = 1; i <= n; ++i) {
      if (m.exponent(z(i)) != 0) throw Error(ErrorCode::UnexpectedVariable, "expansion in t only");
    }
    bool all_even = true;
    bool all_odd = true;
    for (int i = 1; i <= n; ++i) {
      const int e = m.exponent(t(i));
      all_even = all_even && e % 2 == 0;
      all_odd = all_odd && e % 2 == 1;
    }
    Monomial half(n);
    if (all_even) {
      for (int i = 1; i <= n; ++i) half.set_exponent(t(i), m.exponent(t(i)) / 2);
      even.add_term(half, c);
    } else if (all_odd) {
      for (int i = 1; i <= n; ++i) half.set_exponent(t(i), (m.exponent(t(i)) - 1) / 2);
      odd.add_term(half, c);
    } else {
      throw Error(ErrorCode::InvalidArgument, "term mixes even and odd exponents");
    }
  }
  return {schur_expand(even, t_vars(n)), schur_expand(odd, t_vars(n))};
}

std::vector<Route> available_routes(Component component, bool single_schur) {
  if (component == Component::Full) return {Route::Oracle, Route::Long, Route::Short, Route::Dp};
  std::vector<Route> r{Route::Oracle, Route::Long, Route::Short};
  if (single_schur) r.push_back(Route::Closed);
  return r;
}

MultiPoly compute_route(const CharClass& phi, Component component, Route route,
                        const std::optional<Partition>& schur_label) {
  switch (route) {
    case Route::Oracle: return localize_pushforward(phi, component);
    case Route::Closed:
      if (!schur_label) throw Error(ErrorCode::UnsupportedRoute, "closed form needs a single Schur class");
      if (schur_z(*schur_label) != phi.phi()) {
        throw Error(ErrorCode::InvalidArgument, "schur label does not match the class");
      }
      return schur_pushforward_closed(*schur_label, component);
    default: return residue_pushforward(phi, component, route);
  }
}

PushforwardReport cross_validate(const CharClass& phi, const std::optional<Partition>& schur_label) {
  if (schur_label && schur_z(*schur_label) != phi.phi()) {
    throw Error(ErrorCode::InvalidArgument, "schur label does not match the class");
  }
  PushforwardReport report;
  report.n = phi.n();
  report.schur_label = schur_label;
  report.agreement = true;
  for (Component c : {Component::Plus, Component::Minus, Component::Full}) {
    ComponentResult cr;
    for (Route r : available_routes(c, schur_label.has_value())) {
      cr.routes.emplace(r, compute_route(phi, c, r, schur_label));
    }
    const MultiPoly& oracle = cr.routes.at(Route::Oracle);
    cr.agreement = std::all_of(cr.routes.begin(), cr.routes.end(),
                               [&](const auto& entry) { return entry.second == oracle; });
    cr.schur_t2 = schur_t2_expand(oracle);
    report.agreement = report.agreement && cr.agreement;
    report.components.emplace(c, std::move(cr));
  }
  report.additivity = true;
  const auto& plus = report.components.at(Component::Plus).routes;
  const auto& minus = report.components.at(Component::Minus).routes;
  for (const auto& [route, value] : report.components.at(Component::Full).routes) {
    if (!plus.contains(route)) continue;
    report.additivity = report.additivity && value == plus.at(route) + minus.at(route);
  }
  report.agreement = report.agreement && report.additivity;
  return report;
}

}  // namespace ogpush
