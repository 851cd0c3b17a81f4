#include "ogpush/residue.hpp"

#include <algorithm>
#include <set>

namespace ogpush {

ResidueOrder::ResidueOrder(std::vector<VarId> vars) : vars_(std::move(vars)) {
  std::set<VarId> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) {
    throw Error(ErrorCode::InvalidArgument, "residue order repeats a variable");
  }
}

ResidueOrder ResidueOrder::z_order(int n) {
  std::vector<VarId> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(z(i));
  return ResidueOrder(std::move(vars));
}

namespace {

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  Rat r;
  mpz_sqrt(r.get_num_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(r.get_den_mpz_t(), q.get_den_mpz_t());
  r.canonicalize();
  return r;
}

// Square root of a single-term polynomial, if it has one over Q.
std::optional<MultiPoly> monomial_sqrt(const MultiPoly& p) {
  if (p.num_terms() != 1) return std::nullopt;
  const auto& [m, c] = *p.terms().begin();
  Monomial half(m.n());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] % 2 != 0) return std::nullopt;
    half[i] = m[i] / 2;
  }
  auto rc = rational_sqrt(c);
  if (!rc) return std::nullopt;
  return MultiPoly::monomial(half, *rc);
}

// Residue at the root of the linear factor den[index]; `g` is already split.
FactoredRatFunc residue_at_factor(const FactoredRatFunc& g, VarId var, std::size_t index) {
  const auto& factors = g.denominator_factors();
  const auto& [h, mult] = factors[index];
  if (h.degree_in(var) != 1) {
    throw Error(ErrorCode::NonlinearFactor, "pole factor " + var_name(var) + " is not linear");
  }
  if (mult != 1) throw Error(ErrorCode::NotSimplePole, "pole of order " + std::to_string(mult));
  const auto coeffs = coefficients_in(h, var);
  const MultiPoly& c = coeffs[1];
  std::optional<MultiPoly> root = try_exact_div(-coeffs[0], c);
  if (!root) throw Error(ErrorCode::NonlinearFactor, "pole is not a polynomial in the other variables");

  const Bindings at_root{{var, *root}};
  std::vector<FactoredRatFunc::Factor> rest;
  rest.reserve(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k == index) continue;
    const auto& [f, m] = factors[k];
    if (!f.depends_on(var)) {
      rest.emplace_back(f, m);
      continue;
    }
    MultiPoly image = poly_substitute(f, at_root);
    if (image.is_zero()) {
      throw Error(ErrorCode::NotSimplePole, "several denominator factors vanish at the pole");
    }
    rest.emplace_back(std::move(image), m);
  }
  rest.emplace_back(c, 1);
  return FactoredRatFunc(poly_substitute(g.numerator(), at_root), rest);
}

std::vector<std::size_t> pole_factor_indices(const FactoredRatFunc& g, VarId var) {
  std::vector<std::size_t> idx;
  const auto& factors = g.denominator_factors();
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].first.depends_on(var)) idx.push_back(k);
  }
  return idx;
}

// -(sum of finite residues), kept as a list of terms.
void polesum_terms(const FactoredRatFunc& f, VarId var, std::vector<FactoredRatFunc>& out) {
  if (f.is_zero()) return;
  const FactoredRatFunc g = split_quadratics(f, var);
  for (std::size_t k : pole_factor_indices(g, var)) {
    FactoredRatFunc r = residue_at_factor(g, var, k);
    if (!r.is_zero()) out.push_back(-r);
  }
}

}  // namespace

FactoredRatFunc split_quadratics(const FactoredRatFunc& f, VarId var) {
  const int n = f.n();
  std::vector<FactoredRatFunc::Factor> factors;
  Rat scale = 1;
  bool changed = false;
  for (const auto& [g, m] : f.denominator_factors()) {
    if (g.degree_in(var) == 2) {
      const auto coeffs = coefficients_in(g, var);
      if (coeffs[1].is_zero() && coeffs[2].is_constant()) {
        const Rat lead = coeffs[2].constant_term();
        auto root = monomial_sqrt(-coeffs[0] * (1 / lead));
        if (coeffs[0].is_zero()) root = MultiPoly(n);
        if (root) {
          const MultiPoly v = MultiPoly::variable(n, var);
          for (int k = 0; k < m; ++k) scale /= lead;
          if (root->is_zero()) {
            factors.emplace_back(v, 2 * m);
          } else {
            factors.emplace_back(v - *root, m);
            factors.emplace_back(v + *root, m);
          }
          changed = true;
          continue;
        }
      }
    }
    factors.emplace_back(g, m);
  }
  if (!changed) return f;
  return FactoredRatFunc(f.numerator() * scale, factors);
}

FactoredRatFunc residue_at_simple_pole(const FactoredRatFunc& f, VarId var, const MultiPoly& a) {
  const FactoredRatFunc g = split_quadratics(f, var);
  const Bindings at{{var, a}};
  std::optional<std::size_t> vanishing;
  const auto& factors = g.denominator_factors();
  for (std::size_t k : pole_factor_indices(g, var)) {
    if (!poly_substitute(factors[k].first, at).is_zero()) continue;
    if (vanishing) throw Error(ErrorCode::NotSimplePole, "several denominator factors vanish");
    vanishing = k;
  }
  if (!vanishing) throw Error(ErrorCode::NotSimplePole, "no denominator factor vanishes");
  return residue_at_factor(g, var, *vanishing);
}

std::vector<MultiPoly> finite_poles(const FactoredRatFunc& f, VarId var) {
  const FactoredRatFunc g = split_quadratics(f, var);
  std::vector<MultiPoly> roots;
  for (std::size_t k : pole_factor_indices(g, var)) {
    const MultiPoly& h = g.denominator_factors()[k].first;
    if (h.degree_in(var) != 1) throw Error(ErrorCode::NonlinearFactor, "pole factor is not linear");
    const auto coeffs = coefficients_in(h, var);
    auto root = try_exact_div(-coeffs[0], coeffs[1]);
    if (!root) throw Error(ErrorCode::NonlinearFactor, "pole is not a polynomial");
    roots.push_back(*std::move(root));
  }
  return roots;
}

std::vector<FactoredRatFunc> finite_residues(const FactoredRatFunc& f, VarId var) {
  const FactoredRatFunc g = split_quadratics(f, var);
  std::vector<FactoredRatFunc> out;
  for (std::size_t k : pole_factor_indices(g, var)) out.push_back(residue_at_factor(g, var, k));
  return out;
}

FactoredRatFunc residue_at_infinity_polesum(const FactoredRatFunc& f, VarId var) {
  std::vector<FactoredRatFunc> terms;
  polesum_terms(f, var, terms);
  return ratfunc_sum(f.n(), terms);
}

FactoredRatFunc residue_at_infinity_series(const FactoredRatFunc& f, VarId var) {
  const int n = f.n();
  if (f.is_zero()) return FactoredRatFunc(MultiPoly(n));

  std::vector<FactoredRatFunc::Factor> kept;
  MultiPoly den(n, 1);
  for (const auto& [g, m] : f.denominator_factors()) {
    if (g.depends_on(var)) {
      den *= g.pow(static_cast<unsigned>(m));
    } else {
      kept.emplace_back(g, m);
    }
  }

  const auto num_coeffs = coefficients_in(f.numerator(), var);
  const auto den_coeffs = coefficients_in(den, var);
  const int deg_num = static_cast<int>(num_coeffs.size()) - 1;
  const int deg_den = static_cast<int>(den_coeffs.size()) - 1;
  const int order = deg_num - deg_den + 1;  // wanted coefficient of w^order
  if (order < 0) return FactoredRatFunc(MultiPoly(n));

  // Reversed coefficients: f(1/w) = w^(deg_den - deg_num) * rnum(w) / rden(w).
  auto rnum = [&](int j) -> const MultiPoly& { return num_coeffs[static_cast<std::size_t>(deg_num - j)]; };
  auto rden = [&](int j) -> const MultiPoly& { return den_coeffs[static_cast<std::size_t>(deg_den - j)]; };
  const MultiPoly& lead = rden(0);

  // series[k] = [w^k] lead^(order+1) / rden(w), all polynomial.
  std::vector<MultiPoly> series;
  series.reserve(static_cast<std::size_t>(order + 1));
  series.push_back(lead.pow(static_cast<unsigned>(order)));
  for (int k = 1; k <= order; ++k) {
    MultiPoly acc(n);
    for (int i = 1; i <= std::min(k, deg_den); ++i) acc += rden(i) * series[static_cast<std::size_t>(k - i)];
    series.push_back(-poly_exact_div(acc, lead));
  }

  MultiPoly coeff(n);
  for (int j = 0; j <= std::min(order, deg_num); ++j) {
    coeff += rnum(j) * series[static_cast<std::size_t>(order - j)];
  }
  kept.emplace_back(lead, order + 1);
  return FactoredRatFunc(-coeff, kept);
}

FactoredRatFunc residue_at_infinity(const FactoredRatFunc& f, VarId var, ResidueAlgorithm algorithm) {
  return algorithm == ResidueAlgorithm::PoleSum ? residue_at_infinity_polesum(f, var)
                                                : residue_at_infinity_series(f, var);
}

FactoredRatFunc iterated_residue_at_infinity(const FactoredRatFunc& f, const ResidueOrder& order,
                                             ResidueAlgorithm algorithm) {
  if (algorithm == ResidueAlgorithm::Series) {
    FactoredRatFunc acc = f;
    for (const VarId v : order.vars()) acc = residue_at_infinity_series(acc, v);
    return acc.cancel();
  }
  // Branch over poles variable by variable and combine once at the end.
  std::vector<FactoredRatFunc> terms{f};
  for (const VarId v : order.vars()) {
    std::vector<FactoredRatFunc> next;
    for (const auto& term : terms) polesum_terms(term, v, next);
    terms = std::move(next);
  }
  return ratfunc_sum(f.n(), terms);
}

}  // namespace ogpush
