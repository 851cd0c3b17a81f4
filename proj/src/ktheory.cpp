#include "ogpush/ktheory.hpp"

#include <algorithm>
#include <ostream>

#include "ogpush/exprparse.hpp"

namespace ogpush {

LaurentPoly::LaurentPoly(int n, const Rat& c) : n_(n) {
  if (c != 0) terms_.emplace(uniform(n, 0), c);
}

LaurentPoly LaurentPoly::monomial(Exponents e, const Rat& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_poly(const MultiPoly& p, const Exponents& shift) {
  const int n = p.n();
  LaurentPoly out(n);
  for (const auto& [m, c] : p.terms()) {
    Exponents e(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      if (m.exponent(z(i)) != 0) throw Error(ErrorCode::UnexpectedVariable, "Laurent polynomials are in t only");
      e[i - 1] = m.exponent(t(i)) + shift[i - 1];
    }
    out.add_term(e, c);
  }
  return out;
}

LaurentPoly::Exponents LaurentPoly::min_exponents() const {
  Exponents lo = uniform(n_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < n_; ++i) lo[i] = first ? e[i] : std::min(lo[i], e[i]);
    first = false;
  }
  return lo;
}

MultiPoly LaurentPoly::to_poly(const Exponents& shift) const {
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) {
    Monomial m(n_);
    for (int i = 0; i < n_; ++i) {
      const int k = e[i] + shift[i];
      if (k < 0) throw Error(ErrorCode::NotPolynomial, "shift leaves a negative exponent");
      m.set_exponent(t(i + 1), k);
    }
    out.add_term(m, c);
  }
  return out;
}

void LaurentPoly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPoly::Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::transform(const std::vector<int>& perm, const std::vector<int>& signs) const {
  LaurentPoly r(n_);
  for (const auto& [e, c] : terms_) {
    Exponents out = uniform(n_, 0);
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(perm[i])] += signs[i] * e[i];
    r.add_term(out, c);
  }
  return r;
}

std::string format_laurent(const LaurentPoly& p) {
  using Entry = std::pair<LaurentPoly::Exponents, Rat>;
  std::vector<Entry> entries(p.terms().begin(), p.terms().end());
  auto weight = [](const LaurentPoly::Exponents& e) {
    int w = 0;
    for (int x : e) w += x < 0 ? -x : x;
    return w;
  };
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    const int wa = weight(a.first);
    const int wb = weight(b.first);
    if (wa != wb) return wa < wb;
    return a.first > b.first;
  });
  std::vector<std::pair<Rat, std::string>> terms;
  for (const auto& [e, c] : entries) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    terms.emplace_back(c, std::move(mono));
  }
  return format_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << format_laurent(p); }

namespace {

LaurentPoly character(int n, int i, int sign) {
  LaurentPoly::Exponents e = LaurentPoly::uniform(n, 0);
  e[static_cast<std::size_t>(i)] = sign;
  return LaurentPoly::monomial(e, 1);
}

LaurentPoly::Exponents negate(LaurentPoly::Exponents e) {
  for (int& x : e) x = -x;
  return e;
}

}  // namespace

std::vector<LaurentPoly> k_euler_class(const SignVector& eps) {
  const int n = eps.n();
  std::vector<LaurentPoly> factors;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      LaurentPoly::Exponents dual = LaurentPoly::uniform(n, 0);
      dual[i] = -eps[i];
      dual[j] = -eps[j];
      factors.push_back(LaurentPoly(n, 1) - LaurentPoly::monomial(dual, 1));
    }
  }
  return factors;
}

LaurentPoly k_euler_product(const SignVector& eps) {
  LaurentPoly p(eps.n(), 1);
  for (const auto& f : k_euler_class(eps)) p = p * f;
  return p;
}

LaurentPoly schur_laurent(const Partition& lambda, const SignVector& eps) {
  const int n = lambda.n();
  if (eps.n() != n) throw Error(ErrorCode::DimensionMismatch, "partition and sign vector sizes");

  // Bialternant numerator det[x_j^(lambda_i + n - i)] with x_j = t_j^eps_j.
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  LaurentPoly det(n);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    LaurentPoly::Exponents e = LaurentPoly::uniform(n, 0);
    for (int i = 0; i < n; ++i) e[perm[i]] += eps[perm[i]] * (lambda[i] + n - 1 - i);
    det.add_term(e, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  LaurentPoly vandermonde(n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) vandermonde = vandermonde * (character(n, i, eps[i]) - character(n, j, eps[j]));
  }

  const int num_shift = (n > 0 ? lambda[0] : 0) + n;
  const int den_shift = n > 0 ? n - 1 : 0;
  const MultiPoly num = det.to_poly(LaurentPoly::uniform(n, num_shift));
  const MultiPoly den = vandermonde.to_poly(LaurentPoly::uniform(n, den_shift));
  return LaurentPoly::from_poly(poly_exact_div(num, den), LaurentPoly::uniform(n, den_shift - num_shift));
}

LaurentPoly k_localize_pushforward(const Partition& lambda, Component component) {
  if (component == Component::Full) {
    throw Error(ErrorCode::InvalidArgument, "K-theoretic push-forward is computed per component");
  }
  const int n = lambda.n();

  // Each term is numer / prod g_k with numer Laurent and every g_k an
  // ordinary polynomial with no monomial content.
  struct Term {
    LaurentPoly numer;
    std::vector<MultiPoly> den;
  };
  std::vector<Term> terms;
  for (const auto& eps : enumerate_fixed_points(n, component)) {
    Term term{schur_laurent(lambda, eps), {}};
    for (const auto& factor : k_euler_class(eps)) {
      const auto shift = negate(factor.min_exponents());
      term.den.push_back(factor.to_poly(shift));
      term.numer = term.numer * LaurentPoly::monomial(shift, 1);
    }
    terms.push_back(std::move(term));
  }

  LaurentPoly::Exponents low = LaurentPoly::uniform(n, 0);
  for (const auto& term : terms) {
    const auto m = term.numer.min_exponents();
    for (int i = 0; i < n; ++i) low[i] = std::min(low[i], m[i]);
  }
  const auto clear = negate(low);

  std::vector<FactoredRatFunc> rational;
  for (const auto& term : terms) rational.emplace_back(term.numer.to_poly(clear), term.den);
  MultiPoly sum;
  try {
    sum = ratfunc_to_poly(ratfunc_sum(n, rational));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPolynomial) throw;
    throw Error(ErrorCode::NotLaurentPolynomial, "K-theoretic localization sum does not simplify");
  }
  return LaurentPoly::from_poly(sum, low);
}

bool k_component_equality_check(const Partition& lambda) {
  return k_localize_pushforward(lambda, Component::Plus) == k_localize_pushforward(lambda, Component::Minus);
}

}  // namespace ogpush
