#pragma once

#include <optional>
#include <random>
#include <string>

#include "ogpush/exprparse.hpp"

namespace testutil {

using namespace ogpush;

// Code of the ogpush::Error thrown by f, or nullopt if none is thrown.
template <typename Fn>
std::optional<ErrorCode> error_code(Fn&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Polynomial from text, e.g. P("z1*z2 - t1", 2).
inline MultiPoly P(const std::string& text, int n) { return evaluate(*parse_class_expr(text, n), n); }

inline FactoredRatFunc F(const std::string& num, const std::vector<std::string>& den, int n) {
  std::vector<MultiPoly> factors;
  for (const auto& d : den) factors.push_back(P(d, n));
  return FactoredRatFunc(P(num, n), factors);
}

inline Rat random_rat(std::mt19937& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

// Random polynomial in the chosen variable classes.
inline MultiPoly random_poly(std::mt19937& rng, int n, int max_terms, int max_deg, bool use_t = true,
                             bool use_z = true) {
  MultiPoly p(n);
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m(n);
    for (int j = 1; j <= n; ++j) {
      if (use_t) m.set_exponent(t(j), deg(rng));
      if (use_z) m.set_exponent(z(j), deg(rng));
    }
    p.add_term(m, random_rat(rng));
  }
  return p;
}

// Random symmetric polynomial in z, homogeneous of degree d, as a
// combination of Schur polynomials.
inline MultiPoly random_symmetric(std::mt19937& rng, int n, int d) {
  MultiPoly p(n);
  for (const auto& lambda : partitions_of(d, n)) p += schur_z(lambda) * random_rat(rng, 3);
  return p;
}

}  // namespace testutil
