#include "ogpush/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace ogpush {

namespace {

Rat rat_pow(const Rat& c, int k) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(r.get_den_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(k));
  r.canonicalize();
  return r;
}

// Denominator lcm over all terms, as factor -> multiplicity.
std::map<MultiPoly, int> lcm_factors(std::span<const FactoredRatFunc> terms) {
  std::map<MultiPoly, int> lcm;
  for (const auto& term : terms) {
    for (const auto& [f, m] : term.denominator_factors()) {
      int& slot = lcm[f];
      slot = std::max(slot, m);
    }
  }
  return lcm;
}

// Numerator of `term` rewritten over the common denominator `lcm`.
MultiPoly lift_numerator(const FactoredRatFunc& term, const std::map<MultiPoly, int>& lcm) {
  MultiPoly num = term.numerator();
  if (num.is_zero()) return num;
  const auto& own = term.denominator_factors();
  for (const auto& [f, m] : lcm) {
    auto it = std::lower_bound(own.begin(), own.end(), f,
                               [](const auto& entry, const MultiPoly& key) { return entry.first < key; });
    const int have = (it != own.end() && it->first == f) ? it->second : 0;
    if (m > have) num *= f.pow(static_cast<unsigned>(m - have));
  }
  return num;
}

}  // namespace

FactoredRatFunc::FactoredRatFunc(MultiPoly numerator) : num_(std::move(numerator)) {}

FactoredRatFunc::FactoredRatFunc(MultiPoly numerator, const std::vector<Factor>& factors)
    : num_(std::move(numerator)) {
  for (const auto& [f, m] : factors) add_factor(f, m);
}

FactoredRatFunc::FactoredRatFunc(MultiPoly numerator, const std::vector<MultiPoly>& factors)
    : num_(std::move(numerator)) {
  for (const auto& f : factors) add_factor(f, 1);
}

void FactoredRatFunc::add_factor(MultiPoly f, int multiplicity) {
  if (multiplicity <= 0) {
    throw Error(ErrorCode::InvalidArgument, "factor multiplicity must be positive");
  }
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero denominator factor");
  if (f.n() != num_.n()) throw Error(ErrorCode::DimensionMismatch, "denominator factor");
  const Rat lead = f.leading_coefficient();
  num_ *= 1 / rat_pow(lead, multiplicity);
  if (f.is_constant()) return;
  f *= 1 / lead;
  auto it = std::lower_bound(den_.begin(), den_.end(), f,
                             [](const Factor& entry, const MultiPoly& key) { return entry.first < key; });
  if (it != den_.end() && it->first == f) {
    it->second += multiplicity;
  } else {
    den_.insert(it, {std::move(f), multiplicity});
  }
}

bool FactoredRatFunc::depends_on(VarId v) const {
  if (num_.depends_on(v)) return true;
  return std::any_of(den_.begin(), den_.end(), [v](const Factor& f) { return f.first.depends_on(v); });
}

MultiPoly FactoredRatFunc::denominator() const {
  MultiPoly d(num_.n(), 1);
  for (const auto& [f, m] : den_) d *= f.pow(static_cast<unsigned>(m));
  return d;
}

FactoredRatFunc& FactoredRatFunc::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (auto& [f, m] : den_) {
    while (m > 0) {
      auto q = try_exact_div(num_, f);
      if (!q) break;
      num_ = *std::move(q);
      --m;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.second == 0; });
  return *this;
}

FactoredRatFunc FactoredRatFunc::operator-() const {
  FactoredRatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

FactoredRatFunc operator+(const FactoredRatFunc& a, const FactoredRatFunc& b) {
  const FactoredRatFunc pair[] = {a, b};
  return ratfunc_sum(a.n(), pair);
}

FactoredRatFunc operator-(const FactoredRatFunc& a, const FactoredRatFunc& b) { return a + (-b); }

FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b) {
  FactoredRatFunc r(a.num_ * b.num_, a.den_);
  for (const auto& [f, m] : b.den_) r.add_factor(f, m);
  r.cancel();
  return r;
}

FactoredRatFunc operator*(const FactoredRatFunc& a, const Rat& c) {
  FactoredRatFunc r = a;
  r.num_ *= c;
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

bool operator==(const FactoredRatFunc& a, const FactoredRatFunc& b) {
  if (a.n() != b.n()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.denominator() == b.num_ * a.denominator();
}

std::ostream& operator<<(std::ostream& os, const FactoredRatFunc& f) {
  os << "(" << f.numerator() << ")";
  if (f.is_polynomial()) return os;
  os << " / (";
  bool first = true;
  for (const auto& [g, m] : f.denominator_factors()) {
    if (!first) os << " * ";
    first = false;
    os << "(" << g << ")";
    if (m > 1) os << "^" << m;
  }
  return os << ")";
}

FactoredRatFunc ratfunc_sum(int n, std::span<const FactoredRatFunc> terms) {
  // Terms sharing a denominator are added first.
  std::map<std::vector<FactoredRatFunc::Factor>, MultiPoly> groups;
  for (const auto& term : terms) {
    if (term.n() != n) throw Error(ErrorCode::DimensionMismatch, "ratfunc_sum");
    if (term.is_zero()) continue;
    auto [it, inserted] = groups.try_emplace(term.denominator_factors(), term.numerator());
    if (!inserted) it->second += term.numerator();
  }
  std::vector<FactoredRatFunc> grouped;
  grouped.reserve(groups.size());
  for (auto& [den, num] : groups) {
    if (!num.is_zero()) grouped.emplace_back(std::move(num), den);
  }

  const auto lcm = lcm_factors(grouped);
  MultiPoly num(n);
  for (const auto& term : grouped) num += lift_numerator(term, lcm);
  std::vector<FactoredRatFunc::Factor> factors(lcm.begin(), lcm.end());
  FactoredRatFunc r(std::move(num), factors);
  r.cancel();
  return r;
}

FactoredRatFunc ratfunc_substitute(const FactoredRatFunc& f, const Bindings& bindings) {
  std::vector<FactoredRatFunc::Factor> factors;
  factors.reserve(f.denominator_factors().size());
  for (const auto& [g, m] : f.denominator_factors()) {
    MultiPoly image = poly_substitute(g, bindings);
    if (image.is_zero()) {
      throw Error(ErrorCode::NotSimplePole, "denominator factor vanishes under substitution");
    }
    factors.emplace_back(std::move(image), m);
  }
  return FactoredRatFunc(poly_substitute(f.numerator(), bindings), factors);
}

MultiPoly ratfunc_to_poly(FactoredRatFunc f) {
  f.cancel();
  if (!f.is_polynomial()) {
    throw Error(ErrorCode::NotPolynomial, "denominator does not cancel");
  }
  return f.numerator();
}

}  // namespace ogpush
