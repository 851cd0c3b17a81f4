#include "ogpush/poly.hpp"

#include <algorithm>
#include <numeric>

namespace ogpush {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::NotLaurentPolynomial: return "NotLaurentPolynomial";
    case ErrorCode::NotSimplePole: return "NotSimplePole";
    case ErrorCode::NonlinearFactor: return "NonlinearFactor";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::UnsupportedRoute: return "UnsupportedRoute";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPartition: return "NonPartition";
    case ErrorCode::UnexpectedVariable: return "UnexpectedVariable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

std::string var_name(VarId v) {
  return (v.cls == VarClass::T ? "t" : "z") + std::to_string(v.index);
}

// ---------------------------------------------------------------------------
// Monomial

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

std::size_t Monomial::position(VarId v) const {
  if (v.index < 1 || v.index > n_) {
    throw Error(ErrorCode::IndexOutOfRange,
                var_name(v) + " outside 1.." + std::to_string(n_));
  }
  return static_cast<std::size_t>(v.cls == VarClass::T ? v.index - 1 : n_ + v.index - 1);
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r = other;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // zn is the largest variable, so compare from the top position down.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  return grlex_compare(a, b) > 0;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(int n, const Rat& c) : n_(n) {
  if (c != 0) terms_.emplace(Monomial(n), c);
}

MultiPoly MultiPoly::variable(int n, VarId v) {
  Monomial m(n);
  m.set_exponent(v, 1);
  return monomial(m, 1);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rat& c) {
  MultiPoly p(m.n());
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat MultiPoly::constant_term() const {
  if (terms_.empty()) return 0;
  auto it = terms_.find(Monomial(n_));
  return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::total_degree() const {
  // Graded order: the leading term has the largest total degree.
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int MultiPoly::degree_in(VarId v) const {
  if (terms_.empty()) return -1;
  const std::size_t pos = Monomial(n_).position(v);
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[pos]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& term) { return term.first.degree() == d; });
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same_n(const MultiPoly& o) const {
  if (n_ != o.n_) {
    throw Error(ErrorCode::DimensionMismatch,
                "ambient sizes " + std::to_string(n_) + " and " + std::to_string(o.n_));
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_n(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_n(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_n(b);
  MultiPoly r(a.n_);
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(n_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator<(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    const int cmp = grlex_compare(ia->first, ib->first);
    if (cmp != 0) return cmp < 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

MultiPoly product(int n, const std::vector<MultiPoly>& factors) {
  MultiPoly r(n, 1);
  for (const auto& f : factors) r *= f;
  return r;
}

// ---------------------------------------------------------------------------
// Division

std::optional<MultiPoly> try_exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (a.n() != b.n()) throw Error(ErrorCode::DimensionMismatch, "exact division");
  MultiPoly q(a.n());
  if (a.is_zero()) return q;

  // Quick rejects: leading and trailing monomials must both divide.
  if (!b.leading_monomial().divides(a.leading_monomial())) return std::nullopt;
  if (!b.terms().rbegin()->first.divides(a.terms().rbegin()->first)) return std::nullopt;

  const Monomial& lb = b.leading_monomial();
  const Rat& cb = b.leading_coefficient();
  MultiPoly r = a;
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) return std::nullopt;
    const Monomial qm = lb.quotient_of(lr);
    const Rat qc = r.leading_coefficient() / cb;
    q.add_term(qm, qc);
    for (const auto& [m, c] : b.terms()) r.add_term(m * qm, -c * qc);
  }
  return q;
}

MultiPoly poly_exact_div(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw Error(ErrorCode::NotDivisible, "polynomial has no exact quotient");
  return *std::move(q);
}

// ---------------------------------------------------------------------------
// Substitution

MultiPoly poly_substitute(const MultiPoly& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  const int n = p.n();
  Monomial probe(n);

  struct Bound {
    std::size_t pos;
    const MultiPoly* image;
    std::vector<MultiPoly> powers;  // powers[k] = image^k, filled lazily
  };
  std::vector<Bound> bound;
  bool all_monomial = true;
  for (const auto& [v, img] : bindings) {
    if (img.n() != n) throw Error(ErrorCode::DimensionMismatch, "substitution image");
    bound.push_back({probe.position(v), &img, {MultiPoly(n, 1)}});
    all_monomial = all_monomial && img.num_terms() <= 1;
  }

  MultiPoly result(n);
  if (all_monomial) {
    for (const auto& [m, c] : p.terms()) {
      Monomial out = m;
      for (const auto& b : bound) out[b.pos] = 0;
      Rat coeff = c;
      bool zero = false;
      for (const auto& b : bound) {
        const int e = m[b.pos];
        if (e == 0) continue;
        if (b.image->is_zero()) {
          zero = true;
          break;
        }
        const auto& [im, ic] = *b.image->terms().begin();
        for (int k = 0; k < e; ++k) out = out * im;
        Rat f;
        mpz_pow_ui(f.get_num_mpz_t(), ic.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(f.get_den_mpz_t(), ic.get_den_mpz_t(), static_cast<unsigned long>(e));
        coeff *= f;
      }
      if (!zero) result.add_term(out, coeff);
    }
    return result;
  }

  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    for (const auto& b : bound) rest[b.pos] = 0;
    MultiPoly term(n, c);
    for (auto& b : bound) {
      const int e = m[b.pos];
      if (e == 0) continue;
      while (static_cast<int>(b.powers.size()) <= e) b.powers.push_back(b.powers.back() * *b.image);
      term *= b.powers[static_cast<std::size_t>(e)];
      if (term.is_zero()) break;
    }
    if (term.is_zero()) continue;
    for (const auto& [tm, tc] : term.terms()) result.add_term(tm * rest, tc);
  }
  return result;
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, VarId v) {
  const int d = p.degree_in(v);
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d + 1, 0)), MultiPoly(p.n()));
  if (d < 0) return out;
  const std::size_t pos = Monomial(p.n()).position(v);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest[pos] = 0;
    out[static_cast<std::size_t>(m[pos])].add_term(rest, c);
  }
  return out;
}

}  // namespace ogpush
