#include "ogpush/symfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ogpush {

Partition::Partition(std::vector<int> parts, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative ambient size");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw Error(ErrorCode::NonPartition, "negative part");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw Error(ErrorCode::NonPartition, "parts are not weakly decreasing");
    }
  }
  while (static_cast<int>(parts.size()) > n) {
    if (parts.back() != 0) {
      throw Error(ErrorCode::NonPartition, "more than " + std::to_string(n) + " nonzero parts");
    }
    parts.pop_back();
  }
  parts.resize(static_cast<std::size_t>(n), 0);
  parts_ = std::move(parts);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition rho(int k, int n) {
  if (k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "rho(k, n) needs 0 <= k <= n");
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) parts.push_back(i);
  return Partition(parts, n);
}

std::vector<Partition> partitions_in_box(int n, int bound) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int cap) {
    if (static_cast<int>(parts.size()) == n) {
      out.emplace_back(parts, n);
      return;
    }
    for (int p = cap; p >= 0; --p) {
      parts.push_back(p);
      rec(p);
      parts.pop_back();
    }
  };
  rec(bound);
  return out;
}

std::vector<Partition> partitions_of(int size, int n) {
  std::vector<Partition> out;
  for (auto& p : partitions_in_box(n, size)) {
    if (p.size() == size) out.push_back(std::move(p));
  }
  return out;
}

std::vector<VarId> z_vars(int n) {
  std::vector<VarId> v;
  for (int i = 1; i <= n; ++i) v.push_back(z(i));
  return v;
}

std::vector<VarId> t_vars(int n) {
  std::vector<VarId> v;
  for (int i = 1; i <= n; ++i) v.push_back(t(i));
  return v;
}

namespace {

void check_vars(const Partition& lambda, const std::vector<VarId>& vars) {
  if (static_cast<int>(vars.size()) != lambda.n()) {
    throw Error(ErrorCode::DimensionMismatch, "partition length differs from variable count");
  }
}

}  // namespace

MultiPoly schur_bialternant(const Partition& lambda, const std::vector<VarId>& vars, int ambient_n) {
  check_vars(lambda, vars);
  const int n = lambda.n();
  Monomial base(ambient_n);

  // Leibniz expansion; every entry of the matrix is a monomial.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det(ambient_n);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Monomial m = base;
    for (int i = 0; i < n; ++i) {
      const VarId v = vars[static_cast<std::size_t>(perm[i])];
      m.set_exponent(v, m.exponent(v) + lambda[static_cast<std::size_t>(i)] + n - 1 - i);
    }
    det.add_term(m, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  MultiPoly vandermonde(ambient_n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      vandermonde *= MultiPoly::variable(ambient_n, vars[i]) - MultiPoly::variable(ambient_n, vars[j]);
    }
  }
  return poly_exact_div(det, vandermonde);
}

MultiPoly schur_tableaux(const Partition& lambda, const std::vector<VarId>& vars, int ambient_n) {
  const int n = lambda.n();
  const int alphabet = static_cast<int>(vars.size());
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  }
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) fill[r].assign(static_cast<std::size_t>(lambda[r]), 0);

  MultiPoly out(ambient_n);
  Monomial m(ambient_n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.add_term(m, 1);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);
    if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int e = lo; e <= alphabet; ++e) {
      fill[r][c] = e;
      const VarId v = vars[static_cast<std::size_t>(e - 1)];
      m.set_exponent(v, m.exponent(v) + 1);
      rec(k + 1);
      m.set_exponent(v, m.exponent(v) - 1);
    }
  };
  rec(0);
  return out;
}

MultiPoly schur_z(const Partition& lambda) { return schur_bialternant(lambda, z_vars(lambda.n()), lambda.n()); }
MultiPoly schur_t(const Partition& lambda) { return schur_bialternant(lambda, t_vars(lambda.n()), lambda.n()); }

const char* to_string(ParityTag tag) {
  switch (tag) {
    case ParityTag::RhoNMinus1: return "RhoNMinus1";
    case ParityTag::RhoN: return "RhoN";
    case ParityTag::Neither: return "Neither";
  }
  return "?";
}

namespace {

std::optional<Partition> halve_difference(const Partition& lambda, const Partition& shift) {
  std::vector<int> mu;
  for (int i = 0; i < lambda.n(); ++i) {
    const int d = lambda[i] - shift[i];
    if (d < 0 || d % 2 != 0) return std::nullopt;
    if (!mu.empty() && d / 2 > mu.back()) return std::nullopt;
    mu.push_back(d / 2);
  }
  return Partition(mu, lambda.n());
}

}  // namespace

ParityCase decompose_parity(const Partition& lambda) {
  const int n = lambda.n();
  if (n == 0) return {ParityTag::RhoNMinus1, lambda};
  if (auto mu = halve_difference(lambda, rho(n - 1, n))) return {ParityTag::RhoNMinus1, mu};
  if (auto mu = halve_difference(lambda, rho(n, n))) return {ParityTag::RhoN, mu};
  return {ParityTag::Neither, std::nullopt};
}

MultiPoly elementary_power_complete(int k, SymKind kind, const std::vector<VarId>& vars,
                                    int ambient_n) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  const std::size_t m = vars.size();
  MultiPoly out(ambient_n);
  switch (kind) {
    case SymKind::P:
      for (const auto& v : vars) out += MultiPoly::variable(ambient_n, v).pow(static_cast<unsigned>(k));
      return out;
    case SymKind::E: {
      Monomial mono(ambient_n);
      std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
        if (left == 0) {
          out.add_term(mono, 1);
          return;
        }
        for (std::size_t i = start; i + static_cast<std::size_t>(left) <= m; ++i) {
          mono.set_exponent(vars[i], 1);
          rec(i + 1, left - 1);
          mono.set_exponent(vars[i], 0);
        }
      };
      rec(0, k);
      return out;
    }
    case SymKind::H: {
      Monomial mono(ambient_n);
      std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == m) {
          if (left == 0) out.add_term(mono, 1);
          return;
        }
        for (int e = 0; e <= left; ++e) {
          mono.set_exponent(vars[i], e);
          rec(i + 1, left - e);
        }
        mono.set_exponent(vars[i], 0);
      };
      rec(0, k);
      return out;
    }
  }
  return out;
}

bool is_symmetric(const MultiPoly& p, const std::vector<VarId>& vars) {
  const int n = p.n();
  if (vars.size() < 2) return true;
  // A transposition and a full cycle generate the symmetric group.
  Bindings swap12{{vars[0], MultiPoly::variable(n, vars[1])}, {vars[1], MultiPoly::variable(n, vars[0])}};
  if (poly_substitute(p, swap12) != p) return false;
  Bindings cycle;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    cycle.emplace(vars[i], MultiPoly::variable(n, vars[(i + 1) % vars.size()]));
  }
  return poly_substitute(p, cycle) == p;
}

std::map<Partition, Rat> schur_expand(const MultiPoly& p, const std::vector<VarId>& vars) {
  const int n = p.n();
  const int m = static_cast<int>(vars.size());
  Monomial probe(n);
  std::vector<bool> allowed(probe.size(), false);
  for (const auto& v : vars) allowed[probe.position(v)] = true;
  for (const auto& [mono, c] : p.terms()) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] != 0 && !allowed[i]) {
        throw Error(ErrorCode::UnexpectedVariable, "polynomial involves variables outside the expansion set");
      }
    }
  }
  if (!is_symmetric(p, vars)) throw Error(ErrorCode::NotSymmetric, "cannot expand in Schur basis");

  std::map<Partition, Rat> out;
  MultiPoly rest = p;
  while (!rest.is_zero()) {
    const Monomial& lead = rest.leading_monomial();
    std::vector<int> exps;
    for (const auto& v : vars) exps.push_back(lead.exponent(v));
    std::sort(exps.begin(), exps.end(), std::greater<>());
    const Partition lambda(exps, m);
    const Rat c = rest.leading_coefficient();
    out[lambda] += c;
    rest -= schur_bialternant(lambda, vars, n) * c;
  }
  std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
  return out;
}

MultiPoly schur_sum(const std::map<Partition, Rat>& coeffs, const std::vector<VarId>& vars,
                    int ambient_n) {
  MultiPoly out(ambient_n);
  for (const auto& [lambda, c] : coeffs) out += schur_bialternant(lambda, vars, ambient_n) * c;
  return out;
}

}  // namespace ogpush
