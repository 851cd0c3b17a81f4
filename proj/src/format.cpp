#include <ostream>

#include "ogpush/exprparse.hpp"

namespace ogpush {

std::string format_terms(const std::vector<std::pair<Rat, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coeff, mono] : terms) {
    const bool negative = coeff < 0;
    const Rat magnitude = negative ? Rat(-coeff) : coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

std::string format_poly(const MultiPoly& p) {
  const int n = p.n();
  std::vector<std::pair<Rat, std::string>> terms;
  terms.reserve(p.num_terms());
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    for (VarClass cls : {VarClass::T, VarClass::Z}) {
      for (int i = 1; i <= n; ++i) {
        const VarId v{cls, i};
        const int e = m.exponent(v);
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var_name(v);
        if (e > 1) mono += "^" + std::to_string(e);
      }
    }
    terms.emplace_back(c, std::move(mono));
  }
  return format_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << format_poly(p); }

}  // namespace ogpush
