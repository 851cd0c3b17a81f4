#include "ogpush/exprparse.hpp"

#include <cctype>
#include <limits>

namespace ogpush {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  ClassExprPtr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw Error(ErrorCode::SyntaxError, msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  // Digits only, no sign, no whitespace inside.
  mpz_class uint_literal() {
    if (!at_digit()) fail("expected an unsigned integer");
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int small_uint() {
    const std::size_t start = pos_;
    const mpz_class v = uint_literal();
    if (v > std::numeric_limits<int>::max()) throw Error(ErrorCode::SyntaxError, "integer too large", start);
    return static_cast<int>(v.get_si());
  }

  template <typename Node>
  static ClassExprPtr make(Node x, std::size_t at) {
    return std::make_shared<ClassExpr>(ClassExpr{std::move(x), at});
  }

  ClassExprPtr expr() {
    auto lhs = term();
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = make(ClassExpr::Binary{'+', lhs, term()}, at);
      } else if (accept('-')) {
        lhs = make(ClassExpr::Binary{'-', lhs, term()}, at);
      } else {
        return lhs;
      }
    }
  }

  ClassExprPtr term() {
    auto lhs = unary();
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = make(ClassExpr::Binary{'*', lhs, unary()}, at);
    }
  }

  ClassExprPtr unary() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) return make(ClassExpr::Negate{unary()}, at);
    return factor();
  }

  ClassExprPtr factor() {
    auto base = atom();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t exp_at = pos_;
    const mpz_class e = uint_literal();
    if (e > 1024) throw Error(ErrorCode::SyntaxError, "exponent too large", exp_at);
    return make(ClassExpr::Power{base, static_cast<unsigned>(e.get_ui())}, at);
  }

  ClassExprPtr atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      auto inner = expr();
      expect(')');
      return inner;
    }
    if (at_digit()) {
      mpz_class num = uint_literal();
      mpz_class den = 1;
      if (accept('/')) {
        skip_ws();
        const std::size_t den_at = pos_;
        den = uint_literal();
        if (den == 0) throw Error(ErrorCode::SyntaxError, "zero denominator", den_at);
      }
      Rat value(num, den);
      value.canonicalize();
      return make(ClassExpr::Literal{value}, at);
    }
    if (c == 'z' || c == 't') {
      ++pos_;
      const int idx = small_uint();
      if (idx < 1 || idx > n_) {
        throw Error(ErrorCode::IndexOutOfRange,
                    std::string(1, c) + std::to_string(idx) + " outside 1.." + std::to_string(n_), at);
      }
      return make(ClassExpr::Variable{{c == 'z' ? VarClass::Z : VarClass::T, idx}}, at);
    }
    if (c == 's') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '[' after 's'");
      ++pos_;
      std::vector<int> parts;
      skip_ws();
      parts.push_back(small_uint());
      while (accept(',')) {
        skip_ws();
        parts.push_back(small_uint());
      }
      expect(']');
      for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1]) {
          throw Error(ErrorCode::NonPartition, "s[...] parts must be weakly decreasing", at);
        }
      }
      return make(ClassExpr::Schur{std::move(parts)}, at);
    }
    if (c == 'e' || c == 'p' || c == 'h') {
      ++pos_;
      const int k = small_uint();
      const SymKind kind = c == 'e' ? SymKind::E : (c == 'p' ? SymKind::P : SymKind::H);
      return make(ClassExpr::Basis{kind, k}, at);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

ClassExprPtr parse_class_expr(std::string_view text, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  return Parser(text, n).parse();
}

MultiPoly evaluate(const ClassExpr& expr, int n) {
  return std::visit(
      Overloaded{
          [&](const ClassExpr::Literal& x) { return MultiPoly(n, x.value); },
          [&](const ClassExpr::Variable& x) { return MultiPoly::variable(n, x.var); },
          [&](const ClassExpr::Schur& x) {
            try {
              return schur_z(Partition(x.parts, n));
            } catch (const Error&) {
              throw Error(ErrorCode::NonPartition, "s[...] at position " + std::to_string(expr.position) +
                                                       " has more than " + std::to_string(n) + " nonzero parts");
            }
          },
          [&](const ClassExpr::Basis& x) { return elementary_power_complete(x.k, x.kind, z_vars(n), n); },
          [&](const ClassExpr::Negate& x) { return -evaluate(*x.operand, n); },
          [&](const ClassExpr::Binary& x) {
            MultiPoly a = evaluate(*x.lhs, n);
            MultiPoly b = evaluate(*x.rhs, n);
            if (x.op == '+') return a + b;
            if (x.op == '-') return a - b;
            return a * b;
          },
          [&](const ClassExpr::Power& x) { return evaluate(*x.base, n).pow(x.exponent); },
      },
      expr.node);
}

CharClass elaborate(const ClassExpr& expr, int n) { return CharClass(evaluate(expr, n)); }

std::optional<Partition> single_schur_atom(const ClassExpr& expr, int n) {
  if (const auto* s = std::get_if<ClassExpr::Schur>(&expr.node)) return Partition(s->parts, n);
  return std::nullopt;
}

}  // namespace ogpush
