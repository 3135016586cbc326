#pragma once

#include <cctype>
#include <string>

#include "fpg/errors.hpp"
#include "fpg/exact/symbolic.hpp"

namespace fpg::io {

/// Expressions in t, xi and sqrt2 with rational constants:
///   expr  := ['-'] term (('+'|'-') term)*
///   term  := power (('*'|'/') power)*
///   power := primary ('^' ['-'] int)?
///   primary := number | 't' | 'xi' | 'sqrt2' | '(' expr ')'
/// Division is only allowed by monomials. `xi_alias` lets the field line
/// write its variable as x.
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string text, bool xi_alias = false) : s_(std::move(text)), alias_(xi_alias) {}

  SymbolicExpr parse() {
    SymbolicExpr e = expr();
    skip();
    if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::Parse, "in expression '" + s_ + "' at position " + std::to_string(i_) + ": " + msg);
  }

  SymbolicExpr expr() {
    SymbolicExpr acc;
    bool neg = accept('-');
    acc = neg ? -term() : term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  SymbolicExpr term() {
    SymbolicExpr acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        const SymbolicExpr d = power();
        if (d.is_zero()) error("division by zero");
        if (!d.is_monomial()) error("division by a non-monomial");
        acc = acc * d.pow(-1);
      } else {
        return acc;
      }
    }
  }

  SymbolicExpr power() {
    SymbolicExpr base = primary();
    if (accept('^')) {
      skip();
      bool neg = accept('-');
      skip();
      const std::size_t j0 = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ == j0) error("expected an exponent");
      const long e = std::stol(s_.substr(j0, i_ - j0));
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  SymbolicExpr primary() {
    skip();
    if (i_ >= s_.size()) error("unexpected end of expression");
    if (accept('(')) {
      SymbolicExpr e = expr();
      if (!accept(')')) error("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      const std::size_t j0 = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return SymbolicExpr(Rational(Integer(s_.substr(j0, i_ - j0))));
    }
    const std::size_t j0 = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    const std::string name = s_.substr(j0, i_ - j0);
    if (name == "t") return SymbolicExpr::symbol(SymbolicExpr::T);
    if (name == "xi" || (alias_ && name == "x")) return SymbolicExpr::symbol(SymbolicExpr::Xi);
    if (name == "sqrt2") return SymbolicExpr::symbol(SymbolicExpr::Sqrt2);
    i_ = j0;
    error(name.empty() ? "expected a number, t, xi or sqrt2" : "unknown symbol '" + name + "'");
  }

  std::string s_;
  bool alias_;
  std::size_t i_ = 0;
};

inline SymbolicExpr parse_expression(const std::string& text) { return ExpressionParser(text).parse(); }

/// Canonical text of an expression; parse_expression(serialize_expression(e)) == e.
inline std::string serialize_expression(const SymbolicExpr& e) {
  if (e.is_zero()) return "0";
  static const char* names[] = {"t", "xi", "sqrt2"};
  std::string out;
  // descending order of keys for readability
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono;
    for (int s = 0; s < 3; ++s) {
      if (k[s] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[s];
      if (k[s] != 1) mono += "^" + std::to_string(k[s]);
    }
    const Rational a = abs(c);
    std::string coef;
    if (mono.empty()) {
      coef = a.get_num().get_str() + (a.get_den() != 1 ? "/" + a.get_den().get_str() : "");
    } else {
      if (a.get_num() != 1) coef = a.get_num().get_str() + "*";
      coef += mono;
      if (a.get_den() != 1) coef += "/" + a.get_den().get_str();
    }
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + coef;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + coef;
  }
  return out;
}

}  // namespace fpg::io
