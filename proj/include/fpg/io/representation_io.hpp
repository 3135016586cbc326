#pragma once

#include <string>
#include <vector>

#include "fpg/alexander/representation.hpp"
#include "fpg/errors.hpp"
#include "fpg/io/expression_io.hpp"
#include "fpg/io/text.hpp"

namespace fpg::io {

/// Representation file:
///   field: x^4+1                      defining monic polynomial
///   eps x = 1                         grading (one line per generator)
///   mat x = [[-xi,0],[0,xi^3]]        matrix rows, entries in xi, sqrt2
///   pin delta0 x = t^2 - sqrt2*t + 1  optional Delta0 pin
/// Lines without ':' after the keyword use "keyword name = value".
inline FieldPtr parse_field(const std::string& text) {
  const SymbolicExpr m = ExpressionParser(text, true).parse();
  if (m.uses(SymbolicExpr::T) || m.uses(SymbolicExpr::Sqrt2))
    fail(ErrorCode::Parse, "defining polynomial must be in xi only");
  long deg = -1;
  for (const auto& [k, c] : m.terms()) {
    if (k[1] < 0) fail(ErrorCode::Parse, "defining polynomial has a negative power");
    deg = std::max(deg, k[1]);
  }
  if (deg < 1) fail(ErrorCode::Parse, "defining polynomial must have positive degree");
  std::vector<Integer> coeffs(static_cast<std::size_t>(deg) + 1, Integer(0));
  for (const auto& [k, c] : m.terms()) {
    if (c.get_den() != 1) fail(ErrorCode::Parse, "defining polynomial must have integer coefficients");
    coeffs[static_cast<std::size_t>(k[1])] = c.get_num();
  }
  if (coeffs.back() != 1) fail(ErrorCode::Parse, "defining polynomial must be monic");
  return NumberField::make(coeffs);
}

inline std::string serialize_field(const NumberField& f) {
  SymbolicExpr e;
  const auto& m = f.modulus();
  for (std::size_t i = 0; i < m.coeffs().size(); ++i)
    e = e + SymbolicExpr(Rational(m.coeffs()[i])) * SymbolicExpr::symbol(SymbolicExpr::Xi).pow(static_cast<long>(i));
  return serialize_expression(e);
}

/// Split "[[a,b],[c,d]]" into rows of entry strings (brackets nest, commas
/// inside parentheses are not separators).
inline std::vector<std::vector<std::string>> split_matrix(const std::string& text) {
  const std::string s = trim(text);
  if (s.size() < 4 || s.front() != '[' || s.back() != ']') fail(ErrorCode::Parse, "matrix must look like [[..],[..]]");
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 1;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  for (;;) {
    skip();
    if (i >= s.size() - 1) break;
    if (s[i] != '[') fail(ErrorCode::Parse, "expected '[' starting a matrix row");
    ++i;
    std::vector<std::string> row;
    std::string cur;
    int depth = 0;
    while (i < s.size()) {
      const char c = s[i++];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ',' || c == ']')) {
        row.push_back(trim(cur));
        cur.clear();
        if (c == ']') break;
      } else {
        cur += c;
      }
    }
    rows.push_back(std::move(row));
    skip();
    if (i < s.size() - 1 && s[i] == ',') ++i;
  }
  if (rows.empty()) fail(ErrorCode::Parse, "empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.size()) fail(ErrorCode::DimensionMismatch, "representation matrices must be square");
  return rows;
}

inline SymbolicRepresentation parse_representation(const std::string& text) {
  SymbolicRepresentation rep;
  std::vector<std::pair<std::string, long>> eps;
  std::istringstream in(text);
  std::size_t n = 0;
  auto error = [&](const std::string& m) { fail(ErrorCode::Parse, "line " + std::to_string(n) + ": " + m); };
  for (std::string line; std::getline(in, line);) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("field:", 0) == 0) {
      rep.field = parse_field(line.substr(6));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) error("expected 'keyword name = value'");
    const auto head = split_ws(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (head.size() == 2 && head[0] == "eps") {
      eps.emplace_back(head[1], parse_long(value, "eps"));
    } else if (head.size() == 2 && head[0] == "mat") {
      if (!rep.field) error("'mat' before 'field'");
      const auto rows = split_matrix(value);
      Matrix<SymbolicExpr> m(rows.size(), rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) {
          m(i, j) = parse_expression(rows[i][j]);
          if (m(i, j).uses(SymbolicExpr::T)) error("matrix entries may not use t");
        }
      for (const auto& g : rep.generators)
        if (g == head[1]) error("duplicate matrix for '" + g + "'");
      rep.generators.push_back(head[1]);
      rep.matrices.push_back(std::move(m));
    } else if (head.size() == 3 && head[0] == "pin" && head[1] == "delta0") {
      rep.pin_generator = head[2];
      rep.pin_delta0 = parse_expression(value);
    } else {
      error("unknown statement '" + line.substr(0, eq) + "'");
    }
  }
  if (!rep.field) fail(ErrorCode::Parse, "missing 'field' line");
  rep.eps.assign(rep.generators.size(), 0);
  for (const auto& [g, e] : eps) {
    std::size_t k = 0;
    while (k < rep.generators.size() && rep.generators[k] != g) ++k;
    if (k == rep.generators.size()) fail(ErrorCode::Parse, "eps for generator '" + g + "' without a matrix");
    rep.eps[k] = e;
  }
  const std::size_t deg = rep.matrices.empty() ? 0 : rep.matrices[0].rows();
  for (const auto& m : rep.matrices)
    if (m.rows() != deg) fail(ErrorCode::DimensionMismatch, "representation matrices must have equal size");
  return rep;
}

inline std::string serialize_representation(const SymbolicRepresentation& rep) {
  std::string out = "field: " + serialize_field(*rep.field) + "\n";
  for (std::size_t k = 0; k < rep.generators.size(); ++k)
    out += "eps " + rep.generators[k] + " = " + std::to_string(rep.eps[k]) + "\n";
  for (std::size_t k = 0; k < rep.generators.size(); ++k) {
    const auto& m = rep.matrices[k];
    out += "mat " + rep.generators[k] + " = [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + serialize_expression(m(i, j));
      out += "]";
    }
    out += "]\n";
  }
  if (rep.pin_delta0) out += "pin delta0 " + *rep.pin_generator + " = " + serialize_expression(*rep.pin_delta0) + "\n";
  return out;
}

}  // namespace fpg::io

namespace fpg {

/// Structural equality of symbolic representations (used for round trips).
inline bool operator==(const SymbolicRepresentation& a, const SymbolicRepresentation& b) {
  if (a.generators != b.generators || a.eps != b.eps || a.pin_generator != b.pin_generator) return false;
  if (a.pin_delta0.has_value() != b.pin_delta0.has_value()) return false;
  if (a.pin_delta0 && !(*a.pin_delta0 == *b.pin_delta0)) return false;
  if (!(a.field->modulus() == b.field->modulus())) return false;
  if (a.matrices.size() != b.matrices.size()) return false;
  for (std::size_t k = 0; k < a.matrices.size(); ++k) {
    const auto &x = a.matrices[k], &y = b.matrices[k];
    if (x.rows() != y.rows()) return false;
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (!(x(i, j) == y(i, j))) return false;
  }
  return true;
}

}  // namespace fpg
