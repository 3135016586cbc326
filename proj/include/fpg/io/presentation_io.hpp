#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/groups/presentation.hpp"
#include "fpg/io/text.hpp"

namespace fpg::io {

/// Word grammar over named generators:
///   word   := factor*            (factors separated by whitespace)
///   factor := atom ('^' int)?
///   atom   := '-'? name | '[' word ',' word ']' | '(' word ')' | '1'
/// A name with its first letter's case swapped denotes the inverse (X = x^-1)
/// when it is not itself a generator. [a,b] expands to a b a^-1 b^-1.
class WordParser {
 public:
  WordParser(const std::string& text, const std::vector<std::string>& names,
             CommutatorConvention conv = CommutatorConvention::Standard)
      : s_(text), names_(names), conv_(conv) {}

  Word parse() {
    Word w = word();
    skip();
    if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return w;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++i_;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::Parse, "in word '" + s_ + "' at position " + std::to_string(i_) + ": " + msg);
  }
  static bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  Word word() {
    Word w;
    for (;;) {
      skip();
      if (i_ >= s_.size() || s_[i_] == ',' || s_[i_] == ']' || s_[i_] == ')') return w;
      w *= factor();
    }
  }

  Word factor() {
    Word a = atom();
    if (peek('^')) {
      ++i_;
      skip();
      std::size_t j = i_;
      if (j < s_.size() && (s_[j] == '-' || s_[j] == '+')) ++j;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      const std::string num = s_.substr(i_, j - i_);
      if (num.empty() || num == "-" || num == "+") error("expected an exponent");
      i_ = j;
      a = a.pow(std::stol(num));
    }
    return a;
  }

  Word atom() {
    skip();
    if (i_ >= s_.size()) error("unexpected end of word");
    const char c = s_[i_];
    if (c == '-') {
      ++i_;
      return atom().inverse();
    }
    if (c == '[') {
      ++i_;
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      return commutator(a, b, conv_);
    }
    if (c == '(') {
      ++i_;
      Word a = word();
      expect(')');
      return a;
    }
    std::size_t j = i_;
    while (j < s_.size() && name_char(s_[j])) ++j;
    if (j == i_) error("expected a generator name");
    const std::string tok = s_.substr(i_, j - i_);
    i_ = j;
    if (tok == "1") return Word();
    for (std::size_t g = 0; g < names_.size(); ++g)
      if (names_[g] == tok) return Word::generator(g);
    std::string swapped = tok;
    const unsigned char f = static_cast<unsigned char>(swapped[0]);
    swapped[0] = static_cast<char>(std::isupper(f) ? std::tolower(f) : std::toupper(f));
    for (std::size_t g = 0; g < names_.size(); ++g)
      if (names_[g] == swapped && std::isupper(f)) return Word::generator(g, -1);
    fail(ErrorCode::UnknownGenerator, "unknown generator '" + tok + "' in word '" + s_ + "'");
  }

  std::string s_;
  const std::vector<std::string>& names_;
  CommutatorConvention conv_;
  std::size_t i_ = 0;
};

inline Word parse_word(const std::string& text, const std::vector<std::string>& names,
                       CommutatorConvention conv = CommutatorConvention::Standard) {
  return WordParser(text, names, conv).parse();
}

/// A relation "lhs = rhs" becomes the relator lhs rhs^-1; several '=' chain.
inline Word parse_relation(const std::string& text, const std::vector<std::string>& names,
                           CommutatorConvention conv = CommutatorConvention::Standard) {
  const auto parts = split_on(text, '=');
  if (parts.size() == 1) return parse_word(parts[0], names, conv);
  if (parts.size() != 2) fail(ErrorCode::Parse, "a relation has at most one '=': '" + text + "'");
  return parse_word(parts[0], names, conv) * parse_word(parts[1], names, conv).inverse();
}

/// Presentation file: "gens: x y", then any number of "rel: <word>" or
/// "rel: <word> = <word>" lines; an optional "name: <id>" line.
struct NamedPresentation {
  std::string name;
  Presentation presentation;
};

inline NamedPresentation parse_presentation_named(const std::string& text,
                                                  CommutatorConvention conv = CommutatorConvention::Standard) {
  NamedPresentation out;
  std::vector<std::string> gens;
  bool have_gens = false;
  std::vector<Word> rels;
  for (const auto& l : keyed_lines(text)) {
    if (l.key == "name") {
      out.name = l.value;
    } else if (l.key == "gens") {
      if (have_gens) parse_error(l, "duplicate 'gens' line");
      gens = split_ws(l.value);
      have_gens = true;
    } else if (l.key == "rel") {
      if (!have_gens) parse_error(l, "'rel' before 'gens'");
      rels.push_back(parse_relation(l.value, gens, conv));
    } else {
      parse_error(l, "unknown key '" + l.key + "'");
    }
  }
  if (!have_gens) fail(ErrorCode::Parse, "missing 'gens' line");
  out.presentation = Presentation(std::move(gens), std::move(rels));
  return out;
}

inline Presentation parse_presentation(const std::string& text,
                                       CommutatorConvention conv = CommutatorConvention::Standard) {
  return parse_presentation_named(text, conv).presentation;
}

inline std::string serialize_presentation(const Presentation& p, const std::string& name = "") {
  std::string out;
  if (!name.empty()) out += "name: " + name + "\n";
  out += "gens:";
  for (const auto& g : p.generators()) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators()) out += "rel: " + p.word_string(r) + "\n";
  return out;
}

inline NamedPresentation load_presentation(const std::string& path,
                                           CommutatorConvention conv = CommutatorConvention::Standard) {
  return parse_presentation_named(read_file(path), conv);
}

}  // namespace fpg::io
