#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fpg/errors.hpp"

namespace fpg::io {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

/// A "key: value" line of a fixture file.
struct KeyedLine {
  std::size_t number = 0;
  std::string key;
  std::string value;
};

/// Split text into keyed lines; '#' starts a comment, blank lines are skipped.
/// The key ends at the first ':'; a line without ':' is a parse error.
inline std::vector<KeyedLine> keyed_lines(const std::string& text) {
  std::vector<KeyedLine> out;
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto c = line.find(':');
    if (c == std::string::npos) fail(ErrorCode::Parse, "line " + std::to_string(n) + ": expected 'key: value'");
    out.push_back({n, trim(line.substr(0, c)), trim(line.substr(c + 1))});
  }
  return out;
}

[[noreturn]] inline void parse_error(const KeyedLine& l, const std::string& msg) {
  fail(ErrorCode::Parse, "line " + std::to_string(l.number) + ": " + msg);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Parse, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "expected an integer for " + what + ", got '" + s + "'");
  }
}

}  // namespace fpg::io
