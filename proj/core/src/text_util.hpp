#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wamex/errors.hpp"

namespace wamex::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

inline bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

/// Splits into generator tokens: bare identifiers, `~`-prefixed
/// identifiers, and bracketed names like `<0,a>` (possibly `~<0,a>`).
inline std::vector<std::string> split_gen_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '~') ++i;
    if (i < text.size() && text[i] == '<') {
      while (i < text.size() && text[i] != '>') ++i;
      if (i == text.size()) throw ParseError("unterminated '<' in generator name", start);
      ++i;
    } else {
      std::size_t word_start = i;
      while (i < text.size() && is_word_char(text[i])) ++i;
      if (i == word_start) throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

/// Splits on top-level commas; depth is tracked over ( ) [ ] { } < >.
inline std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[' || c == '{' || c == '<') ++depth;
    if (c == ')' || c == ']' || c == '}' || c == '>') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.emplace_back(text.substr(start));
  return out;
}

/// Strips one layer of parentheses if they enclose the whole string.
inline std::string_view strip_outer_parens(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0) return s;  // closes before the end: not an outer pair
    }
    return trim(s.substr(1, s.size() - 2));
  }
  return s;
}

}  // namespace wamex::detail
