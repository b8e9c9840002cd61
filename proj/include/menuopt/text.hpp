#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "menuopt/errors.hpp"

namespace menuopt::text {

/// Decodes UTF-8 into Unicode scalar values. Invalid sequences throw.
inline std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto lead = static_cast<unsigned char>(s[i]);
    int extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      extra = 1;
    } else if ((lead & 0xF0) == 0xE0) {
      cp = lead & 0x0F;
      extra = 2;
    } else if ((lead & 0xF8) == 0xF0) {
      cp = lead & 0x07;
      extra = 3;
    } else {
      throw ParseError("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= s.size()) {
        throw ParseError("truncated UTF-8 sequence at offset " + std::to_string(i));
      }
      const auto cont = static_cast<unsigned char>(s[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw ParseError("invalid UTF-8 continuation at offset " +
                         std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    out.push_back(cp);
    i += 1 + extra;
  }
  return out;
}

inline std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

/// Simple case folding: ASCII, Latin-1 Supplement and Latin Extended-A.
inline char32_t fold_case(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x100 && cp <= 0x17F && cp != 0x130 && cp != 0x131 &&
      cp != 0x138 && cp != 0x149 && cp != 0x17F) {
    // Latin Extended-A alternates upper/lower, with a parity shift at U+0139.
    const bool shifted = (cp >= 0x139 && cp <= 0x148) || (cp >= 0x179);
    const bool upper = shifted ? (cp % 2 == 1) : (cp % 2 == 0);
    return upper ? cp + 1 : cp;
  }
  return cp;
}

inline std::string to_lower(std::string_view s) {
  auto cps = decode_utf8(s);
  for (auto& cp : cps) cp = fold_case(cp);
  return encode_utf8(cps);
}

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

/// Trims and replaces every internal whitespace run with a single space.
inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : trim(s)) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

/// Join key for ingredient names: lowercase, trimmed, whitespace collapsed.
inline std::string normalize_ingredient(std::string_view s) {
  return collapse_whitespace(to_lower(s));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::vector<std::string> split_lines(std::string_view s) {
  auto lines = split(s, '\n');
  for (auto& line : lines) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
  }
  return lines;
}

template <typename Range>
std::string join(const Range& parts, std::string_view sep) {
  std::string out;
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out.append(sep);
    out.append(p);
    first = false;
  }
  return out;
}

/// 64-bit FNV-1a. Used for mock ratings and transcript keys.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

/// 1-based line number of a byte offset.
inline std::size_t line_of_offset(std::string_view s, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < s.size(); ++i) {
    if (s[i] == '\n') ++line;
  }
  return line;
}

/// Replaces whole-word occurrences of `word` (case-insensitive on ASCII),
/// keeping a leading capital when the match had one.
inline std::string replace_word(std::string_view s, std::string_view word,
                                std::string_view replacement) {
  auto is_word_char = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || static_cast<unsigned char>(c) >= 0x80;
  };
  auto lower = [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
  };
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    bool match = i + word.size() <= s.size() &&
                 (i == 0 || !is_word_char(s[i - 1])) &&
                 (i + word.size() == s.size() ||
                  !is_word_char(s[i + word.size()]));
    for (std::size_t k = 0; match && k < word.size(); ++k) {
      match = lower(s[i + k]) == lower(word[k]);
    }
    if (!match) {
      out.push_back(s[i++]);
      continue;
    }
    std::string rep(replacement);
    if (!rep.empty() && s[i] >= 'A' && s[i] <= 'Z' && rep[0] >= 'a' &&
        rep[0] <= 'z') {
      rep[0] = static_cast<char>(rep[0] - 32);
    }
    out += rep;
    i += word.size();
  }
  return out;
}

}  // namespace menuopt::text
