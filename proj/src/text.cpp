#include "emocause/text.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace emocause {

std::vector<std::string> split_whitespace(std::string_view line) {
  std::vector<std::string> out;
  size_t i = 0;
  const size_t n = line.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

bool is_emoticon_token(std::string_view token) {
  return token.size() >= 3 && token.front() == '[' && token.back() == ']';
}

uint32_t next_codepoint(std::string_view s, size_t& pos) {
  const auto byte = [&](size_t i) { return static_cast<uint8_t>(s[i]); };
  const uint8_t b0 = byte(pos);
  size_t len = 0;
  uint32_t cp = 0;
  if (b0 < 0x80) {
    pos += 1;
    return b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    pos += 1;
    return 0xFFFD;
  }
  if (pos + len > s.size()) {
    pos += 1;
    return 0xFFFD;
  }
  for (size_t i = 1; i < len; ++i) {
    const uint8_t b = byte(pos + i);
    if ((b & 0xC0) != 0x80) {
      pos += 1;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  pos += len;
  return cp;
}

namespace {

bool is_text_codepoint(uint32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true;  // CJK unified ideographs
  if (cp >= 0x3400 && cp <= 0x4DBF) return true;  // CJK extension A
  if (cp >= 0xF900 && cp <= 0xFAFF) return true;  // CJK compatibility
  if (cp >= 0x3040 && cp <= 0x30FF) return true;  // hiragana + katakana
  if (cp >= 0xFF21 && cp <= 0xFF3A) return true;  // fullwidth A-Z
  if (cp >= 0xFF41 && cp <= 0xFF5A) return true;  // fullwidth a-z
  return false;
}

}  // namespace

bool has_text_char(std::string_view token) {
  size_t pos = 0;
  while (pos < token.size()) {
    if (is_text_codepoint(next_codepoint(token, pos))) return true;
  }
  return false;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace emocause
