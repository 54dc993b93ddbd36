#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace emocause {

// Splits on ASCII whitespace; never yields empty tokens.
std::vector<std::string> split_whitespace(std::string_view line);

std::string join_tokens(const std::vector<std::string>& tokens);

// Bracketed pictograph token such as "[anger]".
bool is_emoticon_token(std::string_view token);

// True if the token carries at least one ASCII letter or CJK/kana codepoint.
bool has_text_char(std::string_view token);

// Decodes one UTF-8 codepoint at `pos` and advances it. Malformed bytes
// decode as U+FFFD and advance by one byte.
uint32_t next_codepoint(std::string_view s, size_t& pos);

// Reads a whole UTF-8 text file into lines (tolerates CRLF).
std::vector<std::string> read_lines(const std::string& path);

}  // namespace emocause
