#include "equirag/tokenize.hpp"

#include <cctype>

namespace equirag {

namespace {
inline bool is_token_byte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}
}  // namespace

std::vector<TokenSpan> token_spans(std::string_view text) {
  std::vector<TokenSpan> spans;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && !is_token_byte(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    std::size_t begin = i;
    while (i < n && is_token_byte(static_cast<unsigned char>(text[i]))) ++i;
    spans.push_back({begin, i});
  }
  return spans;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  for (const TokenSpan& s : token_spans(text)) {
    std::string tok(text.substr(s.begin, s.end - s.begin));
    for (char& c : tok) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::size_t count_tokens(std::string_view text) { return token_spans(text).size(); }

}  // namespace equirag
