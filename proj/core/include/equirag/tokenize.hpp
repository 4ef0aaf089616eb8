#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace equirag {

/// Shared tokenizer for chunking, BM25, ROUGE-L and the offline embedders:
/// lowercase ASCII, split on non-alphanumeric runs. Bytes >= 0x80 (any UTF-8
/// continuation or lead byte) count as token characters so non-ASCII words
/// survive intact. No locale dependence, so token streams are identical
/// across platforms.
std::vector<std::string> tokenize(std::string_view text);

/// Byte span [begin, end) of each token within the original text, in token
/// order. Used by the chunker to cut snippets at token boundaries.
struct TokenSpan {
  std::size_t begin;
  std::size_t end;
};
std::vector<TokenSpan> token_spans(std::string_view text);

std::size_t count_tokens(std::string_view text);

}  // namespace equirag
