#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace editdec {

// Word-level token sequence. The active scorer's vocabulary decides what a
// token is; this module only provides the default whitespace/punctuation
// splitter used for plain-text inputs.
using TokenSeq = std::vector<std::string>;

// Splits on whitespace, then peels leading/trailing punctuation characters
// off each chunk as separate tokens. Interior punctuation (hyphens, digit
// groupings like "3.76") stays attached. Deterministic; empty input gives
// an empty sequence.
TokenSeq tokenize(std::string_view text);

// Joins tokens with single spaces. detokenize(tokenize(s)) == s for any s
// whose tokens are already space-separated.
std::string detokenize(const TokenSeq& tokens);

// Lowercases ASCII letters only; non-ASCII bytes pass through untouched.
std::string fold_case(std::string_view token);

}  // namespace editdec
