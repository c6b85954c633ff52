#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fauxcrypt {

enum class TokenKind { Word, Separator };

struct Token {
    TokenKind kind;
    std::string text;   // original bytes, concatenation of all tokens == input
    std::size_t index;  // position in the token stream, dense from 0

    bool is_word() const { return kind == TokenKind::Word; }
};

// Lossless segmentation. Word tokens are maximal runs of ASCII letters,
// optionally joined by a single interior '-' or '\'' flanked by letters on
// both sides ("door-nail", "don't"). Everything else, including digits and
// non-ASCII bytes, accumulates into Separator tokens.
std::vector<Token> tokenize(std::string_view text);

// Exact concatenation of token texts.
std::string detokenize(const std::vector<Token>& tokens);

}  // namespace fauxcrypt
