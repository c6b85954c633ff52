#include "fauxcrypt/tokenizer.hpp"

namespace fauxcrypt {

namespace {

bool is_ascii_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_joiner(char c) { return c == '-' || c == '\''; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    std::string sep;

    auto flush_sep = [&] {
        if (!sep.empty()) {
            tokens.push_back({TokenKind::Separator, std::move(sep), tokens.size()});
            sep.clear();
        }
    };

    while (i < n) {
        if (is_ascii_letter(text[i])) {
            std::size_t start = i;
            while (i < n) {
                if (is_ascii_letter(text[i])) {
                    ++i;
                } else if (i + 1 < n && is_joiner(text[i]) && is_ascii_letter(text[i + 1])) {
                    i += 2;  // joiner flanked by letters stays word-internal
                } else {
                    break;
                }
            }
            flush_sep();
            tokens.push_back({TokenKind::Word,
                              std::string(text.substr(start, i - start)),
                              tokens.size()});
        } else {
            sep.push_back(text[i]);
            ++i;
        }
    }
    flush_sep();
    return tokens;
}

std::string detokenize(const std::vector<Token>& tokens) {
    std::string out;
    std::size_t total = 0;
    for (const Token& t : tokens) total += t.text.size();
    out.reserve(total);
    for (const Token& t : tokens) out += t.text;
    return out;
}

}  // namespace fauxcrypt
