#include "fauxcrypt/lexicon.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fauxcrypt {

namespace {

bool has_whitespace(std::string_view s) {
    for (unsigned char c : s) {
        if (std::isspace(c)) return true;
    }
    return false;
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    }
    return out;
}

}  // namespace

bool is_valid_utf8(std::string_view bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        unsigned char c = bytes[i];
        std::size_t len;
        unsigned cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char cc = bytes[i + k];
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        // overlong forms, surrogates, out of range
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF))) return false;
        if (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) return false;
        i += len;
    }
    return true;
}

void SubstitutionDictionary::insert(std::string key, std::string replacement) {
    if (key.empty()) throw std::invalid_argument("dictionary key is empty");
    if (replacement.empty()) throw std::invalid_argument("dictionary replacement is empty");
    if (has_whitespace(key)) throw std::invalid_argument("dictionary key contains whitespace");
    if (has_whitespace(replacement))
        throw std::invalid_argument("dictionary replacement contains whitespace");
    entries_[ascii_lower(key)] = std::move(replacement);
}

std::optional<std::string> SubstitutionDictionary::substitute(std::string_view word) const {
    auto it = entries_.find(ascii_lower(word));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

SubstitutionDictionary SubstitutionDictionary::parse(std::istream& in,
                                                     std::vector<std::string>* warnings) {
    SubstitutionDictionary dict;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!is_valid_utf8(line))
            throw DictionaryParseError(line_number, "invalid UTF-8");
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw DictionaryParseError(line_number, "missing tab separator");
        std::string key = line.substr(0, tab);
        std::string replacement = line.substr(tab + 1);
        if (key.empty()) throw DictionaryParseError(line_number, "empty key");
        if (replacement.empty()) throw DictionaryParseError(line_number, "empty replacement");
        if (has_whitespace(key))
            throw DictionaryParseError(line_number, "whitespace in key");
        if (has_whitespace(replacement))
            throw DictionaryParseError(line_number, "whitespace in replacement");
        std::string lowered = ascii_lower(key);
        if (warnings && dict.entries_.count(lowered)) {
            warnings->push_back("line " + std::to_string(line_number) +
                                ": duplicate key '" + lowered + "', last entry wins");
        }
        dict.entries_[std::move(lowered)] = std::move(replacement);
    }
    return dict;
}

SubstitutionDictionary SubstitutionDictionary::load_file(const std::filesystem::path& path,
                                                         std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dictionary file: " + path.string());
    return parse(in, warnings);
}

}  // namespace fauxcrypt
