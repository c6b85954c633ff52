#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fauxcrypt {

struct DictionaryParseError : std::runtime_error {
    DictionaryParseError(std::size_t line_number, const std::string& what)
        : std::runtime_error("dictionary line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    std::size_t line;
};

// Word -> replacement map for the substitution pass. Keys are stored
// lowercase; lookups are case-insensitive; replacements are emitted verbatim
// and bypass every later scrambling step.
//
// File format: UTF-8, one `key<TAB>replacement` per line; empty lines and
// lines starting with '#' are ignored.
class SubstitutionDictionary {
public:
    SubstitutionDictionary() = default;

    // Duplicate keys: last entry wins and a warning is appended to
    // `warnings` when given. Throws DictionaryParseError on malformed lines
    // or invalid UTF-8.
    static SubstitutionDictionary parse(std::istream& in,
                                        std::vector<std::string>* warnings = nullptr);
    static SubstitutionDictionary load_file(const std::filesystem::path& path,
                                            std::vector<std::string>* warnings = nullptr);

    // Validates key/replacement (non-empty, no whitespace); key is lowercased.
    void insert(std::string key, std::string replacement);

    // Lookup on the lowercased word; nullopt on miss.
    std::optional<std::string> substitute(std::string_view word) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::unordered_map<std::string, std::string> entries_;
};

// True when `bytes` is well-formed UTF-8.
bool is_valid_utf8(std::string_view bytes);

}  // namespace fauxcrypt
