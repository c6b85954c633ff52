#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fauxcrypt {

// Reference table of common English digraphs and their frequency of
// occurrence (percent). Used for the digraph-survival statistic.
class DigraphTable {
public:
    static const DigraphTable& english();

    bool contains(char a, char b) const;
    // 0.0 when the digraph is not listed.
    double frequency_of(char a, char b) const;
    std::size_t size() const { return entries_.size(); }
    const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }

private:
    explicit DigraphTable(std::vector<std::pair<std::string, double>> entries);
    std::vector<std::pair<std::string, double>> entries_;
    bool present_[26][26] = {};
};

struct WordPairDistance {
    std::string plain;
    std::string obfuscated;
    std::size_t levenshtein;
    std::size_t damerau;
};

struct CorpusReport {
    std::size_t word_count = 0;
    std::size_t total_levenshtein = 0;
    double per_word_levenshtein = 0.0;
    std::size_t total_damerau = 0;
    double per_word_damerau = 0.0;
    std::vector<WordPairDistance> top_pairs;  // descending by levenshtein
    double digraph_survival = 1.0;
};

struct AlignmentError : std::runtime_error {
    AlignmentError(std::size_t plain_count, std::size_t obfuscated_count,
                   std::size_t divergence)
        : std::runtime_error("word-count mismatch: plain has " +
                             std::to_string(plain_count) + " words, obfuscated has " +
                             std::to_string(obfuscated_count) +
                             "; first divergence at word index " +
                             std::to_string(divergence)),
          plain_words(plain_count),
          obfuscated_words(obfuscated_count),
          first_divergence(divergence) {}
    std::size_t plain_words;
    std::size_t obfuscated_words;
    std::size_t first_divergence;
};

// Unit-cost edit distance (insert, delete, substitute).
std::size_t levenshtein(std::string_view a, std::string_view b);

// Optimal-string-alignment variant: insert, delete, substitute and adjacent
// transposition, each cost 1. Always <= levenshtein(a, b).
std::size_t damerau_levenshtein(std::string_view a, std::string_view b);

// Fraction of common-digraph occurrences in the plain Word tokens that remain
// present in the obfuscated Word tokens; 1.0 when the plain text contains
// none. Counts overlapping occurrences within words only, case-insensitively.
// Throws AlignmentError when the two texts' word counts differ.
double digraph_survival(std::string_view plain, std::string_view obfuscated,
                        const DigraphTable& table = DigraphTable::english());

// Word-by-word comparison of a document against its obfuscated form. Words
// are paired positionally and lowercased before measuring. Throws
// AlignmentError when the word counts differ.
CorpusReport analyze_corpus(std::string_view plain, std::string_view obfuscated,
                            std::size_t top_k = 12,
                            const DigraphTable& table = DigraphTable::english());

}  // namespace fauxcrypt
