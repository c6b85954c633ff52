#include "fauxcrypt/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "fauxcrypt/scrambler.hpp"
#include "fauxcrypt/tokenizer.hpp"

namespace fauxcrypt {

DigraphTable::DigraphTable(std::vector<std::pair<std::string, double>> entries)
    : entries_(std::move(entries)) {
    for (const auto& [dg, freq] : entries_) {
        (void)freq;
        present_[dg[0] - 'a'][dg[1] - 'a'] = true;
    }
}

const DigraphTable& DigraphTable::english() {
    static const DigraphTable table({
        {"nt", 0.56}, {"ha", 0.56}, {"es", 0.56}, {"st", 0.55}, {"en", 0.55},
        {"ed", 0.53}, {"to", 0.52}, {"it", 0.50}, {"ou", 0.50}, {"ea", 0.47},
        {"hi", 0.46}, {"is", 0.46}, {"or", 0.43}, {"ti", 0.34}, {"as", 0.33},
        {"te", 0.27}, {"et", 0.19}, {"ng", 0.18}, {"of", 0.16}, {"al", 0.09},
        {"de", 0.09}, {"se", 0.08}, {"le", 0.08}, {"sa", 0.06}, {"si", 0.05},
        {"ar", 0.04}, {"ve", 0.04}, {"ra", 0.04}, {"ld", 0.02}, {"ur", 0.02},
    });
    return table;
}

bool DigraphTable::contains(char a, char b) const {
    if (a < 'a' || a > 'z' || b < 'a' || b > 'z') return false;
    return present_[a - 'a'][b - 'a'];
}

double DigraphTable::frequency_of(char a, char b) const {
    if (!contains(a, b)) return 0.0;
    std::string dg{a, b};
    for (const auto& [key, freq] : entries_)
        if (key == dg) return freq;
    return 0.0;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) std::swap(a, b);
    const std::size_t n = b.size();
    std::vector<std::size_t> prev(n + 1), curr(n + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= n; ++j) {
            std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub});
        }
        std::swap(prev, curr);
    }
    return prev[n];
}

std::size_t damerau_levenshtein(std::string_view a, std::string_view b) {
    const std::size_t m = a.size(), n = b.size();
    std::vector<std::size_t> two_ago(n + 1), prev(n + 1), curr(n + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});
    for (std::size_t i = 1; i <= m; ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= n; ++j) {
            std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
                curr[j] = std::min(curr[j], two_ago[j - 2] + 1);
        }
        std::swap(two_ago, prev);
        std::swap(prev, curr);
    }
    return prev[n];
}

namespace {

std::vector<std::string> lowercased_words(std::string_view text) {
    std::vector<std::string> words;
    for (const Token& t : tokenize(text))
        if (t.is_word()) words.push_back(lowercase_word(t.text));
    return words;
}

void check_alignment(const std::vector<std::string>& plain,
                     const std::vector<std::string>& obf) {
    if (plain.size() != obf.size())
        throw AlignmentError(plain.size(), obf.size(),
                             std::min(plain.size(), obf.size()));
}

std::size_t count_table_digraphs(const std::vector<std::string>& words,
                                 const DigraphTable& table) {
    std::size_t count = 0;
    for (const std::string& w : words)
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (table.contains(w[i], w[i + 1])) ++count;
    return count;
}

}  // namespace

double digraph_survival(std::string_view plain, std::string_view obfuscated,
                        const DigraphTable& table) {
    std::vector<std::string> plain_words = lowercased_words(plain);
    std::vector<std::string> obf_words = lowercased_words(obfuscated);
    check_alignment(plain_words, obf_words);

    std::size_t before = count_table_digraphs(plain_words, table);
    if (before == 0) return 1.0;
    std::size_t after = count_table_digraphs(obf_words, table);
    return std::min(1.0, static_cast<double>(after) / static_cast<double>(before));
}

CorpusReport analyze_corpus(std::string_view plain, std::string_view obfuscated,
                            std::size_t top_k, const DigraphTable& table) {
    std::vector<std::string> plain_words = lowercased_words(plain);
    std::vector<std::string> obf_words = lowercased_words(obfuscated);
    check_alignment(plain_words, obf_words);

    CorpusReport report;
    report.word_count = plain_words.size();

    std::vector<WordPairDistance> pairs;
    pairs.reserve(plain_words.size());
    for (std::size_t i = 0; i < plain_words.size(); ++i) {
        std::size_t lev = levenshtein(plain_words[i], obf_words[i]);
        std::size_t dam = damerau_levenshtein(plain_words[i], obf_words[i]);
        report.total_levenshtein += lev;
        report.total_damerau += dam;
        pairs.push_back({plain_words[i], obf_words[i], lev, dam});
    }
    if (report.word_count > 0) {
        report.per_word_levenshtein =
            static_cast<double>(report.total_levenshtein) / report.word_count;
        report.per_word_damerau =
            static_cast<double>(report.total_damerau) / report.word_count;
    }

    // descending by distance; ties resolved by token order (stable sort)
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const WordPairDistance& x, const WordPairDistance& y) {
                         return x.levenshtein > y.levenshtein;
                     });
    if (pairs.size() > top_k) pairs.resize(top_k);
    report.top_pairs = std::move(pairs);

    std::size_t before = count_table_digraphs(plain_words, table);
    if (before == 0) {
        report.digraph_survival = 1.0;
    } else {
        std::size_t after = count_table_digraphs(obf_words, table);
        report.digraph_survival =
            std::min(1.0, static_cast<double>(after) / static_cast<double>(before));
    }
    return report;
}

}  // namespace fauxcrypt
