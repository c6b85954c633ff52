#include "fauxcrypt/scrambler.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "fauxcrypt/tokenizer.hpp"

namespace fauxcrypt {

CharClass classify_char(char c) {
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    if (c < 'a' || c > 'z') return CharClass::NonLetter;
    switch (c) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return CharClass::Vowel;
        case 'b': case 'd': case 'f': case 'h': case 'k': case 'l': case 't':
            return CharClass::RiserConsonant;
        case 'g': case 'j': case 'p': case 'q': case 'y':
            return CharClass::DanglerConsonant;
        default:
            return CharClass::PlainConsonant;
    }
}

std::string lowercase_word(std::string_view word) {
    std::string out(word);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    }
    return out;
}

WordCells WordCells::from_word(std::string_view lowered_word) {
    WordCells w;
    w.cells_.reserve(lowered_word.size());
    for (char c : lowered_word) w.cells_.push_back({c, classify_char(c), false});
    return w;
}

std::string WordCells::to_string() const {
    std::string out;
    out.reserve(cells_.size());
    for (const Cell& c : cells_) out.push_back(c.ch);
    return out;
}

std::size_t WordCells::letter_count() const {
    std::size_t n = 0;
    for (const Cell& c : cells_)
        if (c.cls != CharClass::NonLetter) ++n;
    return n;
}

std::size_t WordCells::unpinned_count() const {
    std::size_t n = 0;
    for (const Cell& c : cells_)
        if (!c.pinned) ++n;
    return n;
}

void ObfuscationConfig::validate() const {
    if (vowel_shift_prob < 0.0 || vowel_shift_prob > 1.0)
        throw std::invalid_argument("vowel_shift_prob must be in [0,1]");
    if (consonant_swap_min_len < 3)
        throw std::invalid_argument("consonant_swap_min_len must be >= 3");
    if (extreme_max_move < 1)
        throw std::invalid_argument("extreme_max_move must be >= 1");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

Rng word_stream(std::uint64_t seed, std::size_t word_index) {
    return Rng(splitmix64(seed ^ splitmix64(word_index)));
}

namespace {

void swap_cells(Cell& a, Cell& b) {
    std::swap(a.ch, b.ch);
    std::swap(a.cls, b.cls);
    // pinned flags stay with the position
}

}  // namespace

void pin_boundaries(WordCells& cells) {
    const std::size_t n = cells.size();
    if (n == 0) return;
    if (n <= 3) {
        for (Cell& c : cells) c.pinned = true;
        return;
    }
    cells[0].pinned = true;
    cells[n - 1].pinned = true;
    for (Cell& c : cells)
        if (c.cls == CharClass::NonLetter) c.pinned = true;
}

void swap_vowel_digraphs(WordCells& cells) {
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        Cell& a = cells[i];
        Cell& b = cells[i + 1];
        if (!a.pinned && !b.pinned && a.cls == CharClass::Vowel &&
            b.cls == CharClass::Vowel) {
            swap_cells(a, b);
            a.pinned = true;
            b.pinned = true;
            ++i;  // non-overlapping
        }
    }
}

void shift_vowels(WordCells& cells, Rng& rng, const ObfuscationConfig& config) {
    if (config.vowel_shift_prob <= 0.0) return;
    std::bernoulli_distribution shift(config.vowel_shift_prob);
    const std::size_t n = cells.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (cells[i].pinned || cells[i].cls != CharClass::Vowel) continue;
        if (!shift(rng)) continue;
        bool left_ok = i > 0 && !cells[i - 1].pinned && is_consonant(cells[i - 1].cls);
        bool right_ok = i + 1 < n && !cells[i + 1].pinned && is_consonant(cells[i + 1].cls);
        if (!left_ok && !right_ok) continue;
        bool go_left = left_ok && right_ok
                           ? std::uniform_int_distribution<int>(0, 1)(rng) == 0
                           : left_ok;
        if (go_left) {
            swap_cells(cells[i - 1], cells[i]);
        } else {
            swap_cells(cells[i], cells[i + 1]);
            ++i;  // don't shift the same vowel twice
        }
    }
}

void swap_consonant_pair(WordCells& cells, Rng& rng, const ObfuscationConfig& config) {
    if (cells.letter_count() <= config.consonant_swap_min_len) return;

    std::vector<std::size_t> mixed;  // adjacent riser+dangler pairs, preferred
    std::vector<std::size_t> plain;  // any other adjacent consonant pair
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        const Cell& a = cells[i];
        const Cell& b = cells[i + 1];
        if (a.pinned || b.pinned || !is_consonant(a.cls) || !is_consonant(b.cls)) continue;
        bool riser_dangler =
            (a.cls == CharClass::RiserConsonant && b.cls == CharClass::DanglerConsonant) ||
            (a.cls == CharClass::DanglerConsonant && b.cls == CharClass::RiserConsonant);
        (riser_dangler ? mixed : plain).push_back(i);
    }
    const std::vector<std::size_t>& pool = mixed.empty() ? plain : mixed;
    if (pool.empty()) return;
    std::size_t pick =
        pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    swap_cells(cells[pick], cells[pick + 1]);
}

void extreme_move(WordCells& cells, Rng& rng, const ObfuscationConfig& config) {
    if (!config.extreme) return;

    std::vector<std::size_t> free_idx;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (!cells[i].pinned) free_idx.push_back(i);
    if (free_idx.size() < 3) return;

    const std::size_t m = free_idx.size();
    std::size_t from =
        std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
    // displacement within the unpinned region, at most extreme_max_move slots
    long lo = -static_cast<long>(std::min<std::size_t>(config.extreme_max_move, from));
    long hi = static_cast<long>(
        std::min<std::size_t>(config.extreme_max_move, m - 1 - from));
    long d = 0;
    while (d == 0) d = std::uniform_int_distribution<long>(lo, hi)(rng);

    std::string free_chars;
    free_chars.reserve(m);
    for (std::size_t i : free_idx) free_chars.push_back(cells[i].ch);
    char moved = free_chars[from];
    free_chars.erase(free_chars.begin() + static_cast<long>(from));
    free_chars.insert(free_chars.begin() + (static_cast<long>(from) + d), moved);
    for (std::size_t k = 0; k < m; ++k) {
        Cell& c = cells[free_idx[k]];
        c.ch = free_chars[k];
        c.cls = classify_char(c.ch);
    }
}

std::string obfuscate_word(std::string_view word, const SubstitutionDictionary& dict,
                           Rng& rng, const ObfuscationConfig& config) {
    std::string lowered = lowercase_word(word);
    if (auto replacement = dict.substitute(lowered)) return *replacement;

    WordCells cells = WordCells::from_word(lowered);
    pin_boundaries(cells);
    swap_vowel_digraphs(cells);
    shift_vowels(cells, rng, config);
    swap_consonant_pair(cells, rng, config);
    extreme_move(cells, rng, config);
    return cells.to_string();
}

std::string obfuscate_text(std::string_view text, const SubstitutionDictionary& dict,
                           const ObfuscationConfig& config, unsigned thread_count) {
    config.validate();
    std::vector<Token> tokens = tokenize(text);
    std::vector<std::string> out(tokens.size());

    auto process = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Token& t = tokens[i];
            if (t.is_word()) {
                Rng rng = word_stream(config.seed, t.index);
                out[i] = obfuscate_word(t.text, dict, rng, config);
            } else {
                out[i] = t.text;
            }
        }
    };

    if (thread_count <= 1 || tokens.size() < 2) {
        process(0, tokens.size());
    } else {
        unsigned workers = std::min<unsigned>(thread_count,
                                              static_cast<unsigned>(tokens.size()));
        std::vector<std::thread> threads;
        threads.reserve(workers);
        std::size_t chunk = (tokens.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t begin = w * chunk;
            std::size_t end = std::min(tokens.size(), begin + chunk);
            if (begin >= end) break;
            threads.emplace_back(process, begin, end);
        }
        for (std::thread& t : threads) t.join();
    }

    std::string result;
    std::size_t total = 0;
    for (const std::string& s : out) total += s.size();
    result.reserve(total);
    for (const std::string& s : out) result += s;
    return result;
}

}  // namespace fauxcrypt
