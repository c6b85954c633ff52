#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fauxcrypt/lexicon.hpp"

namespace fauxcrypt {

// Lowercase letter classes. Risers carry an ascender, danglers a descender;
// swapping a riser with a dangler keeps the word silhouette recognizable.
enum class CharClass {
    Vowel,             // a e i o u
    RiserConsonant,    // b d f h k l t
    DanglerConsonant,  // g j p q y
    PlainConsonant,    // remaining letters
    NonLetter,
};

CharClass classify_char(char c);

inline bool is_consonant(CharClass cls) {
    return cls == CharClass::RiserConsonant || cls == CharClass::DanglerConsonant ||
           cls == CharClass::PlainConsonant;
}

// ASCII letters lowered, everything else untouched.
std::string lowercase_word(std::string_view word);

struct Cell {
    char ch;
    CharClass cls;
    bool pinned;  // pinned cells never change character or position again
};

// Per-character working buffer for one word. Every scrambling step permutes
// the unpinned cells in place; the character multiset is invariant.
class WordCells {
public:
    static WordCells from_word(std::string_view lowered_word);

    std::string to_string() const;

    std::size_t size() const { return cells_.size(); }
    const Cell& operator[](std::size_t i) const { return cells_[i]; }
    Cell& operator[](std::size_t i) { return cells_[i]; }

    std::size_t letter_count() const;
    std::size_t unpinned_count() const;

    std::vector<Cell>::iterator begin() { return cells_.begin(); }
    std::vector<Cell>::iterator end() { return cells_.end(); }
    std::vector<Cell>::const_iterator begin() const { return cells_.begin(); }
    std::vector<Cell>::const_iterator end() const { return cells_.end(); }

private:
    std::vector<Cell> cells_;
};

struct ObfuscationConfig {
    std::uint64_t seed = 0;
    std::size_t consonant_swap_min_len = 5;  // the length threshold N
    double vowel_shift_prob = 0.5;
    bool extreme = false;
    std::size_t extreme_max_move = 3;

    // Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

// Deterministic per-word random stream: an mt19937_64 seeded with a
// splitmix64 mix of (document seed, word index), so serial and parallel runs
// produce identical bytes.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);
Rng word_stream(std::uint64_t seed, std::size_t word_index);

// Pipeline steps, applied in order. Pins accumulate monotonically.
void pin_boundaries(WordCells& cells);
void swap_vowel_digraphs(WordCells& cells);
void shift_vowels(WordCells& cells, Rng& rng, const ObfuscationConfig& config);
void swap_consonant_pair(WordCells& cells, Rng& rng, const ObfuscationConfig& config);
void extreme_move(WordCells& cells, Rng& rng, const ObfuscationConfig& config);

// Full per-word pipeline: lowercase, dictionary substitution (early return on
// hit), boundary pinning, digraph swaps, vowel shifts, consonant swap and,
// when enabled, the extreme move.
std::string obfuscate_word(std::string_view word, const SubstitutionDictionary& dict,
                           Rng& rng, const ObfuscationConfig& config);

// Document-level application: Word tokens are scrambled with per-word streams
// derived from (config.seed, token index); separators pass through untouched.
// Output is identical for a fixed (text, dict, config) regardless of
// thread_count.
std::string obfuscate_text(std::string_view text, const SubstitutionDictionary& dict,
                           const ObfuscationConfig& config, unsigned thread_count = 1);

}  // namespace fauxcrypt
