#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fauxcrypt/lexicon.hpp"
#include "fauxcrypt/metrics.hpp"
#include "fauxcrypt/scrambler.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure: " + path);
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << data;
    if (!out) throw IoError("write failure: " + path);
}

std::string render_text_report(const fauxcrypt::CorpusReport& report) {
    std::ostringstream out;
    out << "words:                " << report.word_count << "\n"
        << "total levenshtein:    " << report.total_levenshtein << "\n"
        << "per-word levenshtein: " << std::fixed << std::setprecision(3)
        << report.per_word_levenshtein << "\n"
        << "total damerau:        " << report.total_damerau << "\n"
        << "per-word damerau:     " << report.per_word_damerau << "\n"
        << "digraph survival:     " << report.digraph_survival << "\n";
    if (!report.top_pairs.empty()) {
        std::size_t wp = 9, wo = 10;
        for (const auto& p : report.top_pairs) {
            wp = std::max(wp, p.plain.size());
            wo = std::max(wo, p.obfuscated.size());
        }
        out << "\nLD   DLD  " << std::left << std::setw(static_cast<int>(wp) + 2)
            << "plaintext" << "obfuscated\n";
        for (const auto& p : report.top_pairs) {
            out << std::left << std::setw(5) << p.levenshtein << std::setw(5)
                << p.damerau << std::setw(static_cast<int>(wp) + 2) << p.plain
                << p.obfuscated << "\n";
        }
    }
    return out.str();
}

std::string render_json_report(const fauxcrypt::CorpusReport& report) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : report.top_pairs) {
        pairs.push_back({{"plain", p.plain},
                         {"obfuscated", p.obfuscated},
                         {"levenshtein", p.levenshtein},
                         {"damerau", p.damerau}});
    }
    nlohmann::json j = {
        {"word_count", report.word_count},
        {"total_levenshtein", report.total_levenshtein},
        {"per_word_levenshtein", report.per_word_levenshtein},
        {"total_damerau", report.total_damerau},
        {"per_word_damerau", report.per_word_damerau},
        {"digraph_survival", report.digraph_survival},
        {"top_pairs", pairs},
    };
    return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FauxCrypt text obfuscation and analysis"};
    app.require_subcommand(1);

    std::string input_path, output_path, dict_path;
    fauxcrypt::ObfuscationConfig config;
    bool seed_given = false;

    CLI::App* obfuscate =
        app.add_subcommand("obfuscate", "Scramble a text file, keeping it human-readable");
    obfuscate->add_option("input", input_path, "Input text file (UTF-8)")->required();
    obfuscate->add_option("-o,--output", output_path, "Output file (default: stdout)");
    obfuscate->add_option("--seed", config.seed, "Random seed (drawn from entropy if absent)")
        ->each([&](const std::string&) { seed_given = true; });
    obfuscate->add_option("--dict", dict_path, "Substitution dictionary (key<TAB>replacement)");
    obfuscate->add_option("--min-swap-len", config.consonant_swap_min_len,
                          "Minimum word length for the consonant swap")
        ->capture_default_str();
    obfuscate->add_option("--shift-prob", config.vowel_shift_prob,
                          "Per-vowel shift probability in [0,1]")
        ->capture_default_str();
    obfuscate->add_flag("--extreme", config.extreme, "Enable the extreme letter move");
    obfuscate->add_option("--extreme-max-move", config.extreme_max_move,
                          "Maximum displacement of the extreme move")
        ->capture_default_str();

    std::string plain_path, obf_path;
    bool json_report = false;
    std::size_t top_k = 12;

    CLI::App* analyze =
        app.add_subcommand("analyze", "Word-by-word distance report for a plain/obfuscated pair");
    analyze->add_option("plain", plain_path, "Plain text file")->required();
    analyze->add_option("obfuscated", obf_path, "Obfuscated text file")->required();
    analyze->add_option("-o,--output", output_path, "Report file (default: stdout)");
    analyze->add_flag("--json", json_report, "Emit the report as JSON");
    analyze->add_option("--top", top_k, "Number of worst-offender pairs to list")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*obfuscate) {
            try {
                config.validate();
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            if (!seed_given) {
                config.seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^
                              std::random_device{}();
            }
            std::cerr << "seed: " << config.seed << "\n";

            fauxcrypt::SubstitutionDictionary dict;
            if (!dict_path.empty()) {
                std::ifstream din(dict_path, std::ios::binary);
                if (!din) {
                    std::cerr << "error: cannot open dictionary file: " << dict_path << "\n";
                    return kExitIo;
                }
                std::vector<std::string> warnings;
                try {
                    dict = fauxcrypt::SubstitutionDictionary::parse(din, &warnings);
                } catch (const fauxcrypt::DictionaryParseError& e) {
                    std::cerr << "error: " << dict_path << ": " << e.what() << "\n";
                    return kExitUsage;
                }
                for (const std::string& w : warnings)
                    std::cerr << "warning: " << dict_path << ": " << w << "\n";
            }

            std::string text = read_file(input_path);
            write_output(output_path, fauxcrypt::obfuscate_text(text, dict, config));
            return kExitOk;
        }

        // analyze
        std::string plain = read_file(plain_path);
        std::string obf = read_file(obf_path);
        fauxcrypt::CorpusReport report;
        try {
            report = fauxcrypt::analyze_corpus(plain, obf, top_k);
        } catch (const fauxcrypt::AlignmentError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        write_output(output_path,
                     json_report ? render_json_report(report) : render_text_report(report));
        return kExitOk;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
