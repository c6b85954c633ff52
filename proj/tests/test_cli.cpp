// Integration tests driving the fauxcrypt binary. The binary path comes from
// the FAUXCRYPT_BIN environment variable (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

std::string binary_path() {
    const char* bin = std::getenv("FAUXCRYPT_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

RunResult run(const std::string& args) {
    std::string cmd = binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "fauxcrypt_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = temp_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("obfuscate is deterministic for a fixed seed") {
    fs::path in = write_temp("plain.txt",
                             "Mind! I don't mean to say that I know, of my own knowledge, "
                             "what there is particularly dead about a door-nail.\n");
    fs::path out1 = temp_dir() / "out1.txt";
    fs::path out2 = temp_dir() / "out2.txt";
    CHECK(run("obfuscate " + in.string() + " --seed 42 -o " + out1.string()).exit_code == 0);
    CHECK(run("obfuscate " + in.string() + " --seed 42 -o " + out2.string()).exit_code == 0);
    std::string a = read_file(out1);
    CHECK(a == read_file(out2));
    CHECK(a != read_file(in));
    CHECK(a.size() == read_file(in).size());
}

TEST_CASE("digraph swaps show up under shift-prob 0") {
    fs::path in = write_temp("doubt.txt", "There is no doubt whatever about that.\n");
    auto r = run("obfuscate " + in.string() +
                 " --seed 1 --shift-prob 0 --min-swap-len 20");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "there is no duobt whatever abuot that.\n");
}

TEST_CASE("empty input gives empty output") {
    fs::path in = write_temp("empty.txt", "");
    auto r = run("obfuscate " + in.string() + " --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.empty());
}

TEST_CASE("dictionary substitutions are applied verbatim") {
    fs::path in = write_temp("dict_in.txt", "Visit HTTP now\n");
    fs::path dict = write_temp("dict.tsv", "http\thxxp\n");
    auto r = run("obfuscate " + in.string() + " --seed 1 --shift-prob 0 --dict " +
                 dict.string());
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "visit hxxp now\n");
}

TEST_CASE("exit 1 on unreadable input") {
    auto r = run("obfuscate " + (temp_dir() / "does_not_exist.txt").string() + " --seed 1");
    CHECK(r.exit_code == 1);
}

TEST_CASE("exit 2 on bad flags") {
    fs::path in = write_temp("x.txt", "hello\n");
    CHECK(run("obfuscate " + in.string() + " --shift-prob 1.5").exit_code == 2);
    CHECK(run("obfuscate " + in.string() + " --min-swap-len 1").exit_code == 2);
    CHECK(run("obfuscate " + in.string() + " --no-such-flag").exit_code == 2);
    CHECK(run("frobnicate " + in.string()).exit_code == 2);
}

TEST_CASE("exit 2 on malformed dictionary") {
    fs::path in = write_temp("y.txt", "hello\n");
    fs::path dict = write_temp("bad.tsv", "no separator here\n");
    CHECK(run("obfuscate " + in.string() + " --dict " + dict.string()).exit_code == 2);
}

TEST_CASE("analyze of a file against itself reports zero") {
    fs::path in = write_temp("self.txt", "dead mind about\n");
    auto r = run("analyze " + in.string() + " " + in.string());
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("per-word levenshtein: 0.000") != std::string::npos);
}

TEST_CASE("analyze json output matches the schema and the totals") {
    fs::path plain = write_temp("p.txt", "dead mind\n");
    fs::path obf = write_temp("o.txt", "daed mnid\n");
    auto r = run("analyze " + plain.string() + " " + obf.string() + " --json --top 1");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.stdout_text);
    CHECK(j["word_count"] == 2);
    CHECK(j["total_levenshtein"] == 4);
    CHECK(j["per_word_levenshtein"] == doctest::Approx(2.0));
    CHECK(j["total_damerau"] == 2);
    CHECK(j["per_word_damerau"] == doctest::Approx(1.0));
    CHECK(j["digraph_survival"].is_number());
    REQUIRE(j["top_pairs"].size() == 1);
    CHECK(j["top_pairs"][0]["plain"] == "dead");
    CHECK(j["top_pairs"][0]["obfuscated"] == "daed");
    CHECK(j["top_pairs"][0]["levenshtein"] == 2);
    CHECK(j["top_pairs"][0]["damerau"] == 1);
    // round-trip: re-serializing the parsed report changes nothing
    CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("analyze exits 2 on word-count mismatch") {
    fs::path plain = write_temp("p3.txt", "one two three\n");
    fs::path obf = write_temp("o2.txt", "one two\n");
    auto r = run("analyze " + plain.string() + " " + obf.string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("obfuscate then analyze round trip") {
    fs::path data(std::getenv("FAUXCRYPT_DATA") ? std::getenv("FAUXCRYPT_DATA") : "data");
    fs::path plain = data / "dickens_excerpt.txt";
    REQUIRE(fs::exists(plain));
    fs::path obf = temp_dir() / "excerpt_obf.txt";
    CHECK(run("obfuscate " + plain.string() + " --seed 3 -o " + obf.string()).exit_code == 0);
    auto r = run("analyze " + plain.string() + " " + obf.string() + " --json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.stdout_text);
    CHECK(j["word_count"].get<int>() > 100);
    CHECK(j["total_levenshtein"].get<int>() > 0);
    CHECK(j["digraph_survival"].get<double>() < 1.0);
}
