// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any gated
// criterion fails. Diagnostic lines are informational and never fail the run.

#include <rnaname/batch.hpp>
#include <rnaname/bits.hpp>
#include <rnaname/cmd5.hpp>
#include <rnaname/collisions.hpp>
#include <rnaname/evaluation.hpp>
#include <rnaname/leaf_order.hpp>
#include <rnaname/library.hpp>
#include <rnaname/naming.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace rnaname;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail)
{
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

void diagnostic(const std::string& text)
{
    std::printf("INFO %s\n", text.c_str());
}

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename Fn>
bool throws_kind(Fn fn, ErrorKind kind)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

std::string random_rna_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    return random_rna(rng, lo + rng() % (hi - lo + 1));
}

void criterion1()
{
    const auto w = [](const char* s) { return Word6::parse(s); };
    bool ok = bitwise_not(w("010110")) == w("101001") && bitwise_or(w("010110"), w("011011")) == w("011111") &&
              bitwise_and(w("010110"), w("011011")) == w("010010") &&
              bitwise_xor(w("010110"), w("011011")) == w("001101") &&
              logical_f(w("010100"), w("011011"), w("110101")) == w("110001") &&
              rotate_left(w("011001"), 2) == w("100101") && mod_add(w("011001"), w("110101")) == w("001110");
    report(1, ok, "NOT/OR/AND/XOR, F, rotate_left and mod_add golden values");
}

void criterion2()
{
    const auto t0 = Clock::now();
    std::size_t mismatches = 0;
    for (unsigned x = 0; x < 64; ++x)
        for (unsigned y = 0; y < 64; ++y)
            for (unsigned z = 0; z < 64; ++z) {
                unsigned f = 0, g = 0, h = 0, i = 0;
                for (unsigned b = 0; b < 6; ++b) {
                    const bool X = x >> b & 1u, Y = y >> b & 1u, Z = z >> b & 1u;
                    f |= static_cast<unsigned>((X && Y) || (!X && Z)) << b;
                    g |= static_cast<unsigned>((X && Z) || (Y && !Z)) << b;
                    h |= static_cast<unsigned>(X != Y ? !Z : Z) << b;
                    i |= static_cast<unsigned>(Y != (X || !Z)) << b;
                }
                const Word6 a(x), bb(y), c(z);
                mismatches += logical_f(a, bb, c).value() != f;
                mismatches += logical_g(a, bb, c).value() != g;
                mismatches += logical_h(a, bb, c).value() != h;
                mismatches += logical_i(a, bb, c).value() != i;
            }

    // Every namespace value renders to a distinct name that parses back to it.
    std::size_t bad_names = 0;
    for (std::uint32_t v = 0; v < cmd5::kNamespaceSize; ++v) {
        const cmd5::NameCode code = cmd5::NameCode::from_value(v);
        if (cmd5::NameCode::parse(code.str()).value() != v)
            ++bad_names;
    }
    // Every 24-bit state lands on the value it is congruent to.
    std::size_t bad_states = 0;
    std::mt19937_64 rng(2);
    for (int k = 0; k < 200000; ++k) {
        BitString state;
        std::uint32_t number = 0;
        for (unsigned b = 0; b < cmd5::kStateBits; ++b) {
            const bool bit = rng() >> 63;
            state.push_back(bit);
            number |= static_cast<std::uint32_t>(bit) << b;
        }
        bad_states += cmd5::state_to_name(state).value() != number % cmd5::kNamespaceSize;
    }
    const double secs = seconds_since(t0);
    char buf[200];
    std::snprintf(buf, sizeof buf, "64^3 truth tables (%zu mismatches), %u-name bijection (%zu failures), %.2f s",
                  mismatches, static_cast<unsigned>(cmd5::kNamespaceSize), bad_names + bad_states, secs);
    report(2, mismatches == 0 && bad_names == 0 && bad_states == 0 && secs < 60.0, buf);
}

void criterion3()
{
    std::size_t bad = 0;
    for (std::size_t len = 1; len <= 400; ++len) {
        BitString m;
        for (std::size_t i = 0; i < len; ++i)
            m.push_back((i * 7 + len) % 3 == 0);
        const BitString p = cmd5::pad_message(m);
        if (p.size() % cmd5::kBlockBits != 0 || p.read_uint(p.size() - 16, 16) != len || p.size() <= len ||
            p.slice(0, len) != m || !p[len])
            ++bad;
    }
    report(3, bad == 0, "padding sweep over 1-400 bits (" + std::to_string(bad) + " failures)");
}

void criterion4(const HexamerLibrary& lib)
{
    const auto t0 = Clock::now();
    const std::regex grammar("^[A-Z][a-z]{2}[0-9]{1,2}-([A-Z][2-3]?)+$");
    const auto run = [&](unsigned threads) {
        std::mt19937_64 rng(20240601);
        std::vector<FastaRecord> records;
        records.reserve(100000);
        for (int i = 0; i < 100000; ++i)
            records.push_back({"s" + std::to_string(i), "", random_rna_between(rng, 9, 40)});
        const Namer namer(lib);
        auto rows = batch_name(records, namer, threads);
        std::ostringstream out;
        write_batch_tsv(out, rows, namer);
        return std::pair(out.str(), std::move(rows));
    };
    const auto [first, rows] = run(1);
    const auto second = run(default_thread_count()).first;
    std::size_t bad = 0;
    for (const BatchRow& r : rows) {
        // parse() also insists on exactly three raw letters.
        if (!r.error.empty() || !std::regex_match(r.full_name, grammar) ||
            parse_name(r.full_name).str() != r.full_name)
            ++bad;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "100000 names: %zu grammar failures, reruns %s, %.1f s", bad,
                  first == second ? "byte-identical" : "DIFFER", seconds_since(t0));
    report(4, bad == 0 && first == second, buf);
}

void criterion5()
{
    const auto t0 = Clock::now();
    const std::size_t n = 1000000;
    const CollisionReport r = collision_report(n, 22, 1);
    const double expected = cmd5::kNamespaceSize * (1.0 - std::pow(1.0 - 1.0 / cmd5::kNamespaceSize, n));
    const double rel = (static_cast<double>(r.distinct_names) - expected) / expected;
    const double secs = seconds_since(t0);
    char buf[240];
    std::snprintf(buf, sizeof buf, "10^6 random 22-mers: %zu distinct vs expected %.2f (%+.3f%%), avalanche %.3f bits, %.1f s",
                  r.distinct_names, expected, 100.0 * rel, r.avalanche_mean, secs);
    report(5, std::fabs(rel) <= 0.02 && secs < 120.0, buf);
}

void criterion6()
{
    using namespace rnaname::testing;
    std::mt19937_64 rng(6006);
    std::size_t linkage_bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        const auto d = random_int_matrix(n, 4, rng);
        const auto got = merge_signature(average_linkage_cluster(d));
        const auto want = brute_force_average_linkage(d);
        bool same = got.size() == want.size();
        for (std::size_t k = 0; same && k < got.size(); ++k)
            same = got[k].a == want[k].a && got[k].b == want[k].b && got[k].height == want[k].height;
        linkage_bad += !same;
    }
    std::size_t order_bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        const Dendrogram t = trial % 2 ? random_dendrogram(n, rng) : average_linkage_cluster(random_int_matrix(n, 6, rng));
        const auto d = random_int_matrix(n, 6, rng);
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (const auto& o : all_flip_orders(t))
            best = std::min(best, order_cost(o, d));
        order_bad += order_cost(optimal_leaf_order(t, d), d) != best;
    }
    report(6, linkage_bad == 0 && order_bad == 0,
           "linkage vs brute force on 200 instances (" + std::to_string(linkage_bad) +
               " mismatches), leaf order vs exhaustive flips on 100 trees (" + std::to_string(order_bad) +
               " mismatches)");
}

void criterion7(const HexamerLibrary& lib)
{
    const std::string shipped_text = slurp(RNANAME_DEFAULT_LIBRARY);
    bool ok = lib.order().size() == kHexamerCount;
    std::array<std::size_t, kLetterCount> census{};
    for (std::size_t h = 0; h < kHexamerCount; ++h)
        ++census[static_cast<std::size_t>(lib.letter(static_cast<std::uint16_t>(h)) - 'A')];
    ok = ok && census == bin_sizes();

    const auto t0 = Clock::now();
    const HexamerLibrary rebuilt = build_default_library();
    const double build_secs = seconds_since(t0);
    const bool identical = rebuilt.serialize() == shipped_text;

    const std::string path = (std::filesystem::temp_directory_path() / "rnaname_acceptance.hexlib").string();
    save_library(rebuilt, path);
    const bool round_trip = slurp(path) == shipped_text && load_library(path).serialize() == shipped_text;
    std::filesystem::remove(path);

    std::string flipped = shipped_text;
    flipped[flipped.size() - 2] = flipped[flipped.size() - 2] == '0' ? '1' : '0';
    std::string edited = shipped_text;
    edited[edited.find("\tA\n") + 1] = 'B';
    const bool rejects = throws_kind([&] { parse_library(flipped); }, ErrorKind::checksum_mismatch) &&
                         throws_kind([&] { parse_library(edited); }, ErrorKind::checksum_mismatch) &&
                         throws_kind([&] { parse_library(shipped_text.substr(0, 5000)); }, ErrorKind::truncated) &&
                         throws_kind([&] { parse_library("hexamer-library\t7\n"); }, ErrorKind::version_mismatch);

    char buf[240];
    std::snprintf(buf, sizeof buf,
                  "4096 entries in 14x158 + 12x157 bins %s, rebuild %s (%.1f s), save/load %s, corrupt files %s",
                  ok ? "ok" : "WRONG", identical ? "byte-identical" : "DIFFERS", build_secs,
                  round_trip ? "ok" : "FAILED", rejects ? "rejected" : "ACCEPTED");
    report(7, ok && identical && round_trip && rejects, buf);
}

void criterion8(const HexamerLibrary& lib)
{
    struct Row {
        const char* species;
        const char* id;
        const char* seq;
        const char* code;
        const char* sig;
    };
    const Row table[] = {
        {"human", "miR-106a", "AAAAGUGCUUACAGUGCAGGUAG", "Gqd85", "NI2"},
        {"human", "miR-106b", "UAAAGUGCUGACAGUGCAGAU", "Vik36", "NI2"},
        {"human", "miR-17", "CAAAGUGCUUACAGUGCAGGUAG", "Tuq99", "NI2"},
        {"human", "miR-20a", "UAAAGUGCUUUAUAGUGCAGGUAG", "Wxn52", "NI2"},
        {"human", "miR-20b", "CAAAGUGCUCAUAGUGCAGGUAG", "Tmu61", "NI2"},
        {"human", "miR-93", "CAAAGUGCUGUUCGUGCAGGUAG", "Voq38", "NI2"},
        {"human", "miR-18a", "UAAGGUGCAUCUAGUGCAGAUAG", "Ujr2", "HI2"},
        {"human", "miR-18b", "UAAGGUGCAUCUAGUGCAGUUAG", "Yql70", "HI2"},
        {"mouse", "miR-106a", "CAAAGUGCUAACAGUGCAGGUAG", "Ypn14", "NI2"},
        {"mouse", "miR-106b", "UAAAGUGCUGACAGUGCAGAU", "Vik36", "NI2"},
    };
    const Namer namer(lib);
    std::size_t code_hits = 0, sig_hits = 0;
    std::vector<FamilyMember> human;
    for (const Row& r : table) {
        const NamedSequence n = namer.name(r.seq);
        code_hits += n.name.code.str() == r.code;
        sig_hits += n.name.signature.compressed() == r.sig;
        diagnostic(std::string(r.species) + " " + r.id + ": " + n.name.str() + " (reference " + r.code + "-" + r.sig +
                   ")");
        if (std::string(r.species) == "human")
            human.push_back({"miR-17", r.id, r.seq});
    }
    const FamilyEvalReport fam = evaluate_families(human, lib);
    diagnostic("reference name fields matched " + std::to_string(code_hits) + "/10, signatures " +
               std::to_string(sig_hits) + "/10");
    diagnostic("human miR-17 family: modal " + fam.families[0].modal_signature + " " +
               std::to_string(fam.families[0].modal_count) + "/" + std::to_string(fam.families[0].size) +
               " (reference NI2 6/8)");

    // Gated: identical sequences share names; shared positions 2-9 share signatures.
    bool ok = namer.name(table[1].seq).name == namer.name(table[9].seq).name &&
              namer.name(table[2].seq).name == namer.name("CAAAGUGCUUACAGUGCAGGUAG").name;
    std::mt19937_64 rng(88);
    for (int trial = 0; ok && trial < 20000; ++trial) {
        const std::string core = random_rna(rng, 8);
        const std::string x = random_rna(rng, 1) + core + random_rna(rng, rng() % 30);
        const std::string y = random_rna(rng, 1) + core + random_rna(rng, rng() % 30);
        ok = signature(lib, x) == signature(lib, y) && namer.name(x).name == Namer(lib).name(x).name;
    }
    report(8, ok, "identical sequences share names; shared positions 2-9 share signatures (reference values above are "
                  "informational)");
}

void criterion9(const HexamerLibrary& lib)
{
    std::ifstream in(RNANAME_TEST_DATA "/families5.tsv");
    const FamilyEvalReport r = evaluate_families(parse_family_file(in), lib);
    const std::vector<std::pair<std::string, double>> expected{
        {"alpha", 1.0}, {"beta", 0.75}, {"delta", 1.0}, {"epsilon", 0.6}, {"gamma", 0.5}};
    bool ok = r.families.size() == expected.size();
    for (std::size_t i = 0; ok && i < expected.size(); ++i)
        ok = r.families[i].family == expected[i].first && r.families[i].coherence == expected[i].second;
    ok = ok && r.counted_families == 5 && format_fixed(r.mean_coherence) == "0.770000";
    report(9, ok, "five-family fixture coherences 1, 0.75, 1, 0.6, 0.5 and mean " + format_fixed(r.mean_coherence));
}

} // namespace

int main()
{
    const HexamerLibrary lib = load_library(RNANAME_DEFAULT_LIBRARY);
    diagnostic("library " + lib.id() + " encoder " + std::string(lib.encoder_id()) + " scoring " +
               std::string(lib.scoring_id()));
    const std::vector<std::function<void()>> criteria{
        criterion1,          criterion2,          criterion3, [&] { criterion4(lib); }, criterion5, criterion6,
        [&] { criterion7(lib); }, [&] { criterion8(lib); }, [&] { criterion9(lib); }};
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i]();
        } catch (const std::exception& e) {
            report(static_cast<int>(i + 1), false, std::string("threw: ") + e.what());
        }
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
