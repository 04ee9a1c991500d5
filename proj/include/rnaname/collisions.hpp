#pragma once

#include <rnaname/cmd5.hpp>
#include <rnaname/error.hpp>
#include <rnaname/evaluation.hpp>
#include <rnaname/sequence.hpp>

#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace rnaname {

inline constexpr const char* kReportGenerator = "mt19937_64";

// Expected number of distinct values when drawing n times uniformly from M slots.
inline double expected_distinct(double n, double slots = cmd5::kNamespaceSize)
{
    return -slots * std::expm1(n * std::log1p(-1.0 / slots));
}

// Uniform random RNA of the given length, two bits per base from the top of
// each engine output so the stream is identical on every platform.
inline std::string random_rna(std::mt19937_64& rng, std::size_t length)
{
    std::string s(length, 'A');
    for (char& c : s)
        c = kNucleotides[rng() >> 62];
    return s;
}

struct CollisionReport {
    std::size_t n = 0;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    std::string encoder_id;
    std::size_t distinct_names = 0;
    std::uint64_t collision_pairs = 0;
    double expected_distinct_names = 0.0;
    std::array<double, cmd5::kStateBits> bit_one_fraction{}; // per FinalState bit
    double avalanche_mean = 0.0; // state bits flipped by one point substitution
};

// Names n random sequences; tallies distinct names and colliding pairs
// against the birthday expectation, per-bit bias of the 24-bit state and
// how many state bits change when one random base is substituted.
inline CollisionReport collision_report(std::size_t n, std::size_t length, std::uint64_t seed,
                                        const cmd5::Encoder& encoder = cmd5::default_encoder())
{
    if (n == 0)
        throw Error(ErrorKind::invariant_violation, "collision report needs n >= 1");
    if (length == 0 || length > cmd5::kMaxSequenceLength)
        throw Error(ErrorKind::too_long, "sequence length must be within 1..60");

    CollisionReport r;
    r.n = n;
    r.length = length;
    r.seed = seed;
    r.encoder_id = std::string(encoder.id);
    r.expected_distinct_names = expected_distinct(static_cast<double>(n));

    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> counts(cmd5::kNamespaceSize, 0);
    std::array<std::uint64_t, cmd5::kStateBits> ones{};
    std::uint64_t flipped = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::string seq = random_rna(rng, length);
        const std::uint32_t number = cmd5::state_number(cmd5::digest(seq, encoder));
        ++counts[number % cmd5::kNamespaceSize];
        for (std::size_t b = 0; b < cmd5::kStateBits; ++b)
            ones[b] += (number >> b) & 1u;

        const std::size_t pos = rng() % length;
        seq[pos] = kNucleotides[(base_code(seq[pos]) + 1 + rng() % 3) % 4];
        const std::uint32_t mutated = cmd5::state_number(cmd5::digest(seq, encoder));
        flipped += static_cast<std::uint64_t>(std::popcount(number ^ mutated));
    }
    for (std::uint32_t c : counts) {
        if (c > 0)
            ++r.distinct_names;
        r.collision_pairs += static_cast<std::uint64_t>(c) * (c - 1) / 2;
    }
    for (std::size_t b = 0; b < cmd5::kStateBits; ++b)
        r.bit_one_fraction[b] = static_cast<double>(ones[b]) / static_cast<double>(n);
    r.avalanche_mean = static_cast<double>(flipped) / static_cast<double>(n);
    return r;
}

inline void write_collision_report(std::ostream& out, const CollisionReport& r)
{
    out << "# collision report\n";
    out << "generator\t" << kReportGenerator << '\n';
    out << "seed\t" << r.seed << '\n';
    out << "encoder\t" << r.encoder_id << '\n';
    out << "convention\t" << cmd5::kConventionId << '\n';
    out << "n\t" << r.n << '\n';
    out << "length\t" << r.length << '\n';
    out << "namespace\t" << cmd5::kNamespaceSize << '\n';
    out << "distinct_names\t" << r.distinct_names << '\n';
    out << "expected_distinct\t" << format_fixed(r.expected_distinct_names, 3) << '\n';
    out << "collision_pairs\t" << r.collision_pairs << '\n';
    out << "avalanche_mean_bits\t" << format_fixed(r.avalanche_mean, 4) << '\n';
    for (std::size_t b = 0; b < r.bit_one_fraction.size(); ++b)
        out << "bit_" << b << "_ones\t" << format_fixed(r.bit_one_fraction[b], 4) << '\n';
}

} // namespace rnaname
