#pragma once

#include <rnaname/error.hpp>
#include <rnaname/matrix.hpp>
#include <rnaname/parallel.hpp>
#include <rnaname/sequence.hpp>

#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace rnaname {

// Linear-gap Smith-Waterman scoring. The defaults are the usual nucleotide
// defaults of MATLAB's swalign (match +5, mismatch -4, gap -8).
struct ScoringConfig {
    int match = 5;
    int mismatch = -4;
    int gap = -8;

    // "sw:<match>:<mismatch>:<gap>"
    std::string id() const
    {
        return "sw:" + std::to_string(match) + ":" + std::to_string(mismatch) + ":" + std::to_string(gap);
    }

    // Accepts "default" or the form produced by id().
    static ScoringConfig parse(std::string_view text)
    {
        if (text == "default")
            return {};
        const auto bad = [&] {
            return Error(ErrorKind::unknown_config, "unknown scoring config '" + std::string(text) + "'");
        };
        if (text.substr(0, 3) != "sw:")
            throw bad();
        std::array<int, 3> values{};
        std::string_view rest = text.substr(3);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const std::size_t colon = rest.find(':');
            const std::string_view field = rest.substr(0, colon);
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), values[i]);
            if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
                throw bad();
            if ((colon == std::string_view::npos) != (i + 1 == values.size()))
                throw bad();
            rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
        }
        ScoringConfig cfg{values[0], values[1], values[2]};
        if (cfg.match <= 0)
            throw Error(ErrorKind::unknown_config, "match score must be positive");
        return cfg;
    }

    friend bool operator==(const ScoringConfig&, const ScoringConfig&) = default;
};

// Number of identical aligned positions in the best local alignment of two
// hexamers. Among alignments of equal score the one with more matches wins.
inline int local_align_matches(std::string_view h1, std::string_view h2, const ScoringConfig& scoring = {})
{
    hexamer_index(h1);
    hexamer_index(h2);

    struct Cell {
        int score = 0;
        int matches = 0;
        bool operator<(const Cell& o) const { return score != o.score ? score < o.score : matches < o.matches; }
    };
    constexpr std::size_t n = kHexamerLength;
    std::array<std::array<Cell, n + 1>, n + 1> h{};
    Cell best{};
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const bool same = h1[i - 1] == h2[j - 1];
            Cell cell{}; // empty alignment restarts here
            const Cell diag{h[i - 1][j - 1].score + (same ? scoring.match : scoring.mismatch),
                            h[i - 1][j - 1].matches + (same ? 1 : 0)};
            const Cell up{h[i - 1][j].score + scoring.gap, h[i - 1][j].matches};
            const Cell left{h[i][j - 1].score + scoring.gap, h[i][j - 1].matches};
            for (const Cell& c : {diag, up, left})
                if (cell < c)
                    cell = c;
            h[i][j] = cell;
            if (best < cell)
                best = cell;
        }
    }
    return best.matches;
}

// Identity = matching aligned positions / 6.
inline double local_align_identity(std::string_view h1, std::string_view h2, const ScoringConfig& scoring = {})
{
    return local_align_matches(h1, h2, scoring) / static_cast<double>(kHexamerLength);
}

// Pairwise identities over all 4096 hexamers, stored as match counts 0..6.
class SimilarityMatrix {
public:
    explicit SimilarityMatrix(SquareMatrix<std::uint8_t> matches) : matches_(std::move(matches)) {}

    std::size_t size() const noexcept { return matches_.size(); }

    int matches(std::size_t i, std::size_t j) const noexcept { return matches_(i, j); }
    double identity(std::size_t i, std::size_t j) const noexcept
    {
        return matches_(i, j) / static_cast<double>(kHexamerLength);
    }

    // Distances in units of 1/6: 1 - identity scaled to an exact integer.
    SquareMatrix<int> distance_units() const
    {
        SquareMatrix<int> d(size());
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                d(i, j) = static_cast<int>(kHexamerLength) - matches_(i, j);
        return d;
    }

    const SquareMatrix<std::uint8_t>& raw() const noexcept { return matches_; }

    friend bool operator==(const SimilarityMatrix&, const SimilarityMatrix&) = default;

private:
    SquareMatrix<std::uint8_t> matches_;
};

inline SimilarityMatrix build_similarity_matrix(const ScoringConfig& scoring = {},
                                                unsigned threads = default_thread_count())
{
    std::array<std::string, kHexamerCount> names;
    for (std::size_t i = 0; i < kHexamerCount; ++i)
        names[i] = hexamer_string(i);

    SquareMatrix<std::uint8_t> m(kHexamerCount);
    // Row i fills the upper triangle (i, j >= i); mirrored afterwards.
    parallel_for(kHexamerCount, threads, [&](std::size_t i) {
        for (std::size_t j = i; j < kHexamerCount; ++j)
            m(i, j) = static_cast<std::uint8_t>(local_align_matches(names[i], names[j], scoring));
    });
    for (std::size_t i = 0; i < kHexamerCount; ++i)
        for (std::size_t j = 0; j < i; ++j)
            m(i, j) = m(j, i);
    return SimilarityMatrix(std::move(m));
}

} // namespace rnaname
