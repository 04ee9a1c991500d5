#pragma once

#include <rnaname/error.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace rnaname {

inline constexpr std::array<char, 4> kNucleotides = {'A', 'C', 'G', 'U'};

inline constexpr std::size_t kHexamerLength = 6;
inline constexpr std::size_t kHexamerCount = 4096;

constexpr bool is_rna_base(char c) noexcept
{
    return c == 'A' || c == 'C' || c == 'G' || c == 'U';
}

// Uppercases, maps T to U and rejects anything outside ACGT/ACGU.
inline std::string normalize_sequence(std::string_view raw)
{
    if (raw.empty())
        throw Error(ErrorKind::empty_sequence, "empty sequence");
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (c >= 'a' && c <= 'z')
            c = static_cast<char>(c - 'a' + 'A');
        if (c == 'T')
            c = 'U';
        if (!is_rna_base(c))
            throw Error(ErrorKind::invalid_alphabet,
                        "invalid character '" + std::string(1, raw[i]) + "' at position " + std::to_string(i + 1));
        out.push_back(c);
    }
    return out;
}

// Throws unless `seq` is non-empty and strictly over A/C/G/U.
inline void require_rna(std::string_view seq)
{
    if (seq.empty())
        throw Error(ErrorKind::empty_sequence, "empty sequence");
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (!is_rna_base(seq[i]))
            throw Error(ErrorKind::invalid_alphabet,
                        "invalid character '" + std::string(1, seq[i]) + "' at position " + std::to_string(i + 1));
}

constexpr int base_code(char c) noexcept
{
    switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'U': return 3;
    default: return -1;
    }
}

// Hexamers are indexed 0..4095 in lexicographic order over A<C<G<U.
inline std::uint16_t hexamer_index(std::string_view hexamer)
{
    if (hexamer.size() != kHexamerLength)
        throw Error(ErrorKind::invalid_hexamer, "hexamer must have length 6: '" + std::string(hexamer) + "'");
    unsigned index = 0;
    for (char c : hexamer) {
        const int code = base_code(c);
        if (code < 0)
            throw Error(ErrorKind::invalid_hexamer, "invalid hexamer '" + std::string(hexamer) + "'");
        index = index * 4 + static_cast<unsigned>(code);
    }
    return static_cast<std::uint16_t>(index);
}

inline std::string hexamer_string(std::size_t index)
{
    std::string out(kHexamerLength, 'A');
    for (std::size_t i = kHexamerLength; i-- > 0;) {
        out[i] = kNucleotides[index & 3u];
        index >>= 2;
    }
    return out;
}

} // namespace rnaname
