#pragma once

#include <rnaname/alignment.hpp>
#include <rnaname/clustering.hpp>
#include <rnaname/cmd5.hpp>
#include <rnaname/error.hpp>
#include <rnaname/leaf_order.hpp>
#include <rnaname/sequence.hpp>

#include <zlib.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace rnaname {

inline constexpr std::size_t kLetterCount = 26;
inline constexpr std::string_view kLibraryMagic = "hexamer-library";
inline constexpr std::string_view kLibraryFormatVersion = "1";

// Sizes of the 26 contiguous bins over the leaf order: the first
// 4096 % 26 = 14 bins take one extra hexamer (158), the rest hold 157.
constexpr std::array<std::size_t, kLetterCount> bin_sizes() noexcept
{
    std::array<std::size_t, kLetterCount> sizes{};
    for (std::size_t i = 0; i < kLetterCount; ++i)
        sizes[i] = kHexamerCount / kLetterCount + (i < kHexamerCount % kLetterCount ? 1 : 0);
    return sizes;
}

// Three letters, one per hexamer at positions 2-7, 3-8 and 4-9. Rendered
// with tandem runs collapsed to letter + run length (HVV -> HV2).
class FamilialSignature {
public:
    FamilialSignature() = default;
    explicit FamilialSignature(std::array<char, 3> raw) : raw_(raw)
    {
        for (char c : raw_)
            if (c < 'A' || c > 'Z')
                throw Error(ErrorKind::malformed_name, "signature letters must be A-Z");
    }

    const std::array<char, 3>& raw() const noexcept { return raw_; }

    std::string compressed() const
    {
        std::string out;
        for (std::size_t i = 0; i < raw_.size();) {
            std::size_t run = 1;
            while (i + run < raw_.size() && raw_[i + run] == raw_[i])
                ++run;
            out.push_back(raw_[i]);
            if (run > 1)
                out.push_back(static_cast<char>('0' + run));
            i += run;
        }
        return out;
    }

    // Inverse of compressed(); rejects non-canonical forms such as "H1VV" or "H2H".
    static FamilialSignature parse(std::string_view text)
    {
        const auto bad = [&] {
            return Error(ErrorKind::malformed_name, "malformed familial signature '" + std::string(text) + "'");
        };
        std::string letters;
        for (std::size_t i = 0; i < text.size();) {
            const char c = text[i];
            if (c < 'A' || c > 'Z' || (!letters.empty() && letters.back() == c))
                throw bad();
            std::size_t run = 1;
            if (i + 1 < text.size() && (text[i + 1] == '2' || text[i + 1] == '3')) {
                run = static_cast<std::size_t>(text[i + 1] - '0');
                i += 2;
            } else {
                i += 1;
            }
            letters.append(run, c);
        }
        if (letters.size() != 3)
            throw bad();
        return FamilialSignature({letters[0], letters[1], letters[2]});
    }

    friend bool operator==(const FamilialSignature&, const FamilialSignature&) = default;

private:
    std::array<char, 3> raw_{'A', 'A', 'A'};
};

// Every hexamer mapped to one of 26 letters, derived from an ordered leaf list.
class HexamerLibrary {
public:
    HexamerLibrary() = default;

    std::string_view encoder_id() const noexcept { return encoder_id_; }
    std::string_view scoring_id() const noexcept { return scoring_id_; }
    const std::optional<std::string>& built() const noexcept { return built_; }
    void set_built(std::optional<std::string> text) { built_ = std::move(text); }

    // Hexamer indices in leaf order.
    const std::vector<std::uint16_t>& order() const noexcept { return order_; }

    char letter(std::uint16_t hexamer) const { return letters_.at(hexamer); }
    char letter(std::string_view hexamer) const { return letters_[hexamer_index(hexamer)]; }

    const cmd5::Encoder& encoder() const { return cmd5::encoder_by_id(encoder_id_); }

    // Body used for the checksum: everything except the build line and the checksum line.
    std::string checksummed_text() const
    {
        std::string out;
        out.reserve(kHexamerCount * 9 + 128);
        out += std::string(kLibraryMagic) + "\t" + std::string(kLibraryFormatVersion) + "\n";
        out += "cmd5\t" + std::string(cmd5::kConventionId) + "\n";
        out += "encoder\t" + encoder_id_ + "\n";
        out += "scoring\t" + scoring_id_ + "\n";
        for (std::uint16_t h : order_) {
            out += hexamer_string(h);
            out.push_back('\t');
            out.push_back(letters_[h]);
            out.push_back('\n');
        }
        return out;
    }

    std::uint32_t checksum() const { return crc32_of(checksummed_text()); }

    // Identifies the library for provenance checks, e.g. "hexlib1:3f2a09bc".
    std::string id() const { return "hexlib" + std::string(kLibraryFormatVersion) + ":" + hex32(checksum()); }

    std::string serialize() const
    {
        const std::string body = checksummed_text();
        std::string out;
        const std::size_t headers = header_length(body);
        out.append(body, 0, headers);
        if (built_)
            out += "built\t" + *built_ + "\n";
        out.append(body, headers, std::string::npos);
        out += "crc32\t" + hex32(crc32_of(body)) + "\n";
        return out;
    }

    friend bool operator==(const HexamerLibrary&, const HexamerLibrary&) = default;

    static std::uint32_t crc32_of(std::string_view bytes)
    {
        uLong crc = ::crc32(0L, Z_NULL, 0);
        crc = ::crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
        return static_cast<std::uint32_t>(crc);
    }

    static std::string hex32(std::uint32_t v)
    {
        char buf[9];
        std::snprintf(buf, sizeof buf, "%08x", v);
        return buf;
    }

private:
    friend HexamerLibrary build_library(const std::vector<std::size_t>&, std::string_view, std::string_view);
    friend HexamerLibrary parse_library(std::string_view);

    // The four fixed header lines precede the data.
    static std::size_t header_length(std::string_view body)
    {
        std::size_t pos = 0;
        for (int line = 0; line < 4; ++line)
            pos = body.find('\n', pos) + 1;
        return pos;
    }

    std::string encoder_id_;
    std::string scoring_id_;
    std::optional<std::string> built_;
    std::vector<std::uint16_t> order_;
    std::array<char, kHexamerCount> letters_{};
};

// Splits a leaf order of all 4096 hexamers into 26 contiguous bins lettered A-Z.
inline HexamerLibrary build_library(const std::vector<std::size_t>& order, std::string_view encoder_id,
                                    std::string_view scoring_id)
{
    if (order.size() != kHexamerCount)
        throw Error(ErrorKind::bad_permutation,
                    "leaf order must list all 4096 hexamers, got " + std::to_string(order.size()));
    std::vector<bool> seen(kHexamerCount, false);
    for (std::size_t h : order) {
        if (h >= kHexamerCount || seen[h])
            throw Error(ErrorKind::bad_permutation, "leaf order is not a permutation of the hexamers");
        seen[h] = true;
    }
    cmd5::encoder_by_id(encoder_id);

    HexamerLibrary lib;
    lib.encoder_id_ = encoder_id;
    lib.scoring_id_ = scoring_id;
    lib.order_.assign(order.begin(), order.end());
    std::size_t pos = 0;
    const auto sizes = bin_sizes();
    for (std::size_t bin = 0; bin < kLetterCount; ++bin)
        for (std::size_t i = 0; i < sizes[bin]; ++i)
            lib.letters_[order[pos++]] = static_cast<char>('A' + bin);
    return lib;
}

// Full pipeline: pairwise local-alignment identities, average-linkage
// clustering of distance 1 - identity, optimal leaf ordering, 26 bins.
inline HexamerLibrary build_default_library(const ScoringConfig& scoring = {},
                                            const cmd5::Encoder& encoder = cmd5::default_encoder(),
                                            const ProgressFn& progress = {},
                                            unsigned threads = default_thread_count())
{
    const SquareMatrix<int> distances = build_similarity_matrix(scoring, threads).distance_units();
    const Dendrogram tree = average_linkage_cluster(distances);
    const std::vector<std::size_t> order = optimal_leaf_order(tree, distances, progress);
    return build_library(order, encoder.id, scoring.id());
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            throw Error(ErrorKind::truncated, "library file ends without a newline");
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

inline std::optional<std::string_view> header_value(std::string_view line, std::string_view key)
{
    if (line.size() > key.size() && line.substr(0, key.size()) == key && line[key.size()] == '\t')
        return line.substr(key.size() + 1);
    return std::nullopt;
}

} // namespace detail

// Parses and validates a serialized library. Failures are reported as
// version_mismatch, truncated, checksum_mismatch, entry_count or
// invariant_violation, checked in that order.
inline HexamerLibrary parse_library(std::string_view text)
{
    if (text.empty())
        throw Error(ErrorKind::truncated, "library file is empty");
    const auto lines = detail::split_lines(text);

    const auto version = detail::header_value(lines[0], kLibraryMagic);
    if (!version)
        throw Error(ErrorKind::version_mismatch, "not a hexamer library file");
    if (*version != kLibraryFormatVersion)
        throw Error(ErrorKind::version_mismatch, "unsupported library format version '" + std::string(*version) + "'");

    const auto stored = detail::header_value(lines.back(), "crc32");
    if (lines.size() < 2 || !stored)
        throw Error(ErrorKind::truncated, "library file has no checksum line");

    // Header block: key<TAB>value lines after the magic line, up to the first entry.
    std::optional<std::string_view> cmd5_id, encoder_id, scoring_id;
    std::optional<std::string> built;
    std::size_t built_line = 0;
    std::size_t first_data = 1;
    for (; first_data + 1 < lines.size(); ++first_data) {
        const std::string_view line = lines[first_data];
        std::optional<std::string_view>* slot = nullptr;
        std::optional<std::string_view> value;
        if ((value = detail::header_value(line, "cmd5")))
            slot = &cmd5_id;
        else if ((value = detail::header_value(line, "encoder")))
            slot = &encoder_id;
        else if ((value = detail::header_value(line, "scoring")))
            slot = &scoring_id;
        else if ((value = detail::header_value(line, "built"))) {
            if (built)
                throw Error(ErrorKind::invariant_violation, "duplicate built line");
            built = std::string(*value);
            built_line = first_data;
            continue;
        } else
            break;
        if (*slot)
            throw Error(ErrorKind::invariant_violation, "duplicate header line '" + std::string(line) + "'");
        *slot = value;
    }

    std::string body;
    body.reserve(text.size());
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        if (built && i == built_line)
            continue;
        body.append(lines[i]);
        body.push_back('\n');
    }
    if (HexamerLibrary::hex32(HexamerLibrary::crc32_of(body)) != *stored)
        throw Error(ErrorKind::checksum_mismatch, "library checksum mismatch");

    if (!cmd5_id || !encoder_id || !scoring_id)
        throw Error(ErrorKind::invariant_violation, "library header must list cmd5, encoder and scoring");
    if (*cmd5_id != cmd5::kConventionId)
        throw Error(ErrorKind::version_mismatch, "library was built for digest convention '" + std::string(*cmd5_id) + "'");

    const std::size_t entries = lines.size() - 1 - first_data;
    if (entries != kHexamerCount)
        throw Error(ErrorKind::entry_count, "library has " + std::to_string(entries) + " entries, expected 4096");

    std::vector<std::size_t> order;
    order.reserve(kHexamerCount);
    std::string letters;
    for (std::size_t i = first_data; i + 1 < lines.size(); ++i) {
        const std::string_view line = lines[i];
        if (line.size() != kHexamerLength + 2 || line[kHexamerLength] != '\t')
            throw Error(ErrorKind::invariant_violation, "malformed library entry '" + std::string(line) + "'");
        try {
            order.push_back(hexamer_index(line.substr(0, kHexamerLength)));
        } catch (const Error&) {
            throw Error(ErrorKind::invariant_violation, "malformed library entry '" + std::string(line) + "'");
        }
        letters.push_back(line.back());
    }

    HexamerLibrary lib;
    try {
        cmd5::encoder_by_id(*encoder_id);
        lib = build_library(order, *encoder_id, *scoring_id);
    } catch (const Error& e) {
        throw Error(ErrorKind::invariant_violation, e.what());
    }
    for (std::size_t i = 0; i < order.size(); ++i)
        if (lib.letter(static_cast<std::uint16_t>(order[i])) != letters[i])
            throw Error(ErrorKind::invariant_violation,
                        "bin letters do not follow the 26 contiguous bins at entry " + std::to_string(i + 1));
    lib.set_built(std::move(built));
    return lib;
}

inline void save_library(const HexamerLibrary& lib, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::io, "cannot write '" + path + "'");
    const std::string text = lib.serialize();
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw Error(ErrorKind::io, "failed writing '" + path + "'");
}

inline HexamerLibrary load_library(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io, "cannot open library '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_library(buf.str());
}

// Letters of the hexamers starting at 1-based positions 2, 3 and 4.
inline FamilialSignature signature(const HexamerLibrary& lib, std::string_view seq)
{
    const std::string rna = normalize_sequence(seq);
    if (rna.size() < 9)
        throw Error(ErrorKind::too_short,
                    "signature needs at least 9 nt, got " + std::to_string(rna.size()));
    std::string_view view(rna);
    return FamilialSignature({lib.letter(view.substr(1, kHexamerLength)), lib.letter(view.substr(2, kHexamerLength)),
                              lib.letter(view.substr(3, kHexamerLength))});
}

} // namespace rnaname
