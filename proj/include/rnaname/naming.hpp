#pragma once

#include <rnaname/cmd5.hpp>
#include <rnaname/error.hpp>
#include <rnaname/library.hpp>
#include <rnaname/sequence.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace rnaname {

inline constexpr std::size_t kMinNameLength = 9;

// Code and familial signature joined by a hyphen, e.g. "Kdo94-H2V".
struct FullName {
    cmd5::NameCode code;
    FamilialSignature signature;

    std::string str() const { return code.str() + "-" + signature.compressed(); }

    static FullName parse(std::string_view text)
    {
        const std::size_t hyphen = text.find('-');
        if (hyphen == std::string_view::npos || text.find('-', hyphen + 1) != std::string_view::npos)
            throw Error(ErrorKind::malformed_name, "name needs exactly one hyphen: '" + std::string(text) + "'");
        return FullName{cmd5::NameCode::parse(text.substr(0, hyphen)), FamilialSignature::parse(text.substr(hyphen + 1))};
    }

    friend bool operator==(const FullName&, const FullName&) = default;
};

inline FullName parse_name(std::string_view text) { return FullName::parse(text); }

// A name together with the configuration that produced it.
struct NamedSequence {
    std::string sequence; // normalized
    FullName name;
    std::string encoder_id;
    std::string library_id;
    // CMD5 is tuned for sequences under 40 nt; longer ones are named but flagged.
    bool exceeds_recommended_length = false;
};

// Validates and normalizes input for naming: 9-60 nt over ACGU/ACGT.
inline std::string validate_for_naming(std::string_view raw)
{
    std::string rna = normalize_sequence(raw);
    if (rna.size() < kMinNameLength)
        throw Error(ErrorKind::too_short, "sequence of " + std::to_string(rna.size()) + " nt is shorter than 9 nt");
    if (rna.size() > cmd5::kMaxSequenceLength)
        throw Error(ErrorKind::too_long, "sequence of " + std::to_string(rna.size()) + " nt exceeds 60 nt");
    return rna;
}

// Names one sequence under `lib`, which also fixes the nucleotide encoder.
class Namer {
public:
    explicit Namer(const HexamerLibrary& lib) : lib_(lib), encoder_(lib.encoder()), library_id_(lib.id()) {}

    NamedSequence name(std::string_view raw) const
    {
        NamedSequence out;
        out.sequence = validate_for_naming(raw);
        out.name = FullName{cmd5::name_field(out.sequence, encoder_), signature(lib_, out.sequence)};
        out.encoder_id = std::string(encoder_.id);
        out.library_id = library_id_;
        out.exceeds_recommended_length = out.sequence.size() > cmd5::kRecommendedMaxLength;
        return out;
    }

    const HexamerLibrary& library() const noexcept { return lib_; }
    const std::string& library_id() const noexcept { return library_id_; }

private:
    const HexamerLibrary& lib_;
    const cmd5::Encoder& encoder_;
    std::string library_id_;
};

inline FullName name_sequence(const HexamerLibrary& lib, std::string_view raw)
{
    return Namer(lib).name(raw).name;
}

// Names only compare within one encoder and library; anything else is refused.
inline bool same_name(const NamedSequence& x, const NamedSequence& y)
{
    if (x.encoder_id != y.encoder_id || x.library_id != y.library_id)
        throw Error(ErrorKind::config_mismatch, "cannot compare names from " + x.encoder_id + "/" + x.library_id +
                                                    " and " + y.encoder_id + "/" + y.library_id);
    return x.name == y.name;
}

} // namespace rnaname
