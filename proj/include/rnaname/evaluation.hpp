#pragma once

#include <rnaname/error.hpp>
#include <rnaname/library.hpp>
#include <rnaname/naming.hpp>

#include <cstddef>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace rnaname {

struct FamilyMember {
    std::string family;
    std::string member;
    std::string sequence;
};

// "family-id TAB member-id TAB sequence" per line; blank and '#' lines skipped.
inline std::vector<FamilyMember> parse_family_file(std::istream& in)
{
    std::vector<FamilyMember> members;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        const std::size_t t1 = line.find('\t');
        const std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos || t1 == 0)
            throw Error(ErrorKind::malformed_family_file,
                        "line " + std::to_string(line_no) + ": expected family<TAB>member<TAB>sequence");
        members.push_back({line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), line.substr(t2 + 1)});
    }
    return members;
}

struct FamilyRow {
    std::string family;
    std::size_t size = 0;    // members with a valid signature
    std::size_t invalid = 0; // members that could not be signed
    std::string modal_signature;
    std::size_t modal_count = 0;
    double coherence = 0.0;
};

struct FamilyEvalReport {
    std::string library_id;
    std::string encoder_id;
    std::string scoring_id;
    std::vector<FamilyRow> families; // sorted by family id
    std::size_t counted_families = 0;
    double mean_coherence = 0.0; // macro-average over families with size > 0
};

// Coherence of a family is the fraction of its members sharing the most
// common signature (ties go to the lexicographically smallest signature).
// Families are reported in id order, so the mean does not depend on the
// order of the input file.
inline FamilyEvalReport evaluate_families(const std::vector<FamilyMember>& members, const HexamerLibrary& lib)
{
    struct Tally {
        std::map<std::string, std::size_t> signatures;
        std::size_t invalid = 0;
    };
    std::map<std::string, Tally> tallies;
    for (const FamilyMember& m : members) {
        Tally& t = tallies[m.family];
        try {
            ++t.signatures[signature(lib, m.sequence).compressed()];
        } catch (const Error&) {
            ++t.invalid;
        }
    }

    FamilyEvalReport report;
    report.library_id = lib.id();
    report.encoder_id = std::string(lib.encoder_id());
    report.scoring_id = std::string(lib.scoring_id());
    double total = 0.0;
    for (const auto& [family, t] : tallies) {
        FamilyRow row;
        row.family = family;
        row.invalid = t.invalid;
        for (const auto& [sig, count] : t.signatures) {
            row.size += count;
            if (count > row.modal_count) {
                row.modal_count = count;
                row.modal_signature = sig;
            }
        }
        if (row.size > 0) {
            row.coherence = static_cast<double>(row.modal_count) / static_cast<double>(row.size);
            total += row.coherence;
            ++report.counted_families;
        }
        report.families.push_back(std::move(row));
    }
    if (report.counted_families > 0)
        report.mean_coherence = total / static_cast<double>(report.counted_families);
    return report;
}

inline std::string format_fixed(double v, int digits = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

inline void write_family_report(std::ostream& out, const FamilyEvalReport& r)
{
    out << "# family coherence (macro-average over families)\n";
    out << "# library=" << r.library_id << " encoder=" << r.encoder_id << " scoring=" << r.scoring_id << '\n';
    out << "family\tsize\tinvalid\tmodal_signature\tmodal_count\tcoherence\n";
    for (const FamilyRow& f : r.families)
        out << f.family << '\t' << f.size << '\t' << f.invalid << '\t' << f.modal_signature << '\t' << f.modal_count
            << '\t' << format_fixed(f.coherence) << '\n';
    out << "# mean_coherence=" << format_fixed(r.mean_coherence) << " families=" << r.counted_families << '/'
        << r.families.size() << '\n';
}

} // namespace rnaname
