#pragma once

#include <rnaname/fasta.hpp>
#include <rnaname/naming.hpp>
#include <rnaname/parallel.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace rnaname {

struct BatchRow {
    std::string id;
    std::string sequence; // normalized when valid, raw otherwise
    std::string name_field;
    std::string signature;
    std::string full_name;
    std::string error; // empty on success, "<kind>: <message>" otherwise
    bool long_sequence = false;
};

inline constexpr const char* kBatchColumns = "id\tsequence\tname\tsignature\tfull_name\terror";

// One row per record, in input order. Failures are recorded per row and
// never abort the batch; rows are computed in parallel into fixed slots.
inline std::vector<BatchRow> batch_name(const std::vector<FastaRecord>& records, const Namer& namer,
                                        unsigned threads = default_thread_count())
{
    std::vector<BatchRow> rows(records.size());
    parallel_for(records.size(), threads, [&](std::size_t i) {
        BatchRow& row = rows[i];
        row.id = records[i].id;
        try {
            const NamedSequence named = namer.name(records[i].sequence);
            row.sequence = named.sequence;
            row.name_field = named.name.code.str();
            row.signature = named.name.signature.compressed();
            row.full_name = named.name.str();
            row.long_sequence = named.exceeds_recommended_length;
        } catch (const Error& e) {
            row.sequence = records[i].sequence;
            row.error = std::string(to_string(e.kind())) + ": " + e.what();
        }
    });
    return rows;
}

// A "# library=... encoder=..." line, the column header, then one line per row.
inline void write_batch_tsv(std::ostream& out, const std::vector<BatchRow>& rows, const Namer& namer)
{
    out << "# library=" << namer.library_id() << " encoder=" << namer.library().encoder_id() << '\n';
    out << kBatchColumns << '\n';
    for (const BatchRow& r : rows)
        out << r.id << '\t' << r.sequence << '\t' << r.name_field << '\t' << r.signature << '\t' << r.full_name
            << '\t' << r.error << '\n';
}

} // namespace rnaname
