// Command-line front end: name, batch, build-library, eval, collisions.

#include <rnaname/batch.hpp>
#include <rnaname/collisions.hpp>
#include <rnaname/evaluation.hpp>
#include <rnaname/fasta.hpp>
#include <rnaname/library.hpp>
#include <rnaname/naming.hpp>

#include "bundled_library.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace rnaname;

constexpr const char* kLibraryEnv = "RNANAME_LIBRARY";

HexamerLibrary open_library(const std::string& path)
{
    if (path.empty())
        return parse_library(kBundledLibrary);
    return load_library(path);
}

// Writes to `path`, or stdout when empty.
class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_)
                throw Error(ErrorKind::io, "cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io, "cannot open '" + path + "'");
    return in;
}

void warn_long(const NamedSequence& named, const std::string& label)
{
    std::cerr << "warning\tlong-sequence\t" << label << " is " << named.sequence.size()
              << " nt; names are tuned for sequences under " << cmd5::kRecommendedMaxLength << " nt\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Assigns mnemonic names and familial signatures to short RNA sequences"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string library_path;
    app.add_option("--library", library_path, "Hexamer library file (default: bundled library)")
        ->envname(kLibraryEnv);

    auto* name_cmd = app.add_subcommand("name", "Print the full name of one or more sequences");
    std::vector<std::string> sequences;
    name_cmd->add_option("sequence", sequences, "RNA or DNA sequence (9-60 nt)")->required();

    auto* batch_cmd = app.add_subcommand("batch", "Name every record of a FASTA file");
    std::string fasta_path, batch_out;
    unsigned threads = default_thread_count();
    batch_cmd->add_option("fasta", fasta_path, "Input FASTA")->required();
    batch_cmd->add_option("--out", batch_out, "Output TSV (default: stdout)");
    batch_cmd->add_option("--threads", threads, "Worker threads");

    auto* build_cmd = app.add_subcommand("build-library", "Cluster all hexamers and write a library");
    std::string scoring_id = "default", build_out, built_text;
    build_cmd->add_option("--scoring", scoring_id, "Scoring config: 'default' or sw:<match>:<mismatch>:<gap>");
    build_cmd->add_option("--out", build_out, "Output path (default: stdout)");
    build_cmd->add_option("--built", built_text, "Free text for the build line (excluded from the checksum)");
    build_cmd->add_option("--threads", threads, "Worker threads for the similarity matrix");

    auto* eval_cmd = app.add_subcommand("eval", "Family coherence report for a family TSV");
    std::string family_path, eval_out;
    eval_cmd->add_option("family-file", family_path, "family<TAB>member<TAB>sequence")->required();
    eval_cmd->add_option("--out", eval_out, "Output report (default: stdout)");

    auto* coll_cmd = app.add_subcommand("collisions", "Collision, bias and avalanche census on random sequences");
    std::size_t coll_n = 0, coll_len = 0;
    std::uint64_t coll_seed = 0;
    coll_cmd->add_option("--n", coll_n, "Number of random sequences")->required()->check(CLI::PositiveNumber);
    coll_cmd->add_option("--len", coll_len, "Sequence length in nt")->required()->check(CLI::Range(1, 60));
    coll_cmd->add_option("--seed", coll_seed, "Generator seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error\tusage\t" << e.what() << '\n';
        return 2;
    }

    try {
        if (*name_cmd) {
            const HexamerLibrary lib = open_library(library_path);
            const Namer namer(lib);
            for (const std::string& s : sequences) {
                const NamedSequence named = namer.name(s);
                if (named.exceeds_recommended_length)
                    warn_long(named, s);
                std::cout << named.name.str() << '\n';
            }
        } else if (*batch_cmd) {
            const HexamerLibrary lib = open_library(library_path);
            const Namer namer(lib);
            auto in = open_input(fasta_path);
            const auto records = parse_fasta(in);
            const auto rows = batch_name(records, namer, threads);
            for (const BatchRow& row : rows)
                if (!row.error.empty())
                    std::cerr << "warning\trecord\t" << row.id << ": " << row.error << '\n';
            Output out(batch_out);
            write_batch_tsv(out.stream(), rows, namer);
        } else if (*build_cmd) {
            const ScoringConfig scoring = ScoringConfig::parse(scoring_id);
            const auto start = std::chrono::steady_clock::now();
            std::size_t last_pct = 101;
            std::cerr << "building similarity matrix and clustering (" << scoring.id() << ")\n";
            HexamerLibrary lib = build_default_library(
                scoring, cmd5::default_encoder(),
                [&](std::size_t done, std::size_t total) {
                    const std::size_t pct = done * 100 / total;
                    if (pct % 5 == 0 && pct != last_pct) {
                        last_pct = pct;
                        const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                                              std::chrono::steady_clock::now() - start)
                                              .count();
                        std::cerr << "leaf ordering " << pct << "% (" << secs << " s)\n";
                    }
                },
                threads);
            if (!built_text.empty())
                lib.set_built(built_text);
            Output out(build_out);
            out.stream() << lib.serialize();
            std::cerr << "library " << lib.id() << '\n';
        } else if (*eval_cmd) {
            const HexamerLibrary lib = open_library(library_path);
            auto in = open_input(family_path);
            const auto report = evaluate_families(parse_family_file(in), lib);
            Output out(eval_out);
            write_family_report(out.stream(), report);
        } else if (*coll_cmd) {
            const HexamerLibrary lib = open_library(library_path);
            write_collision_report(std::cout, collision_report(coll_n, coll_len, coll_seed, lib.encoder()));
        }
    } catch (const Error& e) {
        std::cerr << "error\t" << to_string(e.kind()) << '\t' << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error\tinternal\t" << e.what() << '\n';
        return 1;
    }
    return 0;
}
