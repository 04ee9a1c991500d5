// Names every record of a FASTA file and groups the records by signature.
//
//   name_fasta [file.fasta] [library.hexlib]

#include <rnaname/rnaname.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    const std::string fasta_path = argc > 1 ? argv[1] : RNANAME_SAMPLE_FASTA;
    const std::string library_path = argc > 2 ? argv[2] : RNANAME_DEFAULT_LIBRARY;
    try {
        const rnaname::HexamerLibrary lib = rnaname::load_library(library_path);
        const rnaname::Namer namer(lib);
        std::ifstream in(fasta_path);
        if (!in)
            throw rnaname::Error(rnaname::ErrorKind::io, "cannot open '" + fasta_path + "'");

        std::map<std::string, std::vector<std::string>> by_signature;
        for (const auto& rec : rnaname::parse_fasta(in)) {
            const rnaname::NamedSequence named = namer.name(rec.sequence);
            std::cout << rec.id << '\t' << named.name.str() << '\n';
            by_signature[named.name.signature.compressed()].push_back(rec.id);
        }

        std::cout << "\nlibrary " << namer.library_id() << '\n';
        for (const auto& [sig, ids] : by_signature) {
            std::cout << sig << ':';
            for (const auto& id : ids)
                std::cout << ' ' << id;
            std::cout << '\n';
        }
    } catch (const rnaname::Error& e) {
        std::cerr << "error\t" << rnaname::to_string(e.kind()) << '\t' << e.what() << '\n';
        return 1;
    }
}
