// Walks one sequence through the digest: encoding, padding, final state, name.

#include <rnaname/cmd5.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    using namespace rnaname;
    const std::string seq = normalize_sequence(argc > 1 ? argv[1] : "UAAAGUGCUGACAGUGCAGAU");

    const BitString message = cmd5::encode_sequence(seq, cmd5::default_encoder());
    const BitString padded = cmd5::pad_message(message);
    const cmd5::DigestState words = cmd5::digest_state(seq);
    const BitString state = cmd5::digest(seq);

    std::cout << "sequence  " << seq << " (" << seq.size() << " nt)\n";
    std::cout << "encoded   " << message.size() << " bits, padded to " << padded.size() << " bits ("
              << padded.size() / cmd5::kBlockBits << " blocks)\n";
    std::cout << "words     a=" << words.a.str() << " b=" << words.b.str() << " c=" << words.c.str()
              << " d=" << words.d.str() << '\n';
    std::cout << "state     " << state.str() << '\n';
    std::cout << "number    " << cmd5::state_number(state) << '\n';
    std::cout << "name      " << cmd5::state_to_name(state).str() << '\n';
}
