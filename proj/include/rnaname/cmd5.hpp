#pragma once

// CMD5: a compact MD5 variant for naming short nucleotide sequences.
//
// The message is encoded at six bits per nucleotide, padded to a multiple of
// 96 bits and folded block by block into a 24-bit state of four 6-bit words.
// Each block runs the 64-step MD5 round structure (same word indices and
// shift schedule, a sine table scaled to 6 bits, rotations taken modulo 6).
// The final state is read as an integer and mapped onto the 26^3 * 10^2
// namespace of codes such as "Kdo94".
//
// Conventions fixed by the "cmd5/1" identifier:
//   - the 16-bit length field is written most significant bit first;
//   - FinalState bit i, counted from the most significant bit of `a`
//     through the least significant bit of `d`, carries weight 2^i;
//   - leading zero of the two-digit field is dropped when rendering.

#include <rnaname/bits.hpp>
#include <rnaname/error.hpp>
#include <rnaname/sequence.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace rnaname::cmd5 {

inline constexpr std::string_view kConventionId = "cmd5/1";

inline constexpr std::size_t kBlockBits = 96;
inline constexpr std::size_t kWordsPerBlock = 16;
inline constexpr std::size_t kLengthFieldBits = 16;
inline constexpr std::size_t kStateBits = 24;

inline constexpr std::size_t kMaxSequenceLength = 60;
inline constexpr std::size_t kRecommendedMaxLength = 40;

inline constexpr std::uint32_t kNamespaceSize = 26u * 26u * 26u * 10u * 10u;

// Maps each nucleotide to a 6-bit code. Names produced under different
// encoders are not comparable, so the id travels with every library and report.
struct Encoder {
    std::string_view id;
    std::array<Word6, 4> codes; // A, C, G, U

    Word6 code(char base) const
    {
        const int i = base_code(base);
        if (i < 0)
            throw Error(ErrorKind::invalid_alphabet, "cannot encode '" + std::string(1, base) + "'");
        return codes[static_cast<std::size_t>(i)];
    }
};

// Low six bits of the ASCII value: A=000001 C=000011 G=000111 U=010101.
inline constexpr Encoder kAsciiLow6{"ascii-low6/1", {Word6('A'), Word6('C'), Word6('G'), Word6('U')}};

inline const Encoder& default_encoder() noexcept { return kAsciiLow6; }

inline const Encoder& encoder_by_id(std::string_view id)
{
    if (id == kAsciiLow6.id)
        return kAsciiLow6;
    throw Error(ErrorKind::unknown_config, "unknown encoder '" + std::string(id) + "'");
}

struct DigestState {
    Word6 a{0b000000};
    Word6 b{0b010000};
    Word6 c{0b100000};
    Word6 d{0b110000};

    BitString bits() const
    {
        BitString out;
        out.append(a);
        out.append(b);
        out.append(c);
        out.append(d);
        return out;
    }

    friend bool operator==(const DigestState&, const DigestState&) = default;
};

// One of the 64 operations. `rotation` selects which state word plays the
// role of `a`: 0 -> (a,b,c,d), 1 -> (d,a,b,c), 2 -> (c,d,a,b), 3 -> (b,c,d,a).
struct RoundStep {
    std::uint8_t rotation;
    std::uint8_t xid;
    std::uint8_t shift;
    std::uint8_t tid; // 1-based index into the sine table
};

// Rows read as (word roles, X index, shift, T index).
inline constexpr std::array<RoundStep, 64> kSchedule = {{
    // round 1
    {0, 0, 7, 1},   {1, 1, 12, 2},  {2, 2, 17, 3},  {3, 3, 22, 4},
    {0, 4, 7, 5},   {1, 5, 12, 6},  {2, 6, 17, 7},  {3, 7, 22, 8},
    {0, 8, 7, 9},   {1, 9, 12, 10}, {2, 10, 17, 11}, {3, 11, 22, 12},
    {0, 12, 7, 13}, {1, 13, 12, 14}, {2, 14, 17, 15}, {3, 15, 22, 16},
    // round 2
    {0, 1, 5, 17},  {1, 6, 9, 18},  {2, 11, 14, 19}, {3, 0, 20, 20},
    {0, 5, 5, 21},  {1, 10, 9, 22}, {2, 15, 14, 23}, {3, 4, 20, 24},
    {0, 9, 5, 25},  {1, 14, 9, 26}, {2, 3, 14, 27},  {3, 8, 20, 28},
    {0, 13, 5, 29}, {1, 2, 9, 30},  {2, 7, 14, 31},  {3, 12, 20, 32},
    // round 3
    {0, 5, 4, 33},  {1, 8, 11, 34}, {2, 11, 16, 35}, {3, 14, 23, 36},
    {0, 1, 4, 37},  {1, 4, 11, 38}, {2, 7, 16, 39},  {3, 10, 23, 40},
    {0, 13, 4, 41}, {1, 0, 11, 42}, {2, 3, 16, 43},  {3, 6, 23, 44},
    {0, 9, 4, 45},  {1, 12, 11, 46}, {2, 15, 16, 47}, {3, 2, 23, 48},
    // round 4
    {0, 0, 6, 49},  {1, 7, 10, 50}, {2, 14, 15, 51}, {3, 5, 21, 52},
    {0, 12, 6, 53}, {1, 3, 10, 54}, {2, 10, 15, 55}, {3, 1, 21, 56},
    {0, 8, 6, 57},  {1, 15, 10, 58}, {2, 6, 15, 59},  {3, 13, 21, 60},
    {0, 4, 6, 61},  {1, 11, 10, 62}, {2, 2, 15, 63},  {3, 9, 21, 64},
}};

// T[i] = floor(64 * |sin(i)|), i = 1..64 in radians; stored 0-based.
inline constexpr std::array<std::uint8_t, 64> kSineTable = {
    53, 58, 9,  48, 61, 17, 42, 63, 26, 34, 63, 34, 26, 63, 41, 18,
    61, 48, 9,  58, 53, 0,  54, 57, 8,  48, 61, 17, 42, 63, 25, 35,
    63, 33, 27, 63, 41, 18, 61, 47, 10, 58, 53, 1,  54, 57, 7,  49,
    61, 16, 42, 63, 25, 35, 63, 33, 27, 63, 40, 19, 61, 47, 10, 58,
};

inline BitString encode_sequence(std::string_view rna, const Encoder& encoder = default_encoder())
{
    require_rna(rna);
    BitString out;
    for (char c : rna)
        out.append(encoder.code(c));
    return out;
}

// m || 1 || 0...0 || len16(m), total length a multiple of 96.
inline BitString pad_message(const BitString& message)
{
    if (message.empty())
        throw Error(ErrorKind::empty_sequence, "cannot pad an empty message");
    if (message.size() >= (std::size_t{1} << kLengthFieldBits))
        throw Error(ErrorKind::message_too_long,
                    "message of " + std::to_string(message.size()) + " bits does not fit a 16-bit length field");

    constexpr std::size_t target = kBlockBits - kLengthFieldBits; // 80
    BitString out = message;
    out.push_back(true);
    while (out.size() % kBlockBits != target)
        out.push_back(false);
    out.append_uint(message.size(), kLengthFieldBits);
    return out;
}

namespace detail {

inline Word6 round_function(std::size_t step, Word6 x, Word6 y, Word6 z) noexcept
{
    switch (step / 16) {
    case 0: return logical_f(x, y, z);
    case 1: return logical_g(x, y, z);
    case 2: return logical_h(x, y, z);
    default: return logical_i(x, y, z);
    }
}

} // namespace detail

inline DigestState compress_block(const DigestState& state, const BitString& block)
{
    if (block.size() != kBlockBits)
        throw Error(ErrorKind::bad_block, "block must be 96 bits, got " + std::to_string(block.size()));

    std::array<Word6, kWordsPerBlock> x;
    for (std::size_t i = 0; i < kWordsPerBlock; ++i)
        x[i] = block.word_at(i);

    std::array<Word6, 4> s = {state.a, state.b, state.c, state.d};
    for (std::size_t step = 0; step < kSchedule.size(); ++step) {
        const RoundStep& op = kSchedule[step];
        const auto role = [&](unsigned j) -> Word6& { return s[(j + 4u - op.rotation) % 4u]; };
        Word6& a = role(0);
        const Word6 b = role(1);
        const Word6 f = detail::round_function(step, b, role(2), role(3));
        const Word6 sum = mod_add(a, f, x[op.xid], Word6(kSineTable[op.tid - 1u]));
        a = mod_add(b, rotate_left(sum, op.shift));
    }

    return DigestState{mod_add(s[0], state.a), mod_add(s[1], state.b), mod_add(s[2], state.c),
                       mod_add(s[3], state.d)};
}

inline DigestState digest_state(std::string_view rna, const Encoder& encoder = default_encoder())
{
    require_rna(rna);
    if (rna.size() > kMaxSequenceLength)
        throw Error(ErrorKind::too_long, "sequence of " + std::to_string(rna.size()) + " nt exceeds " +
                                             std::to_string(kMaxSequenceLength));
    const BitString padded = pad_message(encode_sequence(rna, encoder));
    DigestState state;
    for (std::size_t offset = 0; offset < padded.size(); offset += kBlockBits)
        state = compress_block(state, padded.slice(offset, kBlockBits));
    return state;
}

// The 24-bit final state a || b || c || d.
inline BitString digest(std::string_view rna, const Encoder& encoder = default_encoder())
{
    return digest_state(rna, encoder).bits();
}

// Three letters (rendered Xxx) followed by a number 0..99 rendered without
// a leading zero.
class NameCode {
public:
    NameCode() = default;

    NameCode(std::array<std::uint8_t, 3> letters, std::uint8_t digits)
        : letters_(letters), digits_(digits)
    {
        for (auto l : letters_)
            if (l >= 26)
                throw Error(ErrorKind::malformed_name, "letter index out of range");
        if (digits_ >= 100)
            throw Error(ErrorKind::malformed_name, "digit field out of range");
    }

    static NameCode from_value(std::uint32_t v)
    {
        if (v >= kNamespaceSize)
            throw Error(ErrorKind::malformed_name, "name value out of range: " + std::to_string(v));
        return NameCode({static_cast<std::uint8_t>(v / 67600u), static_cast<std::uint8_t>(v % 67600u / 2600u),
                         static_cast<std::uint8_t>(v % 2600u / 100u)},
                        static_cast<std::uint8_t>(v % 100u));
    }

    static NameCode parse(std::string_view text)
    {
        const auto bad = [&] { return Error(ErrorKind::malformed_name, "malformed name code '" + std::string(text) + "'"); };
        if (text.size() < 4 || text.size() > 5)
            throw bad();
        if (text[0] < 'A' || text[0] > 'Z' || text[1] < 'a' || text[1] > 'z' || text[2] < 'a' || text[2] > 'z')
            throw bad();
        unsigned digits = 0;
        for (std::size_t i = 3; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw bad();
            digits = digits * 10 + static_cast<unsigned>(text[i] - '0');
        }
        if (text.size() == 5 && text[3] == '0')
            throw bad();
        return NameCode({static_cast<std::uint8_t>(text[0] - 'A'), static_cast<std::uint8_t>(text[1] - 'a'),
                         static_cast<std::uint8_t>(text[2] - 'a')},
                        static_cast<std::uint8_t>(digits));
    }

    std::uint32_t value() const noexcept
    {
        return letters_[0] * 67600u + letters_[1] * 2600u + letters_[2] * 100u + digits_;
    }

    const std::array<std::uint8_t, 3>& letters() const noexcept { return letters_; }
    std::uint8_t digits() const noexcept { return digits_; }

    std::string str() const
    {
        std::string out;
        out.push_back(static_cast<char>('A' + letters_[0]));
        out.push_back(static_cast<char>('a' + letters_[1]));
        out.push_back(static_cast<char>('a' + letters_[2]));
        out += std::to_string(digits_);
        return out;
    }

    friend bool operator==(const NameCode&, const NameCode&) = default;

private:
    std::array<std::uint8_t, 3> letters_{};
    std::uint8_t digits_ = 0;
};

// Number = sum of FinalState[i] * 2^i with index 0 at the first bit of `a`.
inline std::uint32_t state_number(const BitString& final_state)
{
    if (final_state.size() != kStateBits)
        throw Error(ErrorKind::bad_bit_string, "final state must be 24 bits, got " + std::to_string(final_state.size()));
    std::uint32_t number = 0;
    for (std::size_t i = 0; i < kStateBits; ++i)
        if (final_state[i])
            number |= 1u << i;
    return number;
}

inline NameCode state_to_name(const BitString& final_state)
{
    return NameCode::from_value(state_number(final_state) % kNamespaceSize);
}

inline NameCode name_field(std::string_view rna, const Encoder& encoder = default_encoder())
{
    return state_to_name(digest(rna, encoder));
}

} // namespace rnaname::cmd5
