#pragma once

#include <rnaname/error.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rnaname {

// A 6-bit unsigned word. All arithmetic wraps modulo 64.
class Word6 {
public:
    static constexpr unsigned width = 6;
    static constexpr std::uint8_t mask = 0x3f;

    constexpr Word6() noexcept = default;
    constexpr explicit Word6(unsigned v) noexcept : value_(static_cast<std::uint8_t>(v & mask)) {}

    constexpr std::uint8_t value() const noexcept { return value_; }

    // Parses exactly six '0'/'1' characters, most significant bit first.
    static Word6 parse(std::string_view text)
    {
        if (text.size() != width)
            throw Error(ErrorKind::bad_bit_string, "Word6 needs 6 binary digits, got '" + std::string(text) + "'");
        unsigned v = 0;
        for (char c : text) {
            if (c != '0' && c != '1')
                throw Error(ErrorKind::bad_bit_string, "not a binary digit in '" + std::string(text) + "'");
            v = (v << 1) | static_cast<unsigned>(c - '0');
        }
        return Word6(v);
    }

    std::string str() const
    {
        std::string out(width, '0');
        for (unsigned i = 0; i < width; ++i)
            if (value_ & (1u << (width - 1 - i)))
                out[i] = '1';
        return out;
    }

    friend constexpr bool operator==(Word6, Word6) noexcept = default;

private:
    std::uint8_t value_ = 0;
};

constexpr Word6 bitwise_not(Word6 x) noexcept { return Word6(~x.value()); }
constexpr Word6 bitwise_and(Word6 x, Word6 y) noexcept { return Word6(x.value() & y.value()); }
constexpr Word6 bitwise_or(Word6 x, Word6 y) noexcept { return Word6(x.value() | y.value()); }
constexpr Word6 bitwise_xor(Word6 x, Word6 y) noexcept { return Word6(x.value() ^ y.value()); }

// Circular left rotation; the count is reduced modulo the word width, so the
// digest schedule's shifts of up to 23 stay meaningful on 6-bit words.
constexpr Word6 rotate_left(Word6 x, unsigned n) noexcept
{
    n %= Word6::width;
    if (n == 0)
        return x;
    const unsigned v = x.value();
    return Word6((v << n) | (v >> (Word6::width - n)));
}

constexpr Word6 mod_add(Word6 x, Word6 y) noexcept { return Word6(x.value() + y.value()); }

constexpr Word6 mod_add(Word6 x, Word6 y, Word6 z, Word6 w) noexcept
{
    return Word6(x.value() + y.value() + z.value() + w.value());
}

// The four round functions.
constexpr Word6 logical_f(Word6 x, Word6 y, Word6 z) noexcept
{
    return bitwise_or(bitwise_and(x, y), bitwise_and(bitwise_not(x), z));
}

// The middle term is read as Y AND NOT Z, as in the MD5 G function.
constexpr Word6 logical_g(Word6 x, Word6 y, Word6 z) noexcept
{
    return bitwise_or(bitwise_and(x, z), bitwise_and(y, bitwise_not(z)));
}

constexpr Word6 logical_h(Word6 x, Word6 y, Word6 z) noexcept
{
    return bitwise_xor(bitwise_xor(x, y), z);
}

constexpr Word6 logical_i(Word6 x, Word6 y, Word6 z) noexcept
{
    return bitwise_xor(y, bitwise_or(x, bitwise_not(z)));
}

// Ordered bit vector. Index 0 is the leftmost (first written) bit.
class BitString {
public:
    BitString() = default;

    static BitString parse(std::string_view text)
    {
        BitString out;
        out.bits_.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1')
                throw Error(ErrorKind::bad_bit_string, "not a binary digit: '" + std::string(1, c) + "'");
            out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return out;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    bool operator[](std::size_t i) const { return bits_[i] != 0; }

    void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }

    void append(const BitString& other) { bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end()); }

    void append(Word6 w)
    {
        for (unsigned i = 0; i < Word6::width; ++i)
            push_back((w.value() >> (Word6::width - 1 - i)) & 1u);
    }

    // Appends the low `width` bits of `value`, most significant first.
    void append_uint(std::uint64_t value, unsigned width)
    {
        for (unsigned i = 0; i < width; ++i)
            push_back((value >> (width - 1 - i)) & 1u);
    }

    BitString slice(std::size_t first, std::size_t count) const
    {
        BitString out;
        out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(first),
                         bits_.begin() + static_cast<std::ptrdiff_t>(first + count));
        return out;
    }

    // Reads `width` bits starting at `first` as an unsigned integer, most significant first.
    std::uint64_t read_uint(std::size_t first, unsigned width) const
    {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < width; ++i)
            v = (v << 1) | bits_[first + i];
        return v;
    }

    Word6 word_at(std::size_t index) const
    {
        return Word6(static_cast<unsigned>(read_uint(index * Word6::width, Word6::width)));
    }

    std::string str() const
    {
        std::string out;
        out.reserve(bits_.size());
        for (auto b : bits_)
            out.push_back(static_cast<char>('0' + b));
        return out;
    }

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

} // namespace rnaname
