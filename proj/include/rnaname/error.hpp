#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rnaname {

enum class ErrorKind {
    invalid_alphabet,
    empty_sequence,
    too_short,
    too_long,
    bad_bit_string,
    message_too_long,
    bad_block,
    invalid_hexamer,
    bad_matrix,
    bad_permutation,
    malformed_name,
    malformed_fasta,
    malformed_family_file,
    unknown_config,
    config_mismatch,
    version_mismatch,
    truncated,
    checksum_mismatch,
    entry_count,
    invariant_violation,
    io,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::invalid_alphabet: return "invalid-alphabet";
    case ErrorKind::empty_sequence: return "empty-sequence";
    case ErrorKind::too_short: return "too-short";
    case ErrorKind::too_long: return "too-long";
    case ErrorKind::bad_bit_string: return "bad-bit-string";
    case ErrorKind::message_too_long: return "message-too-long";
    case ErrorKind::bad_block: return "bad-block";
    case ErrorKind::invalid_hexamer: return "invalid-hexamer";
    case ErrorKind::bad_matrix: return "bad-matrix";
    case ErrorKind::bad_permutation: return "bad-permutation";
    case ErrorKind::malformed_name: return "malformed-name";
    case ErrorKind::malformed_fasta: return "malformed-fasta";
    case ErrorKind::malformed_family_file: return "malformed-family-file";
    case ErrorKind::unknown_config: return "unknown-config";
    case ErrorKind::config_mismatch: return "config-mismatch";
    case ErrorKind::version_mismatch: return "version-mismatch";
    case ErrorKind::truncated: return "truncated";
    case ErrorKind::checksum_mismatch: return "checksum-mismatch";
    case ErrorKind::entry_count: return "entry-count";
    case ErrorKind::invariant_violation: return "invariant-violation";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

// Every failure raised by the library carries a kind so callers (and the
// CLI's machine-readable error line) can tell failures apart without
// parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace rnaname
