#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sts {

/// Immutable ordered sequence of bits, packed MSB-first into 64-bit words.
///
/// Bit 0 is the first bit of the stream. A sequence always holds at least
/// one bit and at most kMaxBits.
class BitSequence {
public:
    static constexpr std::size_t kMaxBits = std::size_t{1} << 31;

    /// Parses '0'/'1' characters, skipping whitespace. Throws ParseError.
    static BitSequence from_ascii(std::string_view text);
    static BitSequence from_ascii(std::istream& in);

    /// Takes the first `n` bits of `data`, MSB-first within each byte.
    static BitSequence from_bytes(std::span<const std::uint8_t> data, std::size_t n);

    /// One element per bit; any non-zero value is a 1.
    static BitSequence from_bits(std::span<const std::uint8_t> bits);

    /// Packs MSB-first; the final byte is padded with zero bits.
    std::vector<std::uint8_t> to_bytes() const;
    std::string to_string() const;

    std::size_t size() const noexcept { return size_; }

    int operator[](std::size_t i) const noexcept {
        return static_cast<int>((words_[i >> 6] >> (63 - (i & 63))) & 1u);
    }
    int at(std::size_t i) const;

    /// `width` (<= 64) bits starting at `pos`, bit `pos` most significant.
    std::uint64_t window(std::size_t pos, unsigned width) const noexcept;

    std::size_t count_ones() const noexcept { return count_ones(0, size_); }
    std::size_t count_ones(std::size_t offset, std::size_t length) const noexcept;

    /// Number of i in [0, n-1) with bit i != bit i+1.
    std::size_t count_transitions() const noexcept;

    /// First `k` bits. Throws LengthError if k > size() or k == 0.
    BitSequence prefix(std::size_t k) const;
    BitSequence slice(std::size_t offset, std::size_t length) const;
    BitSequence reversed() const;
    BitSequence complemented() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const BitSequence&, const BitSequence&) = default;

private:
    friend class BitWriter;
    BitSequence(std::vector<std::uint64_t> words, std::size_t size);

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// Append-only builder for BitSequence.
class BitWriter {
public:
    BitWriter() = default;
    explicit BitWriter(std::size_t reserve_bits);

    void push(int bit);
    /// Appends the low `width` bits of `value`, most significant first.
    void push_bits(std::uint64_t value, unsigned width);

    std::size_t size() const noexcept { return size_; }

    /// Throws LengthError when empty.
    BitSequence finish() &&;

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// The +/-1 image X_i = 2 e_i - 1 of a bit sequence.
struct SignedSequence {
    std::vector<std::int8_t> values;

    std::size_t size() const noexcept { return values.size(); }
    long long sum() const noexcept;
};

SignedSequence to_signed(const BitSequence& seq);

}  // namespace sts
