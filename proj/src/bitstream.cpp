#include "sts/bitstream.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <iterator>
#include <numeric>

#include "sts/errors.hpp"

namespace sts {
namespace {

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Mask keeping the first `bits` (MSB-first) bits of a word; bits in [0, 64].
constexpr std::uint64_t head_mask(std::size_t bits) {
    return bits == 0 ? 0 : (bits >= 64 ? ~std::uint64_t{0} : ~std::uint64_t{0} << (64 - bits));
}

void check_size(std::size_t n) {
    if (n == 0) throw LengthError("bit sequence must hold at least one bit");
    if (n > BitSequence::kMaxBits) throw LengthError("bit sequence longer than 2^31 bits");
}

}  // namespace

BitSequence::BitSequence(std::vector<std::uint64_t> words, std::size_t size)
    : words_(std::move(words)), size_(size) {
    check_size(size_);
    // One spare word keeps window() branch-free at the tail.
    words_.resize(words_for(size_) + 1, 0);
    if (size_ % 64 != 0) words_[size_ / 64] &= head_mask(size_ % 64);
}

BitSequence BitSequence::from_ascii(std::string_view text) {
    BitWriter w(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '0' || c == '1') {
            w.push(c - '0');
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    if (w.size() == 0) throw ParseError("no bits in input", text.size());
    return std::move(w).finish();
}

BitSequence BitSequence::from_ascii(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return from_ascii(text);
}

BitSequence BitSequence::from_bytes(std::span<const std::uint8_t> data, std::size_t n) {
    if (n > 8 * data.size()) {
        throw LengthError("requested " + std::to_string(n) + " bits from " +
                          std::to_string(data.size()) + " bytes");
    }
    check_size(n);
    std::vector<std::uint64_t> words(words_for(n), 0);
    const std::size_t nbytes = (n + 7) / 8;
    for (std::size_t i = 0; i < nbytes; ++i) {
        words[i / 8] |= std::uint64_t{data[i]} << (56 - 8 * (i % 8));
    }
    return BitSequence(std::move(words), n);
}

BitSequence BitSequence::from_bits(std::span<const std::uint8_t> bits) {
    BitWriter w(bits.size());
    for (auto b : bits) w.push(b != 0);
    return std::move(w).finish();
}

std::vector<std::uint8_t> BitSequence::to_bytes() const {
    std::vector<std::uint8_t> out((size_ + 7) / 8);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(words_[i / 8] >> (56 - 8 * (i % 8)));
    }
    return out;
}

std::string BitSequence::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) s[i] = static_cast<char>('0' + (*this)[i]);
    return s;
}

int BitSequence::at(std::size_t i) const {
    if (i >= size_) throw LengthError("bit index out of range");
    return (*this)[i];
}

std::uint64_t BitSequence::window(std::size_t pos, unsigned width) const noexcept {
    if (width == 0) return 0;
    const std::size_t w = pos >> 6;
    const unsigned off = pos & 63;
    std::uint64_t chunk = words_[w] << off;
    if (off != 0) chunk |= words_[w + 1] >> (64 - off);
    return chunk >> (64 - width);
}

std::size_t BitSequence::count_ones(std::size_t offset, std::size_t length) const noexcept {
    std::size_t total = 0;
    std::size_t pos = offset;
    const std::size_t end = offset + length;
    while (pos < end && (pos & 63) != 0) {
        total += static_cast<std::size_t>((*this)[pos]);
        ++pos;
    }
    while (pos + 64 <= end) {
        total += static_cast<std::size_t>(std::popcount(words_[pos >> 6]));
        pos += 64;
    }
    if (pos < end) {
        total += static_cast<std::size_t>(std::popcount(words_[pos >> 6] & head_mask(end - pos)));
    }
    return total;
}

std::size_t BitSequence::count_transitions() const noexcept {
    if (size_ < 2) return 0;
    std::size_t total = 0;
    const std::size_t pairs = size_ - 1;
    for (std::size_t pos = 0; pos < pairs; pos += 63) {
        const unsigned width = static_cast<unsigned>(std::min<std::size_t>(63, pairs - pos));
        const std::uint64_t a = window(pos, width);
        const std::uint64_t b = window(pos + 1, width);
        total += static_cast<std::size_t>(std::popcount(a ^ b));
    }
    return total;
}

BitSequence BitSequence::prefix(std::size_t k) const {
    if (k > size_) {
        throw LengthError("prefix of " + std::to_string(k) + " bits from a " +
                          std::to_string(size_) + "-bit sequence");
    }
    return slice(0, k);
}

BitSequence BitSequence::slice(std::size_t offset, std::size_t length) const {
    if (offset > size_ || length > size_ - offset) throw LengthError("slice out of range");
    check_size(length);
    std::vector<std::uint64_t> words(words_for(length), 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::size_t pos = offset + 64 * i;
        const unsigned width = static_cast<unsigned>(std::min<std::size_t>(64, offset + length - pos));
        words[i] = window(pos, width) << (64 - width);
    }
    return BitSequence(std::move(words), length);
}

BitSequence BitSequence::reversed() const {
    BitWriter w(size_);
    for (std::size_t i = size_; i-- > 0;) w.push((*this)[i]);
    return std::move(w).finish();
}

BitSequence BitSequence::complemented() const {
    std::vector<std::uint64_t> words(words_.begin(), words_.begin() + words_for(size_));
    for (auto& word : words) word = ~word;
    return BitSequence(std::move(words), size_);
}

BitWriter::BitWriter(std::size_t reserve_bits) { words_.reserve(words_for(reserve_bits) + 1); }

void BitWriter::push(int bit) {
    if ((size_ & 63) == 0) words_.push_back(0);
    if (bit) words_.back() |= std::uint64_t{1} << (63 - (size_ & 63));
    ++size_;
}

void BitWriter::push_bits(std::uint64_t value, unsigned width) {
    for (unsigned i = width; i-- > 0;) push(static_cast<int>((value >> i) & 1u));
}

BitSequence BitWriter::finish() && {
    return BitSequence(std::move(words_), size_);
}

long long SignedSequence::sum() const noexcept {
    return std::accumulate(values.begin(), values.end(), 0LL);
}

SignedSequence to_signed(const BitSequence& seq) {
    SignedSequence out;
    out.values.resize(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out.values[i] = static_cast<std::int8_t>(2 * seq[i] - 1);
    }
    return out;
}

}  // namespace sts
