#pragma once
// Fixed-width bit vectors with unsigned and two's-complement codecs.
// Bit index 0 is the least significant bit everywhere; text rendering is
// MSB-first ("1001" is nine at width 4).

#include <cstdint>
#include <string>
#include <vector>

namespace bwmul {

// Operand width of a multiplication scheme. Products are 2n bits wide.
// n = 1 is rejected: a 1-bit two's-complement operand has no positive
// magnitude and every scheme here is defined for n >= 2. The upper limit
// keeps all 2n-bit products exactly representable in the 64-bit arithmetic
// used by the reference oracle.
class Width {
public:
    static constexpr int kMin = 2;
    static constexpr int kMax = 32;

    explicit Width(int n);
    int n() const { return n_; }

private:
    int n_;
};

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::vector<std::uint8_t> bits); // every element must be 0 or 1

    static BitVec zeros(int width);
    // Parses an MSB-first string of '0'/'1' characters.
    static BitVec from_string(const std::string& msb_first);

    int width() const { return static_cast<int>(bits_.size()); }
    std::uint8_t bit(int i) const { return bits_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    // count bits starting at bit index lo.
    BitVec slice(int lo, int count) const;

    std::string to_string() const; // MSB-first
    std::string to_hex() const;    // unsigned reading, "0x..." with no width padding

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Codecs. Widths from 1 to 64 bits are accepted so the same functions serve
// both n-bit operands and 2n-bit products. Out-of-range values throw
// std::out_of_range.
BitVec encode_unsigned(std::uint64_t value, int width);
BitVec encode_signed(std::int64_t value, int width);
std::uint64_t decode_unsigned(const BitVec& v);
std::int64_t decode_signed(const BitVec& v);

inline BitVec encode_unsigned(std::uint64_t value, Width n) { return encode_unsigned(value, n.n()); }
inline BitVec encode_signed(std::int64_t value, Width n) { return encode_signed(value, n.n()); }

// Low `width` bits set; width in [1, 64].
std::uint64_t bit_mask(int width);

} // namespace bwmul
