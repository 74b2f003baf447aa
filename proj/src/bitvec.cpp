#include "bwmul/bitvec.hpp"

#include <stdexcept>

namespace bwmul {

Width::Width(int n) : n_(n)
{
    if (n < kMin || n > kMax)
        throw std::out_of_range("operand width must be in [2, 32], got " + std::to_string(n));
}

BitVec::BitVec(std::vector<std::uint8_t> bits) : bits_(std::move(bits))
{
    if (bits_.empty())
        throw std::invalid_argument("bit vector must have at least one bit");
    for (std::uint8_t b : bits_)
        if (b > 1)
            throw std::invalid_argument("bit vector elements must be 0 or 1");
}

BitVec BitVec::zeros(int width)
{
    if (width < 1)
        throw std::invalid_argument("bit vector width must be positive");
    return BitVec(std::vector<std::uint8_t>(static_cast<std::size_t>(width), 0));
}

BitVec BitVec::from_string(const std::string& msb_first)
{
    std::vector<std::uint8_t> bits(msb_first.size());
    for (std::size_t i = 0; i < msb_first.size(); ++i) {
        char c = msb_first[msb_first.size() - 1 - i];
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit string may contain only '0' and '1'");
        bits[i] = static_cast<std::uint8_t>(c - '0');
    }
    return BitVec(std::move(bits));
}

BitVec BitVec::slice(int lo, int count) const
{
    if (lo < 0 || count < 1 || lo + count > width())
        throw std::out_of_range("bit slice out of range");
    std::vector<std::uint8_t> out(bits_.begin() + lo, bits_.begin() + lo + count);
    return BitVec(std::move(out));
}

std::string BitVec::to_string() const
{
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        s[bits_.size() - 1 - i] = static_cast<char>('0' + bits_[i]);
    return s;
}

std::string BitVec::to_hex() const
{
    std::uint64_t v = decode_unsigned(*this);
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
    return buf;
}

std::uint64_t bit_mask(int width)
{
    if (width < 1 || width > 64)
        throw std::out_of_range("mask width must be in [1, 64]");
    return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

static void check_codec_width(int width)
{
    if (width < 1 || width > 64)
        throw std::out_of_range("codec width must be in [1, 64]");
}

BitVec encode_unsigned(std::uint64_t value, int width)
{
    check_codec_width(width);
    if (value > bit_mask(width))
        throw std::out_of_range("value does not fit in " + std::to_string(width) + " unsigned bits");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i)
        bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((value >> i) & 1);
    return BitVec(std::move(bits));
}

BitVec encode_signed(std::int64_t value, int width)
{
    check_codec_width(width);
    // width == 64 admits every int64 value.
    if (width < 64) {
        std::int64_t lo = -(std::int64_t{1} << (width - 1));
        std::int64_t hi = (std::int64_t{1} << (width - 1)) - 1;
        if (value < lo || value > hi)
            throw std::out_of_range("value does not fit in " + std::to_string(width) + " signed bits");
    }
    return encode_unsigned(static_cast<std::uint64_t>(value) & bit_mask(width), width);
}

std::uint64_t decode_unsigned(const BitVec& v)
{
    if (v.width() > 64)
        throw std::out_of_range("decode limited to 64 bits");
    std::uint64_t out = 0;
    for (int i = 0; i < v.width(); ++i)
        out |= std::uint64_t{v.bit(i)} << i;
    return out;
}

std::int64_t decode_signed(const BitVec& v)
{
    // The MSB carries weight -2^(n-1); all lower bits are positive.
    std::uint64_t raw = decode_unsigned(v);
    int w = v.width();
    if (w == 64)
        return static_cast<std::int64_t>(raw);
    if (v.bit(w - 1))
        return static_cast<std::int64_t>(raw) - (std::int64_t{1} << w);
    return static_cast<std::int64_t>(raw);
}

} // namespace bwmul
