#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bwmul/ppgen.hpp"
#include "test_util.hpp"

using namespace bwmul;

namespace {

std::uint64_t mod2n(std::int64_t v, int n) { return static_cast<std::uint64_t>(v) & bit_mask(2 * n); }

PPMatrix dedicated(Mode mode, const BitVec& a, const BitVec& b)
{
    switch (mode) {
    case Mode::Unsigned: return pp_unsigned(a, b);
    case Mode::Signed: return pp_signed(a, b);
    case Mode::Mixed: return pp_mixed(a, b);
    }
    throw std::logic_error("bad mode");
}

} // namespace

TEST_CASE("demux table")
{
    CHECK(demux_mode(Mnemonic::Mulh) == ModeSignals{1, 0, 0});
    CHECK(demux_mode(Mnemonic::Mulhu) == ModeSignals{0, 1, 0});
    CHECK(demux_mode(Mnemonic::Mulhsu) == ModeSignals{0, 0, 1});
    CHECK(demux_mode(Mnemonic::Mul) == ModeSignals{0, 1, 0});
    CHECK(ModeSignals{1, 0, 0}.one_hot());
    CHECK_FALSE(ModeSignals{1, 0, 1}.one_hot());
    CHECK_FALSE(ModeSignals{0, 0, 0}.one_hot());
}

TEST_CASE("unsigned scheme sums")
{
    BitVec a = BitVec::from_string("1001");
    BitVec b = BitVec::from_string("0101");
    CHECK(weighted_sum_mod2n(pp_unsigned(a, b)) == 45);

    PPMatrix zero = pp_unsigned(BitVec::from_string("0000"), BitVec::from_string("1111"));
    for (const auto& row : zero.rows)
        for (const auto& cell : row)
            CHECK(cell.bit == 0);
    CHECK(weighted_sum_mod2n(zero) == 0);

    // a zero multiplier bit blanks its whole row
    PPMatrix m = pp_unsigned(BitVec::from_string("0101"), BitVec::from_string("1111"));
    for (const auto& cell : m.rows[1])
        CHECK(cell.bit == 0);
}

TEST_CASE("unsigned scheme against brute force, all n=4 pairs")
{
    for (std::uint64_t av = 0; av < 16; ++av)
        for (std::uint64_t bv = 0; bv < 16; ++bv) {
            PPMatrix m = pp_unsigned(encode_unsigned(av, 4), encode_unsigned(bv, 4));
            CHECK(weighted_sum_mod2n(m) == av * bv);
        }
}

TEST_CASE("signed scheme cell layout at n=4")
{
    // a = 0b0001 (1), b = 0b1000 (-8): every raw product a_i*b_j is 0
    // except a_0*b_3 = 1.
    PPMatrix m = pp_signed(BitVec::from_string("0001"), BitVec::from_string("1000"));
    REQUIRE(m.rows.size() == 4);
    // row 0: a0b0..a0b2 plain zeros, ~a0b3 = 0 at column 3, constant 1 at column 4
    CHECK(m.rows[0] == std::vector<PPCell>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 4}});
    // rows 1, 2: plain zeros, complemented top = 1
    CHECK(m.rows[1] == std::vector<PPCell>{{0, 1}, {0, 2}, {0, 3}, {1, 4}});
    CHECK(m.rows[2] == std::vector<PPCell>{{0, 2}, {0, 3}, {0, 4}, {1, 5}});
    // row 3: complemented zeros -> 1s at columns 3..5, plain a3b3 = 0, constant 1
    CHECK(m.rows[3] == std::vector<PPCell>{{1, 3}, {1, 4}, {1, 5}, {0, 6}, {1, 7}});
    // 1*(-8) = -8 mod 256 = 248
    CHECK(weighted_sum_mod2n(m) == 248);
}

TEST_CASE("signed scheme sums")
{
    CHECK(weighted_sum_mod2n(pp_signed(BitVec::from_string("1111"), BitVec::from_string("1111"))) == 1);
    CHECK(weighted_sum_mod2n(pp_signed(BitVec::from_string("1000"), BitVec::from_string("1000"))) == 64);
    for (std::uint64_t av = 0; av < 16; ++av)
        for (std::uint64_t bv = 0; bv < 16; ++bv) {
            BitVec a = encode_unsigned(av, 4), b = encode_unsigned(bv, 4);
            CHECK(weighted_sum_mod2n(pp_signed(a, b)) ==
                  mod2n(decode_signed(a) * decode_signed(b), 4));
        }
}

TEST_CASE("mixed scheme keeps the folded carry pair in row 0")
{
    // a = 1111 (15), b = 1111 (-1): row 0 holds both a0b3 = 1 at column 3
    // and ~a0b3 = 0 at column 4.
    PPMatrix m = pp_mixed(BitVec::from_string("1111"), BitVec::from_string("1111"));
    CHECK(m.rows[0] == std::vector<PPCell>{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {0, 4}});
    CHECK(weighted_sum_mod2n(m) == 241); // -15 mod 256
}

TEST_CASE("mixed scheme sums")
{
    CHECK(weighted_sum_mod2n(pp_mixed(BitVec::from_string("0101"), BitVec::from_string("1000"))) == 216);
    for (std::uint64_t av = 0; av < 16; ++av)
        for (std::uint64_t bv = 0; bv < 16; ++bv) {
            BitVec a = encode_unsigned(av, 4), b = encode_unsigned(bv, 4);
            CHECK(weighted_sum_mod2n(pp_mixed(a, b)) ==
                  mod2n(static_cast<std::int64_t>(av) * decode_signed(b), 4));
        }
}

TEST_CASE("unified equals each dedicated scheme cell for cell, exhaustively at n=4")
{
    for (std::uint64_t av = 0; av < 16; ++av)
        for (std::uint64_t bv = 0; bv < 16; ++bv) {
            BitVec a = encode_unsigned(av, 4), b = encode_unsigned(bv, 4);
            for (Mode mode : {Mode::Unsigned, Mode::Signed, Mode::Mixed}) {
                PPMatrix uni = pp_unified(a, b, ModeSignals::of(mode));
                CHECK(same_cells(uni, dedicated(mode, a, b)));
            }
        }
}

TEST_CASE("unified equals dedicated on sampled pairs at n = 8, 16, 32")
{
    std::mt19937_64 rng(123);
    for (int n : {8, 16, 32}) {
        for (int k = 0; k < 300; ++k) {
            BitVec a = testutil::random_vec(n, rng);
            BitVec b = testutil::random_vec(n, rng);
            for (Mode mode : {Mode::Unsigned, Mode::Signed, Mode::Mixed})
                CHECK(same_cells(pp_unified(a, b, ModeSignals::of(mode)), dedicated(mode, a, b)));
        }
    }
}

TEST_CASE("unified sums, Table-1 operands")
{
    BitVec a = BitVec::from_string("1001");
    BitVec b = BitVec::from_string("0101");
    CHECK(weighted_sum_mod2n(pp_unified(a, b, {0, 1, 0})) == 45);
    BitVec ones = BitVec::from_string("1111");
    CHECK(weighted_sum_mod2n(pp_unified(ones, ones, {1, 0, 0})) == 1);
}

TEST_CASE("row count and column range invariants")
{
    std::mt19937_64 rng(5);
    for (int n : {2, 3, 4, 8, 16, 32}) {
        BitVec a = testutil::random_vec(n, rng);
        BitVec b = testutil::random_vec(n, rng);
        for (Mode mode : {Mode::Unsigned, Mode::Signed, Mode::Mixed}) {
            PPMatrix uni = pp_unified(a, b, ModeSignals::of(mode));
            CHECK(static_cast<int>(uni.rows.size()) == n);
            CHECK_NOTHROW(validate_matrix(uni));
            CHECK_NOTHROW(validate_matrix(dedicated(mode, a, b)));
        }
    }
}

TEST_CASE("n=2 edge: no intermediate rows, still correct")
{
    for (std::uint64_t av = 0; av < 4; ++av)
        for (std::uint64_t bv = 0; bv < 4; ++bv) {
            BitVec a = encode_unsigned(av, 2), b = encode_unsigned(bv, 2);
            CHECK(weighted_sum_mod2n(pp_unsigned(a, b)) == av * bv);
            CHECK(weighted_sum_mod2n(pp_signed(a, b)) ==
                  mod2n(decode_signed(a) * decode_signed(b), 2));
            CHECK(weighted_sum_mod2n(pp_mixed(a, b)) ==
                  mod2n(static_cast<std::int64_t>(av) * decode_signed(b), 2));
            for (Mode mode : {Mode::Unsigned, Mode::Signed, Mode::Mixed})
                CHECK(same_cells(pp_unified(a, b, ModeSignals::of(mode)), dedicated(mode, a, b)));
        }
}

TEST_CASE("error paths: width mismatch and bad signals")
{
    BitVec a4 = BitVec::from_string("1010");
    BitVec b8 = BitVec::from_string("10100101");
    CHECK_THROWS_AS(pp_unsigned(a4, b8), std::invalid_argument);
    CHECK_THROWS_AS(pp_signed(a4, b8), std::invalid_argument);
    CHECK_THROWS_AS(pp_mixed(a4, b8), std::invalid_argument);
    CHECK_THROWS_AS(pp_unified(a4, b8, {0, 1, 0}), std::invalid_argument);
    BitVec b4 = BitVec::from_string("0101");
    CHECK_THROWS_AS(pp_unified(a4, b4, {1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(pp_unified(a4, b4, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("low-half invariance across modes, exhaustive at n=4")
{
    for (std::uint64_t av = 0; av < 16; ++av)
        for (std::uint64_t bv = 0; bv < 16; ++bv) {
            BitVec a = encode_unsigned(av, 4), b = encode_unsigned(bv, 4);
            std::uint64_t low = weighted_sum_mod2n(pp_unsigned(a, b)) & bit_mask(4);
            CHECK((weighted_sum_mod2n(pp_signed(a, b)) & bit_mask(4)) == low);
            CHECK((weighted_sum_mod2n(pp_mixed(a, b)) & bit_mask(4)) == low);
        }
}

TEST_CASE("equal-weight sum bits survive complementing both inputs")
{
    // complemented pairs keep the same sum bit and flip only the carry
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            int plain_sum = x ^ y;
            int compl_sum = (x ^ 1) ^ (y ^ 1);
            CHECK(plain_sum == compl_sum);
        }
}

TEST_CASE("signed 4x4 tableau golden")
{
    // reviewed by hand and frozen
    const char* expect =
        "                          1 ~a0b3  a0b2  a0b1  a0b0\n"
        "                      ~a1b3  a1b2  a1b1  a1b0\n"
        "               ~a2b3  a2b2  a2b1  a2b0\n"
        "     1  a3b3 ~a3b2 ~a3b1 ~a3b0\n";
    CHECK(render_scheme(Scheme::Signed, 4) == expect);
}

TEST_CASE("scheme rendering shows complements and constants")
{
    std::string sym = render_scheme(Scheme::Mixed, 4);
    CHECK(sym.find("~a0b3") != std::string::npos);
    CHECK(sym.find("~a3b3") != std::string::npos);
    std::string sgn = render_scheme(Scheme::Signed, 4);
    CHECK(sgn.find("1 ~a0b3") != std::string::npos);
    std::string uni = render_scheme(Scheme::Unified, 4);
    CHECK(uni.find("s+m") != std::string::npos);
    CHECK(uni.find("(s+m)^a1b3") != std::string::npos);
    // value grid of the Table-1 multiplication
    PPMatrix m = pp_unsigned(BitVec::from_string("0101"), BitVec::from_string("1001"));
    std::string cells = render_cells(m);
    CHECK(cells.find("1 0 0 1") != std::string::npos);
}
