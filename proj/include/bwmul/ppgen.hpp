#pragma once
// Partial-product matrix builders for the four multiplication schemes:
// unsigned, signed (Baugh-Wooley), mixed (unsigned multiplier a, signed
// multiplicand b), and the unified scheme that selects between all three
// with two control signals.
//
// Every scheme produces exactly n rows of weighted bit cells, and the
// product equals the weighted cell sum modulo 2^(2n). The signed and mixed
// schemes are all-positive-addend forms: the negative cross terms of the
// two's-complement expansion are replaced by complemented product bits, and
// the correction constants are folded into existing rows so no extra addend
// row is needed.
//
// Cell layout by scheme (columns are powers of two; n = operand width):
//
//   unsigned    row i:      a_i*b_j at column i+j, j = 0..n-1
//
//   signed      row 0:      1 at column n, ~(a_0*b_{n-1}) at n-1,
//                           a_0*b_j at columns j < n-1
//               row 1..n-2: ~(a_i*b_{n-1}) at column n-1+i, plain below
//               row n-1:    1 at column 2n-1, a_{n-1}*b_{n-1} at 2n-2,
//                           ~(a_{n-1}*b_j) at columns n-1 .. 2n-3
//
//   mixed       row 0:      ~(a_0*b_{n-1}) at column n AND the plain
//                           a_0*b_{n-1} at column n-1, plain below.
//                           The pair replaces "complement plus a +1 addend
//                           at column n-1": the sum bit of ~(a_0*b_{n-1})+1
//                           is the plain product and the carry is the
//                           complement.
//               row 1..n-2: ~(a_i*b_{n-1}) at column n-1+i, plain below
//               row n-1:    1 at column 2n-1, ~(a_{n-1}*b_{n-1}) at 2n-2,
//                           plain a_{n-1}*b_j at columns n-1 .. 2n-3
//
//   unified     control signals: s selects signed, m selects mixed; both 0
//               is unsigned (the u signal is implied and never wired).
//               row 0:      s | (m & ~(a_0*b_{n-1}))  at column n
//                             (cell omitted when s = m = 0; it is the
//                              constant 0 there)
//                           s ^ (a_0*b_{n-1})         at column n-1
//                           a_0*b_j                   below
//               row 1..n-2: (s|m) ^ (a_i*b_{n-1})     at column n-1+i,
//                           plain below
//               row n-1:    s | m                     at column 2n-1
//                             (omitted when s = m = 0)
//                           m ^ (a_{n-1}*b_{n-1})     at column 2n-2
//                           s ^ (a_{n-1}*b_j)         at columns n-1..2n-3
//
// With one-hot signals the unified layout reproduces the dedicated scheme
// cell for cell. Operand roles: a is the multiplier (its bits select), b is
// the multiplicand.

#include <cstdint>
#include <string>
#include <vector>

#include "bwmul/bitvec.hpp"

namespace bwmul {

// Operand interpretation of a multiplication.
enum class Mode { Unsigned, Signed, Mixed };

// Scheme tag carried by a matrix; Unified covers all modes via signals.
enum class Scheme { Unsigned, Signed, Mixed, Unified };

const char* to_string(Mode m);
const char* to_string(Scheme s);
Mode parse_mode(const std::string& s); // "unsigned" | "signed" | "mixed"

// RV32M multiply mnemonics.
enum class Mnemonic { Mul, Mulh, Mulhu, Mulhsu };
const char* to_string(Mnemonic m);

// Demux control triple. Exactly one of s, u, m may be set.
struct ModeSignals {
    std::uint8_t s = 0;
    std::uint8_t u = 0;
    std::uint8_t m = 0;

    bool one_hot() const { return s + u + m == 1; }
    static ModeSignals of(Mode mode);

    friend bool operator==(const ModeSignals&, const ModeSignals&) = default;
};

// Instruction decode: mulh -> s, mulhu -> u, mulhsu -> m. mul is routed
// through the unsigned setting; the low product half does not depend on
// operand signedness.
ModeSignals demux_mode(Mnemonic m);

// One weighted bit. column < 2n; weight is 2^column.
struct PPCell {
    std::uint8_t bit;
    std::uint16_t column;

    friend bool operator==(const PPCell&, const PPCell&) = default;
};

struct PPMatrix {
    int n = 0;
    Scheme scheme = Scheme::Unsigned;
    std::vector<std::vector<PPCell>> rows; // exactly n rows, cells ascending by column
};

PPMatrix pp_unsigned(const BitVec& a, const BitVec& b);
PPMatrix pp_signed(const BitVec& a, const BitVec& b);
PPMatrix pp_mixed(const BitVec& a, const BitVec& b);
PPMatrix pp_unified(const BitVec& a, const BitVec& b, ModeSignals sig);

// True when both matrices have identical cells (column and bit, row for
// row); scheme tags are not compared.
bool same_cells(const PPMatrix& lhs, const PPMatrix& rhs);

// Weighted cell sum modulo 2^(2n).
std::uint64_t weighted_sum_mod2n(const PPMatrix& m);

// Throws std::invalid_argument when a matrix violates its invariants
// (row count, column range, duplicate columns within a row).
void validate_matrix(const PPMatrix& m);

// Symbolic label of the cell a scheme places at (row, column): "a0b3",
// "~a0b3", "1", "s^a0b3", ... Empty string when the scheme has no cell
// there.
std::string cell_label(Scheme scheme, int n, int row, int column);

// Aligned MSB-left tableau of a scheme's cell labels ('~' marks a
// complemented product).
std::string render_scheme(Scheme scheme, int n);

// Aligned MSB-left tableau of a concrete matrix's bit values.
std::string render_cells(const PPMatrix& m);

} // namespace bwmul
