#pragma once
// Reduction of a partial-product matrix into the 2n-bit product. Three
// interchangeable strategies are provided; all compute the exact weighted
// cell sum modulo 2^(2n) (carries out of column 2n-1 are discarded, which
// is what makes the all-positive-addend signed/mixed schemes come out
// right).
//
//   ripple   adds one row after another with a carry-propagate pass per
//            row; no 3:2 compressors.
//   wallace  per stage, every column is covered with full adders on groups
//            of three and a half adder on a leftover pair.
//   dadda    stages step down the 2,3,4,6,9,... height ceiling sequence
//            using the fewest adders that reach each target.
//
// Wallace and Dadda finish with a ripple carry-propagate add of the final
// two rows.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bwmul/bitvec.hpp"
#include "bwmul/ppgen.hpp"

namespace bwmul {

enum class ReducerKind { Ripple, Wallace, Dadda };

const char* to_string(ReducerKind k);
ReducerKind parse_reducer(const std::string& s);

struct ReductionTrace {
    // Column-height profile after each tree compression stage; empty for
    // ripple and for matrices that start out no higher than 2. The last
    // profile has no column higher than 2.
    std::vector<std::vector<int>> stages;
    // Full 3:2 compressors used in the tree stages (0 for ripple; the final
    // carry-propagate adder is not counted here).
    int csa_count = 0;
    // Columns spanned by the final carry-propagate add; 2n for ripple.
    int final_adder_width = 0;
};

int max_stage_height(const std::vector<int>& profile);
std::string to_text(const ReductionTrace& t); // line-oriented report

BitVec reduce(const PPMatrix& m, ReducerKind kind);
std::pair<BitVec, ReductionTrace> reduce_traced(const PPMatrix& m, ReducerKind kind);

} // namespace bwmul
