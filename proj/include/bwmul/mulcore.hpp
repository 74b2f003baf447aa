#pragma once
// RV32M multiply instruction semantics on top of the unified scheme. The
// width is parametric (n = 32 is the real register width; smaller n give
// scaled models for exhaustive testing).
//
// Operand mapping: rs2 is the multiplier (a), rs1 the multiplicand (b).
// mulhsu multiplies signed rs1 by unsigned rs2 and keeps the upper half.

#include "bwmul/bitvec.hpp"
#include "bwmul/ppgen.hpp"
#include "bwmul/reduce.hpp"

namespace bwmul {

struct MulInstruction {
    Mnemonic mnemonic;
    BitVec rs1; // multiplicand
    BitVec rs2; // multiplier
};

// Full 2n-bit product of rs1 and rs2 under the given mode signals,
// computed through pp_unified + reduce.
BitVec execute_full(const BitVec& rs1, const BitVec& rs2, ModeSignals mode, ReducerKind reducer);

// n-bit architectural result: the low half for mul, the high half for
// mulh/mulhu/mulhsu.
BitVec execute(const MulInstruction& inst, ReducerKind reducer);

} // namespace bwmul
