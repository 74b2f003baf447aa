#include "bwmul/mulcore.hpp"

#include <stdexcept>

namespace bwmul {

BitVec execute_full(const BitVec& rs1, const BitVec& rs2, ModeSignals mode, ReducerKind reducer)
{
    if (!mode.one_hot())
        throw std::invalid_argument("mode signals must be one-hot");
    // multiplier := rs2, multiplicand := rs1
    PPMatrix m = pp_unified(rs2, rs1, mode);
    return reduce(m, reducer);
}

BitVec execute(const MulInstruction& inst, ReducerKind reducer)
{
    const int n = inst.rs1.width();
    BitVec full = execute_full(inst.rs1, inst.rs2, demux_mode(inst.mnemonic), reducer);
    if (inst.mnemonic == Mnemonic::Mul)
        return full.slice(0, n);
    return full.slice(n, n);
}

} // namespace bwmul
