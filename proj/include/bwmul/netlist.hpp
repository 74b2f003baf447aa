#pragma once
// Structural gate-level netlists of the multipliers, built from the same
// partial-product layouts and the same reduction schedule as the behavioral
// model, so gate populations and behavior line up by construction.
//
// The unified multiplier has inputs a[0..n-1], b[0..n-1] and the two control
// nets s and m (there is no u input; unsigned operation is s = m = 0), and
// outputs p[0..2n-1]. Dedicated single-scheme netlists (used for the area
// comparison) have only a and b inputs.
//
// Net naming:
//   a<i>, b<j>, s, m        primary inputs
//   one                     constant-1 net (dedicated signed/mixed only)
//   pp_<row>_<col>          partial-product cell values
//   t_<row>_<col>           raw a_i*b_j terms feeding controlled cells
//   sm, nt_0, mnt_0         unified control terms
//   cs_<stage>_<col>_<idx>  tree compressor outputs, suffixed _s / _c
//   rp_<row>_<col>          ripple-merge adder outputs, suffixed _s / _c
//   cpa_<col>               final carry-propagate adder outputs, _s / _c
//   p<k>                    product bits (the driving gate's output net is
//                           renamed)
//
// Emission formats:
//   gate-list       line-oriented text:
//                     # key=value header comment
//                     input <net>
//                     const1 <net> | const0 <net>
//                     AND|NAND|OR|XOR <out> <in1> <in2>
//                     NOT <out> <in1>
//                     HA <sum> <carry> <in1> <in2>
//                     FA <sum> <carry> <in1> <in2> <in3>
//                     output <net>...
//   structural-hdl  a synthesizable Verilog module with scalar ports in the
//                   order (a, b, s, m, p), gate primitives, and HA/FA cell
//                   submodules (unless expanded).
//
// Both emitters are deterministic: identical netlists yield identical bytes.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bwmul/bitvec.hpp"
#include "bwmul/ppgen.hpp"
#include "bwmul/reduce.hpp"

namespace bwmul {

using NetId = std::uint32_t;
inline constexpr NetId kNoNet = 0xffffffffu;

enum class GateKind { And, Nand, Or, Xor, Not, Ha, Fa };
const char* to_string(GateKind k);

struct Gate {
    GateKind kind;
    std::uint8_t nin;
    NetId in[3];
    NetId out;            // sum output for HA/FA
    NetId carry = kNoNet; // HA/FA only

    friend bool operator==(const Gate&, const Gate&) = default;
};

struct Netlist {
    int n = 0;
    Scheme scheme = Scheme::Unified;
    ReducerKind reducer = ReducerKind::Wallace;
    bool expanded = false;

    std::vector<std::string> net_names;
    std::vector<NetId> inputs;  // a0.., b0.., then s, m for the unified scheme
    std::vector<NetId> outputs; // p0 .. p(2n-1)
    std::optional<NetId> const_one;
    std::optional<NetId> const_zero;
    std::vector<Gate> gates; // topological order

    NetId find_net(const std::string& name) const; // kNoNet when absent
    std::size_t net_count() const { return net_names.size(); }
    // gate count per kind, indexed by GateKind
    std::vector<int> kind_histogram() const;
};

// Unified multiplier netlist (inputs a, b, s, m).
Netlist build_netlist(Width n, ReducerKind reducer);
// General builder; dedicated schemes have inputs a, b only.
Netlist build_netlist(Scheme scheme, Width n, ReducerKind reducer);

// Checks topological order (gate inputs defined by earlier gates, primary
// inputs or constants) and that every net is driven exactly once. Throws
// std::logic_error on violation.
void validate(const Netlist& nl);

// Single topological pass. The assignment must cover exactly the primary
// inputs by name; unknown or missing nets throw std::invalid_argument.
BitVec eval_netlist(const Netlist& nl, const std::unordered_map<std::string, std::uint8_t>& assignment);

// Fast path: values in input order (a0.., b0.., [s, m]).
BitVec eval_netlist(const Netlist& nl, const std::vector<std::uint8_t>& input_values);

// Assignment helper for the common case.
std::unordered_map<std::string, std::uint8_t> assignment_for(const Netlist& nl, const BitVec& a,
                                                             const BitVec& b, ModeSignals sig);

// Decomposes HA/FA cells into AND/XOR/OR gates; output nets keep their
// names, so behavior and outputs are unchanged.
Netlist expand(const Netlist& nl);

// Longest input-to-output path, each gate counting one level.
int depth(const Netlist& nl);

enum class EmitFormat { StructuralHdl, GateList };
EmitFormat parse_emit_format(const std::string& s); // "structural-hdl" | "gate-list"

std::string emit(const Netlist& nl, EmitFormat format);

// Readers for the two emitted formats. parse_gate_list reconstructs a full
// evaluable netlist. parse_structural reads the gate instances of the top
// module (cell submodule definitions are skipped) and returns them as a
// netlist for histogram comparison.
Netlist parse_gate_list(const std::string& text);
Netlist parse_structural(const std::string& text);

} // namespace bwmul
