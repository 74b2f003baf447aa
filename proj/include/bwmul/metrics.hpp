#pragma once
// Gate-count area model. Costs are unit gate equivalents per primitive,
// applied to the gate populations of the generated netlists, so the counts
// here and the emitted netlists always agree. This is an area proxy only:
// no timing, no technology mapping, and explicitly no power model.
//
// The headline figure is the ratio (dedicated unsigned + signed + mixed)
// over the single unified multiplier, i.e. how much is saved by one
// signal-controlled array versus three separate ones.

#include <string>

#include "bwmul/bitvec.hpp"
#include "bwmul/ppgen.hpp"
#include "bwmul/reduce.hpp"

namespace bwmul {

// Default weights are a conventional NAND-equivalent flavored scale:
// 2-input and/nand/or = 1, xor = 2, inverter = 0.5, half adder = 3,
// full adder = 6.
struct GateCostModel {
    double and2 = 1.0;
    double nand2 = 1.0;
    double or2 = 1.0;
    double xor2 = 2.0;
    double not1 = 0.5;
    double halfadder = 3.0;
    double fulladder = 6.0;

    void validate() const; // all weights must be positive

    // key=value lines ('#' starts a comment); unknown keys are rejected.
    static GateCostModel from_text(const std::string& text);
    static GateCostModel from_file(const std::string& path);
    std::string to_text() const;
};

// Total gate-equivalent cost of one multiplier configuration.
double cost_of(Scheme scheme, Width n, ReducerKind reducer, const GateCostModel& model);

struct AreaReport {
    int n = 0;
    ReducerKind reducer = ReducerKind::Wallace;
    double unified_cost = 0;
    double unsigned_cost = 0;
    double signed_cost = 0;
    double mixed_cost = 0;
    double ratio = 0;       // (unsigned + signed + mixed) / unified
    int depth_unified = 0;  // gate levels of the expanded unified netlist

    std::string to_text() const; // key=value lines, includes the proxy caveat
    std::string to_json() const;
};

AreaReport compare(Width n, ReducerKind reducer, const GateCostModel& model);

} // namespace bwmul
