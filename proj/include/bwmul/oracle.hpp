#pragma once
// Ground-truth products via native 64-bit arithmetic, plus exhaustive and
// randomized verification drivers that sweep the unified scheme against
// that reference.
//
// The sweeps are data-parallel over independent input pairs. Each driver
// has an OpenMP-parallel kernel and a serial reference path; both produce
// the identical report (failures are merged in deterministic case order),
// so the serial path doubles as the correctness reference for the parallel
// one.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bwmul/bitvec.hpp"
#include "bwmul/ppgen.hpp"
#include "bwmul/reduce.hpp"

namespace bwmul {

enum class Exec { Serial, Parallel };

// Exact 2n-bit product of the mode's operand interpretations (two's
// complement for signed/mixed, plain binary for unsigned). a is the
// multiplier, b the multiplicand; for mixed, a is the unsigned operand.
BitVec ref_product(const BitVec& a, const BitVec& b, Mode mode);

struct VerifyFailure {
    std::uint64_t case_index;
    Mode mode;
    BitVec a;
    BitVec b;
    BitVec expected;
    BitVec actual;
};

struct VerifyReport {
    std::string kind; // "exhaustive" | "random"
    int width = 0;
    ReducerKind reducer = ReducerKind::Wallace;
    std::uint64_t pairs = 0;
    std::uint64_t total_cases = 0;
    std::vector<VerifyFailure> failures;
    double elapsed_seconds = 0.0;
    std::optional<std::uint64_t> seed;

    bool pass() const { return failures.empty(); }
    // Everything except the elapsed time (which varies run to run).
    bool same_results(const VerifyReport& other) const;
    // key=value summary followed by one line per failure.
    std::string to_text() const;
};

// Sweeps all 2^n x 2^n operand pairs, each checked in all requested modes,
// through pp_unified + reduce against ref_product. Requires n <= 12.
VerifyReport verify_exhaustive(Width n, ReducerKind reducer, Exec exec = Exec::Parallel,
                               const std::vector<Mode>& modes = {Mode::Unsigned, Mode::Signed,
                                                                 Mode::Mixed});

// Seeded random sweep of `count` operand pairs (each checked in all
// requested modes). Same seed, same cases, regardless of thread count.
VerifyReport verify_random(Width n, std::uint64_t count, std::uint64_t seed, ReducerKind reducer,
                           Exec exec = Exec::Parallel,
                           const std::vector<Mode>& modes = {Mode::Unsigned, Mode::Signed,
                                                             Mode::Mixed});

// Operand generator used by the random sweeps: a quarter of the draws come
// from the corner set {0, 1, 2^(n-1), 2^n-1} plus/minus one (mod 2^n), the
// rest are uniform. Backed by std::mt19937_64, whose output sequence is
// fixed by the standard, so streams are portable across platforms.
class CornerBiasedGen {
public:
    CornerBiasedGen(Width n, std::uint64_t seed);
    std::uint64_t next();

private:
    std::mt19937_64 rng_;
    std::uint64_t mask_;
    std::vector<std::uint64_t> corners_;
};

} // namespace bwmul
