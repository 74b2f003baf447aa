#include "bwmul/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bwmul {

namespace {

std::uint64_t zext(const BitVec& v) { return decode_unsigned(v); }

// Two's-complement value as a raw 64-bit word (sign-extended).
std::uint64_t sext(const BitVec& v) { return static_cast<std::uint64_t>(decode_signed(v)); }

} // namespace

BitVec ref_product(const BitVec& a, const BitVec& b, Mode mode)
{
    if (a.width() != b.width())
        throw std::invalid_argument("operand widths differ");
    const int n = Width(a.width()).n();
    // 64-bit wraparound multiplication is exact mod 2^64, which covers every
    // 2n-bit product for n <= 32.
    std::uint64_t av = 0, bv = 0;
    switch (mode) {
    case Mode::Unsigned:
        av = zext(a);
        bv = zext(b);
        break;
    case Mode::Signed:
        av = sext(a);
        bv = sext(b);
        break;
    case Mode::Mixed: // a unsigned multiplier, b signed multiplicand
        av = zext(a);
        bv = sext(b);
        break;
    }
    return encode_unsigned((av * bv) & bit_mask(2 * n), 2 * n);
}

bool VerifyReport::same_results(const VerifyReport& other) const
{
    auto fail_eq = [](const VerifyFailure& x, const VerifyFailure& y) {
        return x.case_index == y.case_index && x.mode == y.mode && x.a == y.a && x.b == y.b &&
               x.expected == y.expected && x.actual == y.actual;
    };
    if (kind != other.kind || width != other.width || reducer != other.reducer ||
        pairs != other.pairs || total_cases != other.total_cases || seed != other.seed ||
        failures.size() != other.failures.size())
        return false;
    for (std::size_t i = 0; i < failures.size(); ++i)
        if (!fail_eq(failures[i], other.failures[i]))
            return false;
    return true;
}

std::string VerifyReport::to_text() const
{
    char buf[64];
    std::string out;
    out += "kind=" + kind + '\n';
    out += "width=" + std::to_string(width) + '\n';
    out += "reducer=" + std::string(to_string(reducer)) + '\n';
    out += "pairs=" + std::to_string(pairs) + '\n';
    out += "total_cases=" + std::to_string(total_cases) + '\n';
    out += "failures=" + std::to_string(failures.size()) + '\n';
    if (seed) {
        out += "seed=" + std::to_string(*seed) + '\n';
    }
    std::snprintf(buf, sizeof buf, "elapsed_seconds=%.3f\n", elapsed_seconds);
    out += buf;
    for (const auto& f : failures) {
        out += "FAIL case=" + std::to_string(f.case_index) + " mode=" + to_string(f.mode) +
               " a=" + f.a.to_hex() + " b=" + f.b.to_hex() + " expected=" + f.expected.to_hex() +
               " actual=" + f.actual.to_hex() + '\n';
    }
    return out;
}

namespace {

struct Shard {
    std::vector<VerifyFailure> failures;
};

// Runs body(i) for i in [0, count), parallel or serial; per-thread failure
// shards are merged and sorted into deterministic case order afterwards.
template <class Body>
std::vector<VerifyFailure> sweep(std::uint64_t count, Exec exec, Body&& body)
{
    int nshards = 1;
#ifdef _OPENMP
    if (exec == Exec::Parallel)
        nshards = std::max(1, omp_get_max_threads());
#else
    (void)exec;
#endif
    std::vector<Shard> shards(static_cast<std::size_t>(nshards));

#ifdef _OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::uint64_t>(i), shards[static_cast<std::size_t>(omp_get_thread_num())]);
    } else
#endif
    {
        for (std::uint64_t i = 0; i < count; ++i)
            body(i, shards[0]);
    }

    std::vector<VerifyFailure> all;
    for (auto& s : shards)
        all.insert(all.end(), s.failures.begin(), s.failures.end());
    std::sort(all.begin(), all.end(), [](const VerifyFailure& x, const VerifyFailure& y) {
        if (x.case_index != y.case_index)
            return x.case_index < y.case_index;
        return static_cast<int>(x.mode) < static_cast<int>(y.mode);
    });
    return all;
}

void check_one_pair(const BitVec& a, const BitVec& b, std::uint64_t case_index,
                    const std::vector<Mode>& modes, ReducerKind reducer, Shard& shard)
{
    for (Mode mode : modes) {
        PPMatrix m = pp_unified(a, b, ModeSignals::of(mode));
        BitVec actual = reduce(m, reducer);
        BitVec expected = ref_product(a, b, mode);
        if (actual != expected)
            shard.failures.push_back({case_index, mode, a, b, expected, actual});
    }
}

} // namespace

VerifyReport verify_exhaustive(Width n, ReducerKind reducer, Exec exec,
                               const std::vector<Mode>& modes)
{
    if (n.n() > 12)
        throw std::invalid_argument("exhaustive verification is limited to n <= 12");
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t side = std::uint64_t{1} << n.n();
    const std::uint64_t pair_count = side * side;

    VerifyReport report;
    report.kind = "exhaustive";
    report.width = n.n();
    report.reducer = reducer;
    report.pairs = pair_count;
    report.total_cases = pair_count * modes.size();

    report.failures = sweep(pair_count, exec, [&](std::uint64_t idx, Shard& shard) {
        BitVec a = encode_unsigned(idx >> n.n(), n.n());
        BitVec b = encode_unsigned(idx & bit_mask(n.n()), n.n());
        check_one_pair(a, b, idx, modes, reducer, shard);
    });

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

CornerBiasedGen::CornerBiasedGen(Width n, std::uint64_t seed) : rng_(seed), mask_(bit_mask(n.n()))
{
    const std::uint64_t half = std::uint64_t{1} << (n.n() - 1);
    std::set<std::uint64_t> set;
    for (std::uint64_t base : {std::uint64_t{0}, std::uint64_t{1}, half, mask_}) {
        set.insert(base);
        set.insert((base + 1) & mask_);
        set.insert((base - 1) & mask_);
    }
    corners_.assign(set.begin(), set.end());
}

std::uint64_t CornerBiasedGen::next()
{
    std::uint64_t sel = rng_();
    if ((sel & 3) == 0)
        return corners_[(sel >> 2) % corners_.size()];
    return rng_() & mask_;
}

VerifyReport verify_random(Width n, std::uint64_t count, std::uint64_t seed, ReducerKind reducer,
                           Exec exec, const std::vector<Mode>& modes)
{
    if (count < 1)
        throw std::invalid_argument("case count must be at least 1");
    const auto t0 = std::chrono::steady_clock::now();

    // Cases are drawn up front so the stream never depends on the number of
    // workers.
    CornerBiasedGen gen(n, seed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cases(count);
    for (auto& c : cases) {
        c.first = static_cast<std::uint32_t>(gen.next());
        c.second = static_cast<std::uint32_t>(gen.next());
    }

    VerifyReport report;
    report.kind = "random";
    report.width = n.n();
    report.reducer = reducer;
    report.pairs = count;
    report.total_cases = count * modes.size();
    report.seed = seed;

    report.failures = sweep(count, exec, [&](std::uint64_t idx, Shard& shard) {
        BitVec a = encode_unsigned(cases[idx].first, n.n());
        BitVec b = encode_unsigned(cases[idx].second, n.n());
        check_one_pair(a, b, idx, modes, reducer, shard);
    });

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace bwmul
