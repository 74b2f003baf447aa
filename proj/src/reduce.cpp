#include "bwmul/reduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "bwmul/detail/compress.hpp"

namespace bwmul {

const char* to_string(ReducerKind k)
{
    switch (k) {
    case ReducerKind::Ripple: return "ripple";
    case ReducerKind::Wallace: return "wallace";
    case ReducerKind::Dadda: return "dadda";
    }
    return "?";
}

ReducerKind parse_reducer(const std::string& s)
{
    if (s == "ripple") return ReducerKind::Ripple;
    if (s == "wallace") return ReducerKind::Wallace;
    if (s == "dadda") return ReducerKind::Dadda;
    throw std::invalid_argument("unknown reducer: " + s);
}

int max_stage_height(const std::vector<int>& profile)
{
    int h = 0;
    for (int v : profile)
        h = std::max(h, v);
    return h;
}

std::string to_text(const ReductionTrace& t)
{
    std::string out;
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
        out += "stage=" + std::to_string(i + 1) + " max_height=" +
               std::to_string(max_stage_height(t.stages[i])) + " heights=";
        for (std::size_t c = 0; c < t.stages[i].size(); ++c) {
            if (c)
                out += ',';
            out += std::to_string(t.stages[i][c]);
        }
        out += '\n';
    }
    out += "csa_count=" + std::to_string(t.csa_count) + '\n';
    out += "final_adder_width=" + std::to_string(t.final_adder_width) + '\n';
    return out;
}

namespace {

struct BitOps {
    using B = std::uint8_t;
    std::pair<B, B> full(B x, B y, B z, detail::Ctx)
    {
        return {static_cast<B>(x ^ y ^ z), static_cast<B>((x & y) | (x & z) | (y & z))};
    }
    std::pair<B, B> half(B x, B y, detail::Ctx)
    {
        return {static_cast<B>(x ^ y), static_cast<B>(x & y)};
    }
    B sum3(B x, B y, B z, detail::Ctx) { return static_cast<B>(x ^ y ^ z); }
    B sum2(B x, B y, detail::Ctx) { return static_cast<B>(x ^ y); }
    B zero() { return 0; }
};

void fill_matrix_piles(const PPMatrix& m, detail::Piles<std::uint8_t>& piles)
{
    piles.resize(static_cast<std::size_t>(2 * m.n));
    for (auto& p : piles)
        p.clear();
    for (const auto& row : m.rows)
        for (const auto& cell : row)
            piles[cell.column].push_back(cell.bit);
}

} // namespace

namespace {

BitVec reduce_impl(const PPMatrix& m, ReducerKind kind, ReductionTrace* trace)
{
    validate_matrix(m);
    const int cols = 2 * m.n;
    BitOps ops;
    int csa = 0;
    int final_width = 0;
    std::vector<std::uint8_t> bits;

    if (kind == ReducerKind::Ripple) {
        std::vector<std::vector<std::pair<int, std::uint8_t>>> rows;
        rows.reserve(m.rows.size());
        for (const auto& row : m.rows) {
            std::vector<std::pair<int, std::uint8_t>> r;
            r.reserve(row.size());
            for (const auto& cell : row)
                r.emplace_back(cell.column, cell.bit);
            rows.push_back(std::move(r));
        }
        bits = detail::ripple_rows(cols, rows, ops);
        final_width = cols;
    } else {
        // Scratch piles are reused across calls (per thread); reduction is
        // the hot path of the verification sweeps.
        thread_local detail::Piles<std::uint8_t> piles, spare;
        fill_matrix_piles(m, piles);
        int stage = 0;
        if (kind == ReducerKind::Wallace) {
            spare.resize(piles.size());
            while (detail::max_height(piles) > 2) {
                detail::wallace_stage(piles, spare, stage++, ops, csa);
                piles.swap(spare);
                if (trace)
                    trace->stages.push_back(detail::height_profile(piles));
            }
        } else {
            int h = detail::max_height(piles);
            if (h > 2) {
                for (int target : detail::dadda_targets(h)) {
                    detail::dadda_stage(piles, stage++, target, ops, csa);
                    if (trace)
                        trace->stages.push_back(detail::height_profile(piles));
                }
            }
        }
        bits = detail::carry_propagate(piles, ops, final_width);
    }
    if (trace) {
        trace->csa_count = csa;
        trace->final_adder_width = final_width;
    }
    return BitVec(std::move(bits));
}

} // namespace

std::pair<BitVec, ReductionTrace> reduce_traced(const PPMatrix& m, ReducerKind kind)
{
    ReductionTrace trace;
    BitVec bits = reduce_impl(m, kind, &trace);
    return {std::move(bits), std::move(trace)};
}

BitVec reduce(const PPMatrix& m, ReducerKind kind)
{
    return reduce_impl(m, kind, nullptr);
}

} // namespace bwmul
