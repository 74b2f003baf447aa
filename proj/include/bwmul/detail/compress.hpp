#pragma once
// Generic partial-product reduction engine. The same scheduling code runs
// on two payload types: plain bit values (the behavioral reducers) and
// netlist net ids (gate emission). Both consumers therefore share one
// construction, so gate counts derived from a netlist match the reduction
// the behavioral model performs.
//
// An Ops type supplies the payload semantics:
//
//   using B = ...;
//   std::pair<B,B> full(B x, B y, B z, Ctx)   // (sum, carry), a 3:2 cell
//   std::pair<B,B> half(B x, B y, Ctx)        // (sum, carry), a 2:2 cell
//   B sum3(B x, B y, B z, Ctx)                // top column: carry discarded
//   B sum2(B x, B y, Ctx)
//   B zero()                                  // value of an empty column
//
// Carries out of the top column (2n-1) are always discarded; the reduction
// result is the exact cell sum modulo 2^(2n).

#include <cstdint>
#include <optional>
#include <vector>

namespace bwmul::detail {

enum class Phase { Tree, RippleRow, FinalAdd };

// Identifies one compression event for deterministic naming/tracing.
// stage: tree stage number, or the row index for ripple merges; idx: event
// ordinal within (stage, col).
struct Ctx {
    Phase phase;
    int stage;
    int col;
    int idx;
};

template <class B>
using Piles = std::vector<std::vector<B>>; // piles[c] = bits of weight 2^c

// Dadda column-height ceilings not exceeding from_height, descending, ending
// at 2 (e.g. 28, 19, 13, 9, 6, 4, 3, 2).
inline std::vector<int> dadda_targets(int from_height)
{
    std::vector<int> seq{2};
    while (seq.back() < from_height)
        seq.push_back(seq.back() * 3 / 2);
    std::vector<int> out;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        if (*it < from_height)
            out.push_back(*it);
    if (out.empty() || out.back() != 2)
        out.push_back(2);
    return out;
}

template <class B>
int max_height(const Piles<B>& piles)
{
    std::size_t h = 0;
    for (const auto& p : piles)
        h = std::max(h, p.size());
    return static_cast<int>(h);
}

template <class B>
std::vector<int> height_profile(const Piles<B>& piles)
{
    std::vector<int> h(piles.size());
    for (std::size_t c = 0; c < piles.size(); ++c)
        h[c] = static_cast<int>(piles[c].size());
    return h;
}

// One Wallace stage: per column, full adders on groups of three and a half
// adder on a leftover pair; sums and carries feed the next stage. `next`
// must have the same column count; its piles are overwritten (capacity is
// reused, so a caller can ping-pong two buffers across stages).
template <class B, class Ops>
void wallace_stage(const Piles<B>& piles, Piles<B>& next, int stage, Ops& ops, int& csa_count)
{
    const int cols = static_cast<int>(piles.size());
    for (auto& p : next)
        p.clear();
    for (int c = 0; c < cols; ++c) {
        const auto& p = piles[static_cast<std::size_t>(c)];
        const bool top = (c == cols - 1);
        std::size_t i = 0;
        int idx = 0;
        while (p.size() - i >= 3) {
            Ctx ctx{Phase::Tree, stage, c, idx++};
            if (top) {
                next[static_cast<std::size_t>(c)].push_back(
                    ops.sum3(p[i], p[i + 1], p[i + 2], ctx));
            } else {
                auto [s, cy] = ops.full(p[i], p[i + 1], p[i + 2], ctx);
                next[static_cast<std::size_t>(c)].push_back(s);
                next[static_cast<std::size_t>(c + 1)].push_back(cy);
                ++csa_count;
            }
            i += 3;
        }
        if (p.size() - i == 2) {
            Ctx ctx{Phase::Tree, stage, c, idx++};
            if (top) {
                next[static_cast<std::size_t>(c)].push_back(ops.sum2(p[i], p[i + 1], ctx));
            } else {
                auto [s, cy] = ops.half(p[i], p[i + 1], ctx);
                next[static_cast<std::size_t>(c)].push_back(s);
                next[static_cast<std::size_t>(c + 1)].push_back(cy);
            }
            i += 2;
        } else if (p.size() - i == 1) {
            next[static_cast<std::size_t>(c)].push_back(p[i]);
        }
    }
}

// One Dadda stage toward the given target height. Columns are processed low
// to high; carries land in the next column of the same stage. A column one
// above target gets a half adder, otherwise full adders.
template <class B, class Ops>
void dadda_stage(Piles<B>& piles, int stage, int target, Ops& ops, int& csa_count)
{
    const int cols = static_cast<int>(piles.size());
    for (int c = 0; c < cols; ++c) {
        auto& p = piles[static_cast<std::size_t>(c)];
        const bool top = (c == cols - 1);
        std::size_t head = 0; // consumed prefix; compacted once per column
        int idx = 0;
        while (static_cast<int>(p.size() - head) > target) {
            Ctx ctx{Phase::Tree, stage, c, idx++};
            if (static_cast<int>(p.size() - head) == target + 1) {
                B x = p[head], y = p[head + 1];
                head += 2;
                if (top) {
                    p.push_back(ops.sum2(x, y, ctx));
                } else {
                    auto [s, cy] = ops.half(x, y, ctx);
                    p.push_back(s);
                    piles[static_cast<std::size_t>(c + 1)].push_back(cy);
                }
            } else {
                B x = p[head], y = p[head + 1], z = p[head + 2];
                head += 3;
                if (top) {
                    p.push_back(ops.sum3(x, y, z, ctx));
                } else {
                    auto [s, cy] = ops.full(x, y, z, ctx);
                    p.push_back(s);
                    piles[static_cast<std::size_t>(c + 1)].push_back(cy);
                    ++csa_count;
                }
            }
        }
        if (head)
            p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(head));
    }
}

// Final carry-propagate add over piles of height <= 2. Returns one bit per
// column. Reports the adder span via final_width: columns from the lowest
// one holding two bits up to the top (0 when no column needs an add).
template <class B, class Ops>
std::vector<B> carry_propagate(const Piles<B>& piles, Ops& ops, int& final_width)
{
    const int cols = static_cast<int>(piles.size());
    std::vector<B> out;
    out.reserve(piles.size());
    std::optional<B> carry;
    int first_add = -1;
    for (int c = 0; c < cols; ++c) {
        const auto& p = piles[static_cast<std::size_t>(c)];
        const bool top = (c == cols - 1);
        B ins[3];
        int k = 0;
        for (const B& b : p)
            ins[k++] = b;
        if (carry)
            ins[k++] = *carry;
        Ctx ctx{Phase::FinalAdd, 0, c, 0};
        switch (k) {
        case 0:
            out.push_back(ops.zero());
            carry.reset();
            break;
        case 1:
            out.push_back(ins[0]);
            carry.reset();
            break;
        case 2: {
            if (first_add < 0)
                first_add = c;
            if (top) {
                out.push_back(ops.sum2(ins[0], ins[1], ctx));
                carry.reset();
            } else {
                auto [s, cy] = ops.half(ins[0], ins[1], ctx);
                out.push_back(s);
                carry = cy;
            }
            break;
        }
        default: {
            if (first_add < 0)
                first_add = c;
            if (top) {
                out.push_back(ops.sum3(ins[0], ins[1], ins[2], ctx));
                carry.reset();
            } else {
                auto [s, cy] = ops.full(ins[0], ins[1], ins[2], ctx);
                out.push_back(s);
                carry = cy;
            }
            break;
        }
        }
    }
    final_width = first_add < 0 ? 0 : cols - first_add;
    return out;
}

// Sequential accumulation: rows are merged one after another, each merge a
// carry-propagate pass. rows[i] holds (column, payload) pairs ascending by
// column. Produces one bit per column; uses no 3:2 tree compression.
template <class B, class Ops>
std::vector<B> ripple_rows(int cols,
                           const std::vector<std::vector<std::pair<int, B>>>& rows,
                           Ops& ops)
{
    std::vector<std::optional<B>> acc(static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        std::vector<std::optional<B>> incoming(static_cast<std::size_t>(cols));
        int lo = cols;
        for (const auto& [c, b] : row) {
            incoming[static_cast<std::size_t>(c)] = b;
            lo = std::min(lo, c);
        }
        if (lo == cols)
            continue; // empty row
        std::optional<B> carry;
        for (int c = lo; c < cols; ++c) {
            const bool top = (c == cols - 1);
            B ins[3];
            int k = 0;
            if (acc[static_cast<std::size_t>(c)])
                ins[k++] = *acc[static_cast<std::size_t>(c)];
            if (incoming[static_cast<std::size_t>(c)])
                ins[k++] = *incoming[static_cast<std::size_t>(c)];
            if (carry)
                ins[k++] = *carry;
            Ctx ctx{Phase::RippleRow, static_cast<int>(r), c, 0};
            switch (k) {
            case 0:
                carry.reset();
                break;
            case 1:
                acc[static_cast<std::size_t>(c)] = ins[0];
                carry.reset();
                break;
            case 2: {
                if (top) {
                    acc[static_cast<std::size_t>(c)] = ops.sum2(ins[0], ins[1], ctx);
                    carry.reset();
                } else {
                    auto [s, cy] = ops.half(ins[0], ins[1], ctx);
                    acc[static_cast<std::size_t>(c)] = s;
                    carry = cy;
                }
                break;
            }
            default: {
                if (top) {
                    acc[static_cast<std::size_t>(c)] = ops.sum3(ins[0], ins[1], ins[2], ctx);
                    carry.reset();
                } else {
                    auto [s, cy] = ops.full(ins[0], ins[1], ins[2], ctx);
                    acc[static_cast<std::size_t>(c)] = s;
                    carry = cy;
                }
                break;
            }
            }
        }
    }
    std::vector<B> out;
    out.reserve(static_cast<std::size_t>(cols));
    for (auto& v : acc)
        out.push_back(v ? *v : ops.zero());
    return out;
}

} // namespace bwmul::detail
