#include "bwmul/ppgen.hpp"

#include <algorithm>
#include <stdexcept>

namespace bwmul {

const char* to_string(Mode m)
{
    switch (m) {
    case Mode::Unsigned: return "unsigned";
    case Mode::Signed: return "signed";
    case Mode::Mixed: return "mixed";
    }
    return "?";
}

const char* to_string(Scheme s)
{
    switch (s) {
    case Scheme::Unsigned: return "unsigned";
    case Scheme::Signed: return "signed";
    case Scheme::Mixed: return "mixed";
    case Scheme::Unified: return "unified";
    }
    return "?";
}

Mode parse_mode(const std::string& s)
{
    if (s == "unsigned") return Mode::Unsigned;
    if (s == "signed") return Mode::Signed;
    if (s == "mixed") return Mode::Mixed;
    throw std::invalid_argument("unknown mode: " + s);
}

const char* to_string(Mnemonic m)
{
    switch (m) {
    case Mnemonic::Mul: return "mul";
    case Mnemonic::Mulh: return "mulh";
    case Mnemonic::Mulhu: return "mulhu";
    case Mnemonic::Mulhsu: return "mulhsu";
    }
    return "?";
}

ModeSignals ModeSignals::of(Mode mode)
{
    switch (mode) {
    case Mode::Signed: return {1, 0, 0};
    case Mode::Unsigned: return {0, 1, 0};
    case Mode::Mixed: return {0, 0, 1};
    }
    throw std::invalid_argument("bad mode");
}

ModeSignals demux_mode(Mnemonic m)
{
    switch (m) {
    case Mnemonic::Mulh: return {1, 0, 0};
    case Mnemonic::Mulhu: return {0, 1, 0};
    case Mnemonic::Mulhsu: return {0, 0, 1};
    case Mnemonic::Mul: return {0, 1, 0};
    }
    throw std::invalid_argument("unknown mnemonic");
}

namespace {

int checked_width(const BitVec& a, const BitVec& b)
{
    if (a.width() != b.width())
        throw std::invalid_argument("operand widths differ");
    Width w(a.width()); // also rejects n < 2 and n > 32
    return w.n();
}

inline std::uint8_t inv(std::uint8_t b) { return static_cast<std::uint8_t>(b ^ 1); }

} // namespace

PPMatrix pp_unsigned(const BitVec& a, const BitVec& b)
{
    int n = checked_width(a, b);
    PPMatrix m{n, Scheme::Unsigned, {}};
    m.rows.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = m.rows[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            row.push_back({static_cast<std::uint8_t>(a.bit(i) & b.bit(j)),
                           static_cast<std::uint16_t>(i + j)});
    }
    return m;
}

PPMatrix pp_signed(const BitVec& a, const BitVec& b)
{
    int n = checked_width(a, b);
    PPMatrix m{n, Scheme::Signed, {}};
    m.rows.resize(static_cast<std::size_t>(n));

    // row 0: plain below, complemented top product, constant 1 at column n
    {
        auto& row = m.rows[0];
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j < n - 1; ++j)
            row.push_back({static_cast<std::uint8_t>(a.bit(0) & b.bit(j)),
                           static_cast<std::uint16_t>(j)});
        row.push_back({inv(a.bit(0) & b.bit(n - 1)), static_cast<std::uint16_t>(n - 1)});
        row.push_back({1, static_cast<std::uint16_t>(n)});
    }
    // rows 1..n-2: complemented top product only
    for (int i = 1; i <= n - 2; ++i) {
        auto& row = m.rows[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n - 1; ++j)
            row.push_back({static_cast<std::uint8_t>(a.bit(i) & b.bit(j)),
                           static_cast<std::uint16_t>(i + j)});
        row.push_back({inv(a.bit(i) & b.bit(n - 1)), static_cast<std::uint16_t>(n - 1 + i)});
    }
    // row n-1: complemented except the sign-sign product, constant 1 on top
    {
        auto& row = m.rows[static_cast<std::size_t>(n - 1)];
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j < n - 1; ++j)
            row.push_back({inv(a.bit(n - 1) & b.bit(j)), static_cast<std::uint16_t>(n - 1 + j)});
        row.push_back({static_cast<std::uint8_t>(a.bit(n - 1) & b.bit(n - 1)),
                       static_cast<std::uint16_t>(2 * n - 2)});
        row.push_back({1, static_cast<std::uint16_t>(2 * n - 1)});
    }
    return m;
}

PPMatrix pp_mixed(const BitVec& a, const BitVec& b)
{
    int n = checked_width(a, b);
    PPMatrix m{n, Scheme::Mixed, {}};
    m.rows.resize(static_cast<std::size_t>(n));

    // row 0: the +1 addend at column n-1 is folded into the pair
    // (plain product at n-1, complement at n).
    {
        auto& row = m.rows[0];
        row.reserve(static_cast<std::size_t>(n) + 1);
        std::uint8_t top = static_cast<std::uint8_t>(a.bit(0) & b.bit(n - 1));
        for (int j = 0; j < n - 1; ++j)
            row.push_back({static_cast<std::uint8_t>(a.bit(0) & b.bit(j)),
                           static_cast<std::uint16_t>(j)});
        row.push_back({top, static_cast<std::uint16_t>(n - 1)});
        row.push_back({inv(top), static_cast<std::uint16_t>(n)});
    }
    for (int i = 1; i <= n - 2; ++i) {
        auto& row = m.rows[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n - 1; ++j)
            row.push_back({static_cast<std::uint8_t>(a.bit(i) & b.bit(j)),
                           static_cast<std::uint16_t>(i + j)});
        row.push_back({inv(a.bit(i) & b.bit(n - 1)), static_cast<std::uint16_t>(n - 1 + i)});
    }
    // row n-1: plain except the complemented sign-sign product, constant 1
    {
        auto& row = m.rows[static_cast<std::size_t>(n - 1)];
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j < n - 1; ++j)
            row.push_back({static_cast<std::uint8_t>(a.bit(n - 1) & b.bit(j)),
                           static_cast<std::uint16_t>(n - 1 + j)});
        row.push_back({inv(a.bit(n - 1) & b.bit(n - 1)), static_cast<std::uint16_t>(2 * n - 2)});
        row.push_back({1, static_cast<std::uint16_t>(2 * n - 1)});
    }
    return m;
}

PPMatrix pp_unified(const BitVec& a, const BitVec& b, ModeSignals sig)
{
    int n = checked_width(a, b);
    if (!sig.one_hot())
        throw std::invalid_argument("mode signals must be one-hot");
    std::uint8_t s = sig.s;
    std::uint8_t mm = sig.m;
    std::uint8_t sm = static_cast<std::uint8_t>(s | mm);

    PPMatrix m{n, Scheme::Unified, {}};
    m.rows.resize(static_cast<std::size_t>(n));

    {
        auto& row = m.rows[0];
        row.reserve(static_cast<std::size_t>(n) + 1);
        std::uint8_t top = static_cast<std::uint8_t>(a.bit(0) & b.bit(n - 1));
        for (int j = 0; j < n - 1; ++j)
            row.push_back({static_cast<std::uint8_t>(a.bit(0) & b.bit(j)),
                           static_cast<std::uint16_t>(j)});
        row.push_back({static_cast<std::uint8_t>(s ^ top), static_cast<std::uint16_t>(n - 1)});
        if (sm) // constant 0 in the unsigned setting, no cell there
            row.push_back({static_cast<std::uint8_t>(s | (mm & inv(top))),
                           static_cast<std::uint16_t>(n)});
    }
    for (int i = 1; i <= n - 2; ++i) {
        auto& row = m.rows[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n - 1; ++j)
            row.push_back({static_cast<std::uint8_t>(a.bit(i) & b.bit(j)),
                           static_cast<std::uint16_t>(i + j)});
        row.push_back({static_cast<std::uint8_t>(sm ^ (a.bit(i) & b.bit(n - 1))),
                       static_cast<std::uint16_t>(n - 1 + i)});
    }
    {
        auto& row = m.rows[static_cast<std::size_t>(n - 1)];
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j < n - 1; ++j)
            row.push_back({static_cast<std::uint8_t>(s ^ (a.bit(n - 1) & b.bit(j))),
                           static_cast<std::uint16_t>(n - 1 + j)});
        row.push_back({static_cast<std::uint8_t>(mm ^ (a.bit(n - 1) & b.bit(n - 1))),
                       static_cast<std::uint16_t>(2 * n - 2)});
        if (sm)
            row.push_back({sm, static_cast<std::uint16_t>(2 * n - 1)});
    }
    return m;
}

bool same_cells(const PPMatrix& lhs, const PPMatrix& rhs)
{
    return lhs.n == rhs.n && lhs.rows == rhs.rows;
}

std::uint64_t weighted_sum_mod2n(const PPMatrix& m)
{
    std::uint64_t sum = 0; // wraps mod 2^64, exact for 2n <= 64
    for (const auto& row : m.rows)
        for (const auto& cell : row)
            if (cell.bit)
                sum += std::uint64_t{1} << cell.column;
    return sum & bit_mask(2 * m.n);
}

void validate_matrix(const PPMatrix& m)
{
    if (m.n < Width::kMin || m.n > Width::kMax)
        throw std::invalid_argument("matrix width out of range");
    if (static_cast<int>(m.rows.size()) != m.n)
        throw std::invalid_argument("matrix must have exactly n rows");
    for (const auto& row : m.rows) {
        std::vector<bool> seen(static_cast<std::size_t>(2 * m.n), false);
        for (const auto& cell : row) {
            if (cell.bit > 1)
                throw std::invalid_argument("cell bit must be 0 or 1");
            if (cell.column >= 2 * m.n)
                throw std::invalid_argument("cell column out of range");
            if (seen[cell.column])
                throw std::invalid_argument("duplicate column within a row");
            seen[cell.column] = true;
        }
    }
}

namespace {

std::string product_label(int i, int j, bool complemented)
{
    std::string s = complemented ? "~" : "";
    s += "a" + std::to_string(i) + "b" + std::to_string(j);
    return s;
}

} // namespace

std::string cell_label(Scheme scheme, int n, int row, int column)
{
    int top = n - 1; // index of the sign/product top bit
    switch (scheme) {
    case Scheme::Unsigned:
        if (column >= row && column <= row + top)
            return product_label(row, column - row, false);
        return "";
    case Scheme::Signed:
        if (row == 0) {
            if (column == n) return "1";
            if (column == top) return product_label(0, top, true);
            if (column < top) return product_label(0, column, false);
            return "";
        }
        if (row == n - 1) {
            if (column == 2 * n - 1) return "1";
            if (column == 2 * n - 2) return product_label(top, top, false);
            if (column >= top && column <= 2 * n - 3)
                return product_label(top, column - top, true);
            return "";
        }
        if (column == top + row) return product_label(row, top, true);
        if (column >= row && column < top + row) return product_label(row, column - row, false);
        return "";
    case Scheme::Mixed:
        if (row == 0) {
            if (column == n) return product_label(0, top, true);
            if (column == top) return product_label(0, top, false);
            if (column < top) return product_label(0, column, false);
            return "";
        }
        if (row == n - 1) {
            if (column == 2 * n - 1) return "1";
            if (column == 2 * n - 2) return product_label(top, top, true);
            if (column >= top && column <= 2 * n - 3)
                return product_label(top, column - top, false);
            return "";
        }
        if (column == top + row) return product_label(row, top, true);
        if (column >= row && column < top + row) return product_label(row, column - row, false);
        return "";
    case Scheme::Unified:
        if (row == 0) {
            if (column == n) return "s+m" + product_label(0, top, true);
            if (column == top) return "s^" + product_label(0, top, false);
            if (column < top) return product_label(0, column, false);
            return "";
        }
        if (row == n - 1) {
            if (column == 2 * n - 1) return "s+m";
            if (column == 2 * n - 2) return "m^" + product_label(top, top, false);
            if (column >= top && column <= 2 * n - 3)
                return "s^" + product_label(top, column - top, false);
            return "";
        }
        if (column == top + row) return "(s+m)^" + product_label(row, top, false);
        if (column >= row && column < top + row) return product_label(row, column - row, false);
        return "";
    }
    return "";
}

namespace {

std::string render_grid(int n, const std::vector<std::vector<std::string>>& grid)
{
    // grid[row][column]; printed MSB-left with right-aligned fixed-width slots
    std::size_t w = 1;
    for (const auto& row : grid)
        for (const auto& s : row)
            w = std::max(w, s.size());
    std::string out;
    for (const auto& row : grid) {
        std::string line;
        for (int c = 2 * n - 1; c >= 0; --c) {
            const std::string& s = row[static_cast<std::size_t>(c)];
            line += std::string(w - s.size() + 1, ' ');
            line += s.empty() ? " " : s;
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        // drop the uniform left margin of fully-empty slots lazily: keep as is
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace

std::string render_scheme(Scheme scheme, int n)
{
    Width w(n);
    std::vector<std::vector<std::string>> grid(
        static_cast<std::size_t>(n), std::vector<std::string>(static_cast<std::size_t>(2 * n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < 2 * n; ++c)
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                cell_label(scheme, w.n(), r, c);
    return render_grid(n, grid);
}

std::string render_cells(const PPMatrix& m)
{
    std::vector<std::vector<std::string>> grid(
        static_cast<std::size_t>(m.n),
        std::vector<std::string>(static_cast<std::size_t>(2 * m.n)));
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (const auto& cell : m.rows[r])
            grid[r][cell.column] = cell.bit ? "1" : "0";
    return render_grid(m.n, grid);
}

} // namespace bwmul
