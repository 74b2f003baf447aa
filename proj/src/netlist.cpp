#include "bwmul/netlist.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bwmul/detail/compress.hpp"

namespace bwmul {

const char* to_string(GateKind k)
{
    switch (k) {
    case GateKind::And: return "AND";
    case GateKind::Nand: return "NAND";
    case GateKind::Or: return "OR";
    case GateKind::Xor: return "XOR";
    case GateKind::Not: return "NOT";
    case GateKind::Ha: return "HA";
    case GateKind::Fa: return "FA";
    }
    return "?";
}

NetId Netlist::find_net(const std::string& name) const
{
    for (NetId i = 0; i < net_names.size(); ++i)
        if (net_names[i] == name)
            return i;
    return kNoNet;
}

std::vector<int> Netlist::kind_histogram() const
{
    std::vector<int> h(7, 0);
    for (const auto& g : gates)
        ++h[static_cast<std::size_t>(g.kind)];
    return h;
}

namespace {

struct Builder {
    Netlist nl;
    std::unordered_map<std::string, NetId> index;

    NetId fresh(const std::string& name)
    {
        auto [it, inserted] = index.emplace(name, static_cast<NetId>(nl.net_names.size()));
        if (!inserted)
            throw std::logic_error("duplicate net name: " + name);
        nl.net_names.push_back(name);
        return it->second;
    }
    NetId input(const std::string& name)
    {
        NetId id = fresh(name);
        nl.inputs.push_back(id);
        return id;
    }
    NetId one()
    {
        if (!nl.const_one)
            nl.const_one = fresh("one");
        return *nl.const_one;
    }
    NetId zero()
    {
        if (!nl.const_zero)
            nl.const_zero = fresh("zero");
        return *nl.const_zero;
    }
    NetId g1(GateKind k, const std::string& out, NetId x)
    {
        NetId o = fresh(out);
        nl.gates.push_back({k, 1, {x, kNoNet, kNoNet}, o, kNoNet});
        return o;
    }
    NetId g2(GateKind k, const std::string& out, NetId x, NetId y)
    {
        NetId o = fresh(out);
        nl.gates.push_back({k, 2, {x, y, kNoNet}, o, kNoNet});
        return o;
    }
    std::pair<NetId, NetId> cell(GateKind k, const std::string& sum, const std::string& carry,
                                 NetId x, NetId y, NetId z = kNoNet)
    {
        NetId so = fresh(sum);
        NetId co = fresh(carry);
        std::uint8_t nin = (k == GateKind::Fa) ? 3 : 2;
        nl.gates.push_back({k, nin, {x, y, z}, so, co});
        return {so, co};
    }
};

struct NetOps {
    Builder& b;
    using B = NetId;

    static std::string base(const detail::Ctx& c)
    {
        switch (c.phase) {
        case detail::Phase::Tree:
            return "cs_" + std::to_string(c.stage) + "_" + std::to_string(c.col) + "_" +
                   std::to_string(c.idx);
        case detail::Phase::RippleRow:
            return "rp_" + std::to_string(c.stage) + "_" + std::to_string(c.col);
        case detail::Phase::FinalAdd:
            return "cpa_" + std::to_string(c.col);
        }
        return "x";
    }
    std::pair<B, B> full(B x, B y, B z, detail::Ctx c)
    {
        auto n = base(c);
        return b.cell(GateKind::Fa, n + "_s", n + "_c", x, y, z);
    }
    std::pair<B, B> half(B x, B y, detail::Ctx c)
    {
        auto n = base(c);
        return b.cell(GateKind::Ha, n + "_s", n + "_c", x, y);
    }
    B sum3(B x, B y, B z, detail::Ctx c)
    {
        auto n = base(c);
        B t = b.g2(GateKind::Xor, n + "_x", x, y);
        return b.g2(GateKind::Xor, n + "_s", t, z);
    }
    B sum2(B x, B y, detail::Ctx c) { return b.g2(GateKind::Xor, base(c) + "_s", x, y); }
    B zero() { return b.zero(); }
};

std::string pp_name(int row, int col) { return "pp_" + std::to_string(row) + "_" + std::to_string(col); }
std::string t_name(int row, int col) { return "t_" + std::to_string(row) + "_" + std::to_string(col); }

using NetRows = std::vector<std::vector<std::pair<int, NetId>>>;

// Partial-product cell nets, one list per row, mirroring the ppgen layouts.
NetRows build_cells(Builder& b, Scheme scheme, int n, const std::vector<NetId>& a,
                    const std::vector<NetId>& bv, NetId s, NetId m)
{
    NetRows rows(static_cast<std::size_t>(n));
    const int top = n - 1;

    auto and_cell = [&](int row, int col, int i, int j) {
        rows[static_cast<std::size_t>(row)].emplace_back(
            col, b.g2(GateKind::And, pp_name(row, col), a[static_cast<std::size_t>(i)],
                      bv[static_cast<std::size_t>(j)]));
    };
    auto nand_cell = [&](int row, int col, int i, int j) {
        rows[static_cast<std::size_t>(row)].emplace_back(
            col, b.g2(GateKind::Nand, pp_name(row, col), a[static_cast<std::size_t>(i)],
                      bv[static_cast<std::size_t>(j)]));
    };

    switch (scheme) {
    case Scheme::Unsigned:
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                and_cell(i, i + j, i, j);
        break;

    case Scheme::Signed:
        for (int j = 0; j < top; ++j)
            and_cell(0, j, 0, j);
        nand_cell(0, top, 0, top);
        rows[0].emplace_back(n, b.one());
        for (int i = 1; i <= n - 2; ++i) {
            for (int j = 0; j < top; ++j)
                and_cell(i, i + j, i, j);
            nand_cell(i, top + i, i, top);
        }
        for (int j = 0; j < top; ++j)
            nand_cell(n - 1, top + j, top, j);
        and_cell(n - 1, 2 * n - 2, top, top);
        rows[static_cast<std::size_t>(n - 1)].emplace_back(2 * n - 1, b.one());
        break;

    case Scheme::Mixed:
        for (int j = 0; j < top; ++j)
            and_cell(0, j, 0, j);
        and_cell(0, top, 0, top);
        nand_cell(0, n, 0, top);
        for (int i = 1; i <= n - 2; ++i) {
            for (int j = 0; j < top; ++j)
                and_cell(i, i + j, i, j);
            nand_cell(i, top + i, i, top);
        }
        for (int j = 0; j < top; ++j)
            and_cell(n - 1, top + j, top, j);
        nand_cell(n - 1, 2 * n - 2, top, top);
        rows[static_cast<std::size_t>(n - 1)].emplace_back(2 * n - 1, b.one());
        break;

    case Scheme::Unified: {
        NetId sm = b.g2(GateKind::Or, "sm", s, m);
        // row 0
        for (int j = 0; j < top; ++j)
            and_cell(0, j, 0, j);
        {
            NetId t = b.g2(GateKind::And, t_name(0, top), a[0], bv[static_cast<std::size_t>(top)]);
            rows[0].emplace_back(top, b.g2(GateKind::Xor, pp_name(0, top), s, t));
            NetId nt = b.g1(GateKind::Not, "nt_0", t);
            NetId mnt = b.g2(GateKind::And, "mnt_0", m, nt);
            rows[0].emplace_back(n, b.g2(GateKind::Or, pp_name(0, n), s, mnt));
        }
        // middle rows
        for (int i = 1; i <= n - 2; ++i) {
            for (int j = 0; j < top; ++j)
                and_cell(i, i + j, i, j);
            NetId t = b.g2(GateKind::And, t_name(i, top + i), a[static_cast<std::size_t>(i)],
                           bv[static_cast<std::size_t>(top)]);
            rows[static_cast<std::size_t>(i)].emplace_back(
                top + i, b.g2(GateKind::Xor, pp_name(i, top + i), sm, t));
        }
        // last row
        for (int j = 0; j < top; ++j) {
            NetId t = b.g2(GateKind::And, t_name(n - 1, top + j), a[static_cast<std::size_t>(top)],
                           bv[static_cast<std::size_t>(j)]);
            rows[static_cast<std::size_t>(n - 1)].emplace_back(
                top + j, b.g2(GateKind::Xor, pp_name(n - 1, top + j), s, t));
        }
        {
            NetId t = b.g2(GateKind::And, t_name(n - 1, 2 * n - 2), a[static_cast<std::size_t>(top)],
                           bv[static_cast<std::size_t>(top)]);
            rows[static_cast<std::size_t>(n - 1)].emplace_back(
                2 * n - 2, b.g2(GateKind::Xor, pp_name(n - 1, 2 * n - 2), m, t));
        }
        rows[static_cast<std::size_t>(n - 1)].emplace_back(2 * n - 1, sm);
        break;
    }
    }
    return rows;
}

} // namespace

Netlist build_netlist(Scheme scheme, Width n, ReducerKind reducer)
{
    Builder b;
    b.nl.n = n.n();
    b.nl.scheme = scheme;
    b.nl.reducer = reducer;

    std::vector<NetId> a, bv;
    for (int i = 0; i < n.n(); ++i)
        a.push_back(b.input("a" + std::to_string(i)));
    for (int j = 0; j < n.n(); ++j)
        bv.push_back(b.input("b" + std::to_string(j)));
    NetId s = kNoNet, m = kNoNet;
    if (scheme == Scheme::Unified) {
        s = b.input("s");
        m = b.input("m");
    }

    NetRows rows = build_cells(b, scheme, n.n(), a, bv, s, m);

    const int cols = 2 * n.n();
    NetOps ops{b};
    std::vector<NetId> outs;
    if (reducer == ReducerKind::Ripple) {
        outs = detail::ripple_rows(cols, rows, ops);
    } else {
        detail::Piles<NetId> piles(static_cast<std::size_t>(cols));
        for (const auto& row : rows)
            for (const auto& [c, id] : row)
                piles[static_cast<std::size_t>(c)].push_back(id);
        int csa = 0;
        int stage = 0;
        if (reducer == ReducerKind::Wallace) {
            detail::Piles<NetId> spare(piles.size());
            while (detail::max_height(piles) > 2) {
                detail::wallace_stage(piles, spare, stage++, ops, csa);
                piles.swap(spare);
            }
        } else {
            int h = detail::max_height(piles);
            if (h > 2)
                for (int target : detail::dadda_targets(h))
                    detail::dadda_stage(piles, stage++, target, ops, csa);
        }
        int final_width = 0;
        outs = detail::carry_propagate(piles, ops, final_width);
    }

    // Rename each product bit's driving net to p<k>. These nets never have
    // fanout for the layouts built here; the guard protects the invariant.
    std::vector<int> uses(b.nl.net_names.size(), 0);
    for (const auto& g : b.nl.gates)
        for (int i = 0; i < g.nin; ++i)
            ++uses[g.in[i]];
    for (int k = 0; k < cols; ++k) {
        NetId id = outs[static_cast<std::size_t>(k)];
        bool is_input = std::find(b.nl.inputs.begin(), b.nl.inputs.end(), id) != b.nl.inputs.end();
        bool is_const = (b.nl.const_one && *b.nl.const_one == id) ||
                        (b.nl.const_zero && *b.nl.const_zero == id);
        if (is_input || is_const || uses[id] != 0)
            throw std::logic_error("product net is not a dedicated gate output");
        b.index.erase(b.nl.net_names[id]);
        b.nl.net_names[id] = "p" + std::to_string(k);
        b.index.emplace(b.nl.net_names[id], id);
        b.nl.outputs.push_back(id);
    }
    return b.nl;
}

Netlist build_netlist(Width n, ReducerKind reducer)
{
    return build_netlist(Scheme::Unified, n, reducer);
}

void validate(const Netlist& nl)
{
    const std::size_t count = nl.net_count();
    std::vector<std::uint8_t> defined(count, 0);
    std::vector<int> drivers(count, 0);
    for (NetId id : nl.inputs) {
        defined[id] = 1;
        ++drivers[id];
    }
    if (nl.const_one) {
        defined[*nl.const_one] = 1;
        ++drivers[*nl.const_one];
    }
    if (nl.const_zero) {
        defined[*nl.const_zero] = 1;
        ++drivers[*nl.const_zero];
    }
    for (const auto& g : nl.gates) {
        for (int i = 0; i < g.nin; ++i) {
            if (g.in[i] >= count || !defined[g.in[i]])
                throw std::logic_error("gate input not defined before use (net " +
                                       std::to_string(g.in[i]) + ")");
        }
        if (g.out >= count)
            throw std::logic_error("gate output out of range");
        defined[g.out] = 1;
        ++drivers[g.out];
        if (g.carry != kNoNet) {
            defined[g.carry] = 1;
            ++drivers[g.carry];
        }
    }
    for (std::size_t i = 0; i < count; ++i)
        if (drivers[i] != 1)
            throw std::logic_error("net '" + nl.net_names[i] + "' driven " +
                                   std::to_string(drivers[i]) + " times");
    for (NetId id : nl.outputs)
        if (id >= count || !defined[id])
            throw std::logic_error("output net not driven");
}

namespace {

std::vector<std::uint8_t> run_gates(const Netlist& nl, std::vector<std::uint8_t>& values)
{
    for (const auto& g : nl.gates) {
        std::uint8_t x = values[g.in[0]];
        std::uint8_t y = g.nin > 1 ? values[g.in[1]] : 0;
        std::uint8_t z = g.nin > 2 ? values[g.in[2]] : 0;
        switch (g.kind) {
        case GateKind::And: values[g.out] = static_cast<std::uint8_t>(x & y); break;
        case GateKind::Nand: values[g.out] = static_cast<std::uint8_t>(1 ^ (x & y)); break;
        case GateKind::Or: values[g.out] = static_cast<std::uint8_t>(x | y); break;
        case GateKind::Xor: values[g.out] = static_cast<std::uint8_t>(x ^ y); break;
        case GateKind::Not: values[g.out] = static_cast<std::uint8_t>(x ^ 1); break;
        case GateKind::Ha:
            values[g.out] = static_cast<std::uint8_t>(x ^ y);
            values[g.carry] = static_cast<std::uint8_t>(x & y);
            break;
        case GateKind::Fa:
            values[g.out] = static_cast<std::uint8_t>(x ^ y ^ z);
            values[g.carry] = static_cast<std::uint8_t>((x & y) | (x & z) | (y & z));
            break;
        }
    }
    std::vector<std::uint8_t> out;
    out.reserve(nl.outputs.size());
    for (NetId id : nl.outputs)
        out.push_back(values[id]);
    return out;
}

} // namespace

BitVec eval_netlist(const Netlist& nl, const std::vector<std::uint8_t>& input_values)
{
    if (input_values.size() != nl.inputs.size())
        throw std::invalid_argument("expected " + std::to_string(nl.inputs.size()) +
                                    " input values");
    std::vector<std::uint8_t> values(nl.net_count(), 0);
    for (std::size_t i = 0; i < nl.inputs.size(); ++i)
        values[nl.inputs[i]] = input_values[i] & 1;
    if (nl.const_one)
        values[*nl.const_one] = 1;
    return BitVec(run_gates(nl, values));
}

BitVec eval_netlist(const Netlist& nl,
                    const std::unordered_map<std::string, std::uint8_t>& assignment)
{
    for (const auto& [name, value] : assignment) {
        NetId id = nl.find_net(name);
        if (id == kNoNet)
            throw std::invalid_argument("unknown net in assignment: " + name);
        if (std::find(nl.inputs.begin(), nl.inputs.end(), id) == nl.inputs.end())
            throw std::invalid_argument("net is not a primary input: " + name);
        if (value > 1)
            throw std::invalid_argument("net value must be 0 or 1: " + name);
    }
    std::vector<std::uint8_t> ordered;
    ordered.reserve(nl.inputs.size());
    for (NetId id : nl.inputs) {
        auto it = assignment.find(nl.net_names[id]);
        if (it == assignment.end())
            throw std::invalid_argument("assignment missing input: " + nl.net_names[id]);
        ordered.push_back(it->second);
    }
    return eval_netlist(nl, ordered);
}

std::unordered_map<std::string, std::uint8_t> assignment_for(const Netlist& nl, const BitVec& a,
                                                             const BitVec& b, ModeSignals sig)
{
    if (a.width() != nl.n || b.width() != nl.n)
        throw std::invalid_argument("operand width does not match the netlist");
    std::unordered_map<std::string, std::uint8_t> out;
    for (int i = 0; i < nl.n; ++i) {
        out["a" + std::to_string(i)] = a.bit(i);
        out["b" + std::to_string(i)] = b.bit(i);
    }
    if (nl.scheme == Scheme::Unified) {
        if (!sig.one_hot())
            throw std::invalid_argument("mode signals must be one-hot");
        out["s"] = sig.s;
        out["m"] = sig.m;
    }
    return out;
}

Netlist expand(const Netlist& nl)
{
    Netlist out = nl;
    out.gates.clear();
    out.expanded = true;
    std::unordered_map<std::string, NetId> index;
    for (NetId i = 0; i < out.net_names.size(); ++i)
        index.emplace(out.net_names[i], i);
    auto fresh = [&](const std::string& name) {
        auto [it, inserted] = index.emplace(name, static_cast<NetId>(out.net_names.size()));
        if (!inserted)
            throw std::logic_error("duplicate net name while expanding: " + name);
        out.net_names.push_back(name);
        return it->second;
    };

    for (const auto& g : nl.gates) {
        switch (g.kind) {
        case GateKind::Ha:
            out.gates.push_back({GateKind::Xor, 2, {g.in[0], g.in[1], kNoNet}, g.out, kNoNet});
            out.gates.push_back({GateKind::And, 2, {g.in[0], g.in[1], kNoNet}, g.carry, kNoNet});
            break;
        case GateKind::Fa: {
            const std::string& sum = nl.net_names[g.out];
            const std::string& carry = nl.net_names[g.carry];
            NetId t = fresh(sum + "_x");
            NetId c1 = fresh(carry + "_a");
            NetId c2 = fresh(carry + "_b");
            out.gates.push_back({GateKind::Xor, 2, {g.in[0], g.in[1], kNoNet}, t, kNoNet});
            out.gates.push_back({GateKind::Xor, 2, {t, g.in[2], kNoNet}, g.out, kNoNet});
            out.gates.push_back({GateKind::And, 2, {g.in[0], g.in[1], kNoNet}, c1, kNoNet});
            out.gates.push_back({GateKind::And, 2, {t, g.in[2], kNoNet}, c2, kNoNet});
            out.gates.push_back({GateKind::Or, 2, {c1, c2, kNoNet}, g.carry, kNoNet});
            break;
        }
        default:
            out.gates.push_back(g);
            break;
        }
    }
    return out;
}

int depth(const Netlist& nl)
{
    std::vector<int> level(nl.net_count(), 0);
    for (const auto& g : nl.gates) {
        int in_level = 0;
        for (int i = 0; i < g.nin; ++i)
            in_level = std::max(in_level, level[g.in[i]]);
        level[g.out] = in_level + 1;
        if (g.carry != kNoNet)
            level[g.carry] = in_level + 1;
    }
    int d = 0;
    for (NetId id : nl.outputs)
        d = std::max(d, level[id]);
    return d;
}

EmitFormat parse_emit_format(const std::string& s)
{
    if (s == "structural-hdl")
        return EmitFormat::StructuralHdl;
    if (s == "gate-list")
        return EmitFormat::GateList;
    throw std::invalid_argument("unknown emit format: " + s);
}

namespace {

std::string header_line(const Netlist& nl, const char* comment)
{
    return std::string(comment) + " scheme=" + to_string(nl.scheme) + " n=" + std::to_string(nl.n) +
           " reducer=" + to_string(nl.reducer) + " expanded=" + (nl.expanded ? "1" : "0") + "\n";
}

std::string emit_gate_list(const Netlist& nl)
{
    std::string out = header_line(nl, "#");
    for (NetId id : nl.inputs)
        out += "input " + nl.net_names[id] + "\n";
    if (nl.const_one)
        out += "const1 " + nl.net_names[*nl.const_one] + "\n";
    if (nl.const_zero)
        out += "const0 " + nl.net_names[*nl.const_zero] + "\n";
    for (const auto& g : nl.gates) {
        out += to_string(g.kind);
        out += ' ';
        out += nl.net_names[g.out];
        if (g.carry != kNoNet) {
            out += ' ';
            out += nl.net_names[g.carry];
        }
        for (int i = 0; i < g.nin; ++i) {
            out += ' ';
            out += nl.net_names[g.in[i]];
        }
        out += '\n';
    }
    for (NetId id : nl.outputs)
        out += "output " + nl.net_names[id] + "\n";
    return out;
}

std::string emit_structural(const Netlist& nl)
{
    std::string out = header_line(nl, "//");
    std::string module = "bwmul_" + std::string(to_string(nl.scheme)) + "_n" + std::to_string(nl.n);

    out += "module " + module + " (";
    bool first = true;
    for (NetId id : nl.inputs) {
        out += (first ? "" : ", ") + nl.net_names[id];
        first = false;
    }
    for (NetId id : nl.outputs)
        out += ", " + nl.net_names[id];
    out += ");\n";
    for (NetId id : nl.inputs)
        out += "  input " + nl.net_names[id] + ";\n";
    for (NetId id : nl.outputs)
        out += "  output " + nl.net_names[id] + ";\n";
    if (nl.const_one)
        out += "  supply1 " + nl.net_names[*nl.const_one] + ";\n";
    if (nl.const_zero)
        out += "  supply0 " + nl.net_names[*nl.const_zero] + ";\n";

    std::vector<std::uint8_t> is_port(nl.net_count(), 0);
    for (NetId id : nl.inputs)
        is_port[id] = 1;
    for (NetId id : nl.outputs)
        is_port[id] = 1;
    if (nl.const_one)
        is_port[*nl.const_one] = 1;
    if (nl.const_zero)
        is_port[*nl.const_zero] = 1;
    for (NetId id = 0; id < nl.net_count(); ++id)
        if (!is_port[id])
            out += "  wire " + nl.net_names[id] + ";\n";

    bool use_ha = false, use_fa = false;
    std::size_t gi = 0;
    for (const auto& g : nl.gates) {
        std::string line = "  ";
        switch (g.kind) {
        case GateKind::And: line += "and"; break;
        case GateKind::Nand: line += "nand"; break;
        case GateKind::Or: line += "or"; break;
        case GateKind::Xor: line += "xor"; break;
        case GateKind::Not: line += "not"; break;
        case GateKind::Ha:
            line += "bwmul_ha";
            use_ha = true;
            break;
        case GateKind::Fa:
            line += "bwmul_fa";
            use_fa = true;
            break;
        }
        line += " g" + std::to_string(gi++) + " (" + nl.net_names[g.out];
        if (g.carry != kNoNet)
            line += ", " + nl.net_names[g.carry];
        for (int i = 0; i < g.nin; ++i)
            line += ", " + nl.net_names[g.in[i]];
        line += ");\n";
        out += line;
    }
    out += "endmodule\n";

    if (use_ha) {
        out += "\nmodule bwmul_ha (s, co, x, y);\n"
               "  input x;\n  input y;\n  output s;\n  output co;\n"
               "  xor (s, x, y);\n  and (co, x, y);\n"
               "endmodule\n";
    }
    if (use_fa) {
        out += "\nmodule bwmul_fa (s, co, x, y, z);\n"
               "  input x;\n  input y;\n  input z;\n  output s;\n  output co;\n"
               "  wire t;\n  wire c1;\n  wire c2;\n"
               "  xor (t, x, y);\n  xor (s, t, z);\n"
               "  and (c1, x, y);\n  and (c2, t, z);\n  or (co, c1, c2);\n"
               "endmodule\n";
    }
    return out;
}

void parse_header_fields(const std::string& line, Netlist& nl)
{
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            continue;
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "n")
            nl.n = std::stoi(val);
        else if (key == "reducer")
            nl.reducer = parse_reducer(val);
        else if (key == "expanded")
            nl.expanded = (val == "1");
        else if (key == "scheme") {
            if (val == "unified")
                nl.scheme = Scheme::Unified;
            else
                nl.scheme = static_cast<Scheme>(static_cast<int>(parse_mode(val)));
        }
    }
}

GateKind parse_kind(const std::string& s, bool* found)
{
    *found = true;
    if (s == "AND" || s == "and") return GateKind::And;
    if (s == "NAND" || s == "nand") return GateKind::Nand;
    if (s == "OR" || s == "or") return GateKind::Or;
    if (s == "XOR" || s == "xor") return GateKind::Xor;
    if (s == "NOT" || s == "not") return GateKind::Not;
    if (s == "HA" || s == "bwmul_ha") return GateKind::Ha;
    if (s == "FA" || s == "bwmul_fa") return GateKind::Fa;
    *found = false;
    return GateKind::And;
}

} // namespace

std::string emit(const Netlist& nl, EmitFormat format)
{
    return format == EmitFormat::GateList ? emit_gate_list(nl) : emit_structural(nl);
}

Netlist parse_gate_list(const std::string& text)
{
    Netlist nl;
    std::unordered_map<std::string, NetId> index;
    auto net = [&](const std::string& name) {
        auto [it, inserted] = index.emplace(name, static_cast<NetId>(nl.net_names.size()));
        if (inserted)
            nl.net_names.push_back(name);
        return it->second;
    };

    std::istringstream ss(text);
    std::string line;
    bool first = true;
    while (std::getline(ss, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            if (first)
                parse_header_fields(line, nl);
            first = false;
            continue;
        }
        first = false;
        std::istringstream ls(line);
        std::string kindtok;
        ls >> kindtok;
        std::vector<std::string> args;
        std::string tok;
        while (ls >> tok)
            args.push_back(tok);

        if (kindtok == "input") {
            nl.inputs.push_back(net(args.at(0)));
            continue;
        }
        if (kindtok == "output") {
            auto it = index.find(args.at(0));
            if (it == index.end())
                throw std::invalid_argument("output references unknown net: " + args.at(0));
            nl.outputs.push_back(it->second);
            continue;
        }
        if (kindtok == "const1") {
            nl.const_one = net(args.at(0));
            continue;
        }
        if (kindtok == "const0") {
            nl.const_zero = net(args.at(0));
            continue;
        }
        bool found = false;
        GateKind kind = parse_kind(kindtok, &found);
        if (!found)
            throw std::invalid_argument("unknown gate-list line: " + line);
        Gate g{kind, 0, {kNoNet, kNoNet, kNoNet}, kNoNet, kNoNet};
        std::size_t at = 0;
        g.out = net(args.at(at++));
        if (kind == GateKind::Ha || kind == GateKind::Fa)
            g.carry = net(args.at(at++));
        std::size_t nin_expect = (kind == GateKind::Not) ? 1 : (kind == GateKind::Fa) ? 3 : 2;
        if (args.size() - at != nin_expect)
            throw std::invalid_argument("bad operand count: " + line);
        for (std::size_t i = 0; i < nin_expect; ++i)
            g.in[i] = net(args.at(at++));
        g.nin = static_cast<std::uint8_t>(nin_expect);
        nl.gates.push_back(g);
    }
    if (nl.n == 0)
        nl.n = static_cast<int>(nl.outputs.size()) / 2;
    return nl;
}

Netlist parse_structural(const std::string& text)
{
    Netlist nl;
    std::unordered_map<std::string, NetId> index;
    auto net = [&](const std::string& name) {
        auto [it, inserted] = index.emplace(name, static_cast<NetId>(nl.net_names.size()));
        if (inserted)
            nl.net_names.push_back(name);
        return it->second;
    };

    std::istringstream ss(text);
    std::string line;
    bool in_top = false;
    bool top_done = false;
    bool first = true;
    while (std::getline(ss, line) && !top_done) {
        // tokenize, treating punctuation as whitespace
        std::string clean;
        for (char c : line)
            clean += (c == '(' || c == ')' || c == ',' || c == ';') ? ' ' : c;
        std::istringstream ls(clean);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t)
            tok.push_back(t);
        if (tok.empty())
            continue;
        if (tok[0] == "//") {
            if (first)
                parse_header_fields(line, nl);
            first = false;
            continue;
        }
        first = false;
        if (tok[0] == "module") {
            in_top = true;
            continue;
        }
        if (!in_top)
            continue;
        if (tok[0] == "endmodule") {
            top_done = true;
            continue;
        }
        if (tok[0] == "input") {
            nl.inputs.push_back(net(tok.at(1)));
            continue;
        }
        if (tok[0] == "output") {
            nl.outputs.push_back(net(tok.at(1)));
            continue;
        }
        if (tok[0] == "wire")
            continue;
        if (tok[0] == "supply1") {
            nl.const_one = net(tok.at(1));
            continue;
        }
        if (tok[0] == "supply0") {
            nl.const_zero = net(tok.at(1));
            continue;
        }
        bool found = false;
        GateKind kind = parse_kind(tok[0], &found);
        if (!found)
            throw std::invalid_argument("unknown structural line: " + line);
        // tok[1] is the instance name; nets follow
        std::size_t at = 2;
        Gate g{kind, 0, {kNoNet, kNoNet, kNoNet}, kNoNet, kNoNet};
        g.out = net(tok.at(at++));
        if (kind == GateKind::Ha || kind == GateKind::Fa)
            g.carry = net(tok.at(at++));
        std::size_t nin_expect = (kind == GateKind::Not) ? 1 : (kind == GateKind::Fa) ? 3 : 2;
        if (tok.size() - at != nin_expect)
            throw std::invalid_argument("bad structural operand count: " + line);
        for (std::size_t i = 0; i < nin_expect; ++i)
            g.in[i] = net(tok.at(at++));
        g.nin = static_cast<std::uint8_t>(nin_expect);
        nl.gates.push_back(g);
    }
    if (nl.n == 0)
        nl.n = static_cast<int>(nl.outputs.size()) / 2;
    return nl;
}

} // namespace bwmul
