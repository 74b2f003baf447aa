#include "bwmul/metrics.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bwmul/netlist.hpp"

namespace bwmul {

void GateCostModel::validate() const
{
    for (double v : {and2, nand2, or2, xor2, not1, halfadder, fulladder})
        if (!(v > 0.0))
            throw std::invalid_argument("gate costs must be positive");
}

GateCostModel GateCostModel::from_text(const std::string& text)
{
    GateCostModel model;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                trimmed += c;
        if (trimmed.empty())
            continue;
        auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("cost model lines must be key=value: " + line);
        std::string key = trimmed.substr(0, eq);
        double value = 0;
        try {
            std::size_t used = 0;
            value = std::stod(trimmed.substr(eq + 1), &used);
            if (used != trimmed.size() - eq - 1)
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad cost value in: " + line);
        }
        if (key == "and2") model.and2 = value;
        else if (key == "nand2") model.nand2 = value;
        else if (key == "or2") model.or2 = value;
        else if (key == "xor2") model.xor2 = value;
        else if (key == "not1") model.not1 = value;
        else if (key == "halfadder") model.halfadder = value;
        else if (key == "fulladder") model.fulladder = value;
        else throw std::invalid_argument("unknown cost key: " + key);
    }
    model.validate();
    return model;
}

GateCostModel GateCostModel::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open cost model file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

std::string GateCostModel::to_text() const
{
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "and2=%g\nnand2=%g\nor2=%g\nxor2=%g\nnot1=%g\nhalfadder=%g\nfulladder=%g\n",
                  and2, nand2, or2, xor2, not1, halfadder, fulladder);
    return buf;
}

double cost_of(Scheme scheme, Width n, ReducerKind reducer, const GateCostModel& model)
{
    model.validate();
    Netlist nl = build_netlist(scheme, n, reducer);
    std::vector<int> hist = nl.kind_histogram();
    auto count = [&](GateKind k) { return hist[static_cast<std::size_t>(k)]; };
    return count(GateKind::And) * model.and2 + count(GateKind::Nand) * model.nand2 +
           count(GateKind::Or) * model.or2 + count(GateKind::Xor) * model.xor2 +
           count(GateKind::Not) * model.not1 + count(GateKind::Ha) * model.halfadder +
           count(GateKind::Fa) * model.fulladder;
}

AreaReport compare(Width n, ReducerKind reducer, const GateCostModel& model)
{
    AreaReport r;
    r.n = n.n();
    r.reducer = reducer;
    r.unified_cost = cost_of(Scheme::Unified, n, reducer, model);
    r.unsigned_cost = cost_of(Scheme::Unsigned, n, reducer, model);
    r.signed_cost = cost_of(Scheme::Signed, n, reducer, model);
    r.mixed_cost = cost_of(Scheme::Mixed, n, reducer, model);
    r.ratio = (r.unsigned_cost + r.signed_cost + r.mixed_cost) / r.unified_cost;
    r.depth_unified = depth(expand(build_netlist(Scheme::Unified, n, reducer)));
    return r;
}

std::string AreaReport::to_text() const
{
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "width=%d\n"
                  "reducer=%s\n"
                  "note=gate-equivalent area proxy only; power is not modeled\n"
                  "unified_cost=%.1f\n"
                  "unsigned_cost=%.1f\n"
                  "signed_cost=%.1f\n"
                  "mixed_cost=%.1f\n"
                  "dedicated_total=%.1f\n"
                  "ratio=%.3f\n"
                  "depth_unified=%d\n",
                  n, to_string(reducer), unified_cost, unsigned_cost, signed_cost, mixed_cost,
                  unsigned_cost + signed_cost + mixed_cost, ratio, depth_unified);
    return buf;
}

std::string AreaReport::to_json() const
{
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "{\n"
                  "  \"width\": %d,\n"
                  "  \"reducer\": \"%s\",\n"
                  "  \"note\": \"gate-equivalent area proxy only; power is not modeled\",\n"
                  "  \"unified_cost\": %.1f,\n"
                  "  \"unsigned_cost\": %.1f,\n"
                  "  \"signed_cost\": %.1f,\n"
                  "  \"mixed_cost\": %.1f,\n"
                  "  \"dedicated_total\": %.1f,\n"
                  "  \"ratio\": %.3f,\n"
                  "  \"depth_unified\": %d\n"
                  "}\n",
                  n, to_string(reducer), unified_cost, unsigned_cost, signed_cost, mixed_cost,
                  unsigned_cost + signed_cost + mixed_cost, ratio, depth_unified);
    return buf;
}

} // namespace bwmul
