#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bwmul/metrics.hpp"
#include "bwmul/netlist.hpp"

using namespace bwmul;

TEST_CASE("costs are deterministic and positive")
{
    GateCostModel model;
    double c1 = cost_of(Scheme::Unsigned, Width(4), ReducerKind::Ripple, model);
    double c2 = cost_of(Scheme::Unsigned, Width(4), ReducerKind::Ripple, model);
    CHECK(c1 == c2);
    CHECK(c1 > 0);
    AreaReport r1 = compare(Width(8), ReducerKind::Wallace, model);
    AreaReport r2 = compare(Width(8), ReducerKind::Wallace, model);
    CHECK(r1.unified_cost == r2.unified_cost);
    CHECK(r1.ratio == r2.ratio);
    CHECK(r1.depth_unified == r2.depth_unified);
}

TEST_CASE("the unified array costs more than a single dedicated one")
{
    GateCostModel model;
    for (int n : {2, 4, 8, 16, 32})
        for (ReducerKind kind : {ReducerKind::Ripple, ReducerKind::Wallace, ReducerKind::Dadda})
            CHECK(cost_of(Scheme::Unified, Width(n), kind, model) >
                  cost_of(Scheme::Unsigned, Width(n), kind, model));
}

TEST_CASE("cost grows strictly with width")
{
    GateCostModel model;
    for (Scheme scheme : {Scheme::Unsigned, Scheme::Signed, Scheme::Mixed, Scheme::Unified}) {
        double prev = 0;
        for (int n : {2, 4, 8, 16, 32}) {
            double c = cost_of(scheme, Width(n), ReducerKind::Wallace, model);
            CHECK(c > prev);
            prev = c;
        }
    }
}

TEST_CASE("cost equals the netlist gate population, priced")
{
    GateCostModel model;
    Netlist nl = build_netlist(Scheme::Unified, Width(8), ReducerKind::Dadda);
    auto h = nl.kind_histogram();
    double by_hand = h[static_cast<std::size_t>(GateKind::And)] * model.and2 +
                     h[static_cast<std::size_t>(GateKind::Nand)] * model.nand2 +
                     h[static_cast<std::size_t>(GateKind::Or)] * model.or2 +
                     h[static_cast<std::size_t>(GateKind::Xor)] * model.xor2 +
                     h[static_cast<std::size_t>(GateKind::Not)] * model.not1 +
                     h[static_cast<std::size_t>(GateKind::Ha)] * model.halfadder +
                     h[static_cast<std::size_t>(GateKind::Fa)] * model.fulladder;
    CHECK(cost_of(Scheme::Unified, Width(8), ReducerKind::Dadda, model) == by_hand);
}

TEST_CASE("three dedicated multipliers cost about three unified ones at n=32")
{
    AreaReport r = compare(Width(32), ReducerKind::Wallace, GateCostModel{});
    CHECK(r.ratio >= 2.5);
    CHECK(r.ratio <= 3.5);
}

TEST_CASE("ratio is stable between n=8 and n=32")
{
    GateCostModel model;
    double r8 = compare(Width(8), ReducerKind::Wallace, model).ratio;
    double r32 = compare(Width(32), ReducerKind::Wallace, model).ratio;
    CHECK(std::abs(r8 - r32) / r8 < 0.20);
}

TEST_CASE("degenerate n=2 report is well formed")
{
    AreaReport r = compare(Width(2), ReducerKind::Wallace, GateCostModel{});
    CHECK(r.unified_cost > 0);
    CHECK(r.unsigned_cost > 0);
    CHECK(r.signed_cost > 0);
    CHECK(r.mixed_cost > 0);
    CHECK(r.ratio > 1.0);
    CHECK(r.depth_unified > 0);
}

TEST_CASE("cost model text parsing")
{
    GateCostModel m = GateCostModel::from_text("xor2=1\n# comment\nnot1 = 0.25\n");
    CHECK(m.xor2 == 1.0);
    CHECK(m.not1 == 0.25);
    CHECK(m.and2 == 1.0); // untouched default

    CHECK_THROWS_AS(GateCostModel::from_text("bogus=1\n"), std::invalid_argument);
    CHECK_THROWS_AS(GateCostModel::from_text("xor2=zero\n"), std::invalid_argument);
    CHECK_THROWS_AS(GateCostModel::from_text("xor2=-1\n"), std::invalid_argument);
    CHECK_THROWS_AS(GateCostModel::from_text("and2\n"), std::invalid_argument);
}

TEST_CASE("cheap xor shrinks but does not erase the saving")
{
    GateCostModel cheap_xor = GateCostModel::from_text("xor2=1\n");
    AreaReport def = compare(Width(32), ReducerKind::Wallace, GateCostModel{});
    AreaReport alt = compare(Width(32), ReducerKind::Wallace, cheap_xor);
    CHECK(alt.ratio != def.ratio);
    CHECK(alt.ratio > 2.0);
}

TEST_CASE("report text and json carry the proxy caveat and the ratio")
{
    AreaReport r = compare(Width(8), ReducerKind::Ripple, GateCostModel{});
    std::string text = r.to_text();
    CHECK(text.find("area proxy only") != std::string::npos);
    CHECK(text.find("ratio=") != std::string::npos);
    CHECK(text.find("reducer=ripple") != std::string::npos);
    std::string json = r.to_json();
    CHECK(json.find("\"ratio\"") != std::string::npos);
    CHECK(json.find("\"width\": 8") != std::string::npos);
}
