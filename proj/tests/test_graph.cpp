#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "liftedcodes/graph.hpp"
#include "liftedcodes/lifted.hpp"

using namespace liftedcodes;

namespace {

CosetGraph graph_of(std::uint64_t q, unsigned m, unsigned r) {
    return CosetGraph::build(LiftedCode::make(make_ground_field(q), m, r).code());
}

std::vector<unsigned> bfs_from_zero(const CosetGraph& g) {
    std::vector<unsigned> dist(g.vertex_count(), ~0u);
    dist[0] = 0;
    std::vector<std::uint64_t> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::uint32_t w : g.neighbors(queue[head])) {
            if (dist[w] == ~0u) {
                dist[w] = dist[queue[head]] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("the perfect code's coset graph is complete") {
    const CosetGraph g = graph_of(2, 3, 1);
    CHECK(g.vertex_count() == 8);
    CHECK(g.degree() == 7);
    CHECK(g.edge_count() == 28);
    const DrgCheck drg = verify_distance_regular(g);
    REQUIRE(drg.distance_regular);
    CHECK(drg.params.diameter == 1);
    CHECK(drg.params.b == std::vector<BigInt>{7});
    CHECK(drg.params.c == std::vector<BigInt>{1});
}

TEST_CASE("coset graph of the (2,3,2) lift") {
    const CosetGraph g = graph_of(2, 3, 2);
    CHECK(g.vertex_count() == 64);  // q^{rm}
    CHECK(g.degree() == 21);
    CHECK(g.edge_count() == 672);

    const DrgCheck drg = verify_distance_regular(g);
    REQUIRE(drg.distance_regular);
    CHECK(drg.params == classical_params(2, 2, 3));
    CHECK(drg.params.diameter == 2);
    CHECK(drg.params.b == std::vector<BigInt>{21, 12});
    CHECK(drg.params.c == std::vector<BigInt>{1, 6});
}

TEST_CASE("degree of the (2,2,4) graph matches the first intersection number") {
    const CosetGraph g = graph_of(2, 2, 4);
    CHECK(g.vertex_count() == 256);
    CHECK(g.degree() == 45);
}

TEST_CASE("graph distances reproduce coset distances") {
    const LiftedCode lift = LiftedCode::make(Field::prime(2), 3, 2);
    const CosetGraph g = CosetGraph::build(lift.code());
    const CosetTable table = CosetTable::build(lift.code(), false);
    const auto dist = bfs_from_zero(g);
    unsigned diameter = 0;
    for (std::uint64_t s = 0; s < g.vertex_count(); ++s) {
        CHECK(dist[s] == table.distance(s));
        diameter = std::max(diameter, dist[s]);
    }
    CHECK(diameter == covering_radius(lift.code()));
}

TEST_CASE("non-regular codes yield a witness") {
    const MatQ h7 = hamming_parity_matrix(Field::prime(2), 3);
    MatQ h6(h7.field(), 3, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 6; ++j) h6.set(i, j, h7(i, j));
    }
    const LinearCode lifted = lift_parity(h6, 2);
    const CosetGraph g = CosetGraph::build(lifted);
    const DrgCheck drg = verify_distance_regular(g);
    CHECK_FALSE(drg.distance_regular);
    REQUIRE(drg.witness.has_value());
    CHECK((drg.witness->down != drg.witness->expected_down ||
           drg.witness->up != drg.witness->expected_up));
}

TEST_CASE("classical parameters") {
    const DrgParams p = classical_params(2, 4, 2);
    CHECK(p.vertices == 256);
    CHECK(p.diameter == 2);
    CHECK(p.b == std::vector<BigInt>{45, 28});
    CHECK(p.c == std::vector<BigInt>{1, 6});

    const DrgParams collapse = classical_params(2, 1, 3);
    CHECK(collapse.vertices == 8);
    CHECK(collapse.diameter == 1);
}

TEST_CASE("graph construction rejects dependent columns") {
    auto f2 = Field::prime(2);
    const MatQ dup(f2, 2, 3, {1, 0, 1, 0, 1, 0});  // first and last columns equal
    CHECK_THROWS_AS(CosetGraph::build(LinearCode(dup)), std::invalid_argument);
}

TEST_CASE("exports") {
    const CosetGraph k8 = graph_of(2, 3, 1);
    SUBCASE("dot lists every vertex and each edge once") {
        const std::string dot = export_dot(k8);
        CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 8 + 28);
        CHECK(dot.find("s0 -- s1;") != std::string::npos);
        CHECK(dot == export_dot(k8));  // deterministic
    }
    SUBCASE("json round-trips through a parser") {
        const auto j = nlohmann::json::parse(export_json(k8));
        CHECK(j["vertices"] == 8);
        CHECK(j["degree"] == 7);
        CHECK(j["edge_count"] == 28);
        CHECK(j["edges"].size() == 28);
    }
    SUBCASE("json edge count for the (2,3,2) graph") {
        const auto j = nlohmann::json::parse(export_json(graph_of(2, 3, 2)));
        CHECK(j["vertices"] == 64);
        CHECK(j["edges"].size() == 672);
    }
    SUBCASE("format dispatch") {
        CHECK(export_graph(k8, "dot") == export_dot(k8));
        CHECK(export_graph(k8, "json") == export_json(k8));
        CHECK_THROWS_AS(export_graph(k8, "xml"), std::invalid_argument);
        CHECK_THROWS_AS(export_graph(k8, ""), std::invalid_argument);
    }
}

TEST_CASE("caps") {
    Caps caps;
    caps.coset_steps = 5;
    CHECK_THROWS_AS(CosetGraph::build(LiftedCode::make(Field::prime(2), 3, 2).code(), caps),
                    CapExceeded);
}
