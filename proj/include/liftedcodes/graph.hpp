#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liftedcodes/code.hpp"

namespace liftedcodes {

/// Coset graph of a linear code: vertices are syndromes in canonical
/// encoding order, s ~ s' when s' - s is the syndrome of a weight-one word.
/// Requires pairwise independent parity columns (minimum distance >= 3), so
/// the graph is simple and regular of degree (Q-1) n.
class CosetGraph {
public:
    static CosetGraph build(const LinearCode& code, const Caps& caps = {});

    std::uint64_t vertex_count() const { return vertices_; }
    unsigned degree() const { return degree_; }
    std::uint64_t edge_count() const { return vertices_ * degree_ / 2; }
    std::span<const std::uint32_t> neighbors(std::uint64_t v) const {
        return {adjacency_.data() + v * degree_, degree_};
    }

private:
    std::uint64_t vertices_ = 0;
    unsigned degree_ = 0;
    std::vector<std::uint32_t> adjacency_;
};

struct DrgParams {
    BigInt vertices;
    unsigned diameter = 0;
    std::vector<BigInt> b;  // b_0..b_{diameter-1}
    std::vector<BigInt> c;  // c_1..c_diameter

    bool operator==(const DrgParams&) const = default;
};

/// A pair of vertices breaking distance-regularity: at distance `dist` from
/// `root`, vertex `vertex` sees (down, up) neighbors instead of the counts
/// established by the first pair at that distance.
struct DrgWitness {
    std::uint64_t root = 0;
    std::uint64_t vertex = 0;
    unsigned dist = 0;
    unsigned down = 0, up = 0;
    unsigned expected_down = 0, expected_up = 0;
};

struct DrgCheck {
    bool distance_regular = false;
    DrgParams params;  // meaningful only when distance_regular
    std::optional<DrgWitness> witness;
};

/// All-sources BFS check that the neighbor counts one layer down and one
/// layer up are constant over every vertex pair at each distance.
DrgCheck verify_distance_regular(const CosetGraph& graph, const Caps& caps = {});

/// Expected parameters of the coset graph of the (q, m, r) lift: q^{rm}
/// vertices, diameter min(r, m), and the closed-form b/c lists.
DrgParams classical_params(std::uint64_t q, unsigned r, unsigned m);

std::string export_dot(const CosetGraph& graph);
std::string export_json(const CosetGraph& graph);
/// Dispatch on "dot" or "json"; anything else throws std::invalid_argument.
std::string export_graph(const CosetGraph& graph, const std::string& format);

}  // namespace liftedcodes
