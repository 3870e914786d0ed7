#include "liftedcodes/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

#include "liftedcodes/lifted.hpp"

namespace liftedcodes {

CosetGraph CosetGraph::build(const LinearCode& code, const Caps& caps) {
    SyndromeSpace space(code, caps);
    const std::uint64_t v = space.size();
    const unsigned deg = space.neighbor_count();
    if (v > caps.coset_steps / std::max(1u, deg)) {
        throw CapExceeded("coset graph",
                          std::to_string(v) + "*" + std::to_string(deg) + " adjacency entries",
                          caps.coset_steps);
    }
    if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw CapExceeded("coset graph", std::to_string(v) + " vertices",
                          std::numeric_limits<std::uint32_t>::max());
    }

    // Simplicity needs the single-error offsets pairwise distinct and nonzero,
    // which is exactly pairwise independence of the parity columns.
    std::set<std::vector<elem_t>> distinct;
    for (unsigned t = 0; t < deg; ++t) {
        const auto off = space.offset(t);
        if (std::all_of(off.begin(), off.end(), [](elem_t x) { return x == 0; })) {
            throw std::invalid_argument("coset graph needs nonzero parity columns");
        }
        distinct.emplace(off.begin(), off.end());
    }
    if (distinct.size() != deg) {
        throw std::invalid_argument(
            "coset graph needs pairwise independent parity columns (minimum distance >= 3)");
    }

    CosetGraph g;
    g.vertices_ = v;
    g.degree_ = deg;
    g.adjacency_.resize(v * deg);
    for (std::uint64_t s = 0; s < v; ++s) {
        for (unsigned t = 0; t < deg; ++t) {
            g.adjacency_[s * deg + t] = static_cast<std::uint32_t>(space.neighbor(s, t));
        }
    }
    return g;
}

DrgCheck verify_distance_regular(const CosetGraph& graph, const Caps& caps) {
    const std::uint64_t v = graph.vertex_count();
    if (v > caps.coset_steps / std::max<std::uint64_t>(1, v)) {
        throw CapExceeded("distance-regularity check",
                          std::to_string(v) + "^2 vertex pairs", caps.coset_steps);
    }

    constexpr std::uint16_t kUnset = std::numeric_limits<std::uint16_t>::max();
    std::vector<std::uint16_t> dist(v);
    unsigned diameter = 0;
    std::vector<unsigned> exp_down, exp_up;
    std::vector<bool> seen;
    DrgCheck check;

    for (std::uint64_t root = 0; root < v; ++root) {
        std::fill(dist.begin(), dist.end(), kUnset);
        dist[root] = 0;
        std::deque<std::uint64_t> queue{root};
        while (!queue.empty()) {
            const std::uint64_t u = queue.front();
            queue.pop_front();
            for (std::uint32_t w : graph.neighbors(u)) {
                if (dist[w] == kUnset) {
                    dist[w] = static_cast<std::uint16_t>(dist[u] + 1);
                    queue.push_back(w);
                }
            }
        }
        for (std::uint64_t w = 0; w < v; ++w) {
            if (dist[w] == kUnset) {
                check.distance_regular = false;
                check.witness = DrgWitness{root, w, 0, 0, 0, 0, 0};
                return check;
            }
            const unsigned d = dist[w];
            if (d >= seen.size()) {
                seen.resize(d + 1, false);
                exp_down.resize(d + 1, 0);
                exp_up.resize(d + 1, 0);
            }
            diameter = std::max(diameter, d);
            unsigned down = 0;
            unsigned up = 0;
            for (std::uint32_t nb : graph.neighbors(w)) {
                down += (static_cast<unsigned>(dist[nb]) + 1 == d);
                up += (dist[nb] == d + 1);
            }
            if (!seen[d]) {
                seen[d] = true;
                exp_down[d] = down;
                exp_up[d] = up;
            } else if (down != exp_down[d] || up != exp_up[d]) {
                check.distance_regular = false;
                check.witness = DrgWitness{root, w, d, down, up, exp_down[d], exp_up[d]};
                return check;
            }
        }
    }

    check.distance_regular = true;
    check.params.vertices = v;
    check.params.diameter = diameter;
    for (unsigned d = 0; d < diameter; ++d) check.params.b.emplace_back(exp_up[d]);
    for (unsigned d = 1; d <= diameter; ++d) check.params.c.emplace_back(exp_down[d]);
    return check;
}

DrgParams classical_params(std::uint64_t q, unsigned r, unsigned m) {
    const auto arr = closed_form_array(q, m, r);
    DrgParams p;
    p.vertices = boost::multiprecision::pow(BigInt(q), r * m);
    p.diameter = arr.rho;
    p.b = arr.b;
    p.c = arr.c;
    return p;
}

std::string export_dot(const CosetGraph& graph) {
    std::ostringstream os;
    os << "graph cosets {\n";
    for (std::uint64_t v = 0; v < graph.vertex_count(); ++v) {
        os << "  s" << v << ";\n";
    }
    for (std::uint64_t v = 0; v < graph.vertex_count(); ++v) {
        for (std::uint32_t w : graph.neighbors(v)) {
            if (v < w) os << "  s" << v << " -- s" << w << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string export_json(const CosetGraph& graph) {
    std::ostringstream os;
    os << "{\"vertices\":" << graph.vertex_count() << ",\"degree\":" << graph.degree()
       << ",\"edge_count\":" << graph.edge_count() << ",\"edges\":[";
    bool first = true;
    for (std::uint64_t v = 0; v < graph.vertex_count(); ++v) {
        for (std::uint32_t w : graph.neighbors(v)) {
            if (v >= w) continue;
            if (!first) os << ",";
            first = false;
            os << "[" << v << "," << w << "]";
        }
    }
    os << "]}";
    return os.str();
}

std::string export_graph(const CosetGraph& graph, const std::string& format) {
    if (format == "dot") return export_dot(graph);
    if (format == "json") return export_json(graph);
    throw std::invalid_argument("unsupported graph format \"" + format +
                                "\" (expected dot or json)");
}

}  // namespace liftedcodes
