#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cpw/graph.hpp"

namespace testing {

using cpw::Edge;
using cpw::Graph;
using cpw::VertexSet;

// edges given as (src, dst) pairs; ids e1, e2, ...
inline Graph make_graph(std::vector<std::string> vertices,
                        std::vector<std::pair<std::string, std::string>> arcs) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        edges.push_back({"e" + std::to_string(i + 1), arcs[i].first, arcs[i].second});
    return Graph(std::move(vertices), std::move(edges));
}

inline Graph loop_graph() {
    return Graph({"v"}, {{"e", "v", "v"}});
}

inline Graph rose2_graph() {
    return Graph({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}});
}

inline Graph line3_graph() {
    return Graph({"v1", "v2", "v3"},
                 {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}});
}

inline Graph fork_graph() {
    return Graph({"v", "w", "u"}, {{"a", "v", "w"}, {"b", "v", "u"}});
}

inline Graph vw_graph() {
    return Graph({"v", "w"}, {{"e", "v", "w"}});
}

inline Graph loop_tail_graph() {
    return Graph({"v", "w"}, {{"e", "v", "v"}, {"g", "v", "w"}});
}

// All multigraphs with <= max_v labeled vertices and <= max_e edges, where
// the edge multiset over ordered vertex pairs is enumerated non-decreasingly
// (parallel edges allowed, labels e1..ek in that canonical order).
inline void for_each_census_graph(std::size_t max_v, std::size_t max_e,
                                  const std::function<void(const Graph&)>& fn) {
    for (std::size_t n = 0; n <= max_v; ++n) {
        std::vector<std::string> vertices;
        for (std::size_t i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) pairs.emplace_back(a, b);

        std::vector<std::size_t> chosen;
        std::function<void(std::size_t)> rec = [&](std::size_t from) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < chosen.size(); ++i)
                edges.push_back({"e" + std::to_string(i + 1),
                                 vertices[pairs[chosen[i]].first],
                                 vertices[pairs[chosen[i]].second]});
            fn(Graph(vertices, edges));
            if (chosen.size() == max_e) return;
            for (std::size_t p = from; p < pairs.size(); ++p) {
                chosen.push_back(p);
                rec(p);
                chosen.pop_back();
            }
        };
        if (n == 0) {
            fn(Graph({}, {}));
        } else {
            rec(0);
        }
    }
}

inline std::size_t census_size(std::size_t max_v, std::size_t max_e) {
    std::size_t count = 0;
    for_each_census_graph(max_v, max_e, [&](const Graph&) { ++count; });
    return count;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t max_v = 4,
                          std::size_t max_e = 6) {
    std::size_t n = 1 + rng() % max_v;
    std::vector<std::string> vertices;
    for (std::size_t i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
    std::size_t m = rng() % (max_e + 1);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= m; ++i)
        edges.push_back({"e" + std::to_string(i), vertices[rng() % n],
                         vertices[rng() % n]});
    return Graph(std::move(vertices), std::move(edges));
}

inline VertexSet random_subset(std::mt19937_64& rng, const std::vector<std::string>& pool) {
    VertexSet out;
    for (const auto& v : pool)
        if (rng() % 2) out.insert(v);
    return out;
}

inline VertexSet random_relation_set(std::mt19937_64& rng, const Graph& g) {
    VertexSet out;
    for (const auto& v : cpw::regular_vertex_set(g))
        if (rng() % 2) out.insert(v);
    return out;
}

// all admissible relation sets X subseteq Reg(g)
inline std::vector<VertexSet> all_relation_sets(const Graph& g) {
    std::vector<std::string> reg;
    for (const auto& v : cpw::regular_vertex_set(g)) reg.push_back(v);
    std::vector<VertexSet> out;
    const std::size_t total = std::size_t{1} << reg.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        VertexSet x;
        for (std::size_t i = 0; i < reg.size(); ++i)
            if (mask & (std::size_t{1} << i)) x.insert(reg[i]);
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace testing
