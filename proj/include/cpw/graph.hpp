#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cpw/errors.hpp"

namespace cpw {

struct Edge {
    std::string id;
    std::string src;
    std::string dst;
};

// A subset of a graph's vertices.
using VertexSet = std::set<std::string>;

// Finite directed multigraph.  Vertices and edges keep their declaration
// order; that order is the canonical order used for witnesses, special-edge
// choices and set enumeration throughout.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const std::string& v) const { return vertex_index_.count(v) != 0; }
    bool has_edge(const std::string& e) const { return edge_index_.count(e) != 0; }

    std::size_t vertex_index(const std::string& v) const;
    std::size_t edge_index(const std::string& e) const;
    const Edge& edge(const std::string& e) const { return edges_[edge_index(e)]; }

    // Outgoing edge indices in declaration order.
    const std::vector<std::size_t>& out_edges(const std::string& v) const;
    std::size_t out_degree(const std::string& v) const { return out_edges(v).size(); }
    bool is_sink(const std::string& v) const { return out_degree(v) == 0; }

    void require_vertex(const std::string& v) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, std::size_t> vertex_index_;
    std::map<std::string, std::size_t> edge_index_;
    std::vector<std::vector<std::size_t>> out_;
};

// Composable edge sequence; an empty sequence is the length-0 path at base.
struct Path {
    std::string base;
    std::vector<std::string> edges;

    std::size_t length() const { return edges.size(); }
    const std::string& source() const { return base; }
    std::string range(const Graph& g) const;

    friend bool operator==(const Path&, const Path&) = default;
};

struct ClosedPath {
    Path path;
    bool simple = false;
    bool has_exit = false;

    friend bool operator==(const ClosedPath&, const ClosedPath&) = default;
};

// Canonical-order comparisons (declaration order of identifiers).
bool path_less(const Graph& g, const Path& a, const Path& b);
bool vertex_set_less(const Graph& g, const VertexSet& a, const VertexSet& b);
std::vector<std::string> ordered_vertices(const Graph& g, const VertexSet& s);

bool is_valid_identifier(const std::string& id);

std::string range_of(const Graph& g, const std::vector<std::string>& edges,
                     const std::string& base);

// |vE^n|: number of paths of length n with source v.
std::uint64_t count_paths(const Graph& g, const std::string& v, std::size_t n);

// All paths of length n with source v, lexicographic in canonical edge order.
std::vector<Path> paths_from(const Graph& g, const std::string& v, std::size_t n);

// All paths (any length) ending at w; finite only on acyclic graphs.
std::vector<Path> paths_into(const Graph& g, const std::string& w, std::size_t cap);

bool has_closed_path(const Graph& g);

// Closed paths based at v whose sources are pairwise distinct, lexicographic
// in canonical edge order.  Distinct sources bound the length by |E^0|.
std::vector<ClosedPath> simple_closed_paths_at(const Graph& g, const std::string& v);

// One representative per cycle without exit, rotated to start at the
// canonically least vertex and sorted by that vertex.
std::vector<ClosedPath> cycles_without_exit(const Graph& g);

// Least superset of s closed under the hereditary and saturation rules.
VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& s);

// All hereditary saturated subsets, sorted by size then canonically.
// Throws CapacityError when the graph exceeds vertex_cap.
std::vector<VertexSet> enumerate_hereditary_saturated(const Graph& g,
                                                      std::size_t vertex_cap = 20);

bool is_hereditary_saturated(const Graph& g, const VertexSet& h);

// Vertices E^0 \ H with the edges whose range survives; requires H
// hereditary saturated.
Graph quotient_graph(const Graph& g, const VertexSet& h);

// Names of the sinks and duplicated edges introduced by augment_relative.
struct AugmentMap {
    std::map<std::string, std::string> vertex_prime; // v -> v'
    std::map<std::string, std::string> edge_prime;   // e -> e'
};

// Cohn-to-Leavitt reduction: attach a fresh sink v' to every regular vertex
// v outside x and duplicate the edges into v towards v'.
Graph augment_relative(const Graph& g, const VertexSet& x, AugmentMap* names = nullptr);

VertexSet regular_vertex_set(const Graph& g);

} // namespace cpw
