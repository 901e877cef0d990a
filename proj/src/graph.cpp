#include "cpw/graph.hpp"

#include <algorithm>
#include <functional>

namespace cpw {

bool is_valid_identifier(const std::string& id) {
    if (id.empty()) return false;
    for (unsigned char c : id) {
        if (c <= 0x20 || c >= 0x7f) return false;
        if (c == '*' || c == '(' || c == ')' || c == '+' || c == '-') return false;
    }
    return true;
}

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        if (!is_valid_identifier(v))
            throw IdentifierError("invalid vertex identifier '" + v + "'");
        if (!vertex_index_.emplace(v, i).second)
            throw IdentifierError("duplicate vertex identifier '" + v + "'");
    }
    out_.resize(vertices_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (!is_valid_identifier(e.id))
            throw IdentifierError("invalid edge identifier '" + e.id + "'");
        if (!edge_index_.emplace(e.id, i).second)
            throw IdentifierError("duplicate edge identifier '" + e.id + "'");
        auto s = vertex_index_.find(e.src);
        if (s == vertex_index_.end())
            throw IdentifierError("edge '" + e.id + "' has unknown source '" + e.src + "'");
        if (!vertex_index_.count(e.dst))
            throw IdentifierError("edge '" + e.id + "' has unknown range '" + e.dst + "'");
        out_[s->second].push_back(i);
    }
}

std::size_t Graph::vertex_index(const std::string& v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end())
        throw IdentifierError("unknown vertex '" + v + "'");
    return it->second;
}

std::size_t Graph::edge_index(const std::string& e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end())
        throw IdentifierError("unknown edge '" + e + "'");
    return it->second;
}

const std::vector<std::size_t>& Graph::out_edges(const std::string& v) const {
    return out_[vertex_index(v)];
}

void Graph::require_vertex(const std::string& v) const { (void)vertex_index(v); }

std::string Path::range(const Graph& g) const {
    return edges.empty() ? base : g.edge(edges.back()).dst;
}

std::string range_of(const Graph& g, const std::vector<std::string>& edges,
                     const std::string& base) {
    return edges.empty() ? base : g.edge(edges.back()).dst;
}

bool path_less(const Graph& g, const Path& a, const Path& b) {
    const std::size_t n = std::min(a.edges.size(), b.edges.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto ia = g.edge_index(a.edges[i]);
        auto ib = g.edge_index(b.edges[i]);
        if (ia != ib) return ia < ib;
    }
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return g.vertex_index(a.base) < g.vertex_index(b.base);
}

bool vertex_set_less(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    auto oa = ordered_vertices(g, a);
    auto ob = ordered_vertices(g, b);
    for (std::size_t i = 0; i < oa.size(); ++i) {
        auto ia = g.vertex_index(oa[i]);
        auto ib = g.vertex_index(ob[i]);
        if (ia != ib) return ia < ib;
    }
    return false;
}

std::vector<std::string> ordered_vertices(const Graph& g, const VertexSet& s) {
    std::vector<std::string> out(s.begin(), s.end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return g.vertex_index(a) < g.vertex_index(b);
    });
    return out;
}

std::uint64_t count_paths(const Graph& g, const std::string& v, std::size_t n) {
    g.require_vertex(v);
    std::vector<std::uint64_t> counts(g.vertices().size(), 1); // |wE^0| = 1
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<std::uint64_t> next(g.vertices().size(), 0);
        for (std::size_t w = 0; w < g.vertices().size(); ++w)
            for (auto ei : g.out_edges(g.vertices()[w]))
                next[w] += counts[g.vertex_index(g.edges()[ei].dst)];
        counts = std::move(next);
    }
    return counts[g.vertex_index(v)];
}

std::vector<Path> paths_from(const Graph& g, const std::string& v, std::size_t n) {
    g.require_vertex(v);
    std::vector<Path> out;
    Path cur{v, {}};
    std::function<void(const std::string&)> dfs = [&](const std::string& at) {
        if (cur.edges.size() == n) {
            out.push_back(cur);
            return;
        }
        for (auto ei : g.out_edges(at)) {
            const Edge& e = g.edges()[ei];
            cur.edges.push_back(e.id);
            dfs(e.dst);
            cur.edges.pop_back();
        }
    };
    dfs(v);
    return out;
}

std::vector<Path> paths_into(const Graph& g, const std::string& w, std::size_t cap) {
    g.require_vertex(w);
    std::vector<Path> out;
    // walk backwards: extend on the left by edges ending at the current source
    std::function<void(Path&)> grow = [&](Path& p) {
        if (out.size() >= cap)
            throw CapacityError("more than " + std::to_string(cap) + " paths into '" + w + "'");
        out.push_back(p);
        for (const Edge& e : g.edges()) {
            if (e.dst != p.base) continue;
            Path longer{e.src, {}};
            longer.edges.reserve(p.edges.size() + 1);
            longer.edges.push_back(e.id);
            longer.edges.insert(longer.edges.end(), p.edges.begin(), p.edges.end());
            grow(longer);
        }
    };
    Path trivial{w, {}};
    grow(trivial);
    return out;
}

bool has_closed_path(const Graph& g) {
    enum { White, Grey, Black };
    std::vector<int> color(g.vertices().size(), White);
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
        color[v] = Grey;
        for (auto ei : g.out_edges(g.vertices()[v])) {
            auto w = g.vertex_index(g.edges()[ei].dst);
            if (color[w] == Grey) return true;
            if (color[w] == White && dfs(w)) return true;
        }
        color[v] = Black;
        return false;
    };
    for (std::size_t v = 0; v < g.vertices().size(); ++v)
        if (color[v] == White && dfs(v)) return true;
    return false;
}

namespace {

bool path_has_exit(const Graph& g, const Path& p) {
    for (const auto& eid : p.edges)
        if (g.out_degree(g.edge(eid).src) > 1) return true;
    return false;
}

} // namespace

std::vector<ClosedPath> simple_closed_paths_at(const Graph& g, const std::string& v) {
    g.require_vertex(v);
    std::vector<ClosedPath> out;
    VertexSet visited{v};
    Path cur{v, {}};
    std::function<void(const std::string&)> dfs = [&](const std::string& at) {
        for (auto ei : g.out_edges(at)) {
            const Edge& e = g.edges()[ei];
            cur.edges.push_back(e.id);
            if (e.dst == v) {
                out.push_back(ClosedPath{cur, true, path_has_exit(g, cur)});
            } else if (!visited.count(e.dst)) {
                visited.insert(e.dst);
                dfs(e.dst);
                visited.erase(e.dst);
            }
            cur.edges.pop_back();
        }
    };
    dfs(v);
    std::sort(out.begin(), out.end(), [&](const ClosedPath& a, const ClosedPath& b) {
        return path_less(g, a.path, b.path);
    });
    return out;
}

std::vector<ClosedPath> cycles_without_exit(const Graph& g) {
    std::vector<ClosedPath> out;
    std::vector<bool> done(g.vertices().size(), false);
    for (std::size_t start = 0; start < g.vertices().size(); ++start) {
        if (done[start]) continue;
        // follow unique out-edges through out-degree-1 vertices
        std::vector<std::size_t> trail;
        std::size_t at = start;
        std::map<std::size_t, std::size_t> pos;
        while (!done[at] && g.out_degree(g.vertices()[at]) == 1 && !pos.count(at)) {
            pos[at] = trail.size();
            trail.push_back(at);
            at = g.vertex_index(g.edges()[g.out_edges(g.vertices()[at])[0]].dst);
        }
        if (pos.count(at)) {
            // trail[pos[at]..] is a cycle of out-degree-1 vertices
            std::vector<std::size_t> cycle(trail.begin() + pos[at], trail.end());
            std::size_t least = *std::min_element(cycle.begin(), cycle.end());
            std::size_t offset = std::find(cycle.begin(), cycle.end(), least) - cycle.begin();
            Path p{g.vertices()[least], {}};
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                std::size_t w = cycle[(offset + i) % cycle.size()];
                p.edges.push_back(g.edges()[g.out_edges(g.vertices()[w])[0]].id);
            }
            out.push_back(ClosedPath{p, true, false});
        }
        for (std::size_t w : trail) done[w] = true;
        done[start] = true;
    }
    std::sort(out.begin(), out.end(), [&](const ClosedPath& a, const ClosedPath& b) {
        return g.vertex_index(a.path.base) < g.vertex_index(b.path.base);
    });
    return out;
}

VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& s) {
    for (const auto& v : s) g.require_vertex(v);
    VertexSet h = s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : g.edges())
            if (h.count(e.src) && !h.count(e.dst)) {
                h.insert(e.dst);
                changed = true;
            }
        for (const auto& v : g.vertices()) {
            if (h.count(v) || g.is_sink(v)) continue;
            bool all_in = true;
            for (auto ei : g.out_edges(v))
                if (!h.count(g.edges()[ei].dst)) { all_in = false; break; }
            if (all_in) {
                h.insert(v);
                changed = true;
            }
        }
    }
    return h;
}

bool is_hereditary_saturated(const Graph& g, const VertexSet& h) {
    for (const auto& v : h) g.require_vertex(v);
    return hereditary_saturated_closure(g, h) == h;
}

std::vector<VertexSet> enumerate_hereditary_saturated(const Graph& g,
                                                      std::size_t vertex_cap) {
    if (g.vertices().size() > vertex_cap)
        throw CapacityError("hereditary saturated enumeration capped at " +
                            std::to_string(vertex_cap) + " vertices, graph has " +
                            std::to_string(g.vertices().size()));
    std::set<VertexSet> seen;
    std::vector<VertexSet> work{hereditary_saturated_closure(g, {})};
    seen.insert(work.back());
    while (!work.empty()) {
        VertexSet h = std::move(work.back());
        work.pop_back();
        for (const auto& v : g.vertices()) {
            if (h.count(v)) continue;
            VertexSet bigger = h;
            bigger.insert(v);
            VertexSet closed = hereditary_saturated_closure(g, bigger);
            if (seen.insert(closed).second) work.push_back(std::move(closed));
        }
    }
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const VertexSet& a, const VertexSet& b) {
        return vertex_set_less(g, a, b);
    });
    return out;
}

Graph quotient_graph(const Graph& g, const VertexSet& h) {
    if (!is_hereditary_saturated(g, h))
        throw PreconditionError("quotient set is not hereditary saturated");
    std::vector<std::string> vertices;
    for (const auto& v : g.vertices())
        if (!h.count(v)) vertices.push_back(v);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!h.count(e.dst)) edges.push_back(e);
    return Graph(std::move(vertices), std::move(edges));
}

namespace {

std::string fresh_id(std::string base, const Graph& g,
                     const std::vector<std::string>& also_vertices,
                     const std::vector<Edge>& also_edges) {
    auto taken = [&](const std::string& id) {
        if (g.has_vertex(id) || g.has_edge(id)) return true;
        for (const auto& v : also_vertices)
            if (v == id) return true;
        for (const auto& e : also_edges)
            if (e.id == id) return true;
        return false;
    };
    do {
        base += "'";
    } while (taken(base));
    return base;
}

} // namespace

VertexSet regular_vertex_set(const Graph& g) {
    VertexSet out;
    for (const auto& v : g.vertices())
        if (!g.is_sink(v)) out.insert(v);
    return out;
}

Graph augment_relative(const Graph& g, const VertexSet& x, AugmentMap* names) {
    for (const auto& v : x) {
        g.require_vertex(v);
        if (g.is_sink(v))
            throw PreconditionError("relation set contains the sink '" + v + "'");
    }
    std::vector<std::string> vertices = g.vertices();
    std::vector<Edge> edges = g.edges();
    for (const auto& v : g.vertices()) {
        if (g.is_sink(v) || x.count(v)) continue;
        std::string sink = fresh_id(v, g, vertices, edges);
        vertices.push_back(sink);
        if (names) names->vertex_prime[v] = sink;
        for (const Edge& e : g.edges()) {
            if (e.dst != v) continue;
            std::string dup = fresh_id(e.id, g, vertices, edges);
            edges.push_back(Edge{dup, e.src, sink});
            if (names) names->edge_prime[e.id] = dup;
        }
    }
    return Graph(std::move(vertices), std::move(edges));
}

} // namespace cpw
