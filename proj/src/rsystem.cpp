#include "cpw/rsystem.hpp"

#include <algorithm>

#include "cpw/structure.hpp"

namespace cpw {

RSystemGraph build_system(const Graph& g, unsigned characteristic) {
    return RSystemGraph{g, characteristic};
}

void BimoduleElement::add(const std::vector<std::string>& index, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

namespace {

std::string index_str(Side side, const std::vector<std::string>& index) {
    std::string out = "1_";
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (i) out += ".";
        out += index[i];
    }
    if (side == Side::P) out += "~";
    return out;
}

void check_edge_path(const Graph& g, const std::vector<std::string>& edges) {
    if (edges.empty())
        throw PreconditionError("tensor basis index must have positive length");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = g.edge(edges[i]);
        if (i && g.edge(edges[i - 1]).dst != e.src)
            throw PreconditionError("edges '" + edges[i - 1] + "' and '" + edges[i] +
                                    "' do not compose");
    }
}

const std::string& path_source(const Graph& g, const std::vector<std::string>& edges) {
    return g.edge(edges.front()).src;
}

const std::string& path_range(const Graph& g, const std::vector<std::string>& edges) {
    return g.edge(edges.back()).dst;
}

void check_sides(const BimoduleElement& a, Side side, const char* what) {
    if (a.side() != side)
        throw PreconditionError(std::string("expected a ") + what + " element");
}

} // namespace

BimoduleElement r_unit(const RSystemGraph& sys, const std::string& v) {
    sys.graph.require_vertex(v);
    BimoduleElement out(Side::R, 0, sys.characteristic);
    out.add({v}, Scalar::one(sys.characteristic));
    return out;
}

BimoduleElement q_unit(const RSystemGraph& sys, const std::vector<std::string>& edges) {
    check_edge_path(sys.graph, edges);
    BimoduleElement out(Side::Q, edges.size(), sys.characteristic);
    out.add(edges, Scalar::one(sys.characteristic));
    return out;
}

BimoduleElement p_unit(const RSystemGraph& sys, const std::vector<std::string>& edges) {
    check_edge_path(sys.graph, edges);
    BimoduleElement out(Side::P, edges.size(), sys.characteristic);
    out.add(edges, Scalar::one(sys.characteristic));
    return out;
}

BimoduleElement act_left(const RSystemGraph& sys, const std::string& v,
                         const BimoduleElement& a) {
    sys.graph.require_vertex(v);
    BimoduleElement out(a.side(), a.length(), a.characteristic());
    for (const auto& [idx, c] : a.coeffs()) {
        const std::string& at = a.side() == Side::R ? idx.front()
                                : a.side() == Side::Q ? path_source(sys.graph, idx)
                                                      : path_range(sys.graph, idx);
        if (at == v) out.add(idx, c);
    }
    return out;
}

BimoduleElement act_right(const RSystemGraph& sys, const BimoduleElement& a,
                          const std::string& v) {
    sys.graph.require_vertex(v);
    BimoduleElement out(a.side(), a.length(), a.characteristic());
    for (const auto& [idx, c] : a.coeffs()) {
        const std::string& at = a.side() == Side::R ? idx.front()
                                : a.side() == Side::Q ? path_range(sys.graph, idx)
                                                      : path_source(sys.graph, idx);
        if (at == v) out.add(idx, c);
    }
    return out;
}

BimoduleElement bim_add(const BimoduleElement& a, const BimoduleElement& b) {
    if (a.side() != b.side() || a.length() != b.length())
        throw PreconditionError("bimodule element side/length mismatch");
    BimoduleElement out = a;
    for (const auto& [idx, c] : b.coeffs()) out.add(idx, c);
    return out;
}

BimoduleElement bim_scale(const Scalar& c, const BimoduleElement& a) {
    BimoduleElement out(a.side(), a.length(), a.characteristic());
    for (const auto& [idx, k] : a.coeffs()) out.add(idx, c * k);
    return out;
}

BimoduleElement psi_n(const RSystemGraph& sys, const BimoduleElement& p,
                      const BimoduleElement& q) {
    check_sides(p, Side::P, "P-side");
    check_sides(q, Side::Q, "Q-side");
    if (p.length() != q.length())
        throw PreconditionError("psi_n length mismatch");
    BimoduleElement out(Side::R, 0, sys.characteristic);
    for (const auto& [idx, cp] : p.coeffs()) {
        auto it = q.coeffs().find(idx);
        if (it == q.coeffs().end()) continue;
        out.add({path_range(sys.graph, idx)}, cp * it->second);
    }
    return out;
}

BimoduleElement s_p_t_qn(const RSystemGraph& sys, const BimoduleElement& p,
                         const BimoduleElement& qn, const BimoduleElement& q) {
    check_sides(p, Side::P, "P-side");
    check_sides(qn, Side::Q, "Q-side");
    check_sides(q, Side::Q, "Q-side");
    if (p.length() != 1 || q.length() != 1)
        throw PreconditionError("s_p_t_qn expects length-1 outer elements");
    const std::size_t n = qn.length();
    BimoduleElement out(Side::Q, n, sys.characteristic);
    for (const auto& [alpha, c1] : qn.coeffs()) {
        for (const auto& [f, c2] : q.coeffs()) {
            if (path_range(sys.graph, alpha) != path_source(sys.graph, f)) continue;
            auto ip = p.coeffs().find({alpha.front()});
            if (ip == p.coeffs().end()) continue;
            std::vector<std::string> rest(alpha.begin() + 1, alpha.end());
            rest.push_back(f.front());
            out.add(rest, ip->second * c1 * c2);
        }
    }
    return out;
}

VertexSet psi_inverse(const RSystemGraph& sys, const VertexSet& s, PsiInverseMode mode) {
    const Graph& g = sys.graph;
    for (const auto& v : s) g.require_vertex(v);
    VertexSet out;
    if (mode == PsiInverseMode::Recursive) {
        for (const auto& v : g.vertices()) {
            bool all_in = true;
            for (auto ei : g.out_edges(v))
                if (!s.count(g.edges()[ei].dst)) { all_in = false; break; }
            if (all_in) out.insert(v);
        }
        return out;
    }
    // brute: quantify over basis p and q and inspect psi(p 1_v (x) q)
    for (const auto& v : g.vertices()) {
        bool ok = true;
        for (const Edge& e : g.edges()) {
            for (const Edge& f : g.edges()) {
                BimoduleElement r = psi_n(sys, act_right(sys, p_unit(sys, {e.id}), v),
                                          q_unit(sys, {f.id}));
                for (const auto& [idx, c] : r.coeffs())
                    if (!s.count(idx.front())) { ok = false; break; }
                if (!ok) break;
            }
            if (!ok) break;
        }
        if (ok) out.insert(v);
    }
    return out;
}

std::vector<InvariantCycle> invariant_cycle_search(const RSystemGraph& sys,
                                                   std::size_t max_n) {
    if (max_n < 1) throw PreconditionError("max_n must be at least 1");
    std::vector<InvariantCycle> out;
    for (const ClosedPath& c : cycles_without_exit(sys.graph)) {
        const std::size_t n = c.path.length();
        if (n > max_n) continue;
        InvariantCycle inv;
        inv.n = n;
        inv.eta.n = n;
        for (std::size_t i = 0; i < n; ++i) {
            const std::string& v = sys.graph.edge(c.path.edges[i]).src;
            inv.ideal.insert(v);
            std::vector<std::string> rotated;
            rotated.reserve(n);
            for (std::size_t j = 0; j < n; ++j)
                rotated.push_back(c.path.edges[(i + j) % n]);
            inv.eta.map[v] = {Path{v, std::move(rotated)},
                              Scalar::one(sys.characteristic)};
        }
        out.push_back(std::move(inv));
    }
    return out;
}

VerifyResult verify_invariant_cycle(const RSystemGraph& sys, const VertexSet& ideal,
                                    const EtaMap& eta) {
    const Graph& g = sys.graph;
    for (const auto& v : ideal) g.require_vertex(v);
    if (eta.map.size() != ideal.size())
        throw PreconditionError("eta must be defined exactly on the ideal");
    for (const auto& [v, img] : eta.map)
        if (!ideal.count(v))
            throw PreconditionError("eta defined at '" + v + "' outside the ideal");

    // bimodule map: eta(1_v) must be supported on closed paths at v
    for (const auto& [v, img] : eta.map) {
        const auto& [alpha, coeff] = img;
        if (alpha.length() != eta.n)
            return {false, "eta(1_" + v + ") has length " +
                               std::to_string(alpha.length()) + ", expected " +
                               std::to_string(eta.n)};
        if (coeff.is_zero())
            return {false, "eta(1_" + v + ") = 0 is not injective"};
        check_edge_path(g, alpha.edges);
        if (path_source(g, alpha.edges) != v || path_range(g, alpha.edges) != v)
            return {false, "eta(1_" + v + ") is not fixed by 1_" + v +
                               " on both sides"};
    }
    // injectivity: distinct basis images
    for (auto it = eta.map.begin(); it != eta.map.end(); ++it)
        for (auto jt = std::next(it); jt != eta.map.end(); ++jt)
            if (it->second.first.edges == jt->second.first.edges)
                return {false, "eta(1_" + it->first + ") = eta(1_" + jt->first + ")"};

    // intertwining over all basis triples (p, 1_v, q)
    for (const auto& v : ideal) {
        const auto& [alpha, coeff] = eta.map.at(v);
        BimoduleElement eta_v = bim_scale(coeff, q_unit(sys, alpha.edges));
        for (const Edge& e : g.edges()) {
            BimoduleElement p = p_unit(sys, {e.id});
            for (const Edge& f : g.edges()) {
                BimoduleElement q = q_unit(sys, {f.id});
                BimoduleElement lhs = s_p_t_qn(sys, p, eta_v, q);
                BimoduleElement arg = psi_n(sys, act_right(sys, p, v), q);
                BimoduleElement rhs(Side::Q, eta.n, sys.characteristic);
                bool invariant = true;
                for (const auto& [idx, c] : arg.coeffs()) {
                    auto img = eta.map.find(idx.front());
                    if (img == eta.map.end()) { invariant = false; break; }
                    rhs = bim_add(rhs,
                                  bim_scale(c * img->second.second,
                                            q_unit(sys, img->second.first.edges)));
                }
                if (!invariant)
                    return {false, "psi(" + index_str(Side::P, {e.id}) + " 1_" + v +
                                       " (x) " + index_str(Side::Q, {f.id}) +
                                       ") leaves the ideal"};
                if (lhs != rhs)
                    return {false, "S_p T_eta(q) != eta(psi(p 1_v (x) q)) at p=" +
                                       index_str(Side::P, {e.id}) + ", x=1_" + v +
                                       ", q=" + index_str(Side::Q, {f.id})};
            }
        }
    }
    return {};
}

VertexSet ideal_bracket(const RSystemGraph& sys, const VertexSet& x, std::size_t k) {
    validate_relation_set(sys.graph, x);
    VertexSet cur = x;
    for (std::size_t step = 1; step < k; ++step) {
        VertexSet pre = psi_inverse(sys, cur, PsiInverseMode::Recursive);
        VertexSet next;
        std::set_intersection(pre.begin(), pre.end(), x.begin(), x.end(),
                              std::inserter(next, next.begin()));
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur;
}

VertexSet ideal_infinity(const RSystemGraph& sys, const VertexSet& x) {
    return ideal_bracket(sys, x, x.size() + 1);
}

} // namespace cpw
