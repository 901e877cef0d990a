#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cpw/graph.hpp"
#include "cpw/scalar.hpp"

namespace cpw {

// The concrete system attached to a graph: R has basis {1_v}, Q and P have
// basis {1_e}, Q^(x)n has basis E^n.  P plays the dual role, so its left and
// right vertex actions are swapped relative to Q.
struct RSystemGraph {
    Graph graph;
    unsigned characteristic = 0;
};

RSystemGraph build_system(const Graph& g, unsigned characteristic = 0);

enum class Side { R, P, Q };

// Finitely supported coefficient family over one basis: vertices for R,
// composable edge sequences of a fixed length for P and Q.
class BimoduleElement {
public:
    BimoduleElement(Side side, std::size_t length, unsigned characteristic = 0)
        : side_(side), length_(length), char_(characteristic) {}

    Side side() const { return side_; }
    std::size_t length() const { return length_; }
    unsigned characteristic() const { return char_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::vector<std::string>, Scalar>& coeffs() const { return coeffs_; }

    void add(const std::vector<std::string>& index, const Scalar& c);

    friend bool operator==(const BimoduleElement&, const BimoduleElement&) = default;

private:
    Side side_;
    std::size_t length_;
    unsigned char_;
    std::map<std::vector<std::string>, Scalar> coeffs_;
};

// Basis vectors; the unit constructors validate the index against the graph.
BimoduleElement r_unit(const RSystemGraph& sys, const std::string& v);
BimoduleElement q_unit(const RSystemGraph& sys, const std::vector<std::string>& edges);
BimoduleElement p_unit(const RSystemGraph& sys, const std::vector<std::string>& edges);

// Diagonal vertex actions (left/right roles swapped on the P side).
BimoduleElement act_left(const RSystemGraph& sys, const std::string& v,
                         const BimoduleElement& a);
BimoduleElement act_right(const RSystemGraph& sys, const BimoduleElement& a,
                          const std::string& v);

BimoduleElement bim_add(const BimoduleElement& a, const BimoduleElement& b);
BimoduleElement bim_scale(const Scalar& c, const BimoduleElement& a);

// psi_n(p, q) = sum_v ( sum_{alpha in E^n v} p_alpha q_alpha ) 1_v.
BimoduleElement psi_n(const RSystemGraph& sys, const BimoduleElement& p,
                      const BimoduleElement& q);

// S_p T_{qn}(q): tensor qn (x) q, then contract the first leg against p.
BimoduleElement s_p_t_qn(const RSystemGraph& sys, const BimoduleElement& p,
                         const BimoduleElement& qn, const BimoduleElement& q);

enum class PsiInverseMode { Recursive, Brute };

// {v : psi(P 1_v (x) Q) lands in span{1_w : w in s}}.
VertexSet psi_inverse(const RSystemGraph& sys, const VertexSet& s, PsiInverseMode mode);

// Monomial bimodule map v -> coeff * 1_{path} on a vertex set.
struct EtaMap {
    std::size_t n = 0;
    std::map<std::string, std::pair<Path, Scalar>> map;
};

struct InvariantCycle {
    VertexSet ideal;
    std::size_t n = 0;
    EtaMap eta;
};

// One invariant cycle per cycle without exit of length <= max_n, coefficients 1.
std::vector<InvariantCycle> invariant_cycle_search(const RSystemGraph& sys,
                                                   std::size_t max_n);

struct VerifyResult {
    bool ok = true;
    std::string counterexample;
};

// Checks eta is an injective bimodule map on span{1_v : v in I} intertwining
// S_p T_eta with eta after psi, over all basis triples (p, v, q).
VerifyResult verify_invariant_cycle(const RSystemGraph& sys, const VertexSet& ideal,
                                    const EtaMap& eta);

// J-filtration computed through psi_inverse; agrees with structure::j_bracket.
VertexSet ideal_bracket(const RSystemGraph& sys, const VertexSet& x, std::size_t k);
VertexSet ideal_infinity(const RSystemGraph& sys, const VertexSet& x);

} // namespace cpw
