#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpw/graph.hpp"

namespace cpw {

// The relation set X: J = span{1_v : v in X}, X a set of regular vertices.
// Throws when x contains an unknown vertex or a sink.
void validate_relation_set(const Graph& g, const VertexSet& x);

VertexSet regular_vertices(const Graph& g);

// J^[k] filtration: J^[1] = X, J^[k] = psi^{-1}(J^[k-1]) ∩ X.
VertexSet j_bracket(const Graph& g, const VertexSet& x, std::size_t k);

// Stabilized value of the (decreasing) filtration.
VertexSet j_infinity(const Graph& g, const VertexSet& x);

struct ConditionLVerdict {
    bool holds = true;
    std::optional<ClosedPath> witness; // cycle without exit inside J^[infinity]
};

struct ConditionKVerdict {
    bool holds = true;
    std::optional<std::string> witness; // vertex basing exactly one simple closed path
};

struct SuperMaximalVerdict {
    bool holds = true;
    std::optional<VertexSet> witness; // nontrivial hereditary saturated set
};

ConditionLVerdict condition_L(const Graph& g, const VertexSet& x);

// Independent route: graph-condition-(L) on the augmented graph.
bool condition_L_via_augmentation(const Graph& g, const VertexSet& x);

ConditionKVerdict condition_K(const Graph& g, const VertexSet& x);

// Independent route: every quotient of the augmented graph by a hereditary
// saturated set satisfies graph-condition-(L).
bool condition_K_via_quotients(const Graph& g, const VertexSet& x,
                               std::size_t vertex_cap = 20);

bool is_maximal(const Graph& g, const VertexSet& x);

SuperMaximalVerdict is_super_maximal(const Graph& g, const VertexSet& x,
                                     std::size_t vertex_cap = 20);

struct AnalysisReport {
    ConditionLVerdict condition_l;
    ConditionKVerdict condition_k;
    bool maximal = false;
    SuperMaximalVerdict super_maximal;
    bool simple = false;
    std::string simple_reason;
    bool ck_uniqueness = false;
    bool every_nonzero_ideal_contains_graded = false;
    bool all_ideals_graded = false;
    std::vector<VertexSet> graded_ideals;
    VertexSet j_inf;
};

AnalysisReport analyze(const Graph& g, const VertexSet& x, std::size_t vertex_cap = 20);

} // namespace cpw
