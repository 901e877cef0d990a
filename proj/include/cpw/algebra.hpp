#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cpw/graph.hpp"
#include "cpw/scalar.hpp"

namespace cpw {

// Path monomial alpha.beta* with r(alpha) = r(beta); degree |alpha| - |beta|.
struct MonomialAB {
    Path alpha;
    Path beta;

    int degree() const {
        return static_cast<int>(alpha.length()) - static_cast<int>(beta.length());
    }

    friend bool operator==(const MonomialAB&, const MonomialAB&) = default;
    friend auto operator<=>(const MonomialAB& a, const MonomialAB& b) {
        return std::tie(a.alpha.base, a.alpha.edges, a.beta.base, a.beta.edges) <=>
               std::tie(b.alpha.base, b.alpha.edges, b.beta.base, b.beta.edges);
    }
};

// Fixes which relative Cohn/Leavitt path algebra is meant: graph, relation
// vertices X, and for each v in X the special edge used to orient the CK2
// rewrite (the first edge of vE^1 in canonical order unless overridden).
class AlgebraContext {
public:
    AlgebraContext(Graph g, VertexSet x, unsigned characteristic = 0);
    AlgebraContext(Graph g, VertexSet x, std::map<std::string, std::string> special,
                   unsigned characteristic = 0);

    const Graph& graph() const { return graph_; }
    const VertexSet& relations() const { return relations_; }
    unsigned characteristic() const { return char_; }
    const std::string& special_edge(const std::string& v) const;
    bool is_special(const std::string& edge_id) const;

private:
    Graph graph_;
    VertexSet relations_;
    std::map<std::string, std::string> special_;
    unsigned char_;
};

// Exact linear combination of normal-form monomials.
class Element {
public:
    Element() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<MonomialAB, Scalar>& terms() const { return terms_; }

    void add_term(const MonomialAB& m, const Scalar& c);

    friend bool operator==(const Element&, const Element&) = default;

private:
    std::map<MonomialAB, Scalar> terms_;
};

// Generators as elements.
Element vertex_element(const AlgebraContext& ctx, const std::string& v);
Element edge_element(const AlgebraContext& ctx, const std::string& e);
Element ghost_element(const AlgebraContext& ctx, const std::string& e);
Element path_element(const AlgebraContext& ctx, const Path& p);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Scalar& c, const Element& a);
Element mul(const AlgebraContext& ctx, const Element& a, const Element& b);
Element star(const Element& a);

Element graded_component(const Element& a, int n);

// Degree when every term has the same one.
std::optional<int> homogeneous_degree(const Element& a);

// ---- expression language ----

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
    enum class Kind { Sum, Product, Star, Vertex, Edge, GhostEdge };
    Kind kind;
    std::vector<std::pair<int, ExprPtr>> summands; // Sum: sign is +1/-1
    Scalar coefficient{1};                         // Product prefix scalar
    std::vector<ExprPtr> factors;                  // Product
    ExprPtr child;                                 // Star
    std::string id;                                // leaves
};

ExprPtr parse_expression(const std::string& text, const AlgebraContext& ctx);

Element normal_form(const ExprNode& tree, const AlgebraContext& ctx);

// Same value, computed with a randomized rule-application order.
Element normal_form_randomized(const ExprNode& tree, const AlgebraContext& ctx,
                               std::uint64_t seed);

// Convenience: parse + reduce.
Element evaluate_expression(const std::string& text, const AlgebraContext& ctx);

std::string render_element(const Element& a);

// ---- dimension and probes ----

// Count of normal-form basis monomials, or nullopt when the augmented graph
// has a closed path.
std::optional<std::uint64_t> dimension_if_finite(const AlgebraContext& ctx,
                                                 std::uint64_t cap = 1000000);

// Image in the Leavitt path algebra of the augmented graph:
// v -> v + v', e -> e + e'.
struct AugmentedImage {
    AlgebraContext ctx;
    Element element;
};
AugmentedImage to_augmented_leavitt(const Element& a, const AlgebraContext& ctx);

struct ProbeResult {
    bool zero = false;
    Path witness; // in the augmented graph
};

// Witness path for a nonzero homogeneous element of degree n != 0:
// normal_form(witness* . a) != 0 for n > 0, normal_form(a . witness) != 0
// for n < 0, computed in the augmented Leavitt algebra.
ProbeResult homogeneous_probe(const Element& a, const AlgebraContext& ctx,
                              std::size_t path_cap = 100000);

// normal_form(v - sum_{alpha in vE^k} alpha.alpha*) == 0 ?
bool lemma3_identity_check(const Graph& g, const VertexSet& x,
                           const std::string& v, std::size_t k);

// ---- matrix representations ----

using Matrix = std::vector<std::vector<Scalar>>;

Matrix matrix_zero(std::size_t dim, unsigned characteristic = 0);
Matrix matrix_unit(std::size_t dim, std::size_t row, std::size_t col,
                   unsigned characteristic = 0);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
bool mat_is_zero(const Matrix& a);

struct MatrixFamily {
    std::size_t dim = 0;
    std::map<std::string, Matrix> p; // vertex -> idempotent
    std::map<std::string, Matrix> x; // edge -> x_e
    std::map<std::string, Matrix> y; // edge -> y_e
};

struct RelationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

RelationReport check_tck_family(const MatrixFamily& fam, const Graph& g);

struct InjectivityVerdict {
    bool injective = true;
    std::vector<std::string> reasons;
};

InjectivityVerdict tck_injectivity_verdict(const MatrixFamily& fam, const Graph& g);

// Ring homomorphism v -> p_v, e -> x_e, e* -> y_e; requires the TCK
// relations plus CK2 at every relation vertex of ctx.
Matrix evaluate(const Element& a, const MatrixFamily& fam, const AlgebraContext& ctx);

} // namespace cpw
