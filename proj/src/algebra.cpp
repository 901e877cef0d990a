#include "cpw/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>

namespace cpw {

// ---- context ----

namespace {

void check_relation_vertices(const Graph& g, const VertexSet& x) {
    for (const auto& v : x) {
        g.require_vertex(v);
        if (g.is_sink(v))
            throw IdentifierError("relation set contains the sink '" + v + "'");
    }
}

} // namespace

AlgebraContext::AlgebraContext(Graph g, VertexSet x, unsigned characteristic)
    : graph_(std::move(g)), relations_(std::move(x)), char_(characteristic) {
    check_relation_vertices(graph_, relations_);
    for (const auto& v : relations_)
        special_[v] = graph_.edges()[graph_.out_edges(v)[0]].id;
}

AlgebraContext::AlgebraContext(Graph g, VertexSet x,
                               std::map<std::string, std::string> special,
                               unsigned characteristic)
    : graph_(std::move(g)), relations_(std::move(x)), special_(std::move(special)),
      char_(characteristic) {
    check_relation_vertices(graph_, relations_);
    if (special_.size() != relations_.size())
        throw PreconditionError("special edges must be defined exactly on the relation set");
    for (const auto& [v, e] : special_) {
        if (!relations_.count(v))
            throw PreconditionError("special edge given for non-relation vertex '" + v + "'");
        if (graph_.edge(e).src != v)
            throw PreconditionError("special edge '" + e + "' does not start at '" + v + "'");
    }
}

const std::string& AlgebraContext::special_edge(const std::string& v) const {
    auto it = special_.find(v);
    if (it == special_.end())
        throw IdentifierError("no special edge at '" + v + "' (not a relation vertex)");
    return it->second;
}

bool AlgebraContext::is_special(const std::string& edge_id) const {
    auto it = special_.find(graph_.edge(edge_id).src);
    return it != special_.end() && it->second == edge_id;
}

// ---- element ----

void Element::add_term(const MonomialAB& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element vertex_element(const AlgebraContext& ctx, const std::string& v) {
    ctx.graph().require_vertex(v);
    Element out;
    Path at{v, {}};
    out.add_term(MonomialAB{at, at}, Scalar::one(ctx.characteristic()));
    return out;
}

Element edge_element(const AlgebraContext& ctx, const std::string& e) {
    const Edge& ed = ctx.graph().edge(e);
    Element out;
    out.add_term(MonomialAB{Path{ed.src, {e}}, Path{ed.dst, {}}},
                 Scalar::one(ctx.characteristic()));
    return out;
}

Element ghost_element(const AlgebraContext& ctx, const std::string& e) {
    const Edge& ed = ctx.graph().edge(e);
    Element out;
    out.add_term(MonomialAB{Path{ed.dst, {}}, Path{ed.src, {e}}},
                 Scalar::one(ctx.characteristic()));
    return out;
}

Element path_element(const AlgebraContext& ctx, const Path& p) {
    Element out;
    out.add_term(MonomialAB{p, Path{p.range(ctx.graph()), {}}},
                 Scalar::one(ctx.characteristic()));
    return out;
}

Element add(const Element& a, const Element& b) {
    Element out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

Element sub(const Element& a, const Element& b) {
    Element out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
    return out;
}

Element scale(const Scalar& c, const Element& a) {
    Element out;
    for (const auto& [m, k] : a.terms()) out.add_term(m, c * k);
    return out;
}

Element star(const Element& a) {
    Element out;
    for (const auto& [m, c] : a.terms()) out.add_term(MonomialAB{m.beta, m.alpha}, c);
    return out;
}

namespace {

struct Term {
    Path alpha;
    Path beta;
    Scalar coeff;
};

// CK2 rewrite: (a.gamma)(b.gamma)* -> ab* - sum over sibling edges of gamma.
void reduce_into(const AlgebraContext& ctx, Term seed, Element& out,
                 std::mt19937_64* rng) {
    std::vector<Term> work;
    work.push_back(std::move(seed));
    while (!work.empty()) {
        std::size_t pick = work.size() - 1;
        if (rng && work.size() > 1)
            pick = static_cast<std::size_t>((*rng)() % work.size());
        Term cur = std::move(work[pick]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(pick));

        bool reducible = !cur.alpha.edges.empty() && !cur.beta.edges.empty() &&
                         cur.alpha.edges.back() == cur.beta.edges.back() &&
                         ctx.is_special(cur.alpha.edges.back());
        if (!reducible) {
            out.add_term(MonomialAB{cur.alpha, cur.beta}, cur.coeff);
            continue;
        }
        const std::string gamma = cur.alpha.edges.back();
        const std::string v = ctx.graph().edge(gamma).src;
        Path a = cur.alpha;
        a.edges.pop_back();
        Path b = cur.beta;
        b.edges.pop_back();
        for (auto ei : ctx.graph().out_edges(v)) {
            const Edge& e = ctx.graph().edges()[ei];
            if (e.id == gamma) continue;
            Path ae = a;
            ae.edges.push_back(e.id);
            Path be = b;
            be.edges.push_back(e.id);
            work.push_back(Term{std::move(ae), std::move(be), -cur.coeff});
        }
        work.push_back(Term{std::move(a), std::move(b), cur.coeff});
    }
}

// (alpha beta*)(gamma delta*): beta* gamma collapses when one path extends
// the other, otherwise the product vanishes.
std::optional<Term> mono_mul(const MonomialAB& m1, const MonomialAB& m2, Scalar c) {
    const Path& beta = m1.beta;
    const Path& gamma = m2.alpha;
    if (beta.base != gamma.base) return std::nullopt;
    if (beta.edges.size() <= gamma.edges.size()) {
        if (!std::equal(beta.edges.begin(), beta.edges.end(), gamma.edges.begin()))
            return std::nullopt;
        Path alpha = m1.alpha;
        alpha.edges.insert(alpha.edges.end(), gamma.edges.begin() + beta.edges.size(),
                           gamma.edges.end());
        return Term{std::move(alpha), m2.beta, std::move(c)};
    }
    if (!std::equal(gamma.edges.begin(), gamma.edges.end(), beta.edges.begin()))
        return std::nullopt;
    Path delta = m2.beta;
    delta.edges.insert(delta.edges.end(), beta.edges.begin() + gamma.edges.size(),
                       beta.edges.end());
    return Term{m1.alpha, std::move(delta), std::move(c)};
}

Element mul_impl(const AlgebraContext& ctx, const Element& a, const Element& b,
                 std::mt19937_64* rng) {
    Element out;
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms())
            if (auto t = mono_mul(m1, m2, c1 * c2))
                reduce_into(ctx, std::move(*t), out, rng);
    return out;
}

} // namespace

Element mul(const AlgebraContext& ctx, const Element& a, const Element& b) {
    return mul_impl(ctx, a, b, nullptr);
}

Element graded_component(const Element& a, int n) {
    Element out;
    for (const auto& [m, c] : a.terms())
        if (m.degree() == n) out.add_term(m, c);
    return out;
}

std::optional<int> homogeneous_degree(const Element& a) {
    std::optional<int> deg;
    for (const auto& [m, c] : a.terms()) {
        if (!deg) deg = m.degree();
        else if (*deg != m.degree()) return std::nullopt;
    }
    return deg;
}

// ---- expression language ----

namespace {

struct Token {
    enum class Kind { Ident, Integer, Plus, Minus, Star, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        switch (c) {
            case '+': out.push_back({Token::Kind::Plus, "+", i++}); continue;
            case '-': out.push_back({Token::Kind::Minus, "-", i++}); continue;
            case '*': out.push_back({Token::Kind::Star, "*", i++}); continue;
            case '/': out.push_back({Token::Kind::Slash, "/", i++}); continue;
            case '(': out.push_back({Token::Kind::LParen, "(", i++}); continue;
            case ')': out.push_back({Token::Kind::RParen, ")", i++}); continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Kind::Integer, s.substr(start, i - start), start});
            continue;
        }
        // '/' is reserved for rational scalars inside expressions
        auto ident_char = [](char ch) {
            return ch != '/' && is_valid_identifier(std::string(1, ch));
        };
        std::size_t start = i;
        while (i < s.size() && ident_char(s[i])) ++i;
        if (i == start) throw SyntaxError("unexpected character '" + std::string(1, c) + "'", i);
        out.push_back({Token::Kind::Ident, s.substr(start, i - start), start});
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const AlgebraContext& ctx)
        : tokens_(std::move(tokens)), ctx_(ctx) {}

    ExprPtr parse() {
        ExprPtr e = element();
        if (peek().kind != Token::Kind::End)
            throw SyntaxError("unexpected trailing input", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    static bool starts_term(const Token& t) {
        return t.kind == Token::Kind::Ident || t.kind == Token::Kind::Integer ||
               t.kind == Token::Kind::LParen;
    }

    ExprPtr element() {
        auto sum = std::make_unique<ExprNode>();
        sum->kind = ExprNode::Kind::Sum;
        int sign = 1;
        if (peek().kind == Token::Kind::Plus) next();
        else if (peek().kind == Token::Kind::Minus) { next(); sign = -1; }
        sum->summands.emplace_back(sign, term());
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            sign = next().kind == Token::Kind::Plus ? 1 : -1;
            sum->summands.emplace_back(sign, term());
        }
        return sum;
    }

    ExprPtr term() {
        auto prod = std::make_unique<ExprNode>();
        prod->kind = ExprNode::Kind::Product;
        prod->coefficient = Scalar::one(ctx_.characteristic());
        if (peek().kind == Token::Kind::Integer) prod->coefficient = scalar();
        if (!starts_term(peek()) || peek().kind == Token::Kind::Integer)
            throw SyntaxError("expected a generator or '('", peek().pos);
        while (starts_term(peek()) && peek().kind != Token::Kind::Integer)
            prod->factors.push_back(factor());
        return prod;
    }

    Scalar scalar() {
        const Token& num = next();
        BigInt n(num.text);
        if (peek().kind == Token::Kind::Slash) {
            next();
            if (peek().kind != Token::Kind::Integer)
                throw SyntaxError("expected a denominator", peek().pos);
            BigInt d(next().text);
            if (d == 0) throw SyntaxError("zero denominator", num.pos);
            return Scalar(n, d, ctx_.characteristic());
        }
        return Scalar(n, 1, ctx_.characteristic());
    }

    ExprPtr factor() {
        ExprPtr base;
        if (peek().kind == Token::Kind::LParen) {
            next();
            base = element();
            if (peek().kind != Token::Kind::RParen)
                throw SyntaxError("expected ')'", peek().pos);
            next();
        } else {
            const Token& t = next();
            base = std::make_unique<ExprNode>();
            base->id = t.text;
            if (ctx_.graph().has_vertex(t.text)) base->kind = ExprNode::Kind::Vertex;
            else if (ctx_.graph().has_edge(t.text)) base->kind = ExprNode::Kind::Edge;
            else throw IdentifierError("unknown identifier '" + t.text + "'");
        }
        if (peek().kind == Token::Kind::Star) {
            next();
            auto st = std::make_unique<ExprNode>();
            st->kind = ExprNode::Kind::Star;
            st->child = std::move(base);
            return st;
        }
        return base;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const AlgebraContext& ctx_;
};

Element eval_node(const ExprNode& node, const AlgebraContext& ctx, std::mt19937_64* rng);

Element eval_product(std::vector<Element> parts, const AlgebraContext& ctx,
                     std::mt19937_64* rng) {
    if (parts.empty())
        throw PreconditionError("empty product");
    if (!rng) {
        Element acc = std::move(parts.front());
        for (std::size_t i = 1; i < parts.size(); ++i)
            acc = mul_impl(ctx, acc, parts[i], rng);
        return acc;
    }
    // random association order
    std::function<Element(std::size_t, std::size_t)> go = [&](std::size_t lo,
                                                              std::size_t hi) -> Element {
        if (hi - lo == 1) return parts[lo];
        std::size_t cut = lo + 1 + static_cast<std::size_t>((*rng)() % (hi - lo - 1));
        Element left = go(lo, cut);
        Element right = go(cut, hi);
        return mul_impl(ctx, left, right, rng);
    };
    return go(0, parts.size());
}

Element eval_node(const ExprNode& node, const AlgebraContext& ctx, std::mt19937_64* rng) {
    switch (node.kind) {
        case ExprNode::Kind::Vertex:
            return vertex_element(ctx, node.id);
        case ExprNode::Kind::Edge:
            return edge_element(ctx, node.id);
        case ExprNode::Kind::GhostEdge:
            return ghost_element(ctx, node.id);
        case ExprNode::Kind::Star:
            return star(eval_node(*node.child, ctx, rng));
        case ExprNode::Kind::Product: {
            std::vector<Element> parts;
            parts.reserve(node.factors.size());
            for (const auto& f : node.factors) parts.push_back(eval_node(*f, ctx, rng));
            return scale(node.coefficient, eval_product(std::move(parts), ctx, rng));
        }
        case ExprNode::Kind::Sum: {
            std::vector<std::size_t> order(node.summands.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            if (rng) std::shuffle(order.begin(), order.end(), *rng);
            Element acc;
            for (auto i : order) {
                const auto& [sign, child] = node.summands[i];
                Element part = eval_node(*child, ctx, rng);
                acc = sign > 0 ? add(acc, part) : sub(acc, part);
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable expression node kind");
}

} // namespace

ExprPtr parse_expression(const std::string& text, const AlgebraContext& ctx) {
    return Parser(tokenize(text), ctx).parse();
}

Element normal_form(const ExprNode& tree, const AlgebraContext& ctx) {
    return eval_node(tree, ctx, nullptr);
}

Element normal_form_randomized(const ExprNode& tree, const AlgebraContext& ctx,
                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return eval_node(tree, ctx, &rng);
}

Element evaluate_expression(const std::string& text, const AlgebraContext& ctx) {
    return normal_form(*parse_expression(text, ctx), ctx);
}

std::string render_element(const Element& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : a.terms()) {
        Scalar mag = c;
        bool negative = false;
        if (c.characteristic() == 0 && c.value() < 0) {
            negative = true;
            mag = -c;
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string body;
        for (const auto& e : m.alpha.edges) {
            if (!body.empty()) body += " ";
            body += e;
        }
        for (auto it = m.beta.edges.rbegin(); it != m.beta.edges.rend(); ++it) {
            if (!body.empty()) body += " ";
            body += *it + "*";
        }
        if (body.empty()) body = m.alpha.base;
        if (mag != Scalar::one(mag.characteristic())) out += mag.str() + " ";
        out += body;
    }
    return out;
}

// ---- dimension and probes ----

std::optional<std::uint64_t> dimension_if_finite(const AlgebraContext& ctx,
                                                 std::uint64_t cap) {
    const Graph& g = ctx.graph();
    if (has_closed_path(augment_relative(g, ctx.relations()))) return std::nullopt;
    // #paths into each vertex (the graph is acyclic here)
    std::map<std::string, BigInt> into;
    std::function<BigInt(const std::string&)> count = [&](const std::string& w) -> BigInt {
        auto it = into.find(w);
        if (it != into.end()) return it->second;
        BigInt n = 1;
        for (const Edge& e : g.edges())
            if (e.dst == w) n += count(e.src);
        into[w] = n;
        return n;
    };
    BigInt dim = 0;
    for (const auto& w : g.vertices()) dim += count(w) * count(w);
    for (const auto& v : ctx.relations()) dim -= count(v) * count(v);
    if (dim > BigInt(cap))
        throw CapacityError("normal-form monomial count exceeds cap of " +
                            std::to_string(cap));
    return static_cast<std::uint64_t>(dim);
}

AugmentedImage to_augmented_leavitt(const Element& a, const AlgebraContext& ctx) {
    AugmentMap names;
    Graph aug = augment_relative(ctx.graph(), ctx.relations(), &names);
    AlgebraContext out_ctx(aug, regular_vertex_set(aug), ctx.characteristic());

    auto vertex_image = [&](const std::string& v) {
        Element e = vertex_element(out_ctx, v);
        auto it = names.vertex_prime.find(v);
        if (it != names.vertex_prime.end())
            e = add(e, vertex_element(out_ctx, it->second));
        return e;
    };
    auto edge_image = [&](const std::string& eid) {
        Element e = edge_element(out_ctx, eid);
        auto it = names.edge_prime.find(eid);
        if (it != names.edge_prime.end())
            e = add(e, edge_element(out_ctx, it->second));
        return e;
    };

    Element image;
    for (const auto& [m, c] : a.terms()) {
        Element acc = vertex_image(m.alpha.base);
        for (const auto& eid : m.alpha.edges) acc = mul(out_ctx, acc, edge_image(eid));
        Element bet = vertex_image(m.beta.base);
        for (const auto& eid : m.beta.edges) bet = mul(out_ctx, bet, edge_image(eid));
        acc = mul(out_ctx, acc, star(bet));
        image = add(image, scale(c, acc));
    }
    return AugmentedImage{std::move(out_ctx), std::move(image)};
}

ProbeResult homogeneous_probe(const Element& a, const AlgebraContext& ctx,
                              std::size_t path_cap) {
    if (a.is_zero()) return ProbeResult{true, {}};
    auto deg = homogeneous_degree(a);
    if (!deg) throw PreconditionError("element is not homogeneous");
    if (*deg == 0) throw PreconditionError("homogeneous probe needs nonzero degree");

    AugmentedImage img = to_augmented_leavitt(a, ctx);
    const Graph& aug = img.ctx.graph();
    const std::size_t n = static_cast<std::size_t>(*deg > 0 ? *deg : -*deg);

    std::size_t tried = 0;
    for (const auto& v : aug.vertices()) {
        for (const Path& alpha : paths_from(aug, v, n)) {
            if (++tried > path_cap)
                throw CapacityError("homogeneous probe exceeded path cap");
            Element candidate =
                *deg > 0 ? mul(img.ctx, star(path_element(img.ctx, alpha)), img.element)
                         : mul(img.ctx, img.element, path_element(img.ctx, alpha));
            if (!candidate.is_zero()) return ProbeResult{false, alpha};
        }
    }
    throw std::logic_error("no probe witness found for a nonzero homogeneous element");
}

bool lemma3_identity_check(const Graph& g, const VertexSet& x, const std::string& v,
                           std::size_t k) {
    g.require_vertex(v);
    AlgebraContext ctx(g, x);
    Element acc = vertex_element(ctx, v);
    for (const Path& alpha : paths_from(g, v, k)) {
        Element pe = path_element(ctx, alpha);
        acc = sub(acc, mul(ctx, pe, star(pe)));
    }
    return acc.is_zero();
}

// ---- matrix representations ----

Matrix matrix_zero(std::size_t dim, unsigned characteristic) {
    return Matrix(dim, std::vector<Scalar>(dim, Scalar::zero(characteristic)));
}

Matrix matrix_unit(std::size_t dim, std::size_t row, std::size_t col,
                   unsigned characteristic) {
    Matrix m = matrix_zero(dim, characteristic);
    m[row][col] = Scalar::one(characteristic);
    return m;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += b[i][j];
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out = matrix_zero(n, n == 0 || a[0].empty() ? 0 : a[0][0].characteristic());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

bool mat_is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& s : row)
            if (!s.is_zero()) return false;
    return true;
}

namespace {

void check_family_shape(const MatrixFamily& fam, const Graph& g) {
    auto check_dims = [&](const Matrix& m, const std::string& name) {
        if (m.size() != fam.dim)
            throw PreconditionError("matrix " + name + " has wrong dimension");
        for (const auto& row : m)
            if (row.size() != fam.dim)
                throw PreconditionError("matrix " + name + " is not square");
    };
    for (const auto& v : g.vertices()) {
        auto it = fam.p.find(v);
        if (it == fam.p.end())
            throw PreconditionError("family is missing p[" + v + "]");
        check_dims(it->second, "p[" + v + "]");
    }
    for (const Edge& e : g.edges()) {
        auto ix = fam.x.find(e.id);
        if (ix == fam.x.end())
            throw PreconditionError("family is missing x[" + e.id + "]");
        check_dims(ix->second, "x[" + e.id + "]");
        auto iy = fam.y.find(e.id);
        if (iy == fam.y.end())
            throw PreconditionError("family is missing y[" + e.id + "]");
        check_dims(iy->second, "y[" + e.id + "]");
    }
}

bool mat_eq(const Matrix& a, const Matrix& b) { return a == b; }

} // namespace

RelationReport check_tck_family(const MatrixFamily& fam, const Graph& g) {
    check_family_shape(fam, g);
    RelationReport report;
    auto violate = [&](const std::string& what) {
        report.ok = false;
        report.violations.push_back(what);
    };
    for (const auto& v : g.vertices()) {
        const Matrix& pv = fam.p.at(v);
        if (!mat_eq(mat_mul(pv, pv), pv)) violate("p[" + v + "] is not idempotent");
        for (const auto& w : g.vertices()) {
            if (v == w) continue;
            if (!mat_is_zero(mat_mul(pv, fam.p.at(w))))
                violate("p[" + v + "] p[" + w + "] != 0");
        }
    }
    for (const Edge& e : g.edges()) {
        const Matrix& xe = fam.x.at(e.id);
        const Matrix& ye = fam.y.at(e.id);
        if (!mat_eq(mat_mul(fam.p.at(e.src), xe), xe))
            violate("p[" + e.src + "] x[" + e.id + "] != x[" + e.id + "]");
        if (!mat_eq(mat_mul(xe, fam.p.at(e.dst)), xe))
            violate("x[" + e.id + "] p[" + e.dst + "] != x[" + e.id + "]");
        if (!mat_eq(mat_mul(fam.p.at(e.dst), ye), ye))
            violate("p[" + e.dst + "] y[" + e.id + "] != y[" + e.id + "]");
        if (!mat_eq(mat_mul(ye, fam.p.at(e.src)), ye))
            violate("y[" + e.id + "] p[" + e.src + "] != y[" + e.id + "]");
        for (const Edge& f : g.edges()) {
            Matrix prod = mat_mul(ye, fam.x.at(f.id));
            if (e.id == f.id) {
                if (!mat_eq(prod, fam.p.at(e.dst)))
                    violate("y[" + e.id + "] x[" + f.id + "] != p[" + e.dst + "]");
            } else if (!mat_is_zero(prod)) {
                violate("y[" + e.id + "] x[" + f.id + "] != 0");
            }
        }
    }
    return report;
}

InjectivityVerdict tck_injectivity_verdict(const MatrixFamily& fam, const Graph& g) {
    RelationReport rel = check_tck_family(fam, g);
    if (!rel.ok)
        throw PreconditionError("family violates the TCK relations: " + rel.violations[0]);
    InjectivityVerdict verdict;
    for (const auto& v : g.vertices()) {
        if (mat_is_zero(fam.p.at(v))) {
            verdict.injective = false;
            verdict.reasons.push_back("p[" + v + "] = 0");
        }
    }
    for (const auto& v : g.vertices()) {
        if (g.is_sink(v)) continue;
        Matrix sum = matrix_zero(
            fam.dim, fam.dim == 0 ? 0 : fam.p.at(v)[0][0].characteristic());
        for (auto ei : g.out_edges(v)) {
            const Edge& e = g.edges()[ei];
            sum = mat_add(sum, mat_mul(fam.x.at(e.id), fam.y.at(e.id)));
        }
        if (mat_eq(fam.p.at(v), sum)) {
            verdict.injective = false;
            verdict.reasons.push_back("p[" + v + "] = sum_{e in vE^1} x[e] y[e]");
        }
    }
    return verdict;
}

Matrix evaluate(const Element& a, const MatrixFamily& fam, const AlgebraContext& ctx) {
    const Graph& g = ctx.graph();
    RelationReport rel = check_tck_family(fam, g);
    if (!rel.ok)
        throw PreconditionError("family violates the TCK relations: " + rel.violations[0]);
    for (const auto& v : ctx.relations()) {
        Matrix sum = matrix_zero(fam.dim, ctx.characteristic());
        for (auto ei : g.out_edges(v)) {
            const Edge& e = g.edges()[ei];
            sum = mat_add(sum, mat_mul(fam.x.at(e.id), fam.y.at(e.id)));
        }
        if (!mat_eq(fam.p.at(v), sum))
            throw PreconditionError("family violates CK2 at relation vertex '" + v + "'");
    }
    Matrix out = matrix_zero(fam.dim, ctx.characteristic());
    for (const auto& [m, c] : a.terms()) {
        Matrix acc = fam.p.at(m.alpha.range(g));
        for (auto it = m.alpha.edges.rbegin(); it != m.alpha.edges.rend(); ++it)
            acc = mat_mul(fam.x.at(*it), acc);
        for (auto it = m.beta.edges.rbegin(); it != m.beta.edges.rend(); ++it)
            acc = mat_mul(acc, fam.y.at(*it));
        for (std::size_t i = 0; i < fam.dim; ++i)
            for (std::size_t j = 0; j < fam.dim; ++j) out[i][j] += c * acc[i][j];
    }
    return out;
}

} // namespace cpw
