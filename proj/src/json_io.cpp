#include "cpw/json_io.hpp"

#include <fstream>
#include <set>

namespace cpw {

namespace {

[[noreturn]] void schema_fail(const std::string& what, const std::string& pointer) {
    throw SchemaError(what + " at " + pointer);
}

std::string require_string(const json& j, const std::string& pointer) {
    if (!j.is_string()) schema_fail("expected a string", pointer);
    return j.get<std::string>();
}

} // namespace

Graph graph_from_json(const json& j) {
    if (!j.is_object()) schema_fail("expected an object", "/");
    if (!j.contains("vertices")) schema_fail("missing \"vertices\"", "/vertices");
    if (!j.contains("edges")) schema_fail("missing \"edges\"", "/edges");
    const json& jv = j.at("vertices");
    const json& je = j.at("edges");
    if (!jv.is_array()) schema_fail("expected an array", "/vertices");
    if (!je.is_array()) schema_fail("expected an array", "/edges");

    std::vector<std::string> vertices;
    std::set<std::string> vseen;
    for (std::size_t i = 0; i < jv.size(); ++i) {
        const std::string ptr = "/vertices/" + std::to_string(i);
        std::string v = require_string(jv[i], ptr);
        if (!is_valid_identifier(v)) schema_fail("invalid identifier", ptr);
        if (!vseen.insert(v).second) schema_fail("duplicate vertex", ptr);
        vertices.push_back(std::move(v));
    }
    std::vector<Edge> edges;
    std::set<std::string> eseen;
    for (std::size_t i = 0; i < je.size(); ++i) {
        const std::string ptr = "/edges/" + std::to_string(i);
        const json& row = je[i];
        if (!row.is_object()) schema_fail("expected an object", ptr);
        for (const char* key : {"id", "src", "dst"})
            if (!row.contains(key))
                schema_fail(std::string("missing \"") + key + "\"", ptr + "/" + key);
        Edge e;
        e.id = require_string(row.at("id"), ptr + "/id");
        e.src = require_string(row.at("src"), ptr + "/src");
        e.dst = require_string(row.at("dst"), ptr + "/dst");
        if (!is_valid_identifier(e.id)) schema_fail("invalid identifier", ptr + "/id");
        if (!eseen.insert(e.id).second) schema_fail("duplicate edge", ptr + "/id");
        if (!vseen.count(e.src)) schema_fail("unknown vertex", ptr + "/src");
        if (!vseen.count(e.dst)) schema_fail("unknown vertex", ptr + "/dst");
        edges.push_back(std::move(e));
    }
    return Graph(std::move(vertices), std::move(edges));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open graph file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
    return graph_from_json(j);
}

json graph_to_json(const Graph& g) {
    json jv = json::array();
    for (const auto& v : g.vertices()) jv.push_back(v);
    json je = json::array();
    for (const Edge& e : g.edges())
        je.push_back({{"dst", e.dst}, {"id", e.id}, {"src", e.src}});
    return json{{"edges", je}, {"vertices", jv}};
}

std::string canonical_graph_json(const Graph& g) { return graph_to_json(g).dump(); }

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string graph_digest(const Graph& g) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(canonical_graph_json(g))));
    return buf;
}

namespace {

VertexSet relations_from_list(const Graph& g, const std::vector<std::string>& names) {
    VertexSet x;
    for (const auto& v : names) {
        if (!g.has_vertex(v))
            throw IdentifierError("relation set names unknown vertex '" + v + "'");
        if (g.is_sink(v))
            throw IdentifierError("relation set contains the sink '" + v + "'");
        x.insert(v);
    }
    return x;
}

} // namespace

VertexSet relations_from_json(const Graph& g, const json& spec) {
    if (spec.is_string()) {
        const std::string s = spec.get<std::string>();
        if (s == "all") return regular_vertex_set(g);
        if (s == "none") return {};
        throw SchemaError("relations must be \"all\", \"none\" or a vertex list");
    }
    if (!spec.is_array())
        throw SchemaError("relations must be \"all\", \"none\" or a vertex list");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < spec.size(); ++i)
        names.push_back(require_string(spec[i], "/relations/" + std::to_string(i)));
    return relations_from_list(g, names);
}

VertexSet relations_from_string(const Graph& g, const std::string& spec) {
    if (spec == "all") return regular_vertex_set(g);
    if (spec == "none" || spec.empty()) return {};
    std::vector<std::string> names;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        if (comma == std::string::npos) comma = spec.size();
        names.push_back(spec.substr(start, comma - start));
        start = comma + 1;
    }
    return relations_from_list(g, names);
}

Scalar scalar_from_json(const json& j, unsigned characteristic,
                        const std::string& pointer) {
    if (j.is_number_integer())
        return Scalar(j.get<long long>(), characteristic);
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Scalar(BigInt(s), 1, characteristic);
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den <= 0) schema_fail("expected a positive denominator", pointer);
            return Scalar(num, den, characteristic);
        } catch (const std::runtime_error& e) {
            throw SchemaError(std::string("invalid rational \"") + s + "\" at " +
                              pointer);
        }
    }
    schema_fail("expected an integer or \"n/d\" string", pointer);
}

json scalar_to_json(const Scalar& s) {
    BigInt den = boost::multiprecision::denominator(s.value());
    BigInt num = boost::multiprecision::numerator(s.value());
    if (den == 1 && num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(num);
    return s.str();
}

namespace {

std::map<std::string, Matrix> matrices_from_json(const json& j, std::size_t dim,
                                                 unsigned characteristic,
                                                 const std::string& pointer) {
    if (!j.is_object()) schema_fail("expected an object", pointer);
    std::map<std::string, Matrix> out;
    for (const auto& [name, rows] : j.items()) {
        const std::string mptr = pointer + "/" + name;
        if (!rows.is_array() || rows.size() != dim)
            schema_fail("expected " + std::to_string(dim) + " rows", mptr);
        Matrix m;
        for (std::size_t i = 0; i < dim; ++i) {
            const json& row = rows[i];
            const std::string rptr = mptr + "/" + std::to_string(i);
            if (!row.is_array() || row.size() != dim)
                schema_fail("expected " + std::to_string(dim) + " entries", rptr);
            std::vector<Scalar> r;
            for (std::size_t k = 0; k < dim; ++k)
                r.push_back(scalar_from_json(row[k], characteristic,
                                             rptr + "/" + std::to_string(k)));
            m.push_back(std::move(r));
        }
        out[name] = std::move(m);
    }
    return out;
}

} // namespace

MatrixFamily family_from_json(const json& j, unsigned characteristic) {
    if (!j.is_object()) schema_fail("expected an object", "/");
    if (!j.contains("dim") || !j.at("dim").is_number_unsigned())
        schema_fail("expected a non-negative integer", "/dim");
    MatrixFamily fam;
    fam.dim = j.at("dim").get<std::size_t>();
    for (const char* key : {"p", "x", "y"})
        if (!j.contains(key)) schema_fail("missing section", std::string("/") + key);
    fam.p = matrices_from_json(j.at("p"), fam.dim, characteristic, "/p");
    fam.x = matrices_from_json(j.at("x"), fam.dim, characteristic, "/x");
    fam.y = matrices_from_json(j.at("y"), fam.dim, characteristic, "/y");
    return fam;
}

MatrixFamily load_family_file(const std::string& path, unsigned characteristic) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open family file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
    return family_from_json(j, characteristic);
}

json vertex_set_to_json(const Graph& g, const VertexSet& s) {
    json out = json::array();
    for (const auto& v : ordered_vertices(g, s)) out.push_back(v);
    return out;
}

json closed_path_to_json(const ClosedPath& c) {
    json edges = json::array();
    for (const auto& e : c.path.edges) edges.push_back(e);
    return json{{"base", c.path.base}, {"edges", edges}};
}

json eta_map_to_json(const EtaMap& eta) {
    json map = json::object();
    for (const auto& [v, img] : eta.map) {
        json path = json::array();
        for (const auto& e : img.first.edges) path.push_back(e);
        map[v] = json{{"coeff", img.second.str()}, {"path", path}};
    }
    return json{{"map", map}, {"n", eta.n}};
}

json analysis_report_to_json(const Graph& g, const AnalysisReport& r) {
    json out;
    out["conditionL"] = json{{"holds", r.condition_l.holds}};
    if (r.condition_l.witness)
        out["conditionL"]["witness"] = closed_path_to_json(*r.condition_l.witness);
    out["conditionK"] = json{{"holds", r.condition_k.holds}};
    if (r.condition_k.witness) out["conditionK"]["witness"] = *r.condition_k.witness;
    out["maximal"] = r.maximal;
    out["superMaximal"] = json{{"holds", r.super_maximal.holds}};
    if (r.super_maximal.witness) {
        // witness lives in the augmented graph; report it verbatim
        json w = json::array();
        for (const auto& v : *r.super_maximal.witness) w.push_back(v);
        out["superMaximal"]["witness"] = w;
    }
    out["simple"] = json{{"verdict", r.simple}};
    if (!r.simple) out["simple"]["reason"] = r.simple_reason;
    out["ckUniqueness"] = r.ck_uniqueness;
    out["everyNonzeroIdealContainsGraded"] = r.every_nonzero_ideal_contains_graded;
    out["allIdealsGraded"] = r.all_ideals_graded;
    json ideals = json::array();
    for (const auto& h : r.graded_ideals) {
        json hj = json::array();
        for (const auto& v : h) hj.push_back(v);
        ideals.push_back(hj);
    }
    out["gradedIdeals"] = ideals;
    out["jInfinity"] = vertex_set_to_json(g, r.j_inf);
    return out;
}

} // namespace cpw
