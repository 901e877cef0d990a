#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "cpw/algebra.hpp"
#include "cpw/graph.hpp"
#include "cpw/rsystem.hpp"
#include "cpw/structure.hpp"

namespace cpw {

using json = nlohmann::json;

// Schema-checked loaders; violations raise SchemaError with a JSON pointer.
Graph graph_from_json(const json& j);
Graph load_graph_file(const std::string& path);

// Canonical serialization (sorted keys, declaration order preserved inside
// arrays); the digest is FNV-1a over this string.
json graph_to_json(const Graph& g);
std::string canonical_graph_json(const Graph& g);
std::uint64_t fnv1a(const std::string& s);
std::string graph_digest(const Graph& g);

// "all" | "none" | explicit vertex list; sinks are rejected by name.
VertexSet relations_from_json(const Graph& g, const json& spec);
VertexSet relations_from_string(const Graph& g, const std::string& spec);

Scalar scalar_from_json(const json& j, unsigned characteristic,
                        const std::string& pointer);
json scalar_to_json(const Scalar& s);

MatrixFamily family_from_json(const json& j, unsigned characteristic = 0);
MatrixFamily load_family_file(const std::string& path, unsigned characteristic = 0);

json vertex_set_to_json(const Graph& g, const VertexSet& s);
json closed_path_to_json(const ClosedPath& c);
json eta_map_to_json(const EtaMap& eta);
json analysis_report_to_json(const Graph& g, const AnalysisReport& r);

} // namespace cpw
