#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include <json.hpp>

#include "konig/graph.hpp"
#include "konig/konig.hpp"
#include "konig/matching.hpp"
#include "konig/path_structure.hpp"

namespace konig::io {

using Json = nlohmann::json;

/// {"left": [labels], "right": [labels], "edges": [[a, b], ...]}.
/// Throws Parse on shape errors plus the graph builder's errors.
BipartiteGraph graph_from_json(const Json& j);

/// One "u v" pair per line; blank lines and lines starting with '#' are
/// skipped. Sides come from a two-colouring.
BipartiteGraph graph_from_edge_list(std::istream& in);

/// JSON when the first non-blank character is '{', edge list otherwise.
/// Throws Io, Parse.
BipartiteGraph read_graph(const std::filesystem::path& path);

/// [[a, b], ...] by label; {"matching": [...]} is accepted too.
Matching matching_from_json(const BipartiteGraph& g, const Json& j);
Matching read_matching(const BipartiteGraph& g, const std::filesystem::path& path);

/// [label, ...]; {"cover": [...]} is accepted too.
VertexSet cover_from_json(const BipartiteGraph& g, const Json& j);
VertexSet read_cover(const BipartiteGraph& g, const std::filesystem::path& path);

/// Parses a whole file as JSON. Throws Io, Parse.
Json read_json(const std::filesystem::path& path);

Json graph_to_json(const BipartiteGraph& g);
Json matching_to_json(const BipartiteGraph& g, const Matching& m);
Json vertices_to_json(const BipartiteGraph& g, const VertexSet& s);
Json path_to_json(const BipartiteGraph& g, const AlternatingPath& p);

/// {"cover": [...], "is_cover": .., "is_minimal": .., "is_minimum": ..}
Json cover_to_json(const BipartiteGraph& g, const VertexSet& cover);

}  // namespace konig::io
