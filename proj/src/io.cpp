#include "konig/io.hpp"

#include <fstream>
#include <sstream>

#include "konig/error.hpp"

namespace konig::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::kParse, what); }

std::vector<std::string> label_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) parse_error(std::string("graph needs an array \"") + key + "\"");
  std::vector<std::string> out;
  for (const Json& x : j[key]) {
    if (x.is_string()) {
      out.push_back(x.get<std::string>());
    } else if (x.is_number_integer()) {
      out.push_back(std::to_string(x.get<long long>()));
    } else {
      parse_error(std::string("entries of \"") + key + "\" must be strings or integers");
    }
  }
  return out;
}

std::string label_of(const Json& x) {
  if (x.is_string()) return x.get<std::string>();
  if (x.is_number_integer()) return std::to_string(x.get<long long>());
  parse_error("vertex labels must be strings or integers");
}

std::vector<std::pair<std::string, std::string>> pair_list(const Json& j) {
  if (!j.is_array()) parse_error("expected an array of [a, b] pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2) parse_error("each pair must be a two-element array");
    out.emplace_back(label_of(e[0]), label_of(e[1]));
  }
  return out;
}

VertexId lookup(const BipartiteGraph& g, const std::string& label) {
  const auto v = g.find_label(label);
  if (!v) throw Error(ErrorKind::kUnknownVertex, "no vertex labelled '" + label + "'");
  return *v;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(origin + ": " + e.what());
  }
}

}  // namespace

BipartiteGraph graph_from_json(const Json& j) {
  if (!j.is_object()) parse_error("graph must be a JSON object");
  const auto left = label_list(j, "left");
  const auto right = label_list(j, "right");
  if (!j.contains("edges")) parse_error("graph needs an array \"edges\"");
  return build_graph_from_labels(left, right, pair_list(j["edges"]));
}

BipartiteGraph graph_from_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a;
    std::string b;
    std::string extra;
    if (!(fields >> a) || a.front() == '#') continue;
    if (!(fields >> b) || (fields >> extra)) parse_error("line " + std::to_string(line_no) + ": expected 'u v'");
    edges.emplace_back(a, b);
  }
  if (edges.empty()) parse_error("edge list is empty");
  return build_graph_from_pairs(edges);
}

BipartiteGraph read_graph(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    return graph_from_json(parse(text, path.string()));
  }
  std::istringstream in(text);
  return graph_from_edge_list(in);
}

Json read_json(const std::filesystem::path& path) { return parse(slurp(path), path.string()); }

Matching matching_from_json(const BipartiteGraph& g, const Json& j) {
  const Json& list = j.is_object() && j.contains("matching") ? j["matching"] : j;
  Matching m(g);
  for (const auto& [a, b] : pair_list(list)) m.insert(g, Edge{lookup(g, a), lookup(g, b)});
  return m;
}

Matching read_matching(const BipartiteGraph& g, const std::filesystem::path& path) {
  return matching_from_json(g, read_json(path));
}

VertexSet cover_from_json(const BipartiteGraph& g, const Json& j) {
  const Json& list = j.is_object() && j.contains("cover") ? j["cover"] : j;
  if (!list.is_array()) parse_error("cover must be an array of labels");
  std::vector<VertexId> ids;
  for (const Json& x : list) ids.push_back(lookup(g, label_of(x)));
  return make_vertex_set(std::move(ids));
}

VertexSet read_cover(const BipartiteGraph& g, const std::filesystem::path& path) {
  return cover_from_json(g, read_json(path));
}

Json graph_to_json(const BipartiteGraph& g) {
  Json j;
  j["left"] = Json::array();
  j["right"] = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) j[g.side(v) == Side::kLeft ? "left" : "right"].push_back(g.label(v));
  j["edges"] = Json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({g.label(e.left), g.label(e.right)});
  return j;
}

Json matching_to_json(const BipartiteGraph& g, const Matching& m) {
  require_host(g, m);
  Json j = Json::array();
  for (const Edge& e : m.edges()) j.push_back({g.label(e.left), g.label(e.right)});
  return j;
}

Json vertices_to_json(const BipartiteGraph& g, const VertexSet& s) {
  Json j = Json::array();
  for (VertexId v : s) j.push_back(g.label(v));
  return j;
}

Json path_to_json(const BipartiteGraph& g, const AlternatingPath& p) {
  Json j = Json::array();
  for (VertexId v : p.vertices) j.push_back(g.label(v));
  return j;
}

Json cover_to_json(const BipartiteGraph& g, const VertexSet& cover) {
  VertexCover c{cover, is_vertex_cover(g, cover)};
  const CoverVerdict verdict = c.verdict(g);
  Json j;
  j["cover"] = vertices_to_json(g, cover);
  j["is_cover"] = verdict.is_cover;
  j["is_minimal"] = verdict.is_minimal;
  j["is_minimum"] = verdict.is_minimum;
  return j;
}

}  // namespace konig::io
