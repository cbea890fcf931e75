#pragma once

#include "zf/forcing.hpp"
#include "zf/graph.hpp"
#include "zf/search.hpp"
#include "zf/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace zf {

using Json = nlohmann::ordered_json;

// Edge list: "n m" header, then m lines "u v", 0-indexed.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// {"n", "m", "family", "vertices": [{"index", "label", "role"}], "edges"}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Reads an edge list or graph JSON (detected by a leading '{'); "-" is stdin.
Graph load_graph(const std::filesystem::path& file);

// {"initial": [..], "steps": [[{"src", "dst"}, ..], ..]}
Json chronology_to_json(const Chronology& c);

struct ChronologyScript {
  std::optional<std::vector<Vertex>> initial;
  std::vector<ForceStep> steps;
};

ChronologyScript chronology_script_from_json(const Json& j);

Json chain_set_to_json(const ChainSet& chains);

Json search_report_to_json(const SearchReport& r);
Json theorem_case_to_json(const TheoremCase& c);

/// "0,6,1" or "0 6 1"; throws ParseError on anything else.
std::vector<Vertex> parse_vertex_list(std::string_view text);

/// Initial blue vertices filled, chain edges bold.
void write_dot(std::ostream& out, const Graph& g, const VertexSet* initial = nullptr,
               const ChainSet* chains = nullptr);

} // namespace zf
