#include "zf/io.hpp"

#include "zf/error.hpp"
#include "zf/generators.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

namespace zf {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

std::string_view symmetry_name(Symmetry s) {
  switch (s) {
  case Symmetry::Off: return "off";
  case Symmetry::On: return "on";
  case Symmetry::CrossCheck: return "cross-check";
  }
  return "off";
}

} // namespace

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) parse_error("edge list must start with 'n m'");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      parse_error("expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    }
    if (u < 0 || v < 0) {
      throw Error(ErrorCode::InvalidEdge, "negative endpoint in edge " + std::to_string(i));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (in >> trailing) parse_error("unexpected trailing token '" + trailing + "'");
  return from_edge_list(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  if (const auto& f = g.family()) {
    Json fam{{"name", to_string(f->kind)}};
    switch (f->kind) {
    case FamilyKind::Gear: fam["m"] = f->m; fam["r"] = f->param; break;
    case FamilyKind::Helm: fam["m"] = f->m; fam["s"] = f->param; break;
    default: fam["n"] = f->m; break;
    }
    j["family"] = fam;
  } else {
    j["family"] = nullptr;
  }
  Json vertices = Json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back({{"index", v}, {"label", g.label(v)}, {"role", to_string(g.role(v))}});
  }
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  try {
    // Family provenance regenerates the graph and must agree with the edges.
    if (j.contains("family") && !j.at("family").is_null()) {
      const Json& fam = j.at("family");
      const auto kind = family_from_string(fam.at("name").get<std::string>());
      if (!kind) parse_error("unknown family in graph JSON");
      Graph g;
      switch (*kind) {
      case FamilyKind::Gear: g = gear({fam.at("m").get<std::size_t>(), fam.at("r").get<std::size_t>()}); break;
      case FamilyKind::Helm: g = helm({fam.at("m").get<std::size_t>(), fam.at("s").get<std::size_t>()}); break;
      case FamilyKind::Wheel: g = wheel(fam.at("n").get<std::size_t>()); break;
      case FamilyKind::Path: g = path(fam.at("n").get<std::size_t>()); break;
      case FamilyKind::Cycle: g = cycle(fam.at("n").get<std::size_t>()); break;
      }
      if (j.contains("edges")) {
        std::set<Edge> listed;
        for (const auto& e : j.at("edges")) {
          auto u = e.at(0).get<Vertex>();
          auto v = e.at(1).get<Vertex>();
          listed.insert({std::min(u, v), std::max(u, v)});
        }
        const auto generated = g.edges();
        if (j.at("n").get<std::size_t>() != g.vertex_count() ||
            !std::equal(listed.begin(), listed.end(), generated.begin(), generated.end())) {
          parse_error("graph JSON edges disagree with its family parameters");
        }
      }
      return g;
    }

    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    Graph g = from_edge_list(n, edges);
    if (j.contains("vertices")) {
      std::vector<Role> roles(n, Role::Plain);
      std::vector<std::string> labels(n);
      for (Vertex v = 0; v < n; ++v) labels[v] = std::to_string(v);
      for (const auto& vj : j.at("vertices")) {
        const auto v = vj.at("index").get<Vertex>();
        if (v >= n) parse_error("vertex annotation index out of range");
        if (vj.contains("label")) labels[v] = vj.at("label").get<std::string>();
        if (vj.contains("role")) {
          const auto r = role_from_string(vj.at("role").get<std::string>());
          if (!r) parse_error("unknown role in graph JSON");
          roles[v] = *r;
        }
      }
      g = g.annotated(std::move(roles), std::move(labels), std::nullopt);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("malformed graph JSON: ") + e.what());
  }
}

Graph load_graph(const std::filesystem::path& file) {
  std::string text;
  if (file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file);
    if (!in) parse_error("cannot open " + file.string());
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      parse_error(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  std::istringstream in(text);
  return read_edge_list(in);
}

Json chronology_to_json(const Chronology& c) {
  Json steps = Json::array();
  for (const auto& step : c.steps) {
    Json s = Json::array();
    for (const Force& f : step) s.push_back({{"src", f.source}, {"dst", f.target}});
    steps.push_back(std::move(s));
  }
  return Json{{"initial", c.initial.members()}, {"steps", std::move(steps)}};
}

ChronologyScript chronology_script_from_json(const Json& j) {
  try {
    ChronologyScript script;
    if (j.contains("initial")) script.initial = j.at("initial").get<std::vector<Vertex>>();
    for (const auto& step : j.at("steps")) {
      ForceStep fs;
      for (const auto& f : step) fs.push_back({f.at("src").get<Vertex>(), f.at("dst").get<Vertex>()});
      script.steps.push_back(std::move(fs));
    }
    return script;
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("malformed chronology JSON: ") + e.what());
  }
}

Json chain_set_to_json(const ChainSet& chains) {
  Json out = Json::array();
  for (const auto& chain : chains.chains) out.push_back(chain);
  return out;
}

Json search_report_to_json(const SearchReport& r) {
  Json j;
  j["n"] = r.n;
  j["z"] = r.z;
  j["witnesses"] = r.zfs_witnesses;
  if (r.pt) {
    j["pt"] = *r.pt;
    j["pt_is_upper_bound"] = r.pt_is_upper_bound;
    j["pt_witnesses"] = r.pt_witnesses;
    j["witness_pt"] = r.witness_pt;
  } else {
    j["pt"] = nullptr;
  }
  j["lower_bound"] = r.lower_bound;
  j["sets_examined"] = r.sets_examined;
  j["closure_calls"] = r.closure_calls;
  if (r.minimality) {
    j["minimality"] = {{"cardinality", r.minimality->cardinality},
                       {"sets_examined", r.minimality->sets_examined},
                       {"all_failed", r.minimality->all_failed}};
  }
  j["symmetry"] = {{"mode", symmetry_name(r.symmetry)}, {"group_order", r.symmetry_group_order}};
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

Json theorem_case_to_json(const TheoremCase& c) {
  auto opt = [](const auto& v) -> Json { return v ? Json(*v) : Json(nullptr); };
  Json j;
  j["family"] = to_string(c.family);
  j["m"] = c.m;
  j[c.family == TheoremFamily::Gear ? "r" : "s"] = c.param;
  j["vertices"] = c.vertices;
  j["predicted"] = {{"z", c.predicted.z}, {"pt", c.predicted.pt}};
  j["computed"] = {{"z", opt(c.computed_z)}, {"pt", opt(c.computed_pt)}};
  j["status"] = to_string(c.status);
  j["minimality_proved"] = opt(c.minimality_proved);
  j["construction_ok"] = opt(c.construction_ok);
  if (c.lemmas.applicable) {
    j["lemmas"] = {{"witnesses_checked", c.lemmas.witnesses_checked},
                   {"pendants_per_chain", c.lemmas.pendants_per_chain},
                   {"run_upper_bound", c.lemmas.run_upper_bound},
                   {"run_required", c.lemmas.run_required},
                   {"violations", c.lemmas.violations}};
  }
  j["minimum_zfs_count"] = c.minimum_zfs_count;
  j["sets_examined"] = c.sets_examined;
  j["wall_time_ms"] = c.wall_time_ms;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      parse_error("bad vertex list '" + std::string(text) + "'");
    }
    Vertex v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<Vertex>(text[i] - '0');
      ++i;
    }
    out.push_back(v);
  }
  return out;
}

void write_dot(std::ostream& out, const Graph& g, const VertexSet* initial,
               const ChainSet* chains) {
  std::set<Edge> bold;
  if (chains) {
    for (const auto& chain : chains->chains) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        bold.insert({std::min(chain[i], chain[i + 1]), std::max(chain[i], chain[i + 1])});
      }
    }
  }
  out << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v) << '"';
    if (initial && initial->contains(v)) out << ", style=filled, fillcolor=\"#4a90d9\"";
    out << "];\n";
  }
  for (auto e : g.edges()) {
    out << "  " << e.first << " -- " << e.second;
    if (bold.count(e)) out << " [style=bold, penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
}

} // namespace zf
