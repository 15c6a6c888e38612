#include "temperedkit/io.hpp"

#include <fstream>
#include <sstream>

namespace tempered::io {

namespace {

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

json parse_json_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

long long to_count(const json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string("expected integer ") + what);
  return v.get<long long>();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TemperedPoset parse_poset(const std::string& text) {
  int n = -1;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> temp;

  if (looks_like_json(text)) {
    json j = parse_json_or_throw(text);
    n = static_cast<int>(to_count(j.at("points"), "points"));
    if (j.contains("covers")) {
      for (const auto& pair : j.at("covers")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw ParseError("covers must be [i, j] pairs");
        }
        pairs.emplace_back(static_cast<int>(to_count(pair[0], "cover endpoint")) - 1,
                           static_cast<int>(to_count(pair[1], "cover endpoint")) - 1);
      }
    }
    if (j.contains("temp")) {
      for (const auto& v : j.at("temp")) {
        temp.push_back(static_cast<int>(to_count(v, "temperature")));
      }
    }
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      std::string keyword;
      if (!(fields >> keyword)) continue;
      if (keyword == "points") {
        if (!(fields >> n)) throw ParseError("points line needs a count");
      } else if (keyword == "cover" || keyword == "rel") {
        int i, j;
        if (!(fields >> i >> j)) throw ParseError(keyword + " line needs two points");
        pairs.emplace_back(i - 1, j - 1);
      } else if (keyword == "temp") {
        int t;
        while (fields >> t) temp.push_back(t);
      } else {
        throw ParseError("unknown poset keyword: " + keyword);
      }
    }
  }

  if (n < 1) throw ParseError("poset file never declared a positive point count");
  if (n > Poset::kMaxPoints) throw ParseError("point count exceeds 16");
  if (temp.empty()) temp.assign(n, 0);
  if (static_cast<int>(temp.size()) != n) {
    throw ParseError("temperature list length does not match point count");
  }
  for (int t : temp) {
    if (t != 0 && t != 1) throw ParseError("temperatures must be 0 or 1");
  }
  return TemperedPoset(Poset::from_cover_relations(n, pairs), std::move(temp));
}

json poset_to_json(const TemperedPoset& tp) {
  json covers = json::array();
  for (auto [i, j] : transitive_reduction(tp.poset)) {
    covers.push_back(json::array({i + 1, j + 1}));
  }
  return json{{"format_version", kFormatVersion},
              {"points", tp.poset.size()},
              {"covers", covers},
              {"temp", tp.temp}};
}

Graph parse_graph(const std::string& text) {
  int n = -1;
  std::vector<std::tuple<int, int, long long>> edges;

  if (looks_like_json(text)) {
    json j = parse_json_or_throw(text);
    n = static_cast<int>(to_count(j.at("vertices"), "vertices"));
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3)) {
          throw ParseError("edges must be [u, v] or [u, v, mult]");
        }
        long long mult = e.size() == 3 ? to_count(e[2], "multiplicity") : 1;
        edges.emplace_back(static_cast<int>(to_count(e[0], "edge endpoint")) - 1,
                           static_cast<int>(to_count(e[1], "edge endpoint")) - 1, mult);
      }
    }
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      std::string keyword;
      if (!(fields >> keyword)) continue;
      if (keyword == "vertices") {
        if (!(fields >> n)) throw ParseError("vertices line needs a count");
      } else if (keyword == "edge") {
        int u, v;
        long long mult = 1;
        if (!(fields >> u >> v)) throw ParseError("edge line needs two vertices");
        fields >> mult;
        edges.emplace_back(u - 1, v - 1, mult);
      } else {
        throw ParseError("unknown graph keyword: " + keyword);
      }
    }
  }

  if (n < 1) throw ParseError("graph file never declared a positive vertex count");
  if (n > Graph::kMaxVertices) throw ParseError("vertex count exceeds 20");
  for (auto [u, v, m] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("edge endpoint out of range");
    }
    if (m < 0) throw ParseError("edge multiplicity must be non-negative");
  }
  return Graph::from_edges(n, edges);
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (int u = 0; u < g.vertices(); ++u) {
    for (int v = 0; v < g.vertices(); ++v) {
      if (g.edge_count(u, v) > 0) {
        edges.push_back(json::array({u + 1, v + 1, g.edge_count(u, v)}));
      }
    }
  }
  return json{{"format_version", kFormatVersion},
              {"vertices", g.vertices()},
              {"edges", edges}};
}

json group_to_json(const FinAbGroup& g) {
  json torsion = json::array();
  for (const Int& d : g.torsion) torsion.push_back(d.get_str());
  return json{{"rank", g.free_rank}, {"torsion", torsion}};
}

namespace {

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json hom_to_json(const GroupHom& h) {
  return json{{"source", group_to_json(h.source)},
              {"target", group_to_json(h.target)},
              {"matrix", matrix_to_json(h.matrix)}};
}

std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; v < Graph::kMaxVertices; ++v) {
    if ((s >> v) & 1u) out.push_back(v);
  }
  return out;
}

json vertex_array(VertexSet s) {
  json arr = json::array();
  for (int v : vertices_of(s)) arr.push_back(v + 1);
  return arr;
}

json filtered_k_to_json(const FilteredK& fk) {
  json entries = json::array();
  for (const auto& e : fk.entries) {
    json gens = json::array();
    for (const auto& img : e.k.k0.group.generator_images) {
      json coords = json::array();
      for (const Int& c : img) coords.push_back(c.get_str());
      gens.push_back(std::move(coords));
    }
    entries.push_back(json{{"prim_subset", vertex_array(e.prim_subset.difference)},
                           {"vertices", vertex_array(e.vertex_set)},
                           {"k0", group_to_json(e.k.k0.group)},
                           {"k0_generators", gens},
                           {"k1", group_to_json(e.k.k1.group)}});
  }
  json triples = json::array();
  for (const auto& t : fk.triples) {
    triples.push_back(json{{"open_u", vertex_array(t.open_u)},
                           {"open_v", vertex_array(t.open_v)},
                           {"open_w", vertex_array(t.open_w)},
                           {"iota0", hom_to_json(t.maps.iota0)},
                           {"pi0", hom_to_json(t.maps.pi0)},
                           {"delta0", hom_to_json(t.maps.delta0)},
                           {"iota1", hom_to_json(t.maps.iota1)},
                           {"pi1", hom_to_json(t.maps.pi1)},
                           {"delta1", hom_to_json(t.maps.delta1)},
                           {"exact", t.maps.exact}});
  }
  return json{{"format_version", kFormatVersion},
              {"entries", entries},
              {"triples", triples}};
}

json classification_to_json(const ClassificationReport& report) {
  json comps = json::array();
  for (const auto& c : report.components) {
    comps.push_back(json{{"signature", c.label},
                         {"shape", shape_tags_string(c.shape)},
                         {"status", c.status},
                         {"resolved_status", c.resolved_status},
                         {"references", c.references},
                         {"notes", c.notes}});
  }
  return json{{"format_version", kFormatVersion}, {"components", comps}};
}

json status_table_to_json() {
  json records = json::array();
  for (const StatusRecord& rec : status_table()) {
    records.push_back(json{{"signature", rec.label()},
                           {"status", status_name(rec.status)},
                           {"references", rec.references},
                           {"shape", std::string(1, shape_letter(rec.shape))}});
  }
  return json{{"format_version", kFormatVersion}, {"records", records}};
}

namespace {

Status status_from_name(const std::string& name) {
  if (name == "CLASSIFIED") return Status::Classified;
  if (name == "CLASSIFIED_IF_FG_K") return Status::ClassifiedIfFgK;
  if (name == "CLASSIFIED_IF_UNITAL") return Status::ClassifiedIfUnital;
  if (name == "OPEN") return Status::Open;
  throw ParseError("unknown status name: " + name);
}

Shape shape_from_letter(const std::string& letter) {
  if (letter.size() == 1) {
    switch (letter[0]) {
      case 'L': return Shape::Linear;
      case 'A': return Shape::Accordion;
      case 'F': return Shape::Fan;
      case 'Y': return Shape::Y;
      case 'O': return Shape::O;
      default: break;
    }
  }
  throw ParseError("unknown shape letter: " + letter);
}

}  // namespace

std::vector<StatusRecord> status_records_from_json(const json& j) {
  std::vector<StatusRecord> records;
  for (const auto& r : j.at("records")) {
    StatusRecord rec;
    rec.sig = parse_signature(r.at("signature").get<std::string>());
    rec.status = status_from_name(r.at("status").get<std::string>());
    rec.references = r.at("references").get<std::vector<std::string>>();
    rec.shape = shape_from_letter(r.at("shape").get<std::string>());
    records.push_back(std::move(rec));
  }
  return records;
}

std::string shape_tags_string(const ShapeTag& tag) {
  std::string out = "[";
  for (std::size_t i = 0; i < tag.tags.size(); ++i) {
    if (i > 0) out += ",";
    out += shape_letter(tag.tags[i]);
  }
  out += "]";
  return out;
}

json analyze_to_json(const AnalyzeReport& r) {
  json covers = json::array();
  for (auto [i, j] : r.prim_covers) covers.push_back(json::array({i, j}));
  json strata = json::array();
  for (const auto& s : r.strata) {
    strata.push_back(json{{"vertices", s.vertices}, {"k0", s.k0}, {"k1", s.k1}});
  }
  json comps = json::array();
  for (const auto& c : r.components) {
    comps.push_back(json{{"signature", c.label},
                         {"shape", c.shape},
                         {"status", c.status},
                         {"resolved_status", c.resolved_status},
                         {"references", c.references},
                         {"notes", c.notes}});
  }
  json j{{"format_version", kFormatVersion},
         {"condition_k", r.condition_k},
         {"lattice_size", r.lattice_size},
         {"prim_points", r.prim_points},
         {"prim_covers", covers},
         {"temperatures", r.temperatures},
         {"strata", strata},
         {"components", comps}};
  if (!r.condition_k) j["witness"] = r.witness;
  return j;
}

AnalyzeReport analyze_from_json(const json& j) {
  AnalyzeReport r;
  r.condition_k = j.at("condition_k").get<bool>();
  if (j.contains("witness")) r.witness = j.at("witness").get<int>();
  r.lattice_size = j.at("lattice_size").get<int>();
  r.prim_points = j.at("prim_points").get<int>();
  for (const auto& pair : j.at("prim_covers")) {
    r.prim_covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  r.temperatures = j.at("temperatures").get<std::vector<int>>();
  for (const auto& s : j.at("strata")) {
    AnalyzeReport::Stratum st;
    st.vertices = s.at("vertices").get<std::vector<int>>();
    st.k0 = s.at("k0").get<std::string>();
    st.k1 = s.at("k1").get<std::string>();
    r.strata.push_back(std::move(st));
  }
  for (const auto& c : j.at("components")) {
    AnalyzeReport::Component comp;
    comp.label = c.at("signature").get<std::string>();
    comp.shape = c.at("shape").get<std::string>();
    comp.status = c.at("status").get<std::string>();
    comp.resolved_status = c.at("resolved_status").get<std::string>();
    comp.references = c.at("references").get<std::vector<std::string>>();
    comp.notes = c.at("notes").get<std::vector<std::string>>();
    r.components.push_back(std::move(comp));
  }
  return r;
}

}  // namespace tempered::io
