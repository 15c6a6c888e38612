#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "temperedkit/classdb.hpp"
#include "temperedkit/graphalg.hpp"
#include "temperedkit/poset.hpp"

namespace tempered::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Poset files: either the line format
//   points <n> / cover <i> <j> / rel <i> <j> / temp <t1> ... <tn>
// with '#' comments, or JSON {"points": n, "covers": [[i,j],...], "temp": [...]}.
// Points are 1-based on the wire. Temperatures default to all zero.
TemperedPoset parse_poset(const std::string& text);
json poset_to_json(const TemperedPoset& tp);

// Graph files: `vertices <n>` then `edge <u> <v> [mult]` lines with '#'
// comments, or JSON {"vertices": n, "edges": [[u,v,mult],...]}.
Graph parse_graph(const std::string& text);
json graph_to_json(const Graph& g);

std::string read_file(const std::string& path);

// Group as {"rank": r, "torsion": [d1,...]}; homs as integer matrices.
json group_to_json(const FinAbGroup& g);
json hom_to_json(const GroupHom& h);

// Full filtered K-theory: one entry per locally closed subset plus the six
// maps of every triple of opens, with subsets as sorted 1-based arrays.
json filtered_k_to_json(const FilteredK& fk);

json classification_to_json(const ClassificationReport& report);

// Status database export/import: one record per signature, so downstream
// tools can diff the table against future revisions.
json status_table_to_json();
std::vector<StatusRecord> status_records_from_json(const json& j);

// Everything cmd_analyze prints, as one machine-readable object.
struct AnalyzeReport {
  bool condition_k = true;
  int witness = 0;  // 1-based; meaningful only when condition_k is false
  int lattice_size = 0;
  int prim_points = 0;
  std::vector<std::pair<int, int>> prim_covers;  // 1-based
  std::vector<int> temperatures;
  struct Stratum {
    std::vector<int> vertices;  // 1-based
    std::string k0, k1;
    friend bool operator==(const Stratum&, const Stratum&) = default;
  };
  std::vector<Stratum> strata;
  struct Component {
    std::string label;
    std::string shape;
    std::string status;
    std::string resolved_status;
    std::vector<std::string> references;
    std::vector<std::string> notes;
    friend bool operator==(const Component&, const Component&) = default;
  };
  std::vector<Component> components;

  friend bool operator==(const AnalyzeReport&, const AnalyzeReport&) = default;
};

json analyze_to_json(const AnalyzeReport& report);
AnalyzeReport analyze_from_json(const json& j);

std::string shape_tags_string(const ShapeTag& tag);  // e.g. "[L,A]"

std::vector<int> vertices_of(VertexSet s);            // 0-based
json vertex_array(VertexSet s);                       // sorted, 1-based

}  // namespace tempered::io
