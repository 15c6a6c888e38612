#include "temperedkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "temperedkit/classdb.hpp"
#include "temperedkit/enumerate.hpp"
#include "temperedkit/io.hpp"

namespace tempered {

namespace {

using io::json;

std::string signature_display(const Signature& sig) {
  std::string label = format(sig);
  std::string computed =
      std::to_string(sig.n) + "." + to_hex(sig.a) + "." + std::to_string(sig.t);
  if (label != computed) return label + " (computed " + computed + ")";
  return label;
}

VertexSet parse_vertex_list(const std::string& text, const Graph& g) {
  if (text == "-" || text == "empty") return 0;
  if (text == "all") return g.all_vertices();
  VertexSet s = 0;
  std::istringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    if (field.empty()) continue;
    int v;
    try {
      v = std::stoi(field);
    } catch (const std::exception&) {
      throw ParseError("bad vertex '" + field + "' in set: " + text);
    }
    if (v < 1 || v > g.vertices()) {
      throw ParseError("vertex " + std::to_string(v) + " out of range");
    }
    s |= VertexSet(1) << (v - 1);
  }
  return s;
}

io::AnalyzeReport build_analyze_report(const Graph& g) {
  io::AnalyzeReport r;
  ConditionK ck = condition_K(g);
  if (!ck.holds) {
    throw ConditionKError("graph fails Condition (K): vertex " +
                          std::to_string(*ck.witness + 1) +
                          " is the base of exactly one simple cycle");
  }
  r.condition_k = true;

  PrimSpace space = prim_space(g);
  r.lattice_size = static_cast<int>(space.lattice.elements.size());
  r.prim_points = space.tempered.poset.size();
  for (auto [i, j] : transitive_reduction(space.tempered.poset)) {
    r.prim_covers.emplace_back(i + 1, j + 1);
  }
  r.temperatures = space.tempered.temp;
  for (const PrimPoint& pt : space.points) {
    io::AnalyzeReport::Stratum st;
    for (int v : io::vertices_of(pt.stratum)) st.vertices.push_back(v + 1);
    KPair kp = k_pair(g, pt.stratum);
    st.k0 = kp.k0.group.describe();
    st.k1 = kp.k1.group.describe();
    r.strata.push_back(std::move(st));
  }

  for (const ComponentReport& c : classification_report(g).components) {
    io::AnalyzeReport::Component comp;
    comp.label = c.label;
    comp.shape = io::shape_tags_string(c.shape);
    comp.status = c.status;
    comp.resolved_status = c.resolved_status;
    comp.references = c.references;
    comp.notes = c.notes;
    r.components.push_back(std::move(comp));
  }
  return r;
}

void print_analyze_text(const io::AnalyzeReport& r, std::ostream& out) {
  out << "condition K: holds\n";
  out << "ideal lattice: " << r.lattice_size << " elements\n";
  out << "prim points: " << r.prim_points << "\n";
  out << "prim covers:";
  if (r.prim_covers.empty()) out << " (none)";
  for (auto [i, j] : r.prim_covers) out << " " << i << "<" << j;
  out << "\n";
  out << "temperatures:";
  for (int t : r.temperatures) out << " " << t;
  out << "\n";
  for (const auto& s : r.strata) {
    out << "stratum {";
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      if (i > 0) out << ",";
      out << s.vertices[i];
    }
    out << "}: K0 = " << s.k0 << ", K1 = " << s.k1 << "\n";
  }
  for (const auto& c : r.components) {
    out << "component " << c.label << ": shape " << c.shape << "; status " << c.status;
    if (!c.references.empty()) {
      out << " (";
      for (std::size_t i = 0; i < c.references.size(); ++i) {
        if (i > 0) out << "; ";
        out << c.references[i];
      }
      out << ")";
    }
    out << "; resolved " << c.resolved_status << "\n";
    for (const auto& note : c.notes) out << "  note: " << note << "\n";
  }
}

int cmd_enumerate(int points, bool connected, bool tempered_flag, bool list_mode,
                  bool json_mode, std::ostream& out) {
  if (json_mode) {
    json j{{"format_version", io::kFormatVersion}};
    if (tempered_flag) {
      auto sigs = enumerate_tempered(points, connected);
      if (list_mode) {
        json arr = json::array();
        for (const Signature& s : sigs) arr.push_back(format(s));
        j["signatures"] = arr;
      } else {
        j["count"] = sigs.size();
      }
    } else {
      auto posets = enumerate_posets(points, connected);
      if (list_mode) {
        json arr = json::array();
        for (const Poset& p : posets) arr.push_back(format_space(space_signature(p)));
        j["signatures"] = arr;
      } else {
        j["count"] = posets.size();
      }
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  if (tempered_flag) {
    auto sigs = enumerate_tempered(points, connected);
    if (list_mode) {
      for (const Signature& s : sigs) out << format(s) << "\n";
    } else {
      out << sigs.size() << "\n";
    }
  } else {
    auto posets = enumerate_posets(points, connected);
    if (list_mode) {
      for (const Poset& p : posets) out << format_space(space_signature(p)) << "\n";
    } else {
      out << posets.size() << "\n";
    }
  }
  return 0;
}

int cmd_signature(const std::string& path, bool json_mode, std::ostream& out) {
  TemperedPoset tp = io::parse_poset(io::read_file(path));
  std::vector<Signature> sigs;
  for (PointSet comp : connected_components(tp.poset)) {
    Poset sub = induced_subposet(tp.poset, comp);
    std::vector<int> temp;
    for (int i = 0; i < tp.poset.size(); ++i) {
      if ((comp >> i) & 1u) temp.push_back(tp.temp[i]);
    }
    sigs.push_back(canonical_signature(TemperedPoset(std::move(sub), std::move(temp))));
  }
  std::sort(sigs.begin(), sigs.end());
  if (json_mode) {
    json arr = json::array();
    for (const Signature& s : sigs) {
      arr.push_back(json{{"label", format(s)},
                         {"n", s.n},
                         {"a", to_hex(s.a)},
                         {"t", s.t}});
    }
    out << json{{"format_version", io::kFormatVersion}, {"signatures", arr}}.dump(2) << "\n";
  } else {
    for (const Signature& s : sigs) out << signature_display(s) << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& path, bool json_mode, std::ostream& out) {
  Graph g = io::parse_graph(io::read_file(path));
  io::AnalyzeReport report = build_analyze_report(g);
  if (json_mode) {
    out << io::analyze_to_json(report).dump(2) << "\n";
  } else {
    print_analyze_text(report, out);
  }
  return 0;
}

int cmd_status(const std::string& sig_text, bool all, bool json_mode, std::ostream& out) {
  if (all) {
    if (json_mode) {
      out << io::status_table_to_json().dump(2) << "\n";
    } else {
      for (const StatusRecord& rec : status_table()) {
        out << rec.label() << " " << status_name(rec.status);
        for (const std::string& ref : rec.references) out << " (" << ref << ")";
        out << "\n";
      }
    }
    return 0;
  }
  if (sig_text.empty()) throw ParseError("status needs a signature or --all");
  Signature sig = parse_signature(sig_text);
  const StatusRecord& rec = lookup(sig);
  if (json_mode) {
    json j{{"format_version", io::kFormatVersion},
           {"signature", rec.label()},
           {"status", status_name(rec.status)},
           {"references", rec.references},
           {"shape", std::string(1, shape_letter(rec.shape))}};
    out << j.dump(2) << "\n";
  } else {
    out << rec.label() << ": " << status_name(rec.status);
    if (!rec.references.empty()) {
      out << " (";
      for (std::size_t i = 0; i < rec.references.size(); ++i) {
        if (i > 0) out << "; ";
        out << rec.references[i];
      }
      out << ")";
    }
    out << ", shape [" << shape_letter(rec.shape) << "]\n";
  }
  return 0;
}

int cmd_ktheory(const std::string& path, const std::string& subset, bool filtered,
                bool json_mode, std::ostream& out) {
  Graph g = io::parse_graph(io::read_file(path));
  if (filtered) {
    FilteredK fk = filtered_k(g);
    if (json_mode) {
      out << io::filtered_k_to_json(fk).dump(2) << "\n";
    } else {
      for (const auto& e : fk.entries) {
        out << "subset {";
        auto verts = io::vertices_of(e.vertex_set);
        for (std::size_t i = 0; i < verts.size(); ++i) {
          if (i > 0) out << ",";
          out << verts[i] + 1;
        }
        out << "}: K0 = " << e.k.k0.group.describe()
            << ", K1 = " << e.k.k1.group.describe() << "\n";
      }
      std::size_t exact = 0;
      for (const auto& t : fk.triples) exact += t.maps.exact ? 1 : 0;
      out << "six-term cycles: " << fk.triples.size() << ", exact: " << exact << "\n";
    }
    return 0;
  }
  VertexSet w = subset.empty() ? g.all_vertices() : parse_vertex_list(subset, g);
  KPair kp = k_pair(g, w);
  if (json_mode) {
    json gens = json::array();
    for (const auto& img : kp.k0.group.generator_images) {
      json coords = json::array();
      for (const Int& c : img) coords.push_back(c.get_str());
      gens.push_back(std::move(coords));
    }
    json j{{"format_version", io::kFormatVersion},
           {"vertices", io::vertex_array(w)},
           {"k0", io::group_to_json(kp.k0.group)},
           {"k0_generators", gens},
           {"k1", io::group_to_json(kp.k1.group)}};
    out << j.dump(2) << "\n";
  } else {
    out << "K0 = " << kp.k0.group.describe() << "\n";
    out << "K1 = " << kp.k1.group.describe() << "\n";
  }
  return 0;
}

int cmd_sixterm(const std::string& path, const std::vector<std::string>& triple,
                bool json_mode, std::ostream& out) {
  Graph g = io::parse_graph(io::read_file(path));
  VertexSet u = parse_vertex_list(triple[0], g);
  VertexSet v = parse_vertex_list(triple[1], g);
  VertexSet w = parse_vertex_list(triple[2], g);
  SixTerm st = six_term(g, u, v, w);
  if (json_mode) {
    json j{{"format_version", io::kFormatVersion},
           {"iota0", io::hom_to_json(st.iota0)},
           {"pi0", io::hom_to_json(st.pi0)},
           {"delta0", io::hom_to_json(st.delta0)},
           {"iota1", io::hom_to_json(st.iota1)},
           {"pi1", io::hom_to_json(st.pi1)},
           {"delta1", io::hom_to_json(st.delta1)},
           {"exact", st.exact}};
    out << j.dump(2) << "\n";
  } else {
    out << "K0(Y1) = " << st.iota0.source.describe()
        << " -> K0(Y2) = " << st.iota0.target.describe()
        << " -> K0(Y3) = " << st.pi0.target.describe() << "\n";
    out << "K1(Y1) = " << st.iota1.source.describe()
        << " -> K1(Y2) = " << st.iota1.target.describe()
        << " -> K1(Y3) = " << st.pi1.target.describe() << "\n";
    out << "exact: " << (st.exact ? "yes" : "no") << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariants and classification status of graph C*-algebras "
               "with finitely many ideals"};
  app.require_subcommand(1);

  // enumerate
  int points = 0;
  bool connected = false, tempered_flag = false;
  bool count_mode = false, list_mode = false;
  bool json_enum = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "census of finite T0 spaces");
  enum_cmd->add_option("--points", points, "point count (1..6)")->required();
  enum_cmd->add_flag("--connected", connected, "connected spaces only");
  enum_cmd->add_flag("--tempered", tempered_flag, "count temperature classes");
  auto* count_flag = enum_cmd->add_flag("--count", count_mode, "print the count");
  enum_cmd->add_flag("--list", list_mode, "print sorted signatures")->excludes(count_flag);
  enum_cmd->add_flag("--json", json_enum, "JSON output");

  // signature
  std::string poset_path;
  bool json_sig = false;
  auto* sig_cmd = app.add_subcommand("signature", "canonical signature of a poset file");
  sig_cmd->add_option("--poset", poset_path, "poset file")->required();
  sig_cmd->add_flag("--json", json_sig, "JSON output");

  // analyze
  std::string analyze_path;
  bool json_analyze = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "full report for a graph file");
  analyze_cmd->add_option("graph", analyze_path, "graph file")->required();
  analyze_cmd->add_flag("--json", json_analyze, "JSON output");

  // status
  std::string status_sig;
  bool status_all = false, json_status = false;
  auto* status_cmd = app.add_subcommand("status", "classification status of a signature");
  status_cmd->add_option("signature", status_sig, "signature such as 4.3B.14");
  status_cmd->add_flag("--all", status_all, "export the whole status database");
  status_cmd->add_flag("--json", json_status, "JSON output");

  // ktheory
  std::string ktheory_path, subset;
  bool filtered = false, json_ktheory = false;
  auto* ktheory_cmd = app.add_subcommand("ktheory", "K-groups of a stratum");
  ktheory_cmd->add_option("graph", ktheory_path, "graph file")->required();
  ktheory_cmd->add_option("--subset", subset, "vertex list such as 1,3 (default: all)");
  ktheory_cmd->add_flag("--filtered", filtered, "export the full filtered K-theory");
  ktheory_cmd->add_flag("--json", json_ktheory, "JSON output");

  // sixterm
  std::string sixterm_path;
  std::vector<std::string> triple;
  bool json_sixterm = false;
  auto* sixterm_cmd = app.add_subcommand("sixterm", "six-term sequence of a triple");
  sixterm_cmd->add_option("graph", sixterm_path, "graph file")->required();
  sixterm_cmd->add_option("--triple", triple, "three vertex lists U V W ('-' for empty)")
      ->expected(3)
      ->required();
  sixterm_cmd->add_flag("--json", json_sixterm, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (enum_cmd->parsed()) {
      if (points < 1 || points > 6) {
        err << "usage error: --points must lie in 1..6\n";
        return 2;
      }
      return cmd_enumerate(points, connected, tempered_flag, list_mode, json_enum, out);
    }
    if (sig_cmd->parsed()) return cmd_signature(poset_path, json_sig, out);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_path, json_analyze, out);
    if (status_cmd->parsed()) return cmd_status(status_sig, status_all, json_status, out);
    if (ktheory_cmd->parsed()) {
      return cmd_ktheory(ktheory_path, subset, filtered, json_ktheory, out);
    }
    if (sixterm_cmd->parsed()) return cmd_sixterm(sixterm_path, triple, json_sixterm, out);
    err << "usage error: no subcommand given\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSignatureError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tempered
