#include "temperedkit/classdb.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempered {

std::string status_name(Status s) {
  switch (s) {
    case Status::Classified: return "CLASSIFIED";
    case Status::ClassifiedIfFgK: return "CLASSIFIED_IF_FG_K";
    case Status::ClassifiedIfUnital: return "CLASSIFIED_IF_UNITAL";
    case Status::Open: return "OPEN";
  }
  return "OPEN";
}

namespace {

struct Row {
  int t;
  Status status;
  const char* reference;  // empty for OPEN rows
};

struct SpaceTable {
  int n;
  OrderBits a;
  Shape shape;
  std::vector<Row> rows;
};

constexpr Status C = Status::Classified;
constexpr Status FG = Status::ClassifiedIfFgK;
constexpr Status U1 = Status::ClassifiedIfUnital;
constexpr Status OP = Status::Open;

// Classification summary per canonical tempered signature. Temperatures for
// the three-point fans are stored in canonical matrix order, which differs
// from the outer-centre-outer order their published diagrams read off.
const std::vector<SpaceTable>& space_tables() {
  static const std::vector<SpaceTable> tables = {
      {1, 0x0, Shape::Linear,
       {{0, C, "Theorem AF"}, {1, C, "Theorem PI(i)"}}},
      {2, 0x1, Shape::Linear,
       {{0, C, "Theorem AF"},
        {1, C, "Prop classgraph1"},
        {2, C, "Prop classgraph2"},
        {3, C, "Theorem PI(i)"}}},
      {3, 0x3, Shape::Accordion,
       {{0, C, "Theorem AF"},
        {1, C, "t:class2-PI"},
        {2, C, "t:class2"},
        {3, C, "t:class2-PI"},
        {6, C, "t:class2"},
        {7, C, "Theorem PI(i)"}}},
      {3, 0x6, Shape::Accordion,
       {{0, C, "Theorem AF"},
        {1, C, "t:class1"},
        {3, C, "t:class1"},
        {4, C, "t:class1-PI"},
        {5, C, "t:class1-PI"},
        {7, C, "Theorem PI(i)"}}},
      {3, 0x7, Shape::Linear,
       {{0, C, "Theorem AF"},
        {1, C, "Prop classgraph1"},
        {2, FG, "t:graphmixed2"},
        {3, C, "Prop classgraph1"},
        {4, C, "Prop classgraph2"},
        {5, FG, "t:graphmixed1"},
        {6, C, "Prop classgraph2"},
        {7, C, "Theorem PI(i)"}}},
      {4, 0xE, Shape::Accordion,
       {{0, C, "Theorem AF"},
        {1, C, "Remark r:class1"},
        {2, OP, ""},
        {3, OP, ""},
        {4, C, "t:pullback-technique"},
        {5, C, "t:pullback-technique"},
        {6, OP, ""},
        {7, OP, ""},
        {8, OP, ""},
        {9, OP, ""},
        {10, OP, ""},
        {11, OP, ""},
        {12, OP, ""},
        {13, OP, ""},
        {14, OP, ""},
        {15, C, "Theorem PI(i)"}}},
      {4, 0xF, Shape::Accordion,
       {{0, C, "Theorem AF"},
        {1, C, "Prop classgraph1"},
        {2, U1, "Cor adhocaccordion"},
        {3, FG, "Cor adhocaccordion"},
        {4, U1, "Cor adhocaccordion"},
        {5, U1, "Cor adhocaccordion"},
        {6, C, "t:class2"},
        {7, C, "Cor adhocaccordion"},
        {8, C, "t:class2"},
        {9, C, "Cor adhocaccordion"},
        {10, FG, "Cor adhocaccordion"},
        {11, FG, "Cor adhocaccordion"},
        {12, U1, "Cor adhocaccordion"},
        {13, U1, "Cor adhocaccordion"},
        {14, C, "t:class2"},
        {15, C, "Theorem PI(i)"}}},
      {4, 0x39, Shape::Accordion,
       {{0, C, "Theorem AF"},
        {1, C, "t:class1"},
        {2, U1, "Cor adhocaccordion"},
        {3, C, "t:class1"},
        {4, C, "t:class1"},
        {5, C, "t:class1"},
        {6, U1, "Cor adhocaccordion"},
        {7, C, "t:class1"},
        {8, C, "Prop classgraph2"},
        {9, FG, "Cor adhocaccordion"},
        {10, U1, "Cor adhocaccordion"},
        {11, C, "Cor adhocaccordion"},
        {12, C, "Cor adhocaccordion"},
        {13, FG, "Cor adhocaccordion"},
        {14, U1, "Cor adhocaccordion"},
        {15, C, "Theorem PI(i)"}}},
      {4, 0x3F, Shape::Linear,
       {{0, C, "Theorem AF"},
        {1, C, "Prop classgraph1"},
        {2, FG, "t:graphmixed2"},
        {3, C, "Prop classgraph1"},
        {4, FG, "t:graphmixed2"},
        {5, FG, "Cor adhocaccordion"},
        {6, U1, "Cor adhocaccordion"},
        {7, C, "Prop classgraph1"},
        {8, C, "Prop classgraph2"},
        {9, FG, "t:graphmixed1"},
        {10, U1, "Cor adhocaccordion"},
        {11, OP, ""},
        {12, C, "Prop classgraph2"},
        {13, FG, "Cor adhocaccordion"},
        {14, C, "Prop classgraph2"},
        {15, C, "Theorem PI(i)"}}},
      {4, 0xB, Shape::Fan,  // published label 4.A
       {{0, C, "Theorem AF"},
        {1, C, "t:class2-PI"},
        {2, C, "t:class2"},
        {3, C, "t:class2-PI"},
        {6, C, "t:class2"},
        {7, C, "t:class2-PI"},
        {14, C, "t:class2"},
        {15, C, "Theorem PI(ii)"}}},
      {4, 0x38, Shape::Fan,
       {{0, C, "Theorem AF"},
        {1, C, "t:class1"},
        {3, C, "t:class1"},
        {7, C, "t:class1"},
        {8, C, "t:class1-PI"},
        {9, C, "t:class1-PI"},
        {11, C, "t:class1-PI"},
        {15, C, "Theorem PI(ii)"}}},
      {4, 0x1F, Shape::Y,
       {{0, C, "Theorem AF"},
        {1, C, "Prop classgraph1"},
        {2, U1, "Cor adhocY"},
        {3, C, "Prop classgraph1"},
        {4, C, "Remark r:class2"},
        {5, U1, "Cor adhocY"},
        {6, U1, "Cor adhocY"},
        {7, C, "Cor adhocY"},
        {12, C, "Remark r:class2"},
        {13, FG, "Cor adhocY"},
        {14, C, "Cor adhocY"},
        {15, C, "Theorem PI(ii)"}}},
      {4, 0x3E, Shape::Y,
       {{0, C, "Theorem AF"},
        {1, C, "Remark r:class1"},
        {3, C, "Cor adhocY"},
        {4, FG, "Cor adhocY"},
        {5, FG, "Cor adhocY"},
        {7, C, "Cor adhocY"},
        {8, C, "Prop classgraph2"},
        {9, U1, "Cor adhocY"},
        {11, U1, "Cor adhocY"},
        {12, C, "Prop classgraph2"},
        {13, C, "Cor adhocY"},
        {15, C, "Theorem PI(ii)"}}},
      {4, 0x1E, Shape::O,
       {{0, C, "Theorem AF"},
        {1, C, "Remark r:class1"},
        {3, C, "Remark r:class1"},
        {4, C, "Remark r:class2"},
        {5, OP, ""},
        {7, OP, ""},
        {12, C, "Remark r:class2"},
        {13, OP, ""},
        {15, OP, ""}}},
      {4, 0x3B, Shape::O,
       {{0, C, "Theorem AF"},
        {1, C, "Prop classgraph1"},
        {2, OP, ""},
        {3, OP, ""},
        {6, OP, ""},
        {7, C, "Cor adhocO"},
        {8, C, "Prop classgraph2"},
        {9, OP, ""},
        {10, OP, ""},
        {11, OP, ""},
        {14, C, "Cor adhocO"},
        {15, C, "Theorem PI(iii)"}}},
  };
  return tables;
}

std::vector<StatusRecord> build_table() {
  std::vector<StatusRecord> records;
  for (const SpaceTable& space : space_tables()) {
    for (const Row& row : space.rows) {
      StatusRecord rec;
      rec.sig = Signature{space.n, space.a, static_cast<std::uint32_t>(row.t)};
      rec.status = row.status;
      if (row.reference[0] != '\0') rec.references.push_back(row.reference);
      rec.shape = space.shape;
      records.push_back(std::move(rec));
    }
  }
  std::sort(records.begin(), records.end(),
            [](const StatusRecord& x, const StatusRecord& y) { return x.sig < y.sig; });
  return records;
}

}  // namespace

const std::vector<StatusRecord>& status_table() {
  static const std::vector<StatusRecord> table = build_table();
  return table;
}

const StatusRecord& lookup(const Signature& sig) {
  const auto& table = status_table();
  auto it = std::lower_bound(table.begin(), table.end(), sig,
                             [](const StatusRecord& rec, const Signature& key) {
                               return rec.sig < key;
                             });
  if (it == table.end() || !(it->sig == sig)) {
    throw UnknownSignatureError("no classification record for signature " + format(sig));
  }
  return *it;
}

std::map<Status, int> aggregate_stats(int n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("classification table covers 1..4 points");
  }
  std::map<Status, int> counts;
  for (const StatusRecord& rec : status_table()) {
    if (rec.sig.n == n) ++counts[rec.status];
  }
  return counts;
}

namespace {

ComponentReport report_component(const Graph&, const TemperedPoset& component) {
  ComponentReport rep;
  rep.sig = canonical_signature(component);
  rep.label = format(rep.sig);
  rep.shape = classify_shape(component.poset);

  bool all_af = std::all_of(component.temp.begin(), component.temp.end(),
                            [](int t) { return t == 0; });
  bool all_pi = std::all_of(component.temp.begin(), component.temp.end(),
                            [](int t) { return t == 1; });

  if (rep.sig.n <= 4) {
    const StatusRecord& rec = lookup(rep.sig);
    rep.status = status_name(rec.status);
    rep.references = rec.references;
    switch (rec.status) {
      case Status::Classified:
        rep.resolved_status = "CLASSIFIED";
        break;
      case Status::ClassifiedIfFgK:
        rep.resolved_status = "CLASSIFIED";
        rep.notes.push_back("finite graph: K-groups of every subquotient are "
                            "finitely generated, discharging the f.g. condition");
        break;
      case Status::ClassifiedIfUnital:
        rep.resolved_status = "CLASSIFIED";
        rep.notes.push_back("finite graph: a unital stably isomorphic model "
                            "exists, discharging the unital condition");
        break;
      case Status::Open:
        rep.resolved_status = "OPEN";
        break;
    }
    return rep;
  }

  if (all_af) {
    rep.status = "CLASSIFIED";
    rep.resolved_status = "CLASSIFIED";
    rep.references.push_back("Theorem AF");
    rep.notes.push_back("all temperatures zero: ordered K0 classifies");
  } else if (all_pi && is_accordion(component.poset)) {
    rep.status = "CLASSIFIED";
    rep.resolved_status = "CLASSIFIED";
    rep.references.push_back("Theorem PI(i)");
    rep.notes.push_back("all temperatures one over an accordion space");
  } else {
    rep.status = "UNKNOWN";
    rep.resolved_status = "UNKNOWN";
    rep.notes.push_back("beyond the tabulated range (n > 4); Conjecture 1 "
                        "predicts classification by filtered ordered K-theory");
  }
  return rep;
}

}  // namespace

ClassificationReport classification_report(const Graph& g) {
  PrimSpace space = prim_space(g);
  ClassificationReport report;
  for (PointSet comp : connected_components(space.tempered.poset)) {
    Poset sub = induced_subposet(space.tempered.poset, comp);
    std::vector<int> temp;
    for (int x = 0; x < space.tempered.poset.size(); ++x) {
      if ((comp >> x) & 1u) temp.push_back(space.tempered.temp[x]);
    }
    report.components.push_back(
        report_component(g, TemperedPoset(std::move(sub), std::move(temp))));
  }
  std::sort(report.components.begin(), report.components.end(),
            [](const ComponentReport& x, const ComponentReport& y) { return x.sig < y.sig; });
  return report;
}

}  // namespace tempered
