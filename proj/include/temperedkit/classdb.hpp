#pragma once

#include <map>
#include <string>
#include <vector>

#include "temperedkit/graphalg.hpp"
#include "temperedkit/signature.hpp"

namespace tempered {

enum class Status { Classified, ClassifiedIfFgK, ClassifiedIfUnital, Open };

std::string status_name(Status s);

// One row of the classification summary: verdict, theorem references and
// shape group for a canonical tempered signature with n <= 4.
struct StatusRecord {
  Signature sig;
  Status status = Status::Open;
  std::vector<std::string> references;
  Shape shape = Shape::Other;

  std::string label() const { return format(sig); }
};

// All 151 records for n <= 4, sorted by signature.
const std::vector<StatusRecord>& status_table();

// Throws UnknownSignatureError for keys outside the table.
const StatusRecord& lookup(const Signature& sig);

// Per-status counts over all records with the given point count (1..4).
std::map<Status, int> aggregate_stats(int n);

// Classification verdict for one connected Prim component of a graph.
struct ComponentReport {
  Signature sig;
  std::string label;
  std::string status;           // table verdict, or UNKNOWN beyond n = 4
  std::string resolved_status;  // after discharging conditions for the input
  std::vector<std::string> references;
  std::vector<std::string> notes;
  ShapeTag shape;
};

struct ClassificationReport {
  std::vector<ComponentReport> components;
};

// Looks up every connected Prim component. Conditional verdicts resolve to
// CLASSIFIED for finite graphs; components beyond four points fall back to
// the constant-temperature theorems or report UNKNOWN.
ClassificationReport classification_report(const Graph& g);

}  // namespace tempered
