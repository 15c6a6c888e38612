#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "temperedkit/classdb.hpp"
#include "temperedkit/enumerate.hpp"

using namespace tempered;

TEST_CASE("record totals per point count") {
  std::map<int, int> totals;
  for (const StatusRecord& rec : status_table()) ++totals[rec.sig.n];
  CHECK(totals[1] == 2);
  CHECK(totals[2] == 4);
  CHECK(totals[3] == 20);
  CHECK(totals[4] == 125);

  auto stats4 = aggregate_stats(4);
  CHECK(stats4[Status::Open] == 22);
  CHECK(stats4[Status::Classified] + stats4[Status::ClassifiedIfFgK] +
            stats4[Status::ClassifiedIfUnital] ==
        103);

  auto stats3 = aggregate_stats(3);
  CHECK(stats3[Status::Open] == 0);
  auto stats1 = aggregate_stats(1);
  CHECK(stats1[Status::Classified] == 2);

  CHECK_THROWS_AS(aggregate_stats(5), std::invalid_argument);
}

TEST_CASE("database keys are exactly the connected tempered signatures") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> keys;
    for (const StatusRecord& rec : status_table()) {
      if (rec.sig.n == n) keys.insert(rec.label());
    }
    std::set<std::string> expected;
    for (const Signature& sig : enumerate_tempered(n, true)) {
      expected.insert(format(sig));
    }
    CHECK(keys == expected);
  }
}

TEST_CASE("per-space record counts") {
  std::map<std::string, int> counts;
  for (const StatusRecord& rec : status_table()) {
    if (rec.sig.n == 4) ++counts[format_space(rec.sig)];
  }
  CHECK(counts["4.E"] == 16);
  CHECK(counts["4.F"] == 16);
  CHECK(counts["4.39"] == 16);
  CHECK(counts["4.3F"] == 16);
  CHECK(counts["4.A"] == 8);
  CHECK(counts["4.38"] == 8);
  CHECK(counts["4.1F"] == 12);
  CHECK(counts["4.3E"] == 12);
  CHECK(counts["4.3B"] == 12);
  CHECK(counts["4.1E"] == 9);
}

TEST_CASE("published spot checks") {
  CHECK(lookup(parse_signature("2.1.3")).status == Status::Classified);
  CHECK(lookup(parse_signature("2.1.3")).references ==
        std::vector<std::string>{"Theorem PI(i)"});

  CHECK(lookup(parse_signature("4.E.2")).status == Status::Open);
  CHECK(lookup(parse_signature("4.E.2")).references.empty());

  CHECK(lookup(parse_signature("4.F.10")).status == Status::ClassifiedIfFgK);
  CHECK(lookup(parse_signature("4.F.10")).references ==
        std::vector<std::string>{"Cor adhocaccordion"});

  CHECK(lookup(parse_signature("4.39.10")).status == Status::ClassifiedIfUnital);

  CHECK(lookup(parse_signature("3.7.5")).status == Status::ClassifiedIfFgK);
  CHECK(lookup(parse_signature("3.7.5")).references ==
        std::vector<std::string>{"t:graphmixed1"});

  CHECK(lookup(parse_signature("4.1E.15")).status == Status::Open);

  CHECK(lookup(parse_signature("4.3B.14")).status == Status::Classified);
  CHECK(lookup(parse_signature("4.3B.14")).references ==
        std::vector<std::string>{"Cor adhocO"});

  CHECK(lookup(parse_signature("4.A.15")).references ==
        std::vector<std::string>{"Theorem PI(ii)"});
  CHECK(lookup(parse_signature("4.3B.15")).references ==
        std::vector<std::string>{"Theorem PI(iii)"});
}

TEST_CASE("constant temperatures") {
  for (const StatusRecord& rec : status_table()) {
    if (rec.sig.t == 0) {
      CHECK(rec.status == Status::Classified);
      CHECK(rec.references == std::vector<std::string>{"Theorem AF"});
    }
    if (rec.sig.t == (1u << rec.sig.n) - 1) {
      if (rec.label() == "4.1E.15") {
        CHECK(rec.status == Status::Open);
      } else {
        CHECK(rec.status == Status::Classified);
        REQUIRE(rec.references.size() == 1);
        CHECK(rec.references.front().rfind("Theorem PI", 0) == 0);
      }
    }
  }
}

TEST_CASE("the open cases are exactly the published ones") {
  std::set<std::string> open;
  for (const StatusRecord& rec : status_table()) {
    if (rec.status == Status::Open) open.insert(rec.label());
  }
  std::set<std::string> expected;
  for (int t : {2, 3, 6, 7, 8, 9, 10, 11, 12, 13, 14}) {
    expected.insert("4.E." + std::to_string(t));
  }
  expected.insert("4.3F.11");
  for (int t : {5, 7, 13, 15}) expected.insert("4.1E." + std::to_string(t));
  for (int t : {2, 3, 6, 9, 10, 11}) expected.insert("4.3B." + std::to_string(t));
  CHECK(open == expected);
}

TEST_CASE("unknown signatures are rejected") {
  CHECK_THROWS_AS(lookup(Signature{5, 0, 0}), UnknownSignatureError);
  CHECK_THROWS_AS(lookup(Signature{4, 0x2, 0}), UnknownSignatureError);
  // Disconnected or non-canonical keys are absent too.
  CHECK_THROWS_AS(lookup(Signature{4, 0xA, 0}), UnknownSignatureError);
}

TEST_CASE("shapes stored in the table match the classifier") {
  for (const StatusRecord& rec : status_table()) {
    Poset p = testutil::poset_from_bits(rec.sig.n, rec.sig.a);
    CHECK(classify_shape(p).primary == rec.shape);
  }
}

TEST_CASE("classification report for the worked graphs") {
  Graph both_pi = Graph::from_edges(2, {{0, 0, 2}, {0, 1, 1}, {1, 1, 2}});
  ClassificationReport report = classification_report(both_pi);
  REQUIRE(report.components.size() == 1);
  CHECK(report.components[0].label == "2.1.3");
  CHECK(report.components[0].status == "CLASSIFIED");
  CHECK(report.components[0].resolved_status == "CLASSIFIED");
  CHECK(report.components[0].references == std::vector<std::string>{"Theorem PI(i)"});

  Graph acyclic = Graph::from_edges(3, {{0, 1, 1}, {1, 2, 1}});
  ClassificationReport af = classification_report(acyclic);
  REQUIRE(af.components.size() == 1);
  CHECK(af.components[0].label == "1.0.0");
  CHECK(af.components[0].references == std::vector<std::string>{"Theorem AF"});
}

TEST_CASE("conditional statuses discharge for finite graphs") {
  // 4.39 with temperature bits 1010 (t = 10) is a unital-conditional row
  // whose cold points are maximal, so a finite graph realizes it.
  Poset p = testutil::poset_from_bits(4, 0x39);
  TemperedPoset tp(p, {1, 0, 1, 0});
  CHECK(format(canonical_signature(tp)) == "4.39.10");

  Graph g = testutil::realize(tp);
  ClassificationReport report = classification_report(g);
  REQUIRE(report.components.size() == 1);
  CHECK(report.components[0].label == "4.39.10");
  CHECK(report.components[0].status == "CLASSIFIED_IF_UNITAL");
  CHECK(report.components[0].resolved_status == "CLASSIFIED");
  REQUIRE(report.components[0].notes.size() == 1);
  CHECK(report.components[0].notes[0].find("unital") != std::string::npos);
}

TEST_CASE("cold non-maximal points admit no finite-graph model") {
  // 4.F.10 has a cold point below a hot one; the realization helper rejects
  // it, matching the saturation obstruction for finite graphs.
  Poset p = testutil::poset_from_bits(4, 0xF);
  TemperedPoset tp(p, {1, 0, 1, 0});
  CHECK(format(canonical_signature(tp)) == "4.F.10");
  CHECK_THROWS_AS(testutil::realize(tp), std::invalid_argument);
}

TEST_CASE("components beyond four points fall back to the general theorems") {
  std::vector<std::pair<int, int>> chain_covers;
  for (int i = 0; i + 1 < 5; ++i) chain_covers.emplace_back(i, i + 1);
  Poset chain5 = Poset::from_cover_relations(5, chain_covers);

  // Five-point hot chain: accordion, purely infinite.
  Graph pi5 = testutil::realize(TemperedPoset(chain5, std::vector<int>(5, 1)));
  ClassificationReport pi = classification_report(pi5);
  REQUIRE(pi.components.size() == 1);
  CHECK(pi.components[0].status == "CLASSIFIED");
  CHECK(pi.components[0].references == std::vector<std::string>{"Theorem PI(i)"});

  // Five-point mixed claw: out of table range, not constant temperature.
  Poset claw5 = Poset::from_cover_relations(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  Graph mixed = testutil::realize(TemperedPoset(claw5, {1, 0, 1, 0, 1}));
  ClassificationReport unknown = classification_report(mixed);
  REQUIRE(unknown.components.size() == 1);
  CHECK(unknown.components[0].status == "UNKNOWN");
  CHECK(unknown.components[0].resolved_status == "UNKNOWN");
}
