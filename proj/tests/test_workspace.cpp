#include "qcoring/workspace.hpp"

#include <doctest.h>

#include <functional>

#include "fixtures.hpp"

using namespace qcoring;

namespace {

std::string fixture_path(const char* name) {
  return std::string(QCORING_FIXTURE_DIR) + "/" + name;
}

std::string data_path(const char* name) {
  return std::string(QCORING_TEST_DATA_DIR) + "/" + name;
}

std::string location_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const WorkspaceError& e) {
    return e.location();
  }
  return "(no error)";
}

}  // namespace

TEST_CASE("fixture documents parse and validate") {
  Workspace f1 = load_workspace(fixture_path("f1.json"));
  CHECK(f1.algebra->dim() == 1);
  CHECK(f1.coring->dim() == 1);
  CHECK(f1.coring_kind == "trivial");
  CHECK(check_workspace(f1).ok());

  Workspace f2 = load_workspace(fixture_path("f2.json"));
  CHECK(f2.algebra->dim() == 2);
  CHECK(f2.coring->dim() == 4);
  CHECK(f2.coring_kind == "graded");
  CHECK(f2.graded.has_value());
  CHECK(is_strongly_graded(*f2.graded));
  CHECK(f2.grouplikes[0].second == group_grouplike(*f2.graded, 0));
  CHECK(f2.grouplikes[1].second == group_grouplike(*f2.graded, 1));
  CHECK(check_workspace(f2).ok());

  Workspace f3 = load_workspace(fixture_path("f3.json"));
  CHECK(f3.coring->dim() == 4);
  CHECK_FALSE(is_strongly_graded(*f3.graded));
  CHECK(check_workspace(f3).ok());

  Workspace f4 = load_workspace(fixture_path("f4.json"));
  CHECK(f4.coring->dim() == 4);
  CHECK(f4.coring_kind == "sweedler");
  CHECK(check_workspace(f4).ok());
}

TEST_CASE("parse errors carry field locations") {
  CHECK(location_of([] { parse_workspace("{"); }) == "input");
  CHECK(location_of([] { parse_workspace("[]"); }) == "input");
  CHECK(location_of([] { parse_workspace("{}"); }) == "input");
  CHECK(location_of([] { parse_workspace(R"({"field": "R"})"); }) == "field");
  CHECK(location_of([] { parse_workspace(R"({"field": "Q", "bogus": 1})"); }) == "bogus");

  const std::string zero_den = R"({
    "field": "Q",
    "algebra": {"structure": [[["1"]]], "unit": ["1/0"]}
  })";
  CHECK(location_of([&] { parse_workspace(zero_den); }) == "algebra.unit[0]");
  try {
    parse_workspace(zero_den);
    CHECK(false);
  } catch (const WorkspaceError& e) {
    CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
  }

  const std::string short_unit = R"({
    "field": "Q",
    "algebra": {"structure": [[["1"]]], "unit": ["1", "0"]}
  })";
  CHECK(location_of([&] { parse_workspace(short_unit); }) == "algebra.unit");

  const std::string dangling = R"({
    "field": "Q",
    "algebra": {"structure": [[["1"]]], "unit": ["1"]},
    "coring": {"kind": "trivial"},
    "grouplikes": [{"name": "e", "vector": ["1"]}],
    "family": ["f"]
  })";
  CHECK(location_of([&] { parse_workspace(dangling); }) == "family[0]");

  const std::string graded_first = R"({
    "field": "Q",
    "graded": {"group": {"elements": ["e"], "table": [["e"]]}, "degrees": []}
  })";
  CHECK(location_of([&] { parse_workspace(graded_first); }) == "graded");

  const std::string bad_table = R"({
    "field": "Q",
    "algebra": {"structure": [[["1"]]], "unit": ["1"]},
    "graded": {"group": {"elements": ["e"], "table": [["z"]]}, "degrees": ["e"]}
  })";
  CHECK(location_of([&] { parse_workspace(bad_table); }) == "graded.group.table[0][0]");
}

TEST_CASE("family and probe selectors resolve against the document") {
  Workspace w = load_workspace(fixture_path("f2.json"));

  ResolvedFamily full = resolve_family(w, {}, {});
  CHECK(full.names == std::vector<std::string>{"g_e", "g_s"});
  CHECK(full.members.size() == 2);
  CHECK(full.all_grouplike());

  ResolvedFamily one = resolve_family(w, {"g_e"}, {});
  CHECK(one.members.size() == 1);

  ResolvedFamily sub = resolve_family(w, {}, {"s"});
  CHECK(sub.names == std::vector<std::string>{"s"});
  CHECK(sub.grouplike_vectors()[0] == group_grouplike(*w.graded, 1));

  CHECK_THROWS_AS(resolve_family(w, {"g_e"}, {"e"}), WorkspaceError);
  CHECK_THROWS_AS(resolve_family(w, {"nope"}, {}), WorkspaceError);
  CHECK_THROWS_AS(resolve_family(w, {}, {"t"}), WorkspaceError);

  ResolvedFamily probes = resolve_probes(w, {}, one);
  CHECK(probes.names == std::vector<std::string>{"g_e", "g_s"});

  Workspace f4 = load_workspace(fixture_path("f4.json"));
  CHECK(resolve_family(f4, {}, {}).names == std::vector<std::string>{"u"});
  CHECK_THROWS_AS(resolve_family(f4, {}, {"e"}), WorkspaceError);
}

TEST_CASE("galois summaries match the frozen family values") {
  Workspace f1 = load_workspace(fixture_path("f1.json"));
  GaloisSummary s1 = galois_summary(f1, resolve_family(f1, {}, {}));
  CHECK(s1.coring_dim == 1);
  CHECK(s1.can_rank == 1);
  CHECK(s1.bijective);
  CHECK(s1.grouplike_span == 1);

  Workspace f2 = load_workspace(fixture_path("f2.json"));
  GaloisSummary s2 = galois_summary(f2, resolve_family(f2, {}, {}));
  CHECK(s2.coproduct_dim == 8);
  CHECK(s2.relations_dim == 4);
  CHECK(s2.quotient_dim == 4);
  CHECK(s2.can_rank == 4);
  CHECK(s2.bijective);
  CHECK(s2.grouplike_span == 4);

  Workspace f3 = load_workspace(fixture_path("f3.json"));
  GaloisSummary s3 = galois_summary(f3, resolve_family(f3, {}, {"e"}));
  CHECK(s3.coproduct_dim == 4);
  CHECK(s3.relations_dim == 0);
  CHECK(s3.quotient_dim == 4);
  CHECK(s3.can_rank == 3);
  CHECK_FALSE(s3.bijective);
  CHECK(s3.grouplike_span == 3);
}

TEST_CASE("descent summaries carry the flag table") {
  Workspace f2 = load_workspace(fixture_path("f2.json"));
  ResolvedFamily fam2 = resolve_family(f2, {}, {});
  DescentSummary d2 = descent_summary(f2, fam2, resolve_probes(f2, {}, fam2));
  CHECK(d2.all_flags());
  CHECK(d2.report.consistent());
  CHECK(d2.hom_ring_dim == 4);
  CHECK(d2.sigma_dim == 4);

  Workspace f3 = load_workspace(fixture_path("f3.json"));
  ResolvedFamily fam3 = resolve_family(f3, {"g_e"}, {});
  DescentSummary d3 = descent_summary(f3, fam3, resolve_probes(f3, {}, fam3));
  CHECK_FALSE(d3.all_flags());
  CHECK(d3.report.consistent());
  CHECK_FALSE(d3.report.can_bijective);
  CHECK_FALSE(d3.report.generates_probes);
  CHECK(d3.report.sigma_faithfully_flat);
  CHECK(d3.report.small_projective);
  CHECK(d3.probes == std::vector<std::string>{"g_e", "g_s"});
}

TEST_CASE("machine reports round-trip to equal summaries") {
  Workspace f2 = load_workspace(fixture_path("f2.json"));
  ResolvedFamily fam = resolve_family(f2, {}, {});

  CheckSummary c = check_workspace(f2);
  CHECK(parse_check_report(render_check(c, true)) == c);

  Workspace bad = load_workspace(data_path("bad_delta.json"));
  CheckSummary cb = check_workspace(bad);
  CHECK_FALSE(cb.ok());
  CHECK(parse_check_report(render_check(cb, true)) == cb);

  GaloisSummary g = galois_summary(f2, fam);
  CHECK(parse_galois_report(render_galois(g, true)) == g);

  Workspace f3 = load_workspace(fixture_path("f3.json"));
  ResolvedFamily fam3 = resolve_family(f3, {"g_e"}, {});
  GaloisSummary g3 = galois_summary(f3, fam3);
  CHECK(parse_galois_report(render_galois(g3, true)) == g3);

  DescentSummary d = descent_summary(f2, fam, resolve_probes(f2, {}, fam));
  CHECK(parse_descent_report(render_descent(d, true)) == d);

  DescentSummary d3 = descent_summary(f3, fam3, resolve_probes(f3, {}, fam3));
  CHECK(parse_descent_report(render_descent(d3, true)) == d3);
}

TEST_CASE("emitted coring documents are valid workspace input") {
  Workspace f2 = load_workspace(fixture_path("f2.json"));
  Workspace back = parse_workspace(render_coring_document(*f2.algebra, *f2.coring, true));
  CHECK(check_workspace(back).ok());
  CHECK(back.coring->dim() == f2.coring->dim());
  CHECK(back.coring->delta == f2.coring->delta);
  CHECK(back.coring->counit == f2.coring->counit);
  CHECK(back.coring->bimodule.left_action == f2.coring->bimodule.left_action);
  CHECK(back.coring->bimodule.right_action == f2.coring->bimodule.right_action);

  FamilyAnalysis f = analyze_family(*f2.coring, resolve_family(f2, {}, {}).members);
  Workspace quot = parse_workspace(render_coring_document(*f2.algebra, f.quotient, true));
  CHECK(check_workspace(quot).ok());
  CHECK(quot.coring->dim() == 4);
}
