#include "qcoring/workspace.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace qcoring {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw WorkspaceError(path, msg);
}

std::string idx(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& field(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

void reject_unknown(const json& j, const std::string& path,
                    std::initializer_list<const char*> keys) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) fail(path.empty() ? item.key() : path + "." + item.key(), "unknown field");
  }
}

Rat parse_rat_field(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (!v.is_string()) fail(path, "expected a rational encoded as \"p/q\"");
  try {
    return rat_parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Vec parse_vec_field(const json& v, const std::string& path, size_t want) {
  if (!v.is_array()) fail(path, "expected an array of rationals");
  if (v.size() != want)
    fail(path, "expected " + std::to_string(want) + " entries, got " + std::to_string(v.size()));
  Vec r;
  r.reserve(want);
  for (size_t i = 0; i < want; ++i) r.push_back(parse_rat_field(v[i], idx(path, i)));
  return r;
}

Matrix parse_matrix_field(const json& v, const std::string& path, size_t rows, size_t cols) {
  if (!v.is_array()) fail(path, "expected an array of matrix rows");
  if (v.size() != rows)
    fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) m.set_row(i, parse_vec_field(v[i], idx(path, i), cols));
  return m;
}

std::vector<std::string> parse_names(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of names");
  std::vector<std::string> r;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string() || v[i].get<std::string>().empty())
      fail(idx(path, i), "expected a nonempty name");
    r.push_back(v[i].get<std::string>());
  }
  return r;
}

size_t parse_dim_field(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) fail(path, "expected a nonnegative integer");
  return v.get<size_t>();
}

void parse_algebra(const json& j, Workspace& w) {
  const std::string path = "algebra";
  if (!j.is_object()) fail(path, "expected an object");
  reject_unknown(j, path, {"basis", "structure", "unit"});
  const json& st = field(j, path, "structure");
  if (!st.is_array() || st.empty()) fail(path + ".structure", "expected a nonempty array");
  const size_t n = st.size();
  std::vector<std::vector<Vec>> structure(n);
  for (size_t i = 0; i < n; ++i) {
    const json& row = st[i];
    const std::string rpath = idx(path + ".structure", i);
    if (!row.is_array() || row.size() != n)
      fail(rpath, "expected " + std::to_string(n) + " products");
    for (size_t k = 0; k < n; ++k)
      structure[i].push_back(parse_vec_field(row[k], idx(rpath, k), n));
  }
  Vec unit = parse_vec_field(field(j, path, "unit"), path + ".unit", n);
  if (j.contains("basis")) {
    w.algebra_basis_names = parse_names(j.at("basis"), path + ".basis");
    if (w.algebra_basis_names.size() != n)
      fail(path + ".basis", "expected " + std::to_string(n) + " names");
  }
  w.algebra = Algebra(std::move(structure), std::move(unit));
}

void parse_graded(const json& j, Workspace& w) {
  const std::string path = "graded";
  if (!w.algebra) fail(path, "requires an algebra section");
  if (!j.is_object()) fail(path, "expected an object");
  reject_unknown(j, path, {"group", "degrees"});
  const json& jg = field(j, path, "group");
  if (!jg.is_object()) fail(path + ".group", "expected an object");
  reject_unknown(jg, path + ".group", {"elements", "table"});
  std::vector<std::string> elems =
      parse_names(field(jg, path + ".group", "elements"), path + ".group.elements");
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < elems.size(); ++i)
    if (!index.emplace(elems[i], i).second)
      fail(idx(path + ".group.elements", i), "duplicate element '" + elems[i] + "'");
  const size_t order = elems.size();
  const json& jt = field(jg, path + ".group", "table");
  if (!jt.is_array() || jt.size() != order)
    fail(path + ".group.table", "expected " + std::to_string(order) + " rows");
  FiniteGroup g;
  g.order = order;
  g.table.assign(order, std::vector<size_t>(order, 0));
  for (size_t i = 0; i < order; ++i) {
    const json& row = jt[i];
    const std::string rpath = idx(path + ".group.table", i);
    if (!row.is_array() || row.size() != order)
      fail(rpath, "expected " + std::to_string(order) + " entries");
    for (size_t k = 0; k < order; ++k) {
      if (!row[k].is_string()) fail(idx(rpath, k), "expected an element name");
      auto it = index.find(row[k].get<std::string>());
      if (it == index.end())
        fail(idx(rpath, k), "unknown element '" + row[k].get<std::string>() + "'");
      g.table[i][k] = it->second;
    }
  }
  bool found = false;
  for (size_t e = 0; e < order && !found; ++e) {
    bool is_id = true;
    for (size_t k = 0; k < order; ++k)
      is_id = is_id && g.table[e][k] == k && g.table[k][e] == k;
    if (is_id) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) fail(path + ".group.table", "no identity element");
  std::vector<std::string> degrees = parse_names(field(j, path, "degrees"), path + ".degrees");
  const size_t n = w.algebra->dim();
  if (degrees.size() != n)
    fail(path + ".degrees",
         "expected one degree per algebra basis vector (" + std::to_string(n) + ")");
  std::vector<std::vector<size_t>> members(order);
  for (size_t i = 0; i < n; ++i) {
    auto it = index.find(degrees[i]);
    if (it == index.end()) fail(idx(path + ".degrees", i), "unknown element '" + degrees[i] + "'");
    members[it->second].push_back(i);
  }
  GradedAlgebra ga;
  ga.algebra = *w.algebra;
  ga.group = g;
  for (size_t h = 0; h < order; ++h) {
    Matrix rows(members[h].size(), n);
    for (size_t r = 0; r < members[h].size(); ++r) rows(r, members[h][r]) = 1;
    ga.components.push_back(Subspace::span(n, rows));
  }
  w.graded = std::move(ga);
  w.group_element_names = std::move(elems);
}

void parse_coring(const json& j, Workspace& w) {
  const std::string path = "coring";
  if (!j.is_object()) fail(path, "expected an object");
  const json& jk = field(j, path, "kind");
  if (!jk.is_string()) fail(path + ".kind", "expected a string");
  const std::string kind = jk.get<std::string>();
  try {
    if (kind == "trivial" || kind == "sweedler") {
      reject_unknown(j, path, {"kind"});
      if (!w.algebra) fail(path, "kind '" + kind + "' requires an algebra section");
      w.coring = kind == "trivial" ? trivial_coring(*w.algebra) : sweedler_coring(*w.algebra);
    } else if (kind == "graded") {
      reject_unknown(j, path, {"kind"});
      if (!w.graded) fail(path, "kind 'graded' requires a graded section");
      w.coring = graded_coring(*w.graded);
    } else if (kind == "explicit") {
      reject_unknown(j, path, {"kind", "dim", "left_action", "right_action", "delta", "counit"});
      if (!w.algebra) fail(path, "kind 'explicit' requires an algebra section");
      const size_t n = parse_dim_field(field(j, path, "dim"), path + ".dim");
      const size_t ad = w.algebra->dim();
      Bimodule bm;
      bm.dim = n;
      const json& jl = field(j, path, "left_action");
      if (!jl.is_array() || jl.size() != ad)
        fail(path + ".left_action", "expected one matrix per algebra basis vector");
      for (size_t i = 0; i < ad; ++i)
        bm.left_action.push_back(parse_matrix_field(jl[i], idx(path + ".left_action", i), n, n));
      const json& jr = field(j, path, "right_action");
      if (!jr.is_array() || jr.size() != ad)
        fail(path + ".right_action", "expected one matrix per algebra basis vector");
      for (size_t i = 0; i < ad; ++i)
        bm.right_action.push_back(parse_matrix_field(jr[i], idx(path + ".right_action", i), n, n));
      Matrix delta = parse_matrix_field(field(j, path, "delta"), path + ".delta", n * n, n);
      Matrix counit = parse_matrix_field(field(j, path, "counit"), path + ".counit", ad, n);
      w.coring = make_coring(*w.algebra, bm, delta, counit);
    } else {
      fail(path + ".kind", "unknown kind '" + kind + "'");
    }
  } catch (const WorkspaceError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  w.coring_kind = kind;
}

bool name_taken(const Workspace& w, const std::string& n) {
  for (const auto& [name, g] : w.grouplikes)
    if (name == n) return true;
  for (const auto& [name, m] : w.comodules)
    if (name == n) return true;
  return false;
}

void parse_grouplikes(const json& j, Workspace& w) {
  const std::string path = "grouplikes";
  if (!w.coring) fail(path, "requires a coring section");
  if (!j.is_array()) fail(path, "expected an array");
  for (size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    const std::string p = idx(path, i);
    if (!e.is_object()) fail(p, "expected an object");
    reject_unknown(e, p, {"name", "vector"});
    const json& jn = field(e, p, "name");
    if (!jn.is_string() || jn.get<std::string>().empty()) fail(p + ".name", "expected a nonempty name");
    const std::string name = jn.get<std::string>();
    if (name_taken(w, name)) fail(p + ".name", "duplicate name '" + name + "'");
    Vec v = parse_vec_field(field(e, p, "vector"), p + ".vector", w.coring->dim());
    w.grouplikes.emplace_back(name, std::move(v));
  }
}

void parse_comodules(const json& j, Workspace& w) {
  const std::string path = "comodules";
  if (!w.coring) fail(path, "requires a coring section");
  if (!j.is_array()) fail(path, "expected an array");
  for (size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    const std::string p = idx(path, i);
    if (!e.is_object()) fail(p, "expected an object");
    reject_unknown(e, p, {"name", "dim", "action", "coaction"});
    const json& jn = field(e, p, "name");
    if (!jn.is_string() || jn.get<std::string>().empty()) fail(p + ".name", "expected a nonempty name");
    const std::string name = jn.get<std::string>();
    if (name_taken(w, name)) fail(p + ".name", "duplicate name '" + name + "'");
    const size_t m = parse_dim_field(field(e, p, "dim"), p + ".dim");
    const size_t ad = w.algebra->dim();
    RightModule mod;
    mod.dim = m;
    const json& ja = field(e, p, "action");
    if (!ja.is_array() || ja.size() != ad)
      fail(p + ".action", "expected one matrix per algebra basis vector");
    for (size_t k = 0; k < ad; ++k)
      mod.action.push_back(parse_matrix_field(ja[k], idx(p + ".action", k), m, m));
    Matrix coaction = parse_matrix_field(field(e, p, "coaction"), p + ".coaction",
                                         m * w.coring->dim(), m);
    try {
      w.comodules.emplace_back(name, make_comodule(*w.coring, mod, coaction));
    } catch (const std::exception& ex) {
      fail(p, ex.what());
    }
  }
}

void parse_selector(const json& j, const std::string& path, const Workspace& w, bool group_names,
                    std::vector<std::string>& out) {
  out = parse_names(j, path);
  for (size_t i = 0; i < out.size(); ++i) {
    if (group_names) {
      if (!w.graded) fail(path, "requires a graded section");
      bool known = false;
      for (const auto& n : w.group_element_names) known = known || n == out[i];
      if (!known) fail(idx(path, i), "unknown group element '" + out[i] + "'");
    } else if (!name_taken(w, out[i])) {
      fail(idx(path, i), "unknown name '" + out[i] + "'");
    }
  }
}

json matrix_rows_json(const Matrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t k = 0; k < m.cols(); ++k) row.push_back(rat_str(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_obj_json(const Matrix& m) {
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", matrix_rows_json(m)}};
}

Matrix matrix_from_obj(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a matrix object");
  const size_t r = parse_dim_field(field(j, path, "rows"), path + ".rows");
  const size_t c = parse_dim_field(field(j, path, "cols"), path + ".cols");
  return parse_matrix_field(field(j, path, "entries"), path + ".entries", r, c);
}

json names_json(const std::vector<std::string>& v) {
  json out = json::array();
  for (const auto& n : v) out.push_back(n);
  return out;
}

json parse_report_json(const std::string& text, const char* command) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw WorkspaceError("report", e.what());
  }
  if (!j.is_object()) fail("report", "expected a JSON object");
  const json& jc = field(j, "report", "command");
  if (!jc.is_string() || jc.get<std::string>() != command)
    fail("report.command", std::string("expected \"") + command + "\"");
  return j;
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& n : v) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s.empty() ? "(none)" : s;
}

void print_matrix(std::ostream& os, const Matrix& m, const std::string& indent) {
  for (size_t i = 0; i < m.rows(); ++i) {
    os << indent;
    for (size_t k = 0; k < m.cols(); ++k) os << (k ? " " : "") << rat_str(m(i, k));
    os << "\n";
  }
}

struct FlagRow {
  const char* key;
  const char* label;
  bool DescentReport::*member;
};

// keep the machine keys equal to the struct field names
constexpr FlagRow kFlagRows[] = {
    {"members_fg_projective", "members f.g. projective", &DescentReport::members_fg_projective},
    {"can_bijective", "can bijective", &DescentReport::can_bijective},
    {"sigma_faithfully_flat", "sigma faithfully flat over the hom ring",
     &DescentReport::sigma_faithfully_flat},
    {"base_flat", "coring flat as a left module", &DescentReport::base_flat},
    {"generates_probes", "family generates the probes", &DescentReport::generates_probes},
    {"small_projective", "members small projective", &DescentReport::small_projective},
    {"s_faithfully_flat", "sigma faithfully flat over its endomorphisms",
     &DescentReport::s_faithfully_flat},
    {"middle_flat", "quotient flat as a left module", &DescentReport::middle_flat},
    {"lambda_bijective", "hom ring unchanged over the quotient", &DescentReport::lambda_bijective},
    {"middle_can_bijective", "can over the quotient bijective",
     &DescentReport::middle_can_bijective},
};

}  // namespace

Workspace parse_workspace(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw WorkspaceError("input", e.what());
  }
  if (!j.is_object()) throw WorkspaceError("input", "expected a JSON object");
  reject_unknown(j, "", {"field", "algebra", "graded", "coring", "grouplikes", "comodules",
                         "family", "subgroup", "probes"});
  const json& marker = field(j, "input", "field");
  if (!marker.is_string() || marker.get<std::string>() != "Q")
    throw WorkspaceError("field", "field marker must be \"Q\"");
  Workspace w;
  if (j.contains("algebra")) parse_algebra(j.at("algebra"), w);
  if (j.contains("graded")) parse_graded(j.at("graded"), w);
  if (j.contains("coring")) parse_coring(j.at("coring"), w);
  if (j.contains("grouplikes")) parse_grouplikes(j.at("grouplikes"), w);
  if (j.contains("comodules")) parse_comodules(j.at("comodules"), w);
  if (j.contains("family")) parse_selector(j.at("family"), "family", w, false, w.family);
  if (j.contains("subgroup")) parse_selector(j.at("subgroup"), "subgroup", w, true, w.subgroup);
  if (j.contains("probes")) parse_selector(j.at("probes"), "probes", w, false, w.probes);
  if (!w.family.empty() && !w.subgroup.empty())
    throw WorkspaceError("subgroup", "give either family or subgroup, not both");
  return w;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WorkspaceError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

bool ResolvedFamily::all_grouplike() const {
  if (members.empty()) return false;
  for (const auto& g : grouplike_of)
    if (!g) return false;
  return true;
}

std::vector<Vec> ResolvedFamily::grouplike_vectors() const {
  std::vector<Vec> r;
  for (const auto& g : grouplike_of) r.push_back(*g);
  return r;
}

namespace {

ResolvedFamily resolve_named(const Workspace& w, const std::vector<std::string>& names,
                             const std::string& where) {
  if (!w.coring) fail(where, "document has no coring");
  ResolvedFamily r;
  for (const auto& n : names) {
    const std::string loc = where + " '" + n + "'";
    bool done = false;
    for (const auto& [name, g] : w.grouplikes) {
      if (name != n) continue;
      if (!is_grouplike(*w.coring, g)) fail(loc, "vector is not grouplike");
      r.members.push_back(comodule_from_grouplike(*w.coring, g));
      r.grouplike_of.push_back(g);
      done = true;
      break;
    }
    for (const auto& [name, m] : w.comodules) {
      if (done || name != n) continue;
      ValidationReport rep = check_comodule(*w.coring, m);
      if (!rep.ok()) fail(loc, "fails the comodule axioms: " + rep.summary());
      r.members.push_back(m);
      r.grouplike_of.push_back(std::nullopt);
      done = true;
    }
    if (!done) fail(where, "unknown name '" + n + "'");
  }
  r.names = names;
  return r;
}

ResolvedFamily resolve_subgroup_elems(const Workspace& w, const std::vector<std::string>& elems) {
  if (!w.graded || w.coring_kind != "graded")
    fail("subgroup", "subgroup selection requires a graded coring");
  ResolvedFamily r;
  for (const auto& n : elems) {
    size_t gi = w.group_element_names.size();
    for (size_t i = 0; i < w.group_element_names.size(); ++i)
      if (w.group_element_names[i] == n) gi = i;
    if (gi == w.group_element_names.size()) fail("subgroup", "unknown group element '" + n + "'");
    Vec g = group_grouplike(*w.graded, gi);
    r.members.push_back(comodule_from_grouplike(*w.coring, g));
    r.grouplike_of.push_back(std::move(g));
    r.names.push_back(n);
  }
  return r;
}

}  // namespace

ResolvedFamily resolve_family(const Workspace& w, const std::vector<std::string>& names,
                              const std::vector<std::string>& subgroup) {
  if (!names.empty() && !subgroup.empty())
    fail("family", "give either names or a subgroup, not both");
  if (!names.empty()) return resolve_named(w, names, "family");
  if (!subgroup.empty()) return resolve_subgroup_elems(w, subgroup);
  if (!w.family.empty()) return resolve_named(w, w.family, "family");
  if (!w.subgroup.empty()) return resolve_subgroup_elems(w, w.subgroup);
  std::vector<std::string> all;
  for (const auto& [name, g] : w.grouplikes) all.push_back(name);
  if (all.empty())
    for (const auto& [name, m] : w.comodules) all.push_back(name);
  if (all.empty()) fail("family", "document declares no grouplikes or comodules");
  return resolve_named(w, all, "family");
}

ResolvedFamily resolve_probes(const Workspace& w, const std::vector<std::string>& names,
                              const ResolvedFamily& family) {
  if (!names.empty()) return resolve_named(w, names, "probes");
  if (!w.probes.empty()) return resolve_named(w, w.probes, "probes");
  std::vector<std::string> all;
  for (const auto& [name, g] : w.grouplikes) all.push_back(name);
  for (const auto& [name, m] : w.comodules) all.push_back(name);
  if (all.empty()) return family;
  return resolve_named(w, all, "probes");
}

CheckSummary check_workspace(const Workspace& w) {
  CheckSummary s;
  if (w.algebra) s.items.emplace_back("algebra axioms", check_algebra(*w.algebra).failures);
  if (w.graded)
    s.items.emplace_back("graded structure", check_graded_algebra(*w.graded).failures);
  if (w.coring) s.items.emplace_back("coring axioms", check_coring(*w.coring).failures);
  for (const auto& [name, g] : w.grouplikes) {
    std::vector<std::string> fs;
    if (!is_grouplike(*w.coring, g)) fs.push_back("vector is not grouplike");
    s.items.emplace_back("grouplike " + name, std::move(fs));
  }
  for (const auto& [name, m] : w.comodules)
    s.items.emplace_back("comodule " + name, check_comodule(*w.coring, m).failures);
  return s;
}

GaloisSummary galois_summary(const Workspace& w, const ResolvedFamily& fam) {
  FamilyAnalysis f = analyze_family(*w.coring, fam.members);
  CanReport can = canonical_map(f);
  GaloisSummary s;
  s.family = fam.names;
  s.coproduct_dim = f.coproduct.dim();
  s.relations_dim = f.coideal.dim();
  s.quotient_dim = f.quotient.dim();
  s.coring_dim = w.coring->dim();
  s.can_rank = can.rank;
  s.bijective = can.bijective;
  if (fam.all_grouplike())
    s.grouplike_span = grouplike_reachable_span(*w.coring, fam.grouplike_vectors()).dim();
  s.can = can.matrix;
  return s;
}

DescentSummary descent_summary(const Workspace& w, const ResolvedFamily& fam,
                               const ResolvedFamily& probes) {
  FamilyAnalysis f = analyze_family(*w.coring, fam.members);
  CanReport can = canonical_map(f);
  DescentSummary s;
  s.family = fam.names;
  s.probes = probes.names;
  s.coproduct_dim = f.coproduct.dim();
  s.relations_dim = f.coideal.dim();
  s.quotient_dim = f.quotient.dim();
  s.hom_ring_dim = f.homring.ring.dim();
  s.sigma_dim = f.sigma.dim;
  s.coring_dim = w.coring->dim();
  s.can_rank = can.rank;
  s.report = descent_report(f, probes.members);
  s.can = can.matrix;
  return s;
}

std::string render_check(const CheckSummary& s, bool machine) {
  if (machine) {
    json items = json::array();
    for (const auto& [subject, failures] : s.items)
      items.push_back(json{{"subject", subject}, {"failures", names_json(failures)}});
    json j{{"command", "check"}, {"ok", s.ok()}, {"items", std::move(items)}};
    return j.dump(2) + "\n";
  }
  if (s.items.empty()) return "nothing to check\n";
  std::ostringstream os;
  for (const auto& [subject, failures] : s.items) {
    os << subject << ": " << (failures.empty() ? "pass" : "FAIL") << "\n";
    for (const auto& f : failures) os << "  - " << f << "\n";
  }
  return os.str();
}

CheckSummary parse_check_report(const std::string& text) {
  json j = parse_report_json(text, "check");
  const json& items = field(j, "report", "items");
  if (!items.is_array()) fail("report.items", "expected an array");
  CheckSummary s;
  for (size_t i = 0; i < items.size(); ++i) {
    const std::string p = idx("report.items", i);
    const json& e = items[i];
    if (!e.is_object()) fail(p, "expected an object");
    const json& jn = field(e, p, "subject");
    if (!jn.is_string()) fail(p + ".subject", "expected a string");
    s.items.emplace_back(jn.get<std::string>(),
                         parse_names(field(e, p, "failures"), p + ".failures"));
  }
  return s;
}

std::string render_galois(const GaloisSummary& s, bool machine) {
  std::ostringstream rk;
  rk << s.can_rank << "/" << s.coring_dim;
  if (machine) {
    json j{{"command", "galois"},
           {"family", names_json(s.family)},
           {"dims",
            json{{"coproduct", s.coproduct_dim},
                 {"relations", s.relations_dim},
                 {"quotient", s.quotient_dim},
                 {"coring", s.coring_dim}}},
           {"can_rank", s.can_rank},
           {"bijective", s.bijective},
           {"grouplike_span", s.grouplike_span ? json(*s.grouplike_span) : json(nullptr)},
           {"can", matrix_obj_json(s.can)}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "family: " << joined(s.family) << "\n";
  os << "dim coproduct: " << s.coproduct_dim << "\n";
  os << "dim relations: " << s.relations_dim << "\n";
  os << "dim quotient: " << s.quotient_dim << "\n";
  os << "dim coring: " << s.coring_dim << "\n";
  if (s.grouplike_span) os << "grouplike span: " << *s.grouplike_span << "\n";
  os << "GALOIS: " << (s.bijective ? "yes" : "no") << " (rank " << rk.str() << ")\n";
  return os.str();
}

GaloisSummary parse_galois_report(const std::string& text) {
  json j = parse_report_json(text, "galois");
  GaloisSummary s;
  s.family = parse_names(field(j, "report", "family"), "report.family");
  const json& dims = field(j, "report", "dims");
  s.coproduct_dim = parse_dim_field(field(dims, "report.dims", "coproduct"), "report.dims.coproduct");
  s.relations_dim = parse_dim_field(field(dims, "report.dims", "relations"), "report.dims.relations");
  s.quotient_dim = parse_dim_field(field(dims, "report.dims", "quotient"), "report.dims.quotient");
  s.coring_dim = parse_dim_field(field(dims, "report.dims", "coring"), "report.dims.coring");
  s.can_rank = parse_dim_field(field(j, "report", "can_rank"), "report.can_rank");
  const json& jb = field(j, "report", "bijective");
  if (!jb.is_boolean()) fail("report.bijective", "expected a boolean");
  s.bijective = jb.get<bool>();
  const json& js = field(j, "report", "grouplike_span");
  if (!js.is_null()) s.grouplike_span = parse_dim_field(js, "report.grouplike_span");
  s.can = matrix_from_obj(field(j, "report", "can"), "report.can");
  return s;
}

std::string render_descent(const DescentSummary& s, bool machine) {
  if (machine) {
    json flags = json::object();
    for (const auto& row : kFlagRows) flags[row.key] = s.report.*(row.member);
    json j{{"command", "descent"},
           {"family", names_json(s.family)},
           {"probes", names_json(s.probes)},
           {"dims",
            json{{"coproduct", s.coproduct_dim},
                 {"relations", s.relations_dim},
                 {"quotient", s.quotient_dim},
                 {"hom_ring", s.hom_ring_dim},
                 {"sigma", s.sigma_dim},
                 {"coring", s.coring_dim}}},
           {"can_rank", s.can_rank},
           {"flags", std::move(flags)},
           {"inconsistencies", names_json(s.report.inconsistencies)},
           {"can", matrix_obj_json(s.can)}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "family: " << joined(s.family) << "\n";
  os << "probes: " << joined(s.probes) << "\n";
  os << "dim coproduct: " << s.coproduct_dim << "\n";
  os << "dim relations: " << s.relations_dim << "\n";
  os << "dim quotient: " << s.quotient_dim << "\n";
  os << "dim hom ring: " << s.hom_ring_dim << "\n";
  os << "dim sigma: " << s.sigma_dim << "\n";
  os << "dim coring: " << s.coring_dim << "\n";
  os << "can rank: " << s.can_rank << "/" << s.coring_dim << "\n";
  for (const auto& row : kFlagRows) {
    std::string label = row.label;
    label.resize(46, ' ');
    os << "  " << label << (s.report.*(row.member) ? "yes" : "no") << "\n";
  }
  if (s.report.consistent()) {
    os << "consistency: ok\n";
  } else {
    os << "INTERNAL INCONSISTENCY:\n";
    for (const auto& m : s.report.inconsistencies) os << "  - " << m << "\n";
  }
  return os.str();
}

DescentSummary parse_descent_report(const std::string& text) {
  json j = parse_report_json(text, "descent");
  DescentSummary s;
  s.family = parse_names(field(j, "report", "family"), "report.family");
  s.probes = parse_names(field(j, "report", "probes"), "report.probes");
  const json& dims = field(j, "report", "dims");
  s.coproduct_dim = parse_dim_field(field(dims, "report.dims", "coproduct"), "report.dims.coproduct");
  s.relations_dim = parse_dim_field(field(dims, "report.dims", "relations"), "report.dims.relations");
  s.quotient_dim = parse_dim_field(field(dims, "report.dims", "quotient"), "report.dims.quotient");
  s.hom_ring_dim = parse_dim_field(field(dims, "report.dims", "hom_ring"), "report.dims.hom_ring");
  s.sigma_dim = parse_dim_field(field(dims, "report.dims", "sigma"), "report.dims.sigma");
  s.coring_dim = parse_dim_field(field(dims, "report.dims", "coring"), "report.dims.coring");
  s.can_rank = parse_dim_field(field(j, "report", "can_rank"), "report.can_rank");
  const json& flags = field(j, "report", "flags");
  for (const auto& row : kFlagRows) {
    const json& jf = field(flags, "report.flags", row.key);
    if (!jf.is_boolean()) fail(std::string("report.flags.") + row.key, "expected a boolean");
    s.report.*(row.member) = jf.get<bool>();
  }
  s.report.inconsistencies =
      parse_names(field(j, "report", "inconsistencies"), "report.inconsistencies");
  s.can = matrix_from_obj(field(j, "report", "can"), "report.can");
  return s;
}

std::string render_coring_document(const Algebra& a, const Coring& c, bool machine) {
  Matrix delta_ambient = c.square.space.section * c.delta;
  if (machine) {
    json st = json::array();
    for (size_t i = 0; i < a.dim(); ++i) {
      json row = json::array();
      for (size_t k = 0; k < a.dim(); ++k) {
        json v = json::array();
        for (const auto& q : a.structure()[i][k]) v.push_back(rat_str(q));
        row.push_back(std::move(v));
      }
      st.push_back(std::move(row));
    }
    json unit = json::array();
    for (const auto& q : a.unit()) unit.push_back(rat_str(q));
    json left = json::array(), right = json::array();
    for (size_t i = 0; i < a.dim(); ++i) {
      left.push_back(matrix_rows_json(c.bimodule.left_action[i]));
      right.push_back(matrix_rows_json(c.bimodule.right_action[i]));
    }
    json j{{"field", "Q"},
           {"algebra", json{{"structure", std::move(st)}, {"unit", std::move(unit)}}},
           {"coring", json{{"kind", "explicit"},
                           {"dim", c.dim()},
                           {"left_action", std::move(left)},
                           {"right_action", std::move(right)},
                           {"delta", matrix_rows_json(delta_ambient)},
                           {"counit", matrix_rows_json(c.counit)}}}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "algebra: dim " << a.dim() << "\n";
  os << "coring: dim " << c.dim() << "\n";
  for (size_t i = 0; i < a.dim(); ++i) {
    os << "left action of basis " << i << ":\n";
    print_matrix(os, c.bimodule.left_action[i], "  ");
  }
  for (size_t i = 0; i < a.dim(); ++i) {
    os << "right action of basis " << i << ":\n";
    print_matrix(os, c.bimodule.right_action[i], "  ");
  }
  os << "delta (ambient " << delta_ambient.rows() << " x " << delta_ambient.cols() << "):\n";
  print_matrix(os, delta_ambient, "  ");
  os << "counit (" << c.counit.rows() << " x " << c.counit.cols() << "):\n";
  print_matrix(os, c.counit, "  ");
  return os.str();
}

}  // namespace qcoring
