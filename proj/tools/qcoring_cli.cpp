// Command surface over the workspace layer. Exit codes: 0 all checks pass,
// 1 negative mathematical verdict, 2 input error, 3 internal inconsistency.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcoring/workspace.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct Options {
  std::string file;
  std::string family;
  std::string subgroup;
  std::string probes;
  bool machine = false;
};

int run_check(const Options& o) {
  qcoring::Workspace w = qcoring::load_workspace(o.file);
  qcoring::CheckSummary s = qcoring::check_workspace(w);
  std::cout << qcoring::render_check(s, o.machine);
  if (s.items.empty()) {
    if (o.machine) std::cerr << "nothing to check\n";
    return 1;
  }
  return s.ok() ? 0 : 1;
}

int run_galois(const Options& o) {
  qcoring::Workspace w = qcoring::load_workspace(o.file);
  qcoring::ResolvedFamily fam =
      qcoring::resolve_family(w, split_csv(o.family), split_csv(o.subgroup));
  qcoring::GaloisSummary s = qcoring::galois_summary(w, fam);
  std::cout << qcoring::render_galois(s, o.machine);
  if (s.grouplike_span && *s.grouplike_span != s.can_rank) {
    std::cerr << "internal inconsistency: pipeline rank " << s.can_rank
              << " differs from the grouplike span " << *s.grouplike_span << "\n";
    return 3;
  }
  return s.bijective ? 0 : 1;
}

int run_descent(const Options& o) {
  qcoring::Workspace w = qcoring::load_workspace(o.file);
  qcoring::ResolvedFamily fam =
      qcoring::resolve_family(w, split_csv(o.family), split_csv(o.subgroup));
  qcoring::ResolvedFamily probes = qcoring::resolve_probes(w, split_csv(o.probes), fam);
  qcoring::DescentSummary s = qcoring::descent_summary(w, fam, probes);
  std::cout << qcoring::render_descent(s, o.machine);
  if (!s.report.consistent()) {
    std::cerr << "internal inconsistency: the descent criteria disagree; if the probe"
                 " set omits a witnessing comodule, rerun with the full declared probes\n";
    return 3;
  }
  return s.all_flags() ? 0 : 1;
}

int run_build(const Options& o) {
  qcoring::Workspace w = qcoring::load_workspace(o.file);
  if (!w.coring) throw qcoring::WorkspaceError("coring", "document has no coring");
  if (o.family.empty() && o.subgroup.empty()) {
    std::cout << qcoring::render_coring_document(*w.algebra, *w.coring, o.machine);
    return 0;
  }
  qcoring::ResolvedFamily fam =
      qcoring::resolve_family(w, split_csv(o.family), split_csv(o.subgroup));
  qcoring::FamilyAnalysis f = qcoring::analyze_family(*w.coring, fam.members);
  std::cout << qcoring::render_coring_document(*w.algebra, f.quotient, o.machine);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with corings and comodules over Q-algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c, bool with_family, bool with_probes) {
    c->add_option("file", o.file, "workspace document")->required();
    c->add_flag("--machine", o.machine, "emit the machine-readable report");
    if (with_family) {
      c->add_option("--family", o.family, "comma-separated grouplike or comodule names");
      c->add_option("--subgroup", o.subgroup,
                    "comma-separated group elements whose grouplikes form the family");
    }
    if (with_probes) c->add_option("--probes", o.probes, "comma-separated probe names");
  };

  CLI::App* c_check = app.add_subcommand("check", "validate every declared structure");
  add_common(c_check, false, false);
  CLI::App* c_galois = app.add_subcommand("galois", "canonical map verdict for a family");
  add_common(c_galois, true, false);
  CLI::App* c_descent = app.add_subcommand("descent", "descent condition table for a family");
  add_common(c_descent, true, true);
  CLI::App* c_build = app.add_subcommand("build", "emit the constructed coring matrices");
  add_common(c_build, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_check)) return run_check(o);
    if (app.got_subcommand(c_galois)) return run_galois(o);
    if (app.got_subcommand(c_descent)) return run_descent(o);
    return run_build(o);
  } catch (const qcoring::WorkspaceError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
