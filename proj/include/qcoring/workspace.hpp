#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcoring/comatrix.hpp"
#include "qcoring/graded.hpp"

namespace qcoring {

// Parse or semantic failure in a workspace document. location is the path of
// the offending field ("algebra.structure[1][0]", "family[2]", ...) or a byte
// position for raw syntax errors.
class WorkspaceError : public std::runtime_error {
 public:
  WorkspaceError(std::string where, const std::string& what_arg)
      : std::runtime_error(where + ": " + what_arg), location_(std::move(where)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// One self-contained input file: base algebra, optional grading, at most one
// coring (a named construction or explicit matrices), named grouplikes and
// comodules over it, and default family / probe selections.
struct Workspace {
  std::optional<Algebra> algebra;
  std::vector<std::string> algebra_basis_names;
  std::optional<GradedAlgebra> graded;
  std::vector<std::string> group_element_names;
  std::optional<Coring> coring;
  std::string coring_kind;  // "trivial", "sweedler", "graded" or "explicit"
  std::vector<std::pair<std::string, Vec>> grouplikes;
  std::vector<std::pair<std::string, Comodule>> comodules;
  std::vector<std::string> family;    // default family: grouplike/comodule names
  std::vector<std::string> subgroup;  // default family: group element names
  std::vector<std::string> probes;    // default probes: grouplike/comodule names
};

// Throws WorkspaceError on the first malformed field; a document that comes
// back was fully validated (names resolve, all matrices sized consistently).
Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::string& path);

// The comodules a selector picks out. Group element names go through the
// grouplikes of the graded coring, other names through the declared grouplike
// and comodule lists; with both selectors empty the document's own defaults
// apply, then every declared grouplike, then every declared comodule.
struct ResolvedFamily {
  std::vector<std::string> names;
  std::vector<Comodule> members;
  std::vector<std::optional<Vec>> grouplike_of;  // set where the member came from a grouplike

  bool all_grouplike() const;
  std::vector<Vec> grouplike_vectors() const;  // only when all_grouplike()
};

ResolvedFamily resolve_family(const Workspace& w, const std::vector<std::string>& names,
                              const std::vector<std::string>& subgroup);

// Probe comodules by name. With no names the document's probe list applies,
// then every declared grouplike and comodule, then the family itself.
ResolvedFamily resolve_probes(const Workspace& w, const std::vector<std::string>& names,
                              const ResolvedFamily& family);

// check: every structure the document declares, one entry per subject in
// declaration order, with the axiom failures that subject produced.
struct CheckSummary {
  std::vector<std::pair<std::string, std::vector<std::string>>> items;

  bool ok() const {
    for (const auto& [subject, failures] : items)
      if (!failures.empty()) return false;
    return true;
  }
  bool operator==(const CheckSummary&) const = default;
};

CheckSummary check_workspace(const Workspace& w);

// galois: dimensions of the family coproduct, its identification subspace and
// the quotient, plus the canonical map into the base coring. grouplike_span is
// the independently computed dimension of span{ a g b } when every family
// member is a grouplike; it must equal can_rank.
struct GaloisSummary {
  std::vector<std::string> family;
  size_t coproduct_dim = 0;
  size_t relations_dim = 0;
  size_t quotient_dim = 0;
  size_t coring_dim = 0;
  size_t can_rank = 0;
  bool bijective = false;
  std::optional<size_t> grouplike_span;
  Matrix can;

  bool operator==(const GaloisSummary&) const = default;
};

GaloisSummary galois_summary(const Workspace& w, const ResolvedFamily& fam);

// descent: the full flag set over the family with its supporting dimensions.
struct DescentSummary {
  std::vector<std::string> family;
  std::vector<std::string> probes;
  size_t coproduct_dim = 0;
  size_t relations_dim = 0;
  size_t quotient_dim = 0;
  size_t hom_ring_dim = 0;
  size_t sigma_dim = 0;
  size_t coring_dim = 0;
  size_t can_rank = 0;
  DescentReport report;
  Matrix can;

  bool all_flags() const {
    return report.members_fg_projective && report.can_bijective &&
           report.sigma_faithfully_flat && report.base_flat && report.generates_probes &&
           report.small_projective && report.s_faithfully_flat && report.middle_flat &&
           report.lambda_bijective && report.middle_can_bijective;
  }
  bool operator==(const DescentSummary&) const = default;
};

DescentSummary descent_summary(const Workspace& w, const ResolvedFamily& fam,
                               const ResolvedFamily& probes);

// Renderers: machine form is a JSON document, human form a plain-text table.
// Machine reports parse back to structurally equal summaries.
std::string render_check(const CheckSummary& s, bool machine);
std::string render_galois(const GaloisSummary& s, bool machine);
std::string render_descent(const DescentSummary& s, bool machine);

CheckSummary parse_check_report(const std::string& text);
GaloisSummary parse_galois_report(const std::string& text);
DescentSummary parse_descent_report(const std::string& text);

// build: the coring as a complete workspace document with explicit matrices,
// reusable as input. Human form prints the same matrices as labelled tables.
std::string render_coring_document(const Algebra& a, const Coring& c, bool machine);

}  // namespace qcoring
