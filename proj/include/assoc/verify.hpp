#pragma once

#include <optional>
#include <string>
#include <vector>

#include "assoc/cluster.hpp"
#include "assoc/geometry.hpp"
#include "assoc/interval_oracle.hpp"
#include "assoc/quiver.hpp"
#include "assoc/window.hpp"

namespace assoc {

struct Report {
  std::string check;
  std::string type_name;
  std::string params;
  bool pass = false;
  std::string witness;  // concrete counterexample description when failing
  double ms = 0.0;
};

std::string report_json_line(const Report& r);
std::string report_text_line(const Report& r);

/// Shared per-quiver state.  The atlas is the polynomial-heavy part and is
/// built once; geometry-only checks can run without it.
struct TypeContext {
  DynkinQuiver q;
  TranslationWindow w;
  HomTable h;
  CompatibilityTable compat;
  std::optional<ClusterAtlas> atlas;
};

TypeContext make_context(const DynkinQuiver& q, bool with_atlas);

/// Facet structure, face-compatibility in both directions, vertex/cluster
/// bijection, projection round trip, outer normals = g-vectors.
Report check_theorem_one(const TypeContext& ctx, const CTuple& c);

/// Newton polytope of the F-polynomial at (i+1,j) equals the projected
/// polytope of the unit deformation at (i,j).  Exact, zero tolerance.
Report check_theorem_two(const TypeContext& ctx, WIdx alpha);

/// Same statement in the full ambient space with universal coefficients.
Report check_universal(const TypeContext& ctx, WIdx alpha);

/// Nonnegative c with zeros: vertex zero-sets contain maximal compatible
/// sets; facet normals stay inside the g-vector set.
Report check_degenerate(const TypeContext& ctx, const CTuple& c);

/// Separation formula against direct mutation for every index.
Report check_separation(const TypeContext& ctx, const IceQuiver& ice, const std::string& label);

/// Ext-based compatibility equals cluster co-occurrence.
Report check_compat_agreement(const TypeContext& ctx);

/// Type-A three-way agreement: submodule polytope = projected unit-c
/// polytope = Newton polytope, with vertex-submodule uniqueness.
Report check_oracle_three_way(const TypeContext& ctx, WIdx alpha);

/// Rank ceilings; polynomial-heavy checks stop earlier than geometry-only.
struct VerifyOptions {
  unsigned long long seed = 1;
  int poly_max_a = 7, poly_max_d = 6, poly_max_e = 6;
  int geom_max_a = 8, geom_max_d = 8, geom_max_e = 8;
  int random_c_per_type = 5;
  long long c_lo = 1, c_hi = 10;
};

/// The standard grid used by `verify --all`.
std::vector<Report> run_standard_suite(const VerifyOptions& opt);

}  // namespace assoc
