#pragma once

#include <vector>

#include "assoc/geometry.hpp"
#include "assoc/window.hpp"

namespace assoc {

/// An indecomposable representation of the reversed type-A quiver: dimension
/// one on a contiguous vertex interval, zero elsewhere.
struct IntervalModule {
  DynkinQuiver quiver;  // the original quiver; the module lives over its reverse
  int lo = 0, hi = 0;   // support interval [lo, hi], 1-based, inclusive
  IntVec dims;          // 0/1 vector supported on [lo, hi]
};

/// The indecomposable at an inner window index of a type-A quiver.
/// Throws NotDynkin ("NotTypeA" condition) for other types.
IntervalModule interval_of(const TranslationWindow& w, WIdx alpha);

/// All dimension vectors of subrepresentations, by brute force over 0/1
/// subvectors of the support closed under the reversed arrows.
std::vector<IntVec> submodule_dim_vectors(const IntervalModule& m);

/// Convex hull (extreme-point form) of the submodule dimension vectors.
VPolytope submodule_polytope(const IntervalModule& m);

/// Number of arrow-closed 0/1 subvectors realizing the dimension vector e;
/// vertex uniqueness asserts this equals 1 at polytope vertices.
int count_submodules_with_dims(const IntervalModule& m, const IntVec& e);

}  // namespace assoc
