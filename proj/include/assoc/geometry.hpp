#pragma once

#include <map>
#include <vector>

#include "assoc/numbers.hpp"
#include "assoc/window.hpp"

namespace assoc {

/// Deformation parameters, one nonnegative rational per inner index, in the
/// canonical inner order.
struct CTuple {
  std::vector<Rational> c;
  bool strictly_positive() const;
};

CTuple ones_c(const TranslationWindow& w);
CTuple zero_c(const TranslationWindow& w);
CTuple unit_c(const TranslationWindow& w, WIdx alpha);
CTuple make_c(const TranslationWindow& w, std::vector<Rational> values);
/// Integer entries uniformly drawn from [lo, hi], split-mix seeded.
CTuple random_c(const TranslationWindow& w, unsigned long long seed, long long lo, long long hi);

/// A point of the ambient space, one rational coordinate per window index.
using PointI = std::vector<Rational>;

/// One deformed mesh relation:
///   p[at] + p[translate] - sum p[middles] = c[c_ordinal].
struct MeshRelation {
  int at;
  int translate;
  std::vector<int> middles;
  int c_ordinal;
};

std::vector<MeshRelation> mesh_relations(const TranslationWindow& w);
bool satisfies_mesh(const TranslationWindow& w, const CTuple& c, const PointI& p);

/// v[alpha] = sum_beta c_beta * hom[alpha][beta]; the canonical point of the
/// deformed solution space, zero on the boundary.
PointI v_point(const TranslationWindow& w, const HomTable& h, const CTuple& c);

/// The unique mesh solution whose boundary coordinates realize the given
/// projection values, solved right to left.
PointI section(const TranslationWindow& w, const CTuple& c, const std::vector<Rational>& final_values);

/// Reads coordinate k off the boundary index with g-vector -e_k.
std::vector<Rational> project_pi(const TranslationWindow& w, const PointI& p);

/// The unique mesh solution vanishing on the n pairwise-compatible indices
/// of T (sorted positions).  Throws IncompatibleSet / SingularSystem.
PointI vertex_for_cluster(const TranslationWindow& w, const HomTable& h, const CTuple& c,
                          const std::vector<int>& T);

/// Vertex enumeration by edge walking, starting from the final-slice vertex:
/// from each known vertex, drop one vanishing coordinate and slide along the
/// remaining codimension-1 ray until the next coordinate hyperplane.
/// Requires strictly positive c (DegenerateWalk otherwise).
struct VertexMap {
  std::vector<std::vector<int>> clusters;  // sorted positions, sorted list
  std::vector<PointI> points;              // aligned with clusters
};

VertexMap enumerate_vertices(const TranslationWindow& w, const HomTable& h, const CTuple& c);

// ---- polytopes -------------------------------------------------------

using QPoint = std::vector<Rational>;

struct VPolytope {
  int dim = 0;
  std::vector<QPoint> points;   // generating set
  std::vector<QPoint> extreme;  // minimal generating subset, sorted
};

VPolytope make_polytope(int dim, std::vector<QPoint> points);

/// Minimal subset with the same convex hull, decided by exact feasibility.
std::vector<QPoint> extreme_points(const std::vector<QPoint>& pts);

/// Equality of convex hulls (extreme sets coincide).  DimensionMismatch on
/// different ambient dimensions.
bool polytope_equal(const VPolytope& a, const VPolytope& b);

VPolytope minkowski_sum(const VPolytope& a, const VPolytope& b);

/// True iff the maximizers of <direction, x> over P's extreme points are
/// exactly `expected_face_vertices` (as a set).
bool outer_normal_check(const VPolytope& p, const IntVec& direction,
                        const std::vector<QPoint>& expected_face_vertices);

/// Dimension of the affine hull of the points.
int affine_rank(const std::vector<QPoint>& pts);

/// True iff p lies in the convex hull of pts (exact LP feasibility).
bool in_convex_hull(const QPoint& p, const std::vector<QPoint>& pts);

/// Vertices of the H-polytope { x : <normals[r], x> <= offsets[r] }.
/// Intended for small instances; enumerates d-subsets of the constraints.
std::vector<QPoint> vertices_of_halfspaces(const std::vector<IntVec>& normals,
                                           const std::vector<Rational>& offsets, int dim);

// ---- exact linear algebra kernels -------------------------------------

/// Solves the square integer system A x = b exactly (fraction-free
/// elimination).  Throws SingularSystem.
std::vector<Rational> solve_int_system(const std::vector<std::vector<Int>>& a,
                                       const std::vector<Rational>& b);

/// Spanning vector of the kernel of a full-rank (n-1) x n integer matrix,
/// as signed maximal minors.  Throws SingularSystem if the rank drops.
std::vector<Int> kernel_vector(const std::vector<std::vector<Int>>& m);

}  // namespace assoc
