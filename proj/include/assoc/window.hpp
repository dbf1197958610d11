#pragma once

#include <compare>
#include <map>
#include <vector>

#include "assoc/quiver.hpp"

namespace assoc {

/// Vertex (i,j) of the translation quiver: copy i >= 0 of column j in 1..n.
struct WIdx {
  int i = 0;
  int j = 0;
  auto operator<=>(const WIdx&) const = default;
};

inline std::string to_string(WIdx a) {
  return std::to_string(a.i) + "," + std::to_string(a.j);
}

/// The finite window of copies of Q chained by reversed-arrow connectors,
/// carrying dimension vectors and g-vectors.  Rows of `dims` over the inner
/// part enumerate the positive roots of the type exactly once; the boundary
/// carries the negated classes whose g-vectors are the negative unit
/// vectors.  Immutable after build_window.
///
/// Index order everywhere: sorted by copy i, then column j.
struct TranslationWindow {
  DynkinQuiver q;
  std::vector<WIdx> indices;             // the full index set I, canonical order
  std::vector<char> inner;               // inner[p] = 1 iff indices[p] in I+
  std::vector<int> column_bound;         // i_j per column j (1-based, [0] unused)
  std::vector<IntVec> dims;              // per index position, length n
  std::vector<IntVec> gvecs;             // per index position, length n
  std::vector<std::pair<int, int>> mesh_arrows;  // arrows as index positions
  std::vector<int> boundary_of_unit;     // k (1-based) -> position with gvec = -e_k
  std::vector<int> topo_order;           // columns of Q, sources first

  int n() const { return q.n; }
  int size() const { return (int)indices.size(); }
  int inner_size() const { return (int)inner_positions.size(); }

  /// Position of (i,j) in `indices`, or -1.
  int pos(WIdx a) const;
  bool contains(WIdx a) const { return pos(a) >= 0; }
  bool is_inner(int p) const { return inner[p] != 0; }

  std::vector<int> inner_positions;      // positions of I+ in canonical order
  std::vector<int> inner_ordinal;        // per position: ordinal in I+, or -1

 private:
  friend TranslationWindow build_window(const DynkinQuiver&);
  std::map<std::pair<int, int>, int> pos_map_;
};

TranslationWindow build_window(const DynkinQuiver& q);

/// All slices: per-column copy indices a_j with a_u - a_v in {0,1} for every
/// arrow u->v of Q.  Includes the initial slice (all zero) and the final
/// slice (all i_j + 1).  Returned as sorted index-position sets.
std::vector<std::vector<int>> slices(const TranslationWindow& w);

/// hom[p][t] = dim Hom(W at position p, W at inner ordinal t), solved column
/// by column from the deformed mesh relations with a unit deformation at the
/// target.  Values at boundary sources are all zero.
struct HomTable {
  std::vector<std::vector<long long>> hom;  // |I| x |I+|
};

HomTable hom_table(const TranslationWindow& w);

/// dim Ext^1(W_a, W_b) for positions a, b, from the translate of a:
///   - a inner and non-projective: Ext^1(a,b) = Hom(b, tau a)
///   - a projective (copy 0):      0
///   - a on the boundary (shifted projective P_k[1]), b inner: dim_k of b
///   - both on the boundary:       0
long long ext_dim(const TranslationWindow& w, const HomTable& h, int a, int b);

struct CompatibilityTable {
  std::vector<std::vector<char>> compat;  // |I| x |I|, symmetric
};

/// compat[a][b] iff Ext^1 vanishes in both directions.
CompatibilityTable compatibility(const TranslationWindow& w, const HomTable& h);

/// Positive roots of the underlying type in simple-root coordinates,
/// generated by reflection closure from the Cartan matrix.  Independent of
/// the knitting recursion; used to cross-check `dims`.
std::vector<IntVec> positive_roots(const DynkinQuiver& q);

}  // namespace assoc
