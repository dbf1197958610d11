#pragma once

#include <string>
#include <utility>
#include <vector>

#include "assoc/error.hpp"
#include "assoc/numbers.hpp"

namespace assoc {

enum class DynkinSeries { A, D, E };

struct DynkinType {
  DynkinSeries series = DynkinSeries::A;
  int rank = 1;
  std::string name() const;
  bool operator==(const DynkinType&) const = default;
};

/// Small dense integer matrix (row-major).  Exchange matrices and extended
/// coefficient blocks stay far below 64-bit range in finite type.
using IntMat = std::vector<std::vector<long long>>;
using IntVec = std::vector<long long>;

/// An orientation of a connected, simply-laced Dynkin diagram with vertices
/// labelled 1..n.  Immutable after construction.
struct DynkinQuiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target), 1-based
  DynkinType type;
  // adjacency, 1-based; slot 0 unused
  std::vector<std::vector<int>> out;  // out[v] = targets of arrows v -> *
  std::vector<std::vector<int>> in;   // in[v]  = sources of arrows * -> v
  bool has_arrow(int s, int t) const;
};

/// Validates and classifies; throws BadLabels / NotSimplyLaced /
/// Disconnected / NotDynkin naming the broken invariant.
DynkinQuiver make_quiver(int n, std::vector<std::pair<int, int>> arrows);

/// Text form "1->2; 3->2" (';' or newline separated, bare labels allowed for
/// isolated vertices) or a JSON object {"n": int, "arrows": [[s,t],...]}.
DynkinQuiver parse_quiver(const std::string& text);

DynkinQuiver opposite(const DynkinQuiver& q);

/// b[i][j] = #arrows i->j minus #arrows j->i (0-based storage of the 1-based
/// vertex indexing).
IntMat exchange_matrix(const DynkinQuiver& q);

/// A quiver together with frozen vertices, kept as the coefficient rows of
/// the extended exchange matrix.  Arrows between frozen vertices are not
/// representable here, which is harmless: they never enter any mutation.
struct IceQuiver {
  DynkinQuiver base;
  int m = 0;
  IntMat rows;                     // m x n frozen block
  std::vector<std::string> names;  // coefficient variable names, size m
};

/// Frozen copy i' -> i for every vertex: coefficient block = identity,
/// names y1..yn.
IceQuiver framed(const DynkinQuiver& q);

/// No frozen vertices at all (trivial coefficients).
IceQuiver trivial_ice(const DynkinQuiver& q);

IceQuiver make_ice(DynkinQuiver base, IntMat rows, std::vector<std::string> names);

// ---- type data -------------------------------------------------------

int coxeter_number(DynkinType t);
std::vector<int> type_exponents(DynkinType t);
long long num_positive_roots(DynkinType t);

/// Number of clusters of the type: prod_i (e_i + h + 1) / (e_i + 1).
Int generalized_catalan(DynkinType t);

/// A fixed default orientation per type (chains oriented towards higher
/// labels, branch vertices fed from the branch tips).
DynkinQuiver standard_quiver(DynkinType t);
DynkinType parse_type_name(const std::string& name);  // "A3", "D4", "E6"

/// All 2^(n-1) orientations exist; pick one from `seed` (property tests).
DynkinQuiver random_orientation(DynkinType t, unsigned long long seed);

}  // namespace assoc
