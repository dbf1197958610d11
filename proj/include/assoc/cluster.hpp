#pragma once

#include <optional>
#include <string>
#include <vector>

#include "assoc/laurent.hpp"
#include "assoc/quiver.hpp"
#include "assoc/window.hpp"

namespace assoc {

/// A labelled seed: extended exchange matrix plus the n cluster variables,
/// living over x1..xn and the frozen coefficient names.
struct Seed {
  IntMat bmat;                     // (n+m) x n
  std::vector<LaurentPoly> vars;   // n cluster variables
  std::vector<std::string> coeff_names;
  VarSetPtr varset;

  int n() const { return (int)vars.size(); }
  int m() const { return (int)coeff_names.size(); }
};

Seed initial_seed(const IceQuiver& ice);

/// Mutation at an unfrozen vertex k (1-based): matrix mutation
///   b'[i][j] = -b[i][j] if i==k or j==k, else b[i][j] + sgn(b[i][k]) * max(0, b[i][k]*b[k][j])
/// and the exchange x_k' = (prod_{b[i][k]>0} v_i^{b[i][k]} + prod_{b[i][k]<0} v_i^{-b[i][k]}) / x_k,
/// computed by exact division.  Involutive.
Seed mutate(const Seed& s, int k);

/// Cluster variables for every window index, walking slices from the initial
/// one and mutating at a source each step.  source_policy 0 advances the
/// first admissible source in column order, 1 the last; the result is the
/// same either way.
std::vector<LaurentPoly> slice_variables(const TranslationWindow& w, const IceQuiver& ice,
                                         int source_policy = 0);

/// Mutation closure of the principal-coefficients seed.  Variables are
/// matched to window indices by exact polynomial equality against the slice
/// assignment; clusters are recorded as sorted index-position sets.
struct ClusterAtlas {
  std::vector<LaurentPoly> variables;        // per window index position
  std::vector<std::vector<int>> clusters;    // sorted, deduplicated
  std::vector<std::pair<int, int>> exchange_edges;  // cluster ids, a < b
};

ClusterAtlas enumerate_atlas(const TranslationWindow& w);

/// Principal-coefficients variable at `pos` with all x's set to 1; a
/// polynomial in y1..yn.
LaurentPoly f_polynomial(const ClusterAtlas& atlas, const TranslationWindow& w, int pos);

/// Coefficient row -g(i,j) for every window index, names z<i>_<j>.
IceQuiver universal_ice(const TranslationWindow& w);

/// Universal-coefficients variables with the x's set to 1, per index position.
std::vector<LaurentPoly> universal_f_polynomials(const TranslationWindow& w);

std::string universal_coeff_name(WIdx a);

/// Specializes a principal-coefficients cluster variable to the coefficient
/// system of `ice`: substitute yhat_i = prod_j z_j^(row_j[i]) and divide by
/// the tropical evaluation of the substituted F-polynomial.
LaurentPoly separation_specialize(const LaurentPoly& f_prin, const IceQuiver& ice);

}  // namespace assoc
