#pragma once

#include <string>

#include "assoc/cluster.hpp"
#include "assoc/geometry.hpp"
#include "assoc/quiver.hpp"
#include "assoc/window.hpp"

namespace assoc {

/// Window dump: indices, inner flags, column bounds, dims, gvecs, mesh
/// arrows and slices, with all maps keyed "i,j" in canonical order.
std::string window_json(const TranslationWindow& w);

std::string gvectors_json(const TranslationWindow& w);

/// {"dim": d, "vertices": [["3","1/2",...],...]} with vertices sorted.
std::string polytope_json(const VPolytope& p);

/// Full ambient dump keyed by cluster: point and projected image per cluster.
std::string vertex_map_json(const TranslationWindow& w, const VertexMap& vm);

/// Projected polytope plus the full ambient dump in one object.
std::string polytope_with_ambient_json(const TranslationWindow& w, const VertexMap& vm);

/// F-polynomial dump keyed "i,j".
std::string fpoly_json(const TranslationWindow& w, const std::vector<LaurentPoly>& polys);

/// Universal coefficient matrix plus universal F-polynomials.
std::string universal_json(const TranslationWindow& w, const std::vector<LaurentPoly>& fpolys);

/// Atlas dump: variables keyed "i,j", clusters as sorted "i,j" lists.
std::string atlas_json(const TranslationWindow& w, const ClusterAtlas& atlas);

/// OFF file for a full-dimensional polytope in R^3; polygon faces are
/// recovered from the vanishing pattern of the ambient coordinates.
std::string off_export(const TranslationWindow& w, const VertexMap& vm);

/// Ice quiver from {"base": <quiver>, "rows": [[int,...],...], "names": [...]}.
IceQuiver parse_ice_json(const std::string& text);

/// {"vars": [...], "terms": [{"e": [...], "c": "bigint-as-string"},...]},
/// terms in canonical order.
std::string poly_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const std::string& text);

}  // namespace assoc
