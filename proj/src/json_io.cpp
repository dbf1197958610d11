#include "assoc/json_io.hpp"

#include <algorithm>

#include "json.hpp"

namespace assoc {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string key_of(WIdx a) { return to_string(a); }

ordered_json int_vec(const IntVec& v) {
  ordered_json arr = ordered_json::array();
  for (auto x : v) arr.push_back(x);
  return arr;
}

ordered_json rat_vec(const std::vector<Rational>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

}  // namespace

std::string window_json(const TranslationWindow& w) {
  ordered_json j;
  j["type"] = w.q.type.name();
  j["n"] = w.n();
  ordered_json idx = ordered_json::array(), inner = ordered_json::array();
  for (int p = 0; p < w.size(); ++p) {
    idx.push_back({w.indices[p].i, w.indices[p].j});
    if (w.is_inner(p)) inner.push_back({w.indices[p].i, w.indices[p].j});
  }
  j["indices"] = idx;
  j["iplus"] = inner;
  ordered_json bounds = ordered_json::array();
  for (int col = 1; col <= w.n(); ++col) bounds.push_back(w.column_bound[col]);
  j["column_bounds"] = bounds;
  ordered_json dims, gv;
  for (int p = 0; p < w.size(); ++p) {
    dims[key_of(w.indices[p])] = int_vec(w.dims[p]);
    gv[key_of(w.indices[p])] = int_vec(w.gvecs[p]);
  }
  j["dims"] = dims;
  j["gvecs"] = gv;
  ordered_json arr = ordered_json::array();
  for (auto [a, b] : w.mesh_arrows)
    arr.push_back({{w.indices[a].i, w.indices[a].j}, {w.indices[b].i, w.indices[b].j}});
  j["mesh_arrows"] = arr;
  ordered_json sl = ordered_json::array();
  for (const auto& s : slices(w)) {
    ordered_json one = ordered_json::array();
    for (int p : s) one.push_back(key_of(w.indices[p]));
    sl.push_back(one);
  }
  j["slices"] = sl;
  return j.dump(2);
}

std::string gvectors_json(const TranslationWindow& w) {
  ordered_json j;
  j["type"] = w.q.type.name();
  ordered_json gv;
  for (int p = 0; p < w.size(); ++p) gv[key_of(w.indices[p])] = int_vec(w.gvecs[p]);
  j["gvecs"] = gv;
  return j.dump(2);
}

std::string polytope_json(const VPolytope& p) {
  ordered_json j;
  j["dim"] = p.dim;
  ordered_json verts = ordered_json::array();
  for (const auto& v : p.extreme) verts.push_back(rat_vec(v));
  j["vertices"] = verts;
  return j.dump(2);
}

namespace {

ordered_json vertex_map_body(const TranslationWindow& w, const VertexMap& vm) {
  ordered_json j;
  j["type"] = w.q.type.name();
  j["ambient_dim"] = w.size();
  ordered_json cl = ordered_json::array();
  for (size_t i = 0; i < vm.clusters.size(); ++i) {
    ordered_json one;
    ordered_json members = ordered_json::array();
    for (int p : vm.clusters[i]) members.push_back(key_of(w.indices[p]));
    one["cluster"] = members;
    one["point"] = rat_vec(vm.points[i]);
    one["pi"] = rat_vec(project_pi(w, vm.points[i]));
    cl.push_back(one);
  }
  j["clusters"] = cl;
  return j;
}

}  // namespace

std::string vertex_map_json(const TranslationWindow& w, const VertexMap& vm) {
  return vertex_map_body(w, vm).dump(2);
}

std::string polytope_with_ambient_json(const TranslationWindow& w, const VertexMap& vm) {
  std::vector<QPoint> proj;
  for (const auto& p : vm.points) proj.push_back(project_pi(w, p));
  VPolytope ap = make_polytope(w.n(), std::move(proj));
  ordered_json j;
  j["dim"] = ap.dim;
  ordered_json verts = ordered_json::array();
  for (const auto& v : ap.extreme) verts.push_back(rat_vec(v));
  j["vertices"] = verts;
  j["ambient"] = vertex_map_body(w, vm);
  return j.dump(2);
}

std::string fpoly_json(const TranslationWindow& w, const std::vector<LaurentPoly>& polys) {
  ordered_json j;
  j["type"] = w.q.type.name();
  ordered_json f;
  for (int p = 0; p < w.size(); ++p) f[key_of(w.indices[p])] = to_string(polys[p]);
  j["F"] = f;
  return j.dump(2);
}

std::string universal_json(const TranslationWindow& w, const std::vector<LaurentPoly>& fpolys) {
  ordered_json j;
  j["type"] = w.q.type.name();
  IceQuiver ice = universal_ice(w);
  ordered_json rows = ordered_json::array();
  for (const auto& r : exchange_matrix(w.q)) rows.push_back(int_vec(r));
  for (const auto& r : ice.rows) rows.push_back(int_vec(r));
  j["extended_matrix"] = rows;
  ordered_json names = ordered_json::array();
  for (const auto& nm : ice.names) names.push_back(nm);
  j["coefficient_names"] = names;
  ordered_json f;
  for (int p = 0; p < w.size(); ++p) f[key_of(w.indices[p])] = to_string(fpolys[p]);
  j["F_universal"] = f;
  return j.dump(2);
}

std::string atlas_json(const TranslationWindow& w, const ClusterAtlas& atlas) {
  ordered_json j;
  j["type"] = w.q.type.name();
  ordered_json vars;
  for (int p = 0; p < w.size(); ++p) vars[key_of(w.indices[p])] = to_string(atlas.variables[p]);
  j["variables"] = vars;
  ordered_json cl = ordered_json::array();
  std::vector<std::vector<int>> sorted_clusters = atlas.clusters;
  std::sort(sorted_clusters.begin(), sorted_clusters.end());
  for (const auto& c : sorted_clusters) {
    ordered_json one = ordered_json::array();
    for (int p : c) one.push_back(key_of(w.indices[p]));
    cl.push_back(one);
  }
  j["clusters"] = cl;
  return j.dump(2);
}

std::string off_export(const TranslationWindow& w, const VertexMap& vm) {
  if (w.n() != 3) fail(Errc::DimensionMismatch, "OFF export is for rank-3 polytopes only");
  std::vector<QPoint> verts;
  for (const auto& pt : vm.points) verts.push_back(project_pi(w, pt));

  // faces: for each ambient coordinate, the projected vertices where it
  // vanishes form one polygon of the boundary
  std::vector<std::vector<int>> faces;
  for (int p = 0; p < w.size(); ++p) {
    std::vector<int> face;
    for (size_t v = 0; v < vm.points.size(); ++v)
      if (vm.points[v][p] == 0) face.push_back((int)v);
    if (face.size() < 3) continue;

    QPoint centroid(3, Rational(0));
    for (int v : face)
      for (int k = 0; k < 3; ++k) centroid[k] += verts[v][k];
    for (int k = 0; k < 3; ++k) centroid[k] /= (long long)face.size();

    const IntVec& g = w.gvecs[p];  // outward facet normal
    auto dir = [&](int v) {
      QPoint d(3);
      for (int k = 0; k < 3; ++k) d[k] = verts[v][k] - centroid[k];
      return d;
    };
    auto cross_dot_g = [&](const QPoint& a, const QPoint& b) -> Rational {
      Rational cx = a[1] * b[2] - a[2] * b[1];
      Rational cy = a[2] * b[0] - a[0] * b[2];
      Rational cz = a[0] * b[1] - a[1] * b[0];
      return cx * g[0] + cy * g[1] + cz * g[2];
    };
    QPoint ref = dir(face[0]);
    auto half = [&](const QPoint& d) {
      Rational s = cross_dot_g(ref, d);
      if (s != 0) return s > 0 ? 0 : 1;
      Rational dot = d[0] * ref[0] + d[1] * ref[1] + d[2] * ref[2];
      return dot > 0 ? 0 : 1;
    };
    std::sort(face.begin(), face.end(), [&](int a, int b) {
      QPoint da = dir(a), db = dir(b);
      int ha = half(da), hb = half(db);
      if (ha != hb) return ha < hb;
      return cross_dot_g(da, db) > 0;
    });
    faces.push_back(std::move(face));
  }

  std::string out = "OFF\n";
  size_t nedges = 0;
  for (const auto& f : faces) nedges += f.size();
  out += std::to_string(verts.size()) + " " + std::to_string(faces.size()) + " " +
         std::to_string(nedges / 2) + "\n";
  for (const auto& v : verts)
    out += decimal_string(v[0], 6) + " " + decimal_string(v[1], 6) + " " +
           decimal_string(v[2], 6) + "\n";
  for (const auto& f : faces) {
    out += std::to_string(f.size());
    for (int v : f) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string poly_json(const LaurentPoly& f) {
  ordered_json j;
  ordered_json vars = ordered_json::array();
  for (const auto& nm : f.vars()->names) vars.push_back(nm);
  j["vars"] = vars;
  ordered_json terms = ordered_json::array();
  for (const auto& t : f.terms()) {
    ordered_json one;
    ordered_json e = ordered_json::array();
    for (auto x : t.e) e.push_back(x);
    one["e"] = e;
    one["c"] = to_string(t.c);
    terms.push_back(one);
  }
  j["terms"] = terms;
  return j.dump();
}

LaurentPoly poly_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::BadInput, std::string("polynomial JSON: ") + e.what());
  }
  if (!j.contains("vars") || !j.contains("terms")) fail(Errc::BadInput, "polynomial JSON needs vars and terms");
  std::vector<std::string> names;
  for (const auto& nm : j["vars"]) names.push_back(nm.get<std::string>());
  VarSetPtr vs = make_varset(std::move(names));
  LaurentPoly acc = LaurentPoly::zero(vs);
  for (const auto& t : j["terms"]) {
    Exps e;
    for (const auto& x : t["e"]) e.push_back(x.get<int32_t>());
    acc = acc + LaurentPoly::monomial(vs, std::move(e), Int(t["c"].get<std::string>()));
  }
  return acc;
}

IceQuiver parse_ice_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::BadInput, std::string("ice JSON: ") + e.what());
  }
  if (!j.contains("base")) fail(Errc::BadInput, "ice JSON needs \"base\"");
  DynkinQuiver base = j["base"].is_string() ? parse_quiver(j["base"].get<std::string>())
                                            : parse_quiver(j["base"].dump());
  IntMat rows;
  std::vector<std::string> names;
  if (j.contains("rows"))
    for (const auto& r : j["rows"]) {
      IntVec row;
      for (const auto& x : r) row.push_back(x.get<long long>());
      rows.push_back(std::move(row));
    }
  if (j.contains("names"))
    for (const auto& nm : j["names"]) names.push_back(nm.get<std::string>());
  return make_ice(std::move(base), std::move(rows), std::move(names));
}

}  // namespace assoc
