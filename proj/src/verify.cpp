#include "assoc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <functional>
#include <sstream>

namespace assoc {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string c_to_string(const TranslationWindow& w, const CTuple& c) {
  std::string s = "c=[";
  for (int t = 0; t < w.inner_size(); ++t) {
    if (t) s += ",";
    s += to_string(c.c[t]);
  }
  return s + "]";
}

// Collects failures; the report carries the first few as its witness.
struct Failures {
  std::vector<std::string> items;
  void add(std::string msg) {
    if (items.size() < 8) items.push_back(std::move(msg));
  }
  bool ok() const { return items.empty(); }
  std::string witness() const {
    std::string s;
    for (size_t i = 0; i < items.size(); ++i) {
      if (i) s += "; ";
      s += items[i];
    }
    return s;
  }
};

// All cliques of the compatibility relation (pairwise-compatible subsets),
// nonempty, visited in increasing vertex order.
void for_each_clique(const CompatibilityTable& compat, int size,
                     const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  auto rec = [&](auto&& self, int from) -> void {
    for (int v = from; v < size; ++v) {
      bool ok = true;
      for (int u : current)
        if (!compat.compat[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      visit(current);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

using Mask = std::vector<unsigned long long>;

std::vector<Mask> cluster_masks_per_index(const std::vector<std::vector<int>>& clusters, int nidx) {
  const size_t words = (clusters.size() + 63) / 64;
  std::vector<Mask> masks(nidx, Mask(words, 0));
  for (size_t cid = 0; cid < clusters.size(); ++cid)
    for (int p : clusters[cid]) masks[p][cid / 64] |= 1ULL << (cid % 64);
  return masks;
}

bool masks_intersect(const std::vector<Mask>& masks, const std::vector<int>& members) {
  if (members.empty()) return true;
  Mask acc = masks[members[0]];
  for (size_t k = 1; k < members.size(); ++k)
    for (size_t wd = 0; wd < acc.size(); ++wd) acc[wd] &= masks[members[k]][wd];
  for (auto wdv : acc)
    if (wdv) return true;
  return false;
}

// Solve for the mesh point vanishing on T, reusing a precomputed hom point.
PointI cluster_point(const TranslationWindow& w, const PointI& v, const std::vector<int>& T) {
  const int n = w.n();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  std::vector<Rational> rhs(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) a[r][k] = w.dims[T[r]][k];
    rhs[r] = -v[T[r]];
  }
  std::vector<Rational> m = solve_int_system(a, rhs);
  PointI x(w.size());
  for (int p = 0; p < w.size(); ++p) {
    Rational acc = v[p];
    for (int k = 0; k < n; ++k)
      if (w.dims[p][k] != 0) acc += m[k] * w.dims[p][k];
    x[p] = acc;
  }
  return x;
}

QPoint exps_to_qpoint(const Exps& e) {
  QPoint p(e.size());
  for (size_t k = 0; k < e.size(); ++k) p[k] = Rational((long long)e[k]);
  return p;
}

}  // namespace

std::string report_json_line(const Report& r) {
  std::ostringstream os;
  auto esc = [](const std::string& s) {
    std::string out;
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out;
  };
  os << "{\"check\":\"" << esc(r.check) << "\",\"type\":\"" << esc(r.type_name)
     << "\",\"params\":\"" << esc(r.params) << "\",\"status\":\"" << (r.pass ? "pass" : "fail")
     << "\",\"witness\":\"" << esc(r.witness) << "\",\"ms\":" << (long long)(r.ms + 0.5) << "}";
  return os.str();
}

std::string report_text_line(const Report& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " " << r.check << " " << r.type_name;
  if (!r.params.empty()) os << " [" << r.params << "]";
  os << " (" << (long long)(r.ms + 0.5) << " ms)";
  if (!r.pass && !r.witness.empty()) os << "  witness: " << r.witness;
  return os.str();
}

TypeContext make_context(const DynkinQuiver& q, bool with_atlas) {
  TypeContext ctx;
  ctx.q = q;
  ctx.w = build_window(q);
  ctx.h = hom_table(ctx.w);
  ctx.compat = compatibility(ctx.w, ctx.h);
  if (with_atlas) ctx.atlas = enumerate_atlas(ctx.w);
  return ctx;
}

Report check_theorem_one(const TypeContext& ctx, const CTuple& c) {
  Timer timer;
  const TranslationWindow& w = ctx.w;
  const int n = w.n();
  Failures bad;

  VertexMap vm = enumerate_vertices(w, ctx.h, c);

  if (Int((long long)vm.clusters.size()) != generalized_catalan(w.q.type))
    bad.add("vertex count " + std::to_string(vm.clusters.size()) + " != catalan " +
            to_string(generalized_catalan(w.q.type)));

  PointI v = v_point(w, ctx.h, c);
  for (size_t vi = 0; vi < vm.clusters.size(); ++vi) {
    const auto& T = vm.clusters[vi];
    const PointI& x = vm.points[vi];
    std::string tag = "vertex " + std::to_string(vi);
    if (!satisfies_mesh(w, c, x)) bad.add(tag + " violates the mesh relations");
    std::set<int> tset(T.begin(), T.end());
    for (int p = 0; p < w.size(); ++p) {
      if (x[p] < 0) bad.add(tag + " has negative coordinate " + to_string(w.indices[p]));
      bool zero = x[p] == 0;
      if (zero != (tset.count(p) > 0))
        bad.add(tag + " zero set differs from its cluster at " + to_string(w.indices[p]));
    }
    for (size_t a = 0; a < T.size(); ++a)
      for (size_t b = a + 1; b < T.size(); ++b)
        if (!ctx.compat.compat[T[a]][T[b]])
          bad.add(tag + " cluster contains the incompatible pair (" + to_string(w.indices[T[a]]) +
                  "),(" + to_string(w.indices[T[b]]) + ")");
    // projection round trip (the projection is an affine isomorphism)
    if (section(w, c, project_pi(w, x)) != x) bad.add(tag + " fails the section round trip");
    // independent solve from the cluster alone
    if (cluster_point(w, v, T) != x) bad.add(tag + " disagrees with the direct linear solve");
  }

  // cluster sets must agree with the mutation atlas when available
  if (ctx.atlas) {
    std::set<std::vector<int>> walk(vm.clusters.begin(), vm.clusters.end());
    std::set<std::vector<int>> atlas(ctx.atlas->clusters.begin(), ctx.atlas->clusters.end());
    if (walk != atlas) bad.add("edge-walk clusters differ from the mutation atlas");
  }

  // every pairwise-compatible set lies on a face, i.e. inside some cluster;
  // clique enumeration scales with the face count, so it accompanies the
  // atlas-backed runs and is skipped at the geometry-only rank ceilings
  if (ctx.atlas) {
    auto masks = cluster_masks_per_index(vm.clusters, w.size());
    for_each_clique(ctx.compat, w.size(), [&](const std::vector<int>& clique) {
      if (!masks_intersect(masks, clique)) {
        std::string s = "compatible set {";
        for (size_t k = 0; k < clique.size(); ++k)
          s += (k ? "," : "") + to_string(w.indices[clique[k]]);
        bad.add(s + "} is contained in no cluster");
      }
    });
  }

  // facets: the vertices on p_alpha = 0 span an affine hyperplane, and the
  // g-vector supports the projected polytope exactly on that vertex set
  std::vector<QPoint> all_pi;
  for (const auto& x : vm.points) all_pi.push_back(project_pi(w, x));
  for (int p = 0; p < w.size(); ++p) {
    std::vector<QPoint> on_facet;
    for (size_t vi = 0; vi < vm.points.size(); ++vi)
      if (vm.points[vi][p] == 0) on_facet.push_back(all_pi[vi]);
    if (affine_rank(on_facet) != n - 1)
      bad.add("vertices on p_" + to_string(w.indices[p]) + "=0 do not span a hyperplane");
    // maximizers of <g, .> over all projected vertices
    std::set<QPoint> expected(on_facet.begin(), on_facet.end());
    Rational best;
    bool first = true;
    std::vector<Rational> vals;
    for (const auto& q : all_pi) {
      Rational val(0);
      for (int k = 0; k < n; ++k) val += q[k] * w.gvecs[p][k];
      vals.push_back(val);
      if (first || val > best) best = val;
      first = false;
    }
    std::set<QPoint> maxers;
    for (size_t vi = 0; vi < all_pi.size(); ++vi)
      if (vals[vi] == best) maxers.insert(all_pi[vi]);
    if (maxers != expected)
      bad.add("outer normal at " + to_string(w.indices[p]) + " is not its g-vector");
  }

  Report r;
  r.check = "theorem-one";
  r.type_name = w.q.type.name();
  r.params = c_to_string(w, c);
  r.pass = bad.ok();
  r.witness = bad.witness();
  r.ms = timer.ms();
  return r;
}

Report check_theorem_two(const TypeContext& ctx, WIdx alpha) {
  Timer timer;
  const TranslationWindow& w = ctx.w;
  Report r;
  r.check = "theorem-two";
  r.type_name = w.q.type.name();
  r.params = "alpha=(" + to_string(alpha) + ")";
  if (!ctx.atlas) fail(Errc::BadInput, "theorem-two needs the cluster atlas");
  Failures bad;

  CTuple c = unit_c(w, alpha);
  PointI v = v_point(w, ctx.h, c);
  std::vector<QPoint> proj;
  for (const auto& T : ctx.atlas->clusters) proj.push_back(project_pi(w, cluster_point(w, v, T)));
  VPolytope lhs = make_polytope(w.n(), std::move(proj));

  int fpos = w.pos({alpha.i + 1, alpha.j});
  if (fpos < 0) fail(Errc::BadInput, "translate of alpha outside the window");
  LaurentPoly f = f_polynomial(*ctx.atlas, w, fpos);
  std::vector<std::string> ys;
  for (int i = 1; i <= w.n(); ++i) ys.push_back("y" + std::to_string(i));
  std::vector<QPoint> npts;
  for (const auto& e : newton_points(f, ys)) npts.push_back(exps_to_qpoint(e));
  VPolytope rhs = make_polytope(w.n(), std::move(npts));

  if (!polytope_equal(lhs, rhs))
    bad.add("Newton polytope of F at (" + to_string(WIdx{alpha.i + 1, alpha.j}) +
            ") differs from the projected polytope");

  r.pass = bad.ok();
  r.witness = bad.witness();
  r.ms = timer.ms();
  return r;
}

Report check_universal(const TypeContext& ctx, WIdx alpha) {
  Timer timer;
  const TranslationWindow& w = ctx.w;
  Report r;
  r.check = "universal";
  r.type_name = w.q.type.name();
  r.params = "alpha=(" + to_string(alpha) + ")";
  if (!ctx.atlas) fail(Errc::BadInput, "universal check needs the cluster atlas");
  Failures bad;

  CTuple c = unit_c(w, alpha);
  PointI v = v_point(w, ctx.h, c);
  std::vector<QPoint> pts;
  for (const auto& T : ctx.atlas->clusters) pts.push_back(cluster_point(w, v, T));
  VPolytope lhs = make_polytope(w.size(), std::move(pts));

  auto fpolys = universal_f_polynomials(w);
  int fpos = w.pos({alpha.i + 1, alpha.j});
  if (fpos < 0) fail(Errc::BadInput, "translate of alpha outside the window");
  std::vector<std::string> zs;
  for (int p = 0; p < w.size(); ++p) zs.push_back(universal_coeff_name(w.indices[p]));
  std::vector<QPoint> npts;
  for (const auto& e : newton_points(fpolys[fpos], zs)) npts.push_back(exps_to_qpoint(e));
  VPolytope rhs = make_polytope(w.size(), std::move(npts));

  if (!polytope_equal(lhs, rhs))
    bad.add("Newton polytope of the universal F at (" + to_string(WIdx{alpha.i + 1, alpha.j}) +
            ") differs from the unit-deformation polytope");

  r.pass = bad.ok();
  r.witness = bad.witness();
  r.ms = timer.ms();
  return r;
}

Report check_degenerate(const TypeContext& ctx, const CTuple& c) {
  Timer timer;
  const TranslationWindow& w = ctx.w;
  const int n = w.n();
  Report r;
  r.check = "degenerate-c";
  r.type_name = w.q.type.name();
  r.params = c_to_string(w, c);
  if (!ctx.atlas) fail(Errc::BadInput, "degenerate check needs the cluster atlas");
  Failures bad;

  PointI v = v_point(w, ctx.h, c);
  std::vector<QPoint> proj;
  for (const auto& T : ctx.atlas->clusters) proj.push_back(project_pi(w, cluster_point(w, v, T)));
  VPolytope ac = make_polytope(n, proj);

  for (const auto& q : ac.extreme) {
    std::vector<Rational> qr(q.begin(), q.end());
    PointI full = section(w, c, qr);
    std::vector<int> zeros;
    for (int p = 0; p < w.size(); ++p)
      if (full[p] == 0) zeros.push_back(p);
    // the zero set must contain a whole cluster
    bool found = false;
    for (const auto& T : ctx.atlas->clusters) {
      bool inside = true;
      for (int p : T)
        if (full[p] != 0) {
          inside = false;
          break;
        }
      if (inside) {
        found = true;
        break;
      }
    }
    if (!found) bad.add("vertex zero set contains no maximal compatible set");
    for (int p = 0; p < w.size(); ++p)
      if (full[p] < 0) bad.add("vertex with a negative coordinate");
  }

  // facet normals: the polytope must already be cut out by g-vector
  // halfspaces at their support values
  std::vector<IntVec> normals;
  std::vector<Rational> offsets;
  for (int p = 0; p < w.size(); ++p) {
    normals.push_back(w.gvecs[p]);
    Rational h;
    bool first = true;
    for (const auto& q : ac.extreme) {
      Rational val(0);
      for (int k = 0; k < n; ++k) val += q[k] * w.gvecs[p][k];
      if (first || val > h) h = val;
      first = false;
    }
    offsets.push_back(h);
  }
  auto hverts = vertices_of_halfspaces(normals, offsets, n);
  VPolytope hull = make_polytope(n, hverts);
  if (!polytope_equal(ac, hull))
    bad.add("some facet normal lies outside the g-vector set");

  r.pass = bad.ok();
  r.witness = bad.witness();
  r.ms = timer.ms();
  return r;
}

Report check_separation(const TypeContext& ctx, const IceQuiver& ice, const std::string& label) {
  Timer timer;
  const TranslationWindow& w = ctx.w;
  Report r;
  r.check = "separation";
  r.type_name = w.q.type.name();
  r.params = label;
  if (!ctx.atlas) fail(Errc::BadInput, "separation check needs the cluster atlas");
  Failures bad;

  auto direct = slice_variables(w, ice);
  for (int p = 0; p < w.size(); ++p) {
    LaurentPoly specialized = separation_specialize(ctx.atlas->variables[p], ice);
    if (!(specialized == direct[p]))
      bad.add("separation mismatch at (" + to_string(w.indices[p]) + "): " +
              to_string(specialized) + " vs " + to_string(direct[p]));
  }

  r.pass = bad.ok();
  r.witness = bad.witness();
  r.ms = timer.ms();
  return r;
}

Report check_compat_agreement(const TypeContext& ctx) {
  Timer timer;
  const TranslationWindow& w = ctx.w;
  Report r;
  r.check = "compatibility";
  r.type_name = w.q.type.name();
  if (!ctx.atlas) fail(Errc::BadInput, "compatibility check needs the cluster atlas");
  Failures bad;

  std::vector<std::vector<char>> co(w.size(), std::vector<char>(w.size(), 0));
  for (const auto& T : ctx.atlas->clusters)
    for (size_t a = 0; a < T.size(); ++a)
      for (size_t b = 0; b < T.size(); ++b) co[T[a]][T[b]] = 1;
  for (int a = 0; a < w.size(); ++a)
    for (int b = 0; b < w.size(); ++b)
      if (co[a][b] != ctx.compat.compat[a][b])
        bad.add("pair (" + to_string(w.indices[a]) + "),(" + to_string(w.indices[b]) +
                "): ext-based=" + std::to_string((int)ctx.compat.compat[a][b]) +
                " co-occurrence=" + std::to_string((int)co[a][b]));

  r.pass = bad.ok();
  r.witness = bad.witness();
  r.ms = timer.ms();
  return r;
}

Report check_oracle_three_way(const TypeContext& ctx, WIdx alpha) {
  Timer timer;
  const TranslationWindow& w = ctx.w;
  Report r;
  r.check = "oracle-three-way";
  r.type_name = w.q.type.name();
  r.params = "alpha=(" + to_string(alpha) + ")";
  if (!ctx.atlas) fail(Errc::BadInput, "oracle check needs the cluster atlas");
  Failures bad;

  IntervalModule m = interval_of(w, alpha);
  VPolytope sub = submodule_polytope(m);

  CTuple c = unit_c(w, alpha);
  PointI v = v_point(w, ctx.h, c);
  std::vector<QPoint> proj;
  for (const auto& T : ctx.atlas->clusters) proj.push_back(project_pi(w, cluster_point(w, v, T)));
  VPolytope geo = make_polytope(w.n(), std::move(proj));

  int fpos = w.pos({alpha.i + 1, alpha.j});
  LaurentPoly f = f_polynomial(*ctx.atlas, w, fpos);
  std::vector<std::string> ys;
  for (int i = 1; i <= w.n(); ++i) ys.push_back("y" + std::to_string(i));
  std::vector<QPoint> npts;
  for (const auto& e : newton_points(f, ys)) npts.push_back(exps_to_qpoint(e));
  VPolytope newt = make_polytope(w.n(), std::move(npts));

  if (!polytope_equal(sub, geo)) bad.add("submodule polytope differs from the projected polytope");
  if (!polytope_equal(sub, newt)) bad.add("submodule polytope differs from the Newton polytope");

  for (const auto& q : sub.extreme) {
    IntVec e(q.size());
    for (size_t k = 0; k < q.size(); ++k) {
      if (denominator(q[k]) != 1) bad.add("non-integer polytope vertex");
      e[k] = (long long)numerator(q[k]);
    }
    int cnt = count_submodules_with_dims(m, e);
    if (cnt != 1)
      bad.add("vertex admits " + std::to_string(cnt) + " submodules instead of exactly one");
  }

  r.pass = bad.ok();
  r.witness = bad.witness();
  r.ms = timer.ms();
  return r;
}

std::vector<Report> run_standard_suite(const VerifyOptions& opt) {
  std::vector<Report> out;
  auto type_list = [&](std::vector<std::string> names) {
    std::vector<DynkinType> ts;
    for (const auto& nm : names) ts.push_back(parse_type_name(nm));
    return ts;
  };

  // theorem one + compatibility grid
  unsigned long long seed = opt.seed;
  for (DynkinType t : type_list({"A2", "A3", "A4", "A5", "A6", "A7", "D4", "D5", "D6", "E6"})) {
    if (t.series == DynkinSeries::A && t.rank > opt.poly_max_a) continue;
    if (t.series == DynkinSeries::D && t.rank > opt.poly_max_d) continue;
    if (t.series == DynkinSeries::E && t.rank > opt.poly_max_e) continue;
    TypeContext ctx = make_context(standard_quiver(t), true);
    out.push_back(check_theorem_one(ctx, ones_c(ctx.w)));
    for (int k = 0; k < opt.random_c_per_type; ++k)
      out.push_back(check_theorem_one(ctx, random_c(ctx.w, seed += 1000003, opt.c_lo, opt.c_hi)));
    out.push_back(check_compat_agreement(ctx));

    // theorem two on the smaller part of the grid
    bool th2 = (t.series == DynkinSeries::A && t.rank <= 6) ||
               (t.series == DynkinSeries::D && t.rank <= 5) ||
               (t.series == DynkinSeries::E && t.rank == 6);
    if (th2)
      for (int p : ctx.w.inner_positions) out.push_back(check_theorem_two(ctx, ctx.w.indices[p]));

    bool univ = (t.series == DynkinSeries::A && t.rank <= 5) ||
                (t.series == DynkinSeries::D && t.rank == 4);
    if (univ)
      for (int p : ctx.w.inner_positions) out.push_back(check_universal(ctx, ctx.w.indices[p]));

    if (t.series == DynkinSeries::A && t.rank <= 5)
      for (int p : ctx.w.inner_positions)
        out.push_back(check_oracle_three_way(ctx, ctx.w.indices[p]));

    if (t.series == DynkinSeries::A && t.rank <= 4) {
      for (int z = 0; z < ctx.w.inner_size(); ++z) {
        CTuple c = ones_c(ctx.w);
        c.c[z] = 0;
        out.push_back(check_degenerate(ctx, c));
      }
      out.push_back(check_separation(ctx, framed(ctx.q), "principal"));
      out.push_back(check_separation(ctx, universal_ice(ctx.w), "universal"));
    }
  }

  // geometry-only ceilings: facet/vertex structure without the atlas
  for (DynkinType t : type_list({"A8", "D7", "D8", "E7", "E8"})) {
    bool skip = (t.series == DynkinSeries::A &&
                 (t.rank > opt.geom_max_a || t.rank <= opt.poly_max_a)) ||
                (t.series == DynkinSeries::D &&
                 (t.rank > opt.geom_max_d || t.rank <= opt.poly_max_d)) ||
                (t.series == DynkinSeries::E &&
                 (t.rank > opt.geom_max_e || t.rank <= opt.poly_max_e));
    if (skip) continue;
    TypeContext ctx = make_context(standard_quiver(t), false);
    out.push_back(check_theorem_one(ctx, ones_c(ctx.w)));
  }
  return out;
}

}  // namespace assoc
