#include "assoc/geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace assoc {

bool CTuple::strictly_positive() const {
  for (const auto& x : c)
    if (x <= 0) return false;
  return true;
}

CTuple ones_c(const TranslationWindow& w) {
  return {std::vector<Rational>(w.inner_size(), Rational(1))};
}

CTuple zero_c(const TranslationWindow& w) {
  return {std::vector<Rational>(w.inner_size(), Rational(0))};
}

CTuple unit_c(const TranslationWindow& w, WIdx alpha) {
  int p = w.pos(alpha);
  if (p < 0 || !w.is_inner(p)) fail(Errc::BadInput, "unit deformation index must be inner");
  CTuple c = zero_c(w);
  c.c[w.inner_ordinal[p]] = 1;
  return c;
}

CTuple make_c(const TranslationWindow& w, std::vector<Rational> values) {
  if ((int)values.size() != w.inner_size())
    fail(Errc::BadInput, "deformation tuple needs one value per inner index");
  for (const auto& v : values)
    if (v < 0) fail(Errc::BadInput, "deformation parameters must be nonnegative");
  return {std::move(values)};
}

namespace {
unsigned long long splitmix(unsigned long long& x) {
  x += 0x9e3779b97f4a7c15ULL;
  unsigned long long z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

CTuple random_c(const TranslationWindow& w, unsigned long long seed, long long lo, long long hi) {
  if (lo > hi || lo < 0) fail(Errc::BadInput, "bad random deformation range");
  std::vector<Rational> v(w.inner_size());
  unsigned long long state = seed;
  for (auto& x : v) x = Rational((long long)(lo + (long long)(splitmix(state) % (unsigned long long)(hi - lo + 1))));
  return {std::move(v)};
}

std::vector<MeshRelation> mesh_relations(const TranslationWindow& w) {
  std::vector<MeshRelation> rels;
  for (int p = 0; p < w.size(); ++p) {
    if (!w.is_inner(p)) continue;
    auto [i, j] = w.indices[p];
    MeshRelation r;
    r.at = p;
    r.translate = w.pos({i + 1, j});
    if (r.translate < 0) fail(Errc::InternalRecursionOverrun, "mesh translate missing");
    for (int k : w.q.out[j]) r.middles.push_back(w.pos({i, k}));
    for (int k : w.q.in[j]) r.middles.push_back(w.pos({i + 1, k}));
    for (int m : r.middles)
      if (m < 0) fail(Errc::InternalRecursionOverrun, "mesh middle missing");
    r.c_ordinal = w.inner_ordinal[p];
    rels.push_back(std::move(r));
  }
  return rels;
}

bool satisfies_mesh(const TranslationWindow& w, const CTuple& c, const PointI& p) {
  for (const auto& r : mesh_relations(w)) {
    Rational lhs = p[r.at] + p[r.translate];
    for (int m : r.middles) lhs -= p[m];
    if (lhs != c.c[r.c_ordinal]) return false;
  }
  return true;
}

PointI v_point(const TranslationWindow& w, const HomTable& h, const CTuple& c) {
  PointI v(w.size(), Rational(0));
  for (int p = 0; p < w.size(); ++p)
    for (int t = 0; t < w.inner_size(); ++t)
      if (h.hom[p][t] != 0) v[p] += c.c[t] * h.hom[p][t];
  if (!satisfies_mesh(w, c, v))
    fail(Errc::InternalNegativeHom, "hom point violates the deformed mesh relations");
  return v;
}

PointI section(const TranslationWindow& w, const CTuple& c, const std::vector<Rational>& final_values) {
  if ((int)final_values.size() != w.n())
    fail(Errc::DimensionMismatch, "one final value per column required");
  PointI p(w.size(), Rational(0));
  for (int k = 1; k <= w.n(); ++k) p[w.boundary_of_unit[k]] = final_values[k - 1];

  // Solve the relations right to left: the relation anchored at (i,j)
  // determines p(i,j) from the translate and the middle terms.
  std::vector<int> rev = w.topo_order;
  std::reverse(rev.begin(), rev.end());
  int max_i = 0;
  for (int j = 1; j <= w.n(); ++j) max_i = std::max(max_i, w.column_bound[j]);
  for (int i = max_i; i >= 0; --i) {
    for (int j : rev) {
      int at = w.pos({i, j});
      if (at < 0 || !w.is_inner(at)) continue;
      Rational val = c.c[w.inner_ordinal[at]] - p[w.pos({i + 1, j})];
      for (int k : w.q.out[j]) val += p[w.pos({i, k})];
      for (int k : w.q.in[j]) val += p[w.pos({i + 1, k})];
      p[at] = val;
    }
  }
  return p;
}

std::vector<Rational> project_pi(const TranslationWindow& w, const PointI& p) {
  std::vector<Rational> out(w.n());
  for (int k = 1; k <= w.n(); ++k) out[k - 1] = p[w.boundary_of_unit[k]];
  return out;
}

// ---- exact linear algebra ----------------------------------------------

std::vector<Rational> solve_int_system(const std::vector<std::vector<Int>>& a,
                                       const std::vector<Rational>& b) {
  const int n = (int)a.size();
  // clear denominators of the right-hand side
  Int lcm = 1;
  for (const auto& x : b) {
    Int d = denominator(x);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n] = numerator(b[i]) * (lcm / denominator(b[i]));
  }
  // fraction-free (Bareiss) forward elimination
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) fail(Errc::SingularSystem, "singular linear system");
    std::swap(m[k], m[piv]);
    for (int i = k + 1; i < n; ++i)
      for (int j = n; j >= k; --j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  if (m[n - 1][n - 1] == 0) fail(Errc::SingularSystem, "singular linear system");
  // back substitution over the rationals
  std::vector<Rational> x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rational acc(m[i][n]);
    for (int j = i + 1; j < n; ++j) acc -= x[j] * m[i][j];
    x[i] = acc / Rational(m[i][i]);
    x[i] /= lcm;
  }
  return x;
}

namespace {

Int det_int(std::vector<std::vector<Int>> m) {
  const int n = (int)m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = n - 1; j >= k; --j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

std::vector<Int> kernel_vector(const std::vector<std::vector<Int>>& m) {
  const int rows = (int)m.size();
  const int cols = rows + 1;
  std::vector<Int> u(cols);
  bool nonzero = false;
  for (int k = 0; k < cols; ++k) {
    std::vector<std::vector<Int>> sub(rows, std::vector<Int>(cols - 1));
    for (int i = 0; i < rows; ++i) {
      int jj = 0;
      for (int j = 0; j < cols; ++j)
        if (j != k) sub[i][jj++] = m[i][j];
    }
    Int d = det_int(std::move(sub));
    u[k] = (k % 2 == 0) ? d : Int(-d);
    if (u[k] != 0) nonzero = true;
  }
  if (!nonzero) fail(Errc::SingularSystem, "kernel computation: rank deficiency");
  return u;
}

PointI vertex_for_cluster(const TranslationWindow& w, const HomTable& h, const CTuple& c,
                          const std::vector<int>& T) {
  const int n = w.n();
  if ((int)T.size() != n) fail(Errc::IncompatibleSet, "a cluster has exactly n indices");
  for (size_t a = 0; a < T.size(); ++a)
    for (size_t b = a + 1; b < T.size(); ++b)
      if (ext_dim(w, h, T[a], T[b]) != 0 || ext_dim(w, h, T[b], T[a]) != 0)
        fail(Errc::IncompatibleSet, "indices " + to_string(w.indices[T[a]]) + " and " +
                                        to_string(w.indices[T[b]]) + " are incompatible");
  PointI v = v_point(w, h, c);
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  std::vector<Rational> rhs(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) a[r][k] = w.dims[T[r]][k];
    rhs[r] = -v[T[r]];
  }
  std::vector<Rational> mcoef = solve_int_system(a, rhs);
  PointI x(w.size());
  for (int p = 0; p < w.size(); ++p) {
    Rational acc = v[p];
    for (int k = 0; k < n; ++k)
      if (w.dims[p][k] != 0) acc += mcoef[k] * w.dims[p][k];
    x[p] = acc;
  }
  return x;
}

VertexMap enumerate_vertices(const TranslationWindow& w, const HomTable& h, const CTuple& c) {
  if (!c.strictly_positive())
    fail(Errc::DegenerateWalk, "edge walk requires strictly positive deformation parameters");
  const int n = w.n();
  CompatibilityTable compat = compatibility(w, h);

  // the final-slice vertex is the hom point itself
  std::vector<int> start;
  for (int p = 0; p < w.size(); ++p)
    if (!w.is_inner(p)) start.push_back(p);
  PointI vstart = v_point(w, h, c);
  for (int p : start)
    if (vstart[p] != 0) fail(Errc::InternalNegativeHom, "hom point does not vanish on the boundary");

  std::map<std::vector<int>, PointI> seen;
  std::deque<std::vector<int>> queue;
  seen.emplace(start, vstart);
  queue.push_back(start);

  while (!queue.empty()) {
    std::vector<int> T = std::move(queue.front());
    queue.pop_front();
    const PointI x = seen.at(T);

    for (int drop = 0; drop < n; ++drop) {
      // ray direction: mesh solution vanishing on T minus the dropped index
      std::vector<std::vector<Int>> rows(n - 1, std::vector<Int>(n));
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == drop) continue;
        for (int k = 0; k < n; ++k) rows[rr][k] = w.dims[T[r]][k];
        ++rr;
      }
      std::vector<Int> u = kernel_vector(rows);
      std::vector<Int> du(w.size(), 0);
      for (int p = 0; p < w.size(); ++p)
        for (int k = 0; k < n; ++k)
          if (w.dims[p][k] != 0) du[p] += u[k] * w.dims[p][k];
      if (du[T[drop]] == 0) fail(Errc::SingularSystem, "ray does not leave the dropped facet");
      if (du[T[drop]] < 0)
        for (auto& d : du) d = -d;

      // first hyperplane hit along x + t*du
      bool found = false;
      Rational best;
      int hit = -1;
      bool tie = false;
      for (int p = 0; p < w.size(); ++p) {
        if (du[p] >= 0) continue;
        Rational t = x[p] / Rational(-du[p]);
        if (!found || t < best) {
          found = true;
          best = t;
          hit = p;
          tie = false;
        } else if (t == best) {
          tie = true;
        }
      }
      if (!found) fail(Errc::UnboundedRay, "walk ray never leaves the orthant");
      if (tie || best == 0) fail(Errc::DegenerateWalk, "several hyperplanes hit at once");
      for (int r = 0; r < n; ++r)
        if (r != drop && !compat.compat[hit][T[r]])
          fail(Errc::WrongHitIndex, "hit index " + to_string(w.indices[hit]) +
                                        " incompatible with the retained set");

      std::vector<int> next = T;
      next[drop] = hit;
      std::sort(next.begin(), next.end());
      PointI y(w.size());
      for (int p = 0; p < w.size(); ++p) y[p] = x[p] + best * Rational(du[p]);
      auto it = seen.find(next);
      if (it == seen.end()) {
        seen.emplace(next, std::move(y));
        queue.push_back(next);
      } else if (it->second != y) {
        fail(Errc::WrongHitIndex, "walk reached the same cluster at two different points");
      }
    }
  }

  VertexMap out;
  for (auto& [cl, pt] : seen) {
    out.clusters.push_back(cl);
    out.points.push_back(pt);
  }
  return out;
}

// ---- polytopes -----------------------------------------------------------

namespace {

// Phase-1 simplex with fraction-free (integer) pivoting deciding whether
// A x = b, x >= 0 is feasible.  Rows are scaled to integers up front.
bool lp_feasible(std::vector<std::vector<Rational>> arows, std::vector<Rational> brhs) {
  const int rows = (int)arows.size();
  const int ncols = rows == 0 ? 0 : (int)arows[0].size();
  if (rows == 0) return true;

  // integer tableau: [A | I | b], objective = sum of artificials
  std::vector<std::vector<Int>> t(rows + 1, std::vector<Int>(ncols + rows + 1, 0));
  for (int i = 0; i < rows; ++i) {
    Int lcm = 1;
    Int dv = denominator(brhs[i]);
    lcm = dv;
    for (int j = 0; j < ncols; ++j) {
      Int d = denominator(arows[i][j]);
      lcm = lcm / gcd(lcm, d) * d;
    }
    bool flip = brhs[i] < 0;
    for (int j = 0; j < ncols; ++j) {
      Int v = numerator(arows[i][j]) * (lcm / denominator(arows[i][j]));
      t[i][j] = flip ? Int(-v) : v;
    }
    Int bv = numerator(brhs[i]) * (lcm / denominator(brhs[i]));
    t[i][ncols + rows] = flip ? Int(-bv) : bv;
    t[i][ncols + i] = 1;
  }
  // objective row: reduced costs of the phase-1 objective
  for (int j = 0; j < ncols; ++j) {
    Int s = 0;
    for (int i = 0; i < rows; ++i) s += t[i][j];
    t[rows][j] = s;
  }
  {
    Int s = 0;
    for (int i = 0; i < rows; ++i) s += t[i][ncols + rows];
    t[rows][ncols + rows] = s;
  }

  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = ncols + i;
  Int denom = 1;  // previous pivot; all tableau values are scaled by it

  const int total = ncols + rows;
  for (;;) {
    // Bland: entering variable = smallest index with positive reduced cost
    int enter = -1;
    for (int j = 0; j < total; ++j)
      if (t[rows][j] > 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = Rational(t[i][ncols + rows]) / Rational(t[i][enter]);
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) fail(Errc::UnboundedRay, "phase-1 objective unbounded");

    // integer pivot on (leave, enter)
    Int piv = t[leave][enter];
    for (int i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      for (int j = 0; j <= total; ++j) {
        if (j == enter) continue;
        t[i][j] = (t[i][j] * piv - t[i][enter] * t[leave][j]) / denom;
      }
    }
    for (int i = 0; i <= rows; ++i)
      if (i != leave) t[i][enter] = 0;
    denom = piv;
    basis[leave] = enter;
  }
  return t[rows][total] == 0;  // all artificials driven to zero
}

}  // namespace

bool in_convex_hull(const QPoint& p, const std::vector<QPoint>& pts) {
  if (pts.empty()) return false;
  const int d = (int)p.size();
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(pts.size()));
  std::vector<Rational> b(d + 1);
  for (size_t j = 0; j < pts.size(); ++j) {
    if ((int)pts[j].size() != d) fail(Errc::DimensionMismatch, "hull points of mixed dimension");
    for (int i = 0; i < d; ++i) a[i][j] = pts[j][i];
    a[d][j] = 1;
  }
  for (int i = 0; i < d; ++i) b[i] = p[i];
  b[d] = 1;
  return lp_feasible(std::move(a), std::move(b));
}

std::vector<QPoint> extreme_points(const std::vector<QPoint>& pts) {
  std::set<QPoint> dedup(pts.begin(), pts.end());
  std::vector<QPoint> unique(dedup.begin(), dedup.end());
  if (unique.size() <= 2) return unique;
  // Discarding a point inside the hull of the rest never changes the hull,
  // so the candidate set can shrink as the scan proceeds.
  std::vector<char> alive(unique.size(), 1);
  for (size_t i = 0; i < unique.size(); ++i) {
    std::vector<QPoint> others;
    others.reserve(unique.size() - 1);
    for (size_t j = 0; j < unique.size(); ++j)
      if (j != i && alive[j]) others.push_back(unique[j]);
    if (in_convex_hull(unique[i], others)) alive[i] = 0;
  }
  std::vector<QPoint> out;
  for (size_t i = 0; i < unique.size(); ++i)
    if (alive[i]) out.push_back(unique[i]);
  return out;
}

VPolytope make_polytope(int dim, std::vector<QPoint> points) {
  for (const auto& p : points)
    if ((int)p.size() != dim) fail(Errc::DimensionMismatch, "point dimension mismatch");
  VPolytope v;
  v.dim = dim;
  v.points = std::move(points);
  v.extreme = extreme_points(v.points);
  return v;
}

bool polytope_equal(const VPolytope& a, const VPolytope& b) {
  if (a.dim != b.dim) fail(Errc::DimensionMismatch, "polytopes in different dimensions");
  return a.extreme == b.extreme;
}

VPolytope minkowski_sum(const VPolytope& a, const VPolytope& b) {
  if (a.dim != b.dim) fail(Errc::DimensionMismatch, "polytopes in different dimensions");
  std::vector<QPoint> sums;
  sums.reserve(a.extreme.size() * b.extreme.size());
  for (const auto& p : a.extreme)
    for (const auto& q : b.extreme) {
      QPoint s(a.dim);
      for (int i = 0; i < a.dim; ++i) s[i] = p[i] + q[i];
      sums.push_back(std::move(s));
    }
  return make_polytope(a.dim, std::move(sums));
}

bool outer_normal_check(const VPolytope& p, const IntVec& direction,
                        const std::vector<QPoint>& expected_face_vertices) {
  if ((int)direction.size() != p.dim) fail(Errc::DimensionMismatch, "direction dimension mismatch");
  if (p.extreme.empty()) return expected_face_vertices.empty();
  std::vector<Rational> vals;
  Rational best;
  for (size_t i = 0; i < p.extreme.size(); ++i) {
    Rational v(0);
    for (int k = 0; k < p.dim; ++k) v += p.extreme[i][k] * direction[k];
    if (i == 0 || v > best) best = v;
    vals.push_back(v);
  }
  std::set<QPoint> maxers, expected(expected_face_vertices.begin(), expected_face_vertices.end());
  for (size_t i = 0; i < p.extreme.size(); ++i)
    if (vals[i] == best) maxers.insert(p.extreme[i]);
  return maxers == expected;
}

int affine_rank(const std::vector<QPoint>& pts) {
  if (pts.empty()) return -1;
  const int d = (int)pts[0].size();
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r(d);
    for (int k = 0; k < d; ++k) r[k] = pts[i][k] - pts[0][k];
    rows.push_back(std::move(r));
  }
  // exact row reduction
  int rank = 0;
  for (int col = 0; col < d && rank < (int)rows.size(); ++col) {
    int piv = -1;
    for (int i = rank; i < (int)rows.size(); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = rank + 1; i < (int)rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (int k = col; k < d; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<QPoint> vertices_of_halfspaces(const std::vector<IntVec>& normals,
                                           const std::vector<Rational>& offsets, int dim) {
  const int m = (int)normals.size();
  std::vector<QPoint> verts;
  std::set<QPoint> dedup;
  std::vector<int> pick(dim);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == dim) {
      std::vector<std::vector<Int>> a(dim, std::vector<Int>(dim));
      std::vector<Rational> b(dim);
      for (int r = 0; r < dim; ++r) {
        for (int k = 0; k < dim; ++k) a[r][k] = normals[pick[r]][k];
        b[r] = offsets[pick[r]];
      }
      std::vector<Rational> x;
      try {
        x = solve_int_system(a, b);
      } catch (const Error& e) {
        if (e.code() == Errc::SingularSystem) return;
        throw;
      }
      for (int r = 0; r < m; ++r) {
        Rational lhs(0);
        for (int k = 0; k < dim; ++k) lhs += Rational(normals[r][k]) * x[k];
        if (lhs > offsets[r]) return;
      }
      if (dedup.insert(x).second) verts.push_back(std::move(x));
      return;
    }
    for (int r = start; r < m; ++r) {
      pick[depth] = r;
      self(self, r + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(verts.begin(), verts.end());
  return verts;
}

}  // namespace assoc
