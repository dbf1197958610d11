#include "assoc/window.hpp"

#include <algorithm>
#include <set>

namespace assoc {

int TranslationWindow::pos(WIdx a) const {
  auto it = pos_map_.find({a.i, a.j});
  return it == pos_map_.end() ? -1 : it->second;
}

namespace {

bool nonneg(const IntVec& v) {
  for (auto x : v)
    if (x < 0) return false;
  return true;
}

bool nonpos(const IntVec& v) {
  for (auto x : v)
    if (x > 0) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

// Columns of Q ordered so that the source of every arrow precedes its
// target.  Q is a tree, so a plain Kahn pass suffices.
std::vector<int> topological_columns(const DynkinQuiver& q) {
  std::vector<int> indeg(q.n + 1, 0), order;
  for (auto [s, t] : q.arrows) {
    (void)s;
    ++indeg[t];
  }
  std::vector<int> ready;
  for (int v = 1; v <= q.n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int u : q.out[v])
      if (--indeg[u] == 0) ready.push_back(u);
  }
  if ((int)order.size() != q.n) fail(Errc::NotDynkin, "column order: oriented cycle");
  return order;
}

}  // namespace

TranslationWindow build_window(const DynkinQuiver& q) {
  TranslationWindow w;
  w.q = q;
  w.topo_order = topological_columns(q);
  const int n = q.n;
  const int guard = 2 * coxeter_number(q.type) + 2;

  // ragged columns: column j carries copies 0 .. i_j + 1
  std::vector<std::vector<IntVec>> dim_col(n + 1), g_col(n + 1);
  std::vector<int> closed_at(n + 1, -1);  // i_j once known

  for (int j = 1; j <= n; ++j) {
    // copy 0: dimension vector has a 1 at every vertex reachable from j
    // along reversed arrows; g-vector is the unit vector e_j
    IntVec d(n, 0), g(n, 0);
    std::vector<int> stack{j};
    d[j - 1] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : q.in[v])  // arrow u -> v in Q means v -> u in Q^op
        if (!d[u - 1]) {
          d[u - 1] = 1;
          stack.push_back(u);
        }
    }
    g[j - 1] = 1;
    dim_col[j].push_back(std::move(d));
    g_col[j].push_back(std::move(g));
  }

  auto column_open = [&](int j) { return closed_at[j] < 0; };

  for (int i = 1;; ++i) {
    if (i > guard) fail(Errc::InternalRecursionOverrun, "knitting exceeded the safety bound");
    bool any_open = false;
    for (int j = 1; j <= n; ++j) any_open |= column_open(j);
    if (!any_open) break;

    for (int j : w.topo_order) {
      if (!column_open(j)) continue;
      // mesh step: value(i,j) = sum over j->k of value(i-1,k)
      //                       + sum over k->j of value(i,k) - value(i-1,j)
      IntVec d(n, 0), g(n, 0);
      auto take = [&](const std::vector<IntVec>& col, int copy, int k) -> const IntVec& {
        if (copy >= (int)col.size())
          fail(Errc::InternalRecursionOverrun,
               "mesh dependency (" + std::to_string(copy) + "," + std::to_string(k) +
                   ") missing; boundary is not a slice");
        return col[copy];
      };
      for (int v = 0; v < n; ++v) d[v] = -dim_col[j][i - 1][v], g[v] = -g_col[j][i - 1][v];
      for (int k : q.out[j])
        for (int v = 0; v < n; ++v) {
          d[v] += take(dim_col[k], i - 1, k)[v];
          g[v] += take(g_col[k], i - 1, k)[v];
        }
      for (int k : q.in[j])
        for (int v = 0; v < n; ++v) {
          d[v] += take(dim_col[k], i, k)[v];
          g[v] += take(g_col[k], i, k)[v];
        }
      if (is_zero(d) || (!nonneg(d) && !nonpos(d)))
        fail(Errc::InternalRecursionOverrun, "dimension vector not sign-coherent at (" +
                                                 std::to_string(i) + "," + std::to_string(j) + ")");
      dim_col[j].push_back(std::move(d));
      g_col[j].push_back(std::move(g));
      if (!nonneg(dim_col[j].back())) closed_at[j] = i - 1;  // first non-nonnegative copy
    }
  }

  w.column_bound.assign(n + 1, 0);
  for (int j = 1; j <= n; ++j) w.column_bound[j] = closed_at[j];

  int max_i = 0;
  for (int j = 1; j <= n; ++j) max_i = std::max(max_i, closed_at[j] + 1);
  for (int i = 0; i <= max_i; ++i)
    for (int j = 1; j <= n; ++j)
      if (i <= closed_at[j] + 1) {
        w.pos_map_[{i, j}] = (int)w.indices.size();
        w.indices.push_back({i, j});
        w.inner.push_back(i <= closed_at[j] ? 1 : 0);
        w.dims.push_back(dim_col[j][i]);
        w.gvecs.push_back(g_col[j][i]);
      }

  w.inner_ordinal.assign(w.size(), -1);
  for (int p = 0; p < w.size(); ++p)
    if (w.inner[p]) {
      w.inner_ordinal[p] = (int)w.inner_positions.size();
      w.inner_positions.push_back(p);
    }

  if (w.size() != n + num_positive_roots(q.type))
    fail(Errc::InternalRecursionOverrun, "window size |I| != n + #positive roots");

  // arrows of the translation quiver restricted to the window
  for (int p = 0; p < w.size(); ++p) {
    auto [i, j] = w.indices[p];
    for (int k : q.out[j]) {  // arrow j -> k: same-copy (i,j) -> (i,k)
      int t = w.pos({i, k});
      if (t >= 0) w.mesh_arrows.emplace_back(p, t);
    }
    for (int k : q.in[j]) {  // arrow k -> j: connector (i,j) -> (i+1,k)
      int t = w.pos({i + 1, k});
      if (t >= 0) w.mesh_arrows.emplace_back(p, t);
    }
  }
  std::sort(w.mesh_arrows.begin(), w.mesh_arrows.end());

  // boundary g-vectors must be the negative unit vectors, once each
  w.boundary_of_unit.assign(n + 1, -1);
  for (int p = 0; p < w.size(); ++p) {
    if (w.inner[p]) continue;
    int k = -1;
    for (int v = 0; v < n; ++v) {
      if (w.gvecs[p][v] == 0) continue;
      if (w.gvecs[p][v] != -1 || k >= 0) fail(Errc::InternalRecursionOverrun, "boundary g-vector is not a negative unit vector");
      k = v + 1;
    }
    if (k < 0 || w.boundary_of_unit[k] >= 0)
      fail(Errc::InternalRecursionOverrun, "boundary g-vectors do not biject onto -e_k");
    w.boundary_of_unit[k] = p;
  }
  for (int k = 1; k <= n; ++k)
    if (w.boundary_of_unit[k] < 0)
      fail(Errc::InternalRecursionOverrun, "missing boundary g-vector -e_" + std::to_string(k));

  return w;
}

std::vector<std::vector<int>> slices(const TranslationWindow& w) {
  const int n = w.n();
  std::vector<std::vector<int>> out;
  std::vector<int> choice(n + 1, -1);
  // Backtrack over columns in an order that keeps the partial assignment
  // connected in the underlying tree, so each new column is constrained by
  // at least one decided neighbour.
  std::vector<int> order;
  std::vector<char> placed(n + 1, 0);
  order.push_back(w.topo_order[0]);
  placed[w.topo_order[0]] = 1;
  for (size_t h = 0; h < order.size(); ++h) {
    int v = order[h];
    for (int u : w.q.out[v])
      if (!placed[u]) placed[u] = 1, order.push_back(u);
    for (int u : w.q.in[v])
      if (!placed[u]) placed[u] = 1, order.push_back(u);
  }

  auto ok_with_decided = [&](int j, int a) {
    // arrows u -> v of Q demand a_u - a_v in {0,1}
    for (int k : w.q.out[j])
      if (choice[k] >= 0 && (a - choice[k] < 0 || a - choice[k] > 1)) return false;
    for (int k : w.q.in[j])
      if (choice[k] >= 0 && (choice[k] - a < 0 || choice[k] - a > 1)) return false;
    return true;
  };

  std::vector<int> acc;
  auto rec = [&](auto&& self, size_t h) -> void {
    if (h == order.size()) {
      std::vector<int> s;
      for (int j = 1; j <= n; ++j) s.push_back(w.pos({choice[j], j}));
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      return;
    }
    int j = order[h];
    for (int a = 0; a <= w.column_bound[j] + 1; ++a)
      if (ok_with_decided(j, a)) {
        choice[j] = a;
        self(self, h + 1);
        choice[j] = -1;
      }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

HomTable hom_table(const TranslationWindow& w) {
  const int n = w.n();
  HomTable h;
  h.hom.assign(w.size(), std::vector<long long>(w.inner_size(), 0));

  for (int t = 0; t < w.inner_size(); ++t) {
    const int target = w.inner_positions[t];
    // seed copy 0 with the target's dimension vector (maps from projectives),
    // then knit forward with a unit deformation at the target's mesh
    for (int j = 1; j <= n; ++j) h.hom[w.pos({0, j})][t] = w.dims[target][j - 1];
    int max_i = 0;
    for (int j = 1; j <= n; ++j) max_i = std::max(max_i, w.column_bound[j] + 1);
    auto at = [&w](int i, int k) {
      int p = w.pos({i, k});
      if (p < 0)
        fail(Errc::InternalRecursionOverrun,
             "hom recursion needs (" + std::to_string(i) + "," + std::to_string(k) +
                 ") outside the window");
      return p;
    };
    for (int i = 1; i <= max_i; ++i) {
      for (int j : w.topo_order) {
        int p = w.pos({i, j});
        if (p < 0) continue;
        long long val = -h.hom[at(i - 1, j)][t];
        if (w.indices[target].i == i - 1 && w.indices[target].j == j) val += 1;
        for (int k : w.q.out[j]) val += h.hom[at(i - 1, k)][t];
        for (int k : w.q.in[j]) val += h.hom[at(i, k)][t];
        if (val < 0)
          fail(Errc::InternalNegativeHom, "negative hom dimension at (" + to_string(w.indices[p]) +
                                              ") -> (" + to_string(w.indices[target]) + ")");
        h.hom[p][t] = val;
      }
    }
    for (int p = 0; p < w.size(); ++p)
      if (!w.inner[p] && h.hom[p][t] != 0)
        fail(Errc::InternalNegativeHom, "boundary hom value nonzero");
  }
  return h;
}

long long ext_dim(const TranslationWindow& w, const HomTable& h, int a, int b) {
  const bool a_in = w.is_inner(a), b_in = w.is_inner(b);
  if (!a_in && !b_in) return 0;
  if (!a_in) {
    // a = P_k[1]: extensions to an inner b are the maps P_k -> W_b
    int k = 0;
    for (int v = 0; v < w.n(); ++v)
      if (w.gvecs[a][v] != 0) k = v + 1;
    return w.dims[b][k - 1];
  }
  if (!b_in) return 0;  // nothing extends a module by a shifted projective
  auto [i, j] = w.indices[a];
  if (i == 0) return 0;  // projectives admit no extensions into them
  int tau_a = w.pos({i - 1, j});
  return h.hom[b][w.inner_ordinal[tau_a]];
}

CompatibilityTable compatibility(const TranslationWindow& w, const HomTable& h) {
  CompatibilityTable c;
  c.compat.assign(w.size(), std::vector<char>(w.size(), 0));
  for (int a = 0; a < w.size(); ++a)
    for (int b = a; b < w.size(); ++b) {
      bool ok = ext_dim(w, h, a, b) == 0 && ext_dim(w, h, b, a) == 0;
      c.compat[a][b] = c.compat[b][a] = ok ? 1 : 0;
    }
  return c;
}

std::vector<IntVec> positive_roots(const DynkinQuiver& q) {
  const int n = q.n;
  IntMat cartan(n, IntVec(n, 0));
  for (int v = 0; v < n; ++v) cartan[v][v] = 2;
  for (auto [s, t] : q.arrows) {
    cartan[s - 1][t - 1] = -1;
    cartan[t - 1][s - 1] = -1;
  }
  std::set<IntVec> roots;
  std::vector<IntVec> frontier;
  for (int v = 0; v < n; ++v) {
    IntVec e(n, 0);
    e[v] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& r : frontier)
      for (int v = 0; v < n; ++v) {
        long long pairing = 0;
        for (int u = 0; u < n; ++u) pairing += cartan[v][u] * r[u];
        IntVec s = r;
        s[v] -= pairing;
        if (nonneg(s) && roots.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

}  // namespace assoc
