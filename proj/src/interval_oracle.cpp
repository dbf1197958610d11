#include "assoc/interval_oracle.hpp"

#include <algorithm>

namespace assoc {

IntervalModule interval_of(const TranslationWindow& w, WIdx alpha) {
  if (w.q.type.series != DynkinSeries::A)
    fail(Errc::NotDynkin, "NotTypeA: interval modules exist only in type A");
  int p = w.pos(alpha);
  if (p < 0 || !w.is_inner(p)) fail(Errc::BadInput, "interval_of needs an inner index");
  IntervalModule m;
  m.quiver = w.q;
  m.dims = w.dims[p];
  m.lo = 0;
  m.hi = -1;
  for (int v = 1; v <= w.n(); ++v) {
    if (m.dims[v - 1] == 0) continue;
    if (m.dims[v - 1] != 1) fail(Errc::BadInput, "type-A root with an entry above 1");
    if (m.lo == 0) m.lo = v;
    m.hi = v;
  }
  for (int v = m.lo; v <= m.hi; ++v)
    if (m.dims[v - 1] != 1) fail(Errc::BadInput, "type-A root support is not an interval");
  return m;
}

std::vector<IntVec> submodule_dim_vectors(const IntervalModule& m) {
  const int n = m.quiver.n;
  std::vector<IntVec> out;
  if (m.hi < m.lo) {
    out.push_back(IntVec(n, 0));
    return out;
  }
  const int len = m.hi - m.lo + 1;
  // Arrows of the reversed quiver inside the support act as identities, so a
  // coordinate subspace is a subrepresentation iff it is closed under them:
  // u -> v in Q^op (that is, v -> u in Q) forces e_u <= e_v.
  std::vector<std::pair<int, int>> closure;  // (u, v): e_u <= e_v
  for (auto [s, t] : m.quiver.arrows)
    if (s >= m.lo && s <= m.hi && t >= m.lo && t <= m.hi) closure.emplace_back(t, s);
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    bool ok = true;
    for (auto [u, v] : closure)
      if ((mask >> (u - m.lo) & 1u) && !(mask >> (v - m.lo) & 1u)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    IntVec e(n, 0);
    for (int b = 0; b < len; ++b)
      if (mask >> b & 1u) e[m.lo - 1 + b] = 1;
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VPolytope submodule_polytope(const IntervalModule& m) {
  std::vector<QPoint> pts;
  for (const auto& e : submodule_dim_vectors(m)) {
    QPoint p(e.size());
    for (size_t k = 0; k < e.size(); ++k) p[k] = Rational(e[k]);
    pts.push_back(std::move(p));
  }
  return make_polytope(m.quiver.n, std::move(pts));
}

int count_submodules_with_dims(const IntervalModule& m, const IntVec& e) {
  int count = 0;
  for (const auto& d : submodule_dim_vectors(m))
    if (d == e) ++count;
  return count;
}

}  // namespace assoc
