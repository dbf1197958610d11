#include "assoc/cluster.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace assoc {

namespace {

VarSetPtr seed_varset(const DynkinQuiver& q, const std::vector<std::string>& coeff_names) {
  std::vector<std::string> names;
  for (int i = 1; i <= q.n; ++i) names.push_back("x" + std::to_string(i));
  for (const auto& nm : coeff_names) names.push_back(nm);
  return make_varset(std::move(names));
}

// After every exchange the new variable must stay Laurent in the x's and
// polynomial in the coefficients; anything else is a broken mutation.
void check_laurent(const Seed& s, const LaurentPoly& v) {
  for (const auto& t : v.terms())
    for (int u = s.n(); u < (int)s.varset->size(); ++u)
      if (t.e[u] < 0)
        fail(Errc::InternalExchangeError, "coefficient variable with negative exponent");
}

}  // namespace

Seed initial_seed(const IceQuiver& ice) {
  Seed s;
  s.coeff_names = ice.names;
  s.varset = seed_varset(ice.base, ice.names);
  s.bmat = exchange_matrix(ice.base);
  for (const auto& row : ice.rows) s.bmat.push_back(row);
  for (int i = 1; i <= ice.base.n; ++i)
    s.vars.push_back(LaurentPoly::variable(s.varset, "x" + std::to_string(i)));
  return s;
}

Seed mutate(const Seed& s, int k) {
  const int n = s.n(), rows = (int)s.bmat.size();
  if (k < 1 || k > n) fail(Errc::BadInput, "mutation vertex out of range");
  const int kk = k - 1;

  Seed out;
  out.coeff_names = s.coeff_names;
  out.varset = s.varset;
  out.bmat.assign(rows, IntVec(n, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == kk || j == kk)
        out.bmat[i][j] = -s.bmat[i][j];
      else {
        long long bik = s.bmat[i][kk], bkj = s.bmat[kk][j];
        long long sgn = bik > 0 ? 1 : bik < 0 ? -1 : 0;
        out.bmat[i][j] = s.bmat[i][j] + sgn * std::max(0LL, bik * bkj);
      }
    }

  auto row_var = [&](int i) {
    if (i < n) return s.vars[i];
    return LaurentPoly::variable(s.varset, s.coeff_names[i - n]);
  };
  LaurentPoly pos = LaurentPoly::constant(s.varset, 1), neg = pos;
  for (int i = 0; i < rows; ++i) {
    long long b = s.bmat[i][kk];
    if (b > 0) pos = pos * row_var(i).pow(b);
    if (b < 0) neg = neg * row_var(i).pow(-b);
  }
  LaurentPoly xk;
  try {
    xk = div_exact(pos + neg, s.vars[kk]);
  } catch (const Error& e) {
    if (e.code() == Errc::NotDivisible)
      fail(Errc::InternalExchangeError, "exchange numerator is not divisible by the old variable");
    throw;
  }
  check_laurent(s, xk);

  out.vars = s.vars;
  out.vars[kk] = std::move(xk);
  return out;
}

std::vector<LaurentPoly> slice_variables(const TranslationWindow& w, const IceQuiver& ice,
                                         int source_policy) {
  const int n = w.n();
  Seed seed = initial_seed(ice);
  std::vector<LaurentPoly> assigned(w.size());
  std::vector<int> a(n + 1, 0);  // current slice: copy index per column
  for (int j = 1; j <= n; ++j) assigned[w.pos({0, j})] = seed.vars[j - 1];

  // (a_j, j) is a source of the slice iff every in-window neighbour arrow
  // points away from it: a_j == a_k for arrows j -> k, a_k == a_j + 1 for
  // arrows k -> j.  Advancing it keeps the slice property.
  auto is_source = [&](int j) {
    for (int k : w.q.out[j])
      if (a[j] != a[k]) return false;
    for (int k : w.q.in[j])
      if (a[k] != a[j] + 1) return false;
    return true;
  };

  for (;;) {
    bool final_slice = true;
    for (int j = 1; j <= n; ++j)
      if (a[j] <= w.column_bound[j]) final_slice = false;
    if (final_slice) break;

    int pick = -1;
    for (int j = 1; j <= n; ++j) {
      if (a[j] > w.column_bound[j]) continue;  // already at the boundary copy
      if (!is_source(j)) continue;
      pick = j;
      if (source_policy == 0) break;
    }
    if (pick < 0) fail(Errc::InternalRecursionOverrun, "slice without an advanceable source");

    seed = mutate(seed, pick);
    a[pick] += 1;
    assigned[w.pos({a[pick], pick})] = seed.vars[pick - 1];
  }
  return assigned;
}

ClusterAtlas enumerate_atlas(const TranslationWindow& w) {
  const int n = w.n();
  ClusterAtlas atlas;
  atlas.variables = slice_variables(w, framed(w.q));

  std::map<std::string, int> var_index;
  for (int p = 0; p < w.size(); ++p) var_index[to_string(atlas.variables[p])] = p;

  auto cluster_of = [&](const Seed& s) {
    std::vector<int> c;
    for (const auto& v : s.vars) {
      auto it = var_index.find(to_string(v));
      if (it == var_index.end())
        fail(Errc::UnmatchedVariable, "mutation produced a variable outside the slice assignment");
      c.push_back(it->second);
    }
    std::sort(c.begin(), c.end());
    return c;
  };

  std::map<std::vector<int>, int> cluster_id;
  std::deque<std::pair<Seed, int>> queue;
  std::set<std::pair<int, int>> edges;

  Seed s0 = initial_seed(framed(w.q));
  auto c0 = cluster_of(s0);
  cluster_id[c0] = 0;
  atlas.clusters.push_back(c0);
  queue.emplace_back(std::move(s0), 0);

  while (!queue.empty()) {
    auto [s, id] = std::move(queue.front());
    queue.pop_front();
    for (int k = 1; k <= n; ++k) {
      Seed t = mutate(s, k);
      auto c = cluster_of(t);
      auto [it, fresh] = cluster_id.try_emplace(c, (int)atlas.clusters.size());
      if (fresh) {
        atlas.clusters.push_back(c);
        queue.emplace_back(std::move(t), it->second);
      }
      edges.insert({std::min(id, it->second), std::max(id, it->second)});
    }
  }
  atlas.exchange_edges.assign(edges.begin(), edges.end());
  return atlas;
}

LaurentPoly f_polynomial(const ClusterAtlas& atlas, const TranslationWindow& w, int pos) {
  std::vector<std::string> xs;
  for (int i = 1; i <= w.n(); ++i) xs.push_back("x" + std::to_string(i));
  return set_vars_to_one(atlas.variables[pos], xs);
}

std::string universal_coeff_name(WIdx a) {
  return "z" + std::to_string(a.i) + "_" + std::to_string(a.j);
}

IceQuiver universal_ice(const TranslationWindow& w) {
  IntMat rows;
  std::vector<std::string> names;
  for (int p = 0; p < w.size(); ++p) {
    IntVec row(w.n());
    for (int v = 0; v < w.n(); ++v) row[v] = -w.gvecs[p][v];
    rows.push_back(std::move(row));
    names.push_back(universal_coeff_name(w.indices[p]));
  }
  return make_ice(w.q, std::move(rows), std::move(names));
}

std::vector<LaurentPoly> universal_f_polynomials(const TranslationWindow& w) {
  auto vars = slice_variables(w, universal_ice(w));
  std::vector<std::string> xs;
  for (int i = 1; i <= w.n(); ++i) xs.push_back("x" + std::to_string(i));
  std::vector<LaurentPoly> out;
  out.reserve(vars.size());
  for (const auto& v : vars) out.push_back(set_vars_to_one(v, xs));
  return out;
}

LaurentPoly separation_specialize(const LaurentPoly& f_prin, const IceQuiver& ice) {
  const int n = ice.base.n, m = ice.m;
  VarSetPtr target = seed_varset(ice.base, ice.names);

  // x_i keeps its slot; y_i maps to the coefficient monomial of column i.
  std::vector<LaurentPoly> images;
  for (int i = 0; i < n; ++i) {
    Exps e(target->size(), 0);
    e[i] = 1;
    images.push_back(LaurentPoly::monomial(target, std::move(e), 1));
  }
  for (int i = 0; i < n; ++i) {
    Exps e(target->size(), 0);
    for (int j = 0; j < m; ++j) e[n + j] = (int32_t)ice.rows[j][i];
    images.push_back(LaurentPoly::monomial(target, std::move(e), 1));
  }

  LaurentPoly fx = substitute(f_prin, target, images);

  std::vector<std::string> xs;
  for (int i = 1; i <= n; ++i) xs.push_back("x" + std::to_string(i));
  LaurentPoly fpoly = set_vars_to_one(f_prin, xs);

  // tropical part of F(yhat): componentwise minimum over the coefficients
  std::vector<LaurentPoly> y_images;
  VarSetPtr ynames = fpoly.vars();
  for (size_t v = 0; v < ynames->size(); ++v) {
    int i = (int)v;
    Exps e(target->size(), 0);
    for (int j = 0; j < m; ++j) e[n + j] = (int32_t)ice.rows[j][i];
    y_images.push_back(LaurentPoly::monomial(target, std::move(e), 1));
  }
  LaurentPoly fy = substitute(fpoly, target, y_images);
  std::vector<char> observed(target->size(), 0);
  for (int j = 0; j < m; ++j) observed[n + j] = 1;
  Exps trop = tropical_exponents(fy, observed);
  return fx * LaurentPoly::monomial(target, std::move(trop), 1).pow(-1);
}

}  // namespace assoc
