#include "assoc/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace assoc {

std::string DynkinType::name() const {
  const char* s = series == DynkinSeries::A ? "A" : series == DynkinSeries::D ? "D" : "E";
  return s + std::to_string(rank);
}

bool DynkinQuiver::has_arrow(int s, int t) const {
  for (int v : out[s])
    if (v == t) return true;
  return false;
}

namespace {

// Branch lengths of the tree seen from its unique degree-3 vertex, or the
// path length when there is none.  Assumes a connected simple tree.
DynkinType classify_tree(int n, const std::vector<std::vector<int>>& adj) {
  int branch_vertex = 0;
  for (int v = 1; v <= n; ++v) {
    if (adj[v].size() > 3) fail(Errc::NotDynkin, "vertex of degree > 3");
    if (adj[v].size() == 3) {
      if (branch_vertex != 0) fail(Errc::NotDynkin, "more than one branch vertex");
      branch_vertex = v;
    }
  }
  if (branch_vertex == 0) return {DynkinSeries::A, n};

  std::vector<int> lens;
  for (int start : adj[branch_vertex]) {
    int len = 1, prev = branch_vertex, cur = start;
    while (adj[cur].size() == 2) {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    if (adj[cur].size() == 3) fail(Errc::NotDynkin, "branch rejoins the branch vertex");
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  if (lens[0] == 1 && lens[1] == 1) return {DynkinSeries::D, 3 + lens[2]};
  if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4)
    return {DynkinSeries::E, 4 + lens[2]};
  fail(Errc::NotDynkin, "branch lengths (" + std::to_string(lens[0]) + "," +
                            std::to_string(lens[1]) + "," + std::to_string(lens[2]) +
                            ") are not ADE");
}

}  // namespace

DynkinQuiver make_quiver(int n, std::vector<std::pair<int, int>> arrows) {
  if (n <= 0) fail(Errc::BadLabels, "vertex count must be positive");
  for (auto [s, t] : arrows) {
    if (s < 1 || s > n || t < 1 || t > n)
      fail(Errc::BadLabels, "arrow endpoint outside 1.." + std::to_string(n));
    if (s == t) fail(Errc::NotSimplyLaced, "loop at vertex " + std::to_string(s));
  }
  std::set<std::pair<int, int>> undirected;
  for (auto [s, t] : arrows) {
    auto e = std::minmax(s, t);
    if (!undirected.insert({e.first, e.second}).second)
      fail(Errc::NotSimplyLaced, "multiple edge between " + std::to_string(s) + " and " +
                                     std::to_string(t));
  }
  if ((int)arrows.size() != n - 1) fail(Errc::NotDynkin, "underlying graph is not a tree");

  std::vector<std::vector<int>> adj(n + 1);
  for (auto [s, t] : arrows) {
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  // connectivity
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  if (count != n) fail(Errc::Disconnected, "underlying graph is disconnected");

  DynkinQuiver q;
  q.n = n;
  q.arrows = std::move(arrows);
  std::sort(q.arrows.begin(), q.arrows.end());
  q.type = classify_tree(n, adj);
  q.out.assign(n + 1, {});
  q.in.assign(n + 1, {});
  for (auto [s, t] : q.arrows) {
    q.out[s].push_back(t);
    q.in[t].push_back(s);
  }
  return q;
}

DynkinQuiver parse_quiver(const std::string& text) {
  std::string trimmed = text;
  auto first = trimmed.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail(Errc::BadInput, "empty quiver description");
  if (trimmed[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(trimmed);
    } catch (const std::exception& e) {
      fail(Errc::BadInput, std::string("quiver JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("arrows")) fail(Errc::BadInput, "quiver JSON needs n and arrows");
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2) fail(Errc::BadInput, "arrow must be [s,t]");
      arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return make_quiver(j["n"].get<int>(), std::move(arrows));
  }

  std::vector<std::pair<int, int>> arrows;
  int max_label = 0;
  std::string item;
  std::string normalized = trimmed;
  std::replace(normalized.begin(), normalized.end(), '\n', ';');
  std::stringstream ss(normalized);
  while (std::getline(ss, item, ';')) {
    std::string tok;
    for (char ch : item)
      if (!std::isspace((unsigned char)ch)) tok += ch;
    if (tok.empty()) continue;
    auto pos = tok.find("->");
    try {
      if (pos == std::string::npos) {
        int v = std::stoi(tok);  // bare vertex, for rank-1 inputs
        max_label = std::max(max_label, v);
        if (v <= 0) fail(Errc::BadLabels, "labels are 1-based");
      } else {
        int s = std::stoi(tok.substr(0, pos));
        int t = std::stoi(tok.substr(pos + 2));
        if (s <= 0 || t <= 0) fail(Errc::BadLabels, "labels are 1-based");
        arrows.emplace_back(s, t);
        max_label = std::max({max_label, s, t});
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::BadInput, "cannot parse arrow '" + item + "'");
    }
  }
  if (max_label == 0) fail(Errc::BadInput, "no vertices in quiver description");
  return make_quiver(max_label, std::move(arrows));
}

DynkinQuiver opposite(const DynkinQuiver& q) {
  std::vector<std::pair<int, int>> rev;
  rev.reserve(q.arrows.size());
  for (auto [s, t] : q.arrows) rev.emplace_back(t, s);
  return make_quiver(q.n, std::move(rev));
}

IntMat exchange_matrix(const DynkinQuiver& q) {
  IntMat b(q.n, IntVec(q.n, 0));
  for (auto [s, t] : q.arrows) {
    b[s - 1][t - 1] += 1;
    b[t - 1][s - 1] -= 1;
  }
  return b;
}

IceQuiver make_ice(DynkinQuiver base, IntMat rows, std::vector<std::string> names) {
  if (rows.size() != names.size()) fail(Errc::BadInput, "one name per frozen row");
  for (const auto& r : rows)
    if ((int)r.size() != base.n) fail(Errc::BadInput, "frozen row length must equal n");
  IceQuiver ice;
  ice.base = std::move(base);
  ice.m = (int)rows.size();
  ice.rows = std::move(rows);
  ice.names = std::move(names);
  return ice;
}

IceQuiver framed(const DynkinQuiver& q) {
  IntMat rows(q.n, IntVec(q.n, 0));
  std::vector<std::string> names;
  for (int i = 0; i < q.n; ++i) {
    rows[i][i] = 1;
    names.push_back("y" + std::to_string(i + 1));
  }
  return make_ice(q, std::move(rows), std::move(names));
}

IceQuiver trivial_ice(const DynkinQuiver& q) { return make_ice(q, {}, {}); }

int coxeter_number(DynkinType t) {
  switch (t.series) {
    case DynkinSeries::A: return t.rank + 1;
    case DynkinSeries::D: return 2 * t.rank - 2;
    case DynkinSeries::E: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
  }
  return 0;
}

std::vector<int> type_exponents(DynkinType t) {
  switch (t.series) {
    case DynkinSeries::A: {
      std::vector<int> e(t.rank);
      std::iota(e.begin(), e.end(), 1);
      return e;
    }
    case DynkinSeries::D: {
      std::vector<int> e;
      for (int k = 1; k <= 2 * t.rank - 3; k += 2) e.push_back(k);
      e.push_back(t.rank - 1);
      std::sort(e.begin(), e.end());
      return e;
    }
    case DynkinSeries::E:
      if (t.rank == 6) return {1, 4, 5, 7, 8, 11};
      if (t.rank == 7) return {1, 5, 7, 9, 11, 13, 17};
      return {1, 7, 11, 13, 17, 19, 23, 29};
  }
  return {};
}

long long num_positive_roots(DynkinType t) {
  return (long long)t.rank * coxeter_number(t) / 2;
}

Int generalized_catalan(DynkinType t) {
  Int num = 1, den = 1;
  int h = coxeter_number(t);
  for (int e : type_exponents(t)) {
    num *= e + h + 1;
    den *= e + 1;
  }
  return num / den;
}

DynkinQuiver standard_quiver(DynkinType t) {
  std::vector<std::pair<int, int>> arrows;
  switch (t.series) {
    case DynkinSeries::A:
      for (int i = 1; i < t.rank; ++i) arrows.emplace_back(i, i + 1);
      break;
    case DynkinSeries::D:
      // chain 1 -> 2 -> ... -> (n-2), with n-1 and n feeding the chain end
      for (int i = 1; i < t.rank - 2; ++i) arrows.emplace_back(i, i + 1);
      arrows.emplace_back(t.rank - 1, t.rank - 2);
      arrows.emplace_back(t.rank, t.rank - 2);
      break;
    case DynkinSeries::E:
      // chain 1 -> 2 -> ... -> (n-1), with n feeding vertex 3
      for (int i = 1; i < t.rank - 1; ++i) arrows.emplace_back(i, i + 1);
      arrows.emplace_back(t.rank, 3);
      break;
  }
  return make_quiver(t.rank, std::move(arrows));
}

DynkinType parse_type_name(const std::string& name) {
  if (name.size() < 2) fail(Errc::BadInput, "type name like A3/D4/E6 expected");
  char s = (char)std::toupper((unsigned char)name[0]);
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    fail(Errc::BadInput, "bad rank in type name '" + name + "'");
  }
  DynkinType t;
  if (s == 'A' && rank >= 1)
    t = {DynkinSeries::A, rank};
  else if (s == 'D' && rank >= 4)
    t = {DynkinSeries::D, rank};
  else if (s == 'E' && rank >= 6 && rank <= 8)
    t = {DynkinSeries::E, rank};
  else
    fail(Errc::BadInput, "unknown Dynkin type '" + name + "'");
  return t;
}

DynkinQuiver random_orientation(DynkinType t, unsigned long long seed) {
  DynkinQuiver base = standard_quiver(t);
  std::vector<std::pair<int, int>> arrows;
  unsigned long long x = seed ? seed : 0x9e3779b97f4a7c15ULL;
  for (auto [s, u] : base.arrows) {
    // splitmix64 step
    x += 0x9e3779b97f4a7c15ULL;
    unsigned long long z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    if (z & 1)
      arrows.emplace_back(s, u);
    else
      arrows.emplace_back(u, s);
  }
  return make_quiver(base.n, std::move(arrows));
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotSimplyLaced: return "NotSimplyLaced";
    case Errc::NotDynkin: return "NotDynkin";
    case Errc::Disconnected: return "Disconnected";
    case Errc::BadLabels: return "BadLabels";
    case Errc::BadInput: return "BadInput";
    case Errc::VarSetMismatch: return "VarSetMismatch";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NonMonomialImage: return "NonMonomialImage";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::InternalRecursionOverrun: return "InternalRecursionOverrun";
    case Errc::InternalNegativeHom: return "InternalNegativeHom";
    case Errc::InternalExchangeError: return "InternalExchangeError";
    case Errc::UnmatchedVariable: return "UnmatchedVariable";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::IncompatibleSet: return "IncompatibleSet";
    case Errc::UnboundedRay: return "UnboundedRay";
    case Errc::WrongHitIndex: return "WrongHitIndex";
    case Errc::DegenerateWalk: return "DegenerateWalk";
    case Errc::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

}  // namespace assoc
