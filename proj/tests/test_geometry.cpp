#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "assoc/cluster.hpp"
#include "assoc/geometry.hpp"

using namespace assoc;

namespace {

DynkinQuiver golden_a3() { return parse_quiver("1->2; 3->2"); }

QPoint qp(std::vector<long long> v) {
  QPoint p(v.size());
  for (size_t i = 0; i < v.size(); ++i) p[i] = Rational(v[i]);
  return p;
}

// The fourteen vertices with every deformation parameter set to 1, as
// coordinates in canonical index order (0,1),(0,2),(0,3),(1,1),(1,2),(1,3),
// (2,1),(2,2),(2,3), with their projections.
struct GoldenVertex {
  std::vector<long long> coords;
  std::vector<long long> pi;
};
const std::vector<GoldenVertex> golden_vertices = {
    {{0, 0, 0, 1, 3, 1, 3, 4, 3}, {3, 4, 3}},
    {{0, 0, 1, 1, 2, 0, 2, 4, 3}, {3, 4, 2}},
    {{1, 0, 0, 0, 2, 1, 3, 4, 2}, {2, 4, 3}},
    {{1, 0, 1, 0, 1, 0, 2, 4, 2}, {2, 4, 2}},
    {{2, 1, 2, 0, 0, 0, 1, 3, 1}, {1, 3, 1}},
    {{2, 2, 3, 1, 0, 0, 0, 2, 1}, {1, 2, 0}},
    {{3, 2, 2, 0, 0, 1, 1, 2, 0}, {0, 2, 1}},
    {{3, 3, 3, 1, 0, 1, 0, 1, 0}, {0, 1, 0}},
    {{3, 4, 3, 2, 1, 2, 0, 0, 0}, {0, 0, 0}},
    {{3, 2, 0, 0, 2, 3, 3, 2, 0}, {0, 2, 3}},
    {{0, 2, 3, 3, 2, 0, 0, 2, 3}, {3, 2, 0}},
    {{3, 4, 0, 2, 4, 5, 3, 0, 0}, {0, 0, 3}},
    {{0, 4, 3, 5, 4, 2, 0, 0, 3}, {3, 0, 0}},
    {{0, 4, 0, 5, 7, 5, 3, 0, 3}, {3, 0, 3}},
};

}  // namespace

TEST_CASE("hom point golden values") {
  TranslationWindow w = build_window(golden_a3());
  HomTable h = hom_table(w);
  PointI v = v_point(w, h, ones_c(w));
  CHECK(v[w.pos({0, 1})] == 3);
  CHECK(v[w.pos({0, 2})] == 4);
  CHECK(v[w.pos({0, 3})] == 3);
  CHECK(v[w.pos({1, 1})] == 2);
  CHECK(v[w.pos({1, 2})] == 1);
  CHECK(v[w.pos({1, 3})] == 2);
  for (int j = 1; j <= 3; ++j) CHECK(v[w.pos({2, j})] == 0);

  PointI u = v_point(w, h, unit_c(w, {0, 2}));
  for (int j = 1; j <= 3; ++j) CHECK(u[w.pos({0, j})] == 1);

  PointI z = v_point(w, h, zero_c(w));
  for (int p = 0; p < w.size(); ++p) CHECK(z[p] == 0);
}

TEST_CASE("section golden values and round trip") {
  TranslationWindow w = build_window(golden_a3());
  CTuple c = ones_c(w);
  PointI p = section(w, c, {Rational(3), Rational(4), Rational(3)});
  CHECK(p[w.pos({0, 1})] == 0);
  CHECK(p[w.pos({0, 2})] == 0);
  CHECK(p[w.pos({0, 3})] == 0);
  CHECK(p[w.pos({1, 1})] == 1);
  CHECK(p[w.pos({1, 2})] == 3);
  CHECK(p[w.pos({1, 3})] == 1);
  CHECK(p[w.pos({2, 1})] == 3);
  CHECK(p[w.pos({2, 2})] == 4);
  CHECK(p[w.pos({2, 3})] == 3);
  CHECK(satisfies_mesh(w, c, p));

  PointI zero_pt = section(w, zero_c(w), {Rational(0), Rational(0), Rational(0)});
  for (int q = 0; q < w.size(); ++q) CHECK(zero_pt[q] == 0);

  // pi after section is the identity on random rational inputs
  unsigned long long s = 31;
  auto mix = [&]() {
    s += 0x9e3779b97f4a7c15ULL;
    unsigned long long z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  for (int round = 0; round < 20; ++round) {
    std::vector<Rational> vals(3);
    for (auto& x : vals) x = Rational((long long)(mix() % 19) - 9, (long long)(mix() % 7) + 1);
    PointI pt = section(w, c, vals);
    CHECK(satisfies_mesh(w, c, pt));
    CHECK(project_pi(w, pt) == vals);
  }
}

TEST_CASE("edge walk reproduces the fourteen golden vertices") {
  TranslationWindow w = build_window(golden_a3());
  HomTable h = hom_table(w);
  VertexMap vm = enumerate_vertices(w, h, ones_c(w));
  CHECK(vm.clusters.size() == 14);

  std::set<PointI> got(vm.points.begin(), vm.points.end());
  std::set<std::vector<Rational>> got_pi;
  for (const auto& pt : vm.points) got_pi.insert(project_pi(w, pt));
  for (const auto& gv : golden_vertices) {
    PointI expect(gv.coords.size());
    for (size_t k = 0; k < gv.coords.size(); ++k) expect[k] = Rational(gv.coords[k]);
    CHECK(got.count(expect) == 1);
    std::vector<Rational> pi(3);
    for (int k = 0; k < 3; ++k) pi[k] = Rational(gv.pi[k]);
    CHECK(got_pi.count(pi) == 1);
  }
}

TEST_CASE("pentagon and segment") {
  {
    TranslationWindow w = build_window(parse_quiver("1->2"));
    HomTable h = hom_table(w);
    VertexMap vm = enumerate_vertices(w, h, ones_c(w));
    CHECK(vm.clusters.size() == 5);
  }
  {
    TranslationWindow w = build_window(parse_quiver("1"));
    HomTable h = hom_table(w);
    VertexMap vm = enumerate_vertices(w, h, ones_c(w));
    CHECK(vm.clusters.size() == 2);
    std::set<PointI> pts(vm.points.begin(), vm.points.end());
    CHECK(pts.count(PointI{Rational(0), Rational(1)}) == 1);
    CHECK(pts.count(PointI{Rational(1), Rational(0)}) == 1);
  }
}

TEST_CASE("vertex_for_cluster agrees with the walk") {
  for (auto qv : {golden_a3(), random_orientation({DynkinSeries::A, 4}, 5),
                  random_orientation({DynkinSeries::D, 4}, 8)}) {
    TranslationWindow w = build_window(qv);
    HomTable h = hom_table(w);
    CTuple c = random_c(w, 12345, 1, 10);
    VertexMap vm = enumerate_vertices(w, h, c);
    CHECK(Int((long long)vm.clusters.size()) == generalized_catalan(qv.type));
    for (size_t i = 0; i < vm.clusters.size(); ++i) {
      PointI direct = vertex_for_cluster(w, h, c, vm.clusters[i]);
      CHECK(direct == vm.points[i]);
      CHECK(satisfies_mesh(w, c, direct));
      for (const auto& x : direct) CHECK(x >= 0);
    }
  }
}

TEST_CASE("vertex_for_cluster at the named clusters") {
  TranslationWindow w = build_window(golden_a3());
  HomTable h = hom_table(w);
  std::vector<int> initial{w.pos({0, 1}), w.pos({0, 2}), w.pos({0, 3})};
  std::vector<int> final_slice{w.pos({2, 1}), w.pos({2, 2}), w.pos({2, 3})};
  std::sort(initial.begin(), initial.end());
  std::sort(final_slice.begin(), final_slice.end());

  PointI qi = vertex_for_cluster(w, h, ones_c(w), initial);
  for (int p : initial) CHECK(qi[p] == 0);
  CHECK(project_pi(w, qi) == std::vector<Rational>{Rational(3), Rational(4), Rational(3)});

  PointI qf = vertex_for_cluster(w, h, ones_c(w), final_slice);
  CHECK(qf == v_point(w, h, ones_c(w)));
  for (int p : final_slice) CHECK(qf[p] == 0);

  // with the zero deformation every cluster lands on the origin
  ClusterAtlas atlas = enumerate_atlas(w);
  for (const auto& T : atlas.clusters) {
    PointI z = vertex_for_cluster(w, h, zero_c(w), T);
    for (const auto& x : z) CHECK(x == 0);
  }
}

TEST_CASE("vertex_for_cluster rejects incompatible sets") {
  TranslationWindow w = build_window(golden_a3());
  HomTable h = hom_table(w);
  std::vector<int> bad{w.pos({0, 1}), w.pos({1, 1}), w.pos({0, 3})};
  std::sort(bad.begin(), bad.end());
  CHECK_THROWS_WITH_AS(vertex_for_cluster(w, h, ones_c(w), bad),
                       doctest::Contains("IncompatibleSet"), Error);
}

TEST_CASE("edge walk requires strictly positive deformation") {
  TranslationWindow w = build_window(golden_a3());
  HomTable h = hom_table(w);
  CHECK_THROWS_WITH_AS(enumerate_vertices(w, h, unit_c(w, {0, 2})),
                       doctest::Contains("DegenerateWalk"), Error);
}

TEST_CASE("extreme point reduction") {
  auto pts = std::vector<QPoint>{qp({0, 0}), qp({1, 0}), qp({0, 1})};
  pts.push_back({Rational(1, 4), Rational(1, 4)});
  auto ext = extreme_points(pts);
  CHECK(ext.size() == 3);
  for (const auto& e : ext) CHECK(e != QPoint{Rational(1, 4), Rational(1, 4)});

  // all five Newton points of the biggest A3 F-polynomial are extreme
  std::vector<QPoint> five{qp({0, 0, 0}), qp({1, 0, 0}), qp({0, 0, 1}), qp({1, 0, 1}),
                           qp({1, 1, 1})};
  CHECK(extreme_points(five).size() == 5);

  // collinear points collapse to the two ends
  std::vector<QPoint> line{qp({0, 0}), qp({1, 1}), qp({2, 2}), qp({3, 3})};
  auto ends = extreme_points(line);
  CHECK(ends == std::vector<QPoint>{qp({0, 0}), qp({3, 3})});
}

TEST_CASE("polytope equality and Minkowski sums") {
  VPolytope seg1 = make_polytope(2, {qp({0, 0}), qp({1, 0})});
  VPolytope seg1r = make_polytope(2, {qp({1, 0}), qp({0, 0})});
  VPolytope seg2 = make_polytope(2, {qp({0, 0}), qp({0, 1})});
  VPolytope shifted = make_polytope(2, {qp({0, 1}), qp({1, 1})});
  CHECK(polytope_equal(seg1, seg1r));
  CHECK_FALSE(polytope_equal(seg1, shifted));
  VPolytope square = make_polytope(2, {qp({0, 0}), qp({1, 0}), qp({0, 1}), qp({1, 1})});
  CHECK(polytope_equal(minkowski_sum(seg1, seg2), square));
  VPolytope pt = make_polytope(2, {qp({0, 1})});
  CHECK(polytope_equal(minkowski_sum(seg1, pt), shifted));
}

TEST_CASE("polytopes are linear in the deformation") {
  for (auto qv : {golden_a3(), random_orientation({DynkinSeries::A, 4}, 21)}) {
    TranslationWindow w = build_window(qv);
    HomTable h = hom_table(w);
    ClusterAtlas atlas = enumerate_atlas(w);
    CTuple c1 = random_c(w, 7, 0, 3), c2 = random_c(w, 8, 0, 3);
    CTuple csum = c1;
    for (int t = 0; t < w.inner_size(); ++t) csum.c[t] += c2.c[t];
    auto polytope_for = [&](const CTuple& c) {
      std::vector<QPoint> pts;
      for (const auto& T : atlas.clusters)
        pts.push_back(project_pi(w, vertex_for_cluster(w, h, c, T)));
      return make_polytope(w.n(), std::move(pts));
    };
    CHECK(polytope_equal(polytope_for(csum), minkowski_sum(polytope_for(c1), polytope_for(c2))));
  }
}

TEST_CASE("the all-ones polytope is the Minkowski sum of the unit pieces") {
  TranslationWindow w = build_window(golden_a3());
  HomTable h = hom_table(w);
  ClusterAtlas atlas = enumerate_atlas(w);
  auto polytope_for = [&](const CTuple& c) {
    std::vector<QPoint> pts;
    for (const auto& T : atlas.clusters)
      pts.push_back(project_pi(w, vertex_for_cluster(w, h, c, T)));
    return make_polytope(w.n(), std::move(pts));
  };
  VPolytope sum = polytope_for(unit_c(w, w.indices[w.inner_positions[0]]));
  for (int t = 1; t < w.inner_size(); ++t)
    sum = minkowski_sum(sum, polytope_for(unit_c(w, w.indices[w.inner_positions[t]])));
  CHECK(polytope_equal(sum, polytope_for(ones_c(w))));
}

TEST_CASE("outer normal check") {
  VPolytope cube = make_polytope(3, {qp({0, 0, 0}), qp({1, 0, 0}), qp({0, 1, 0}), qp({0, 0, 1}),
                                     qp({1, 1, 0}), qp({1, 0, 1}), qp({0, 1, 1}), qp({1, 1, 1})});
  CHECK(outer_normal_check(cube, {1, 0, 0},
                           {qp({1, 0, 0}), qp({1, 1, 0}), qp({1, 0, 1}), qp({1, 1, 1})}));
  CHECK_FALSE(outer_normal_check(cube, {-1, 0, 0},
                                 {qp({1, 0, 0}), qp({1, 1, 0}), qp({1, 0, 1}), qp({1, 1, 1})}));

  // A3 with all parameters 1: direction g(0,1) exposes the facet p(0,1)=0
  TranslationWindow w = build_window(golden_a3());
  HomTable h = hom_table(w);
  VertexMap vm = enumerate_vertices(w, h, ones_c(w));
  std::vector<QPoint> all;
  std::vector<QPoint> expected;
  for (const auto& pt : vm.points) {
    all.push_back(project_pi(w, pt));
    if (pt[w.pos({0, 1})] == 0) expected.push_back(all.back());
  }
  VPolytope ap = make_polytope(3, all);
  CHECK(outer_normal_check(ap, w.gvecs[w.pos({0, 1})], expected));
}

TEST_CASE("halfspace vertex enumeration") {
  // unit square from its four supporting halfspaces
  std::vector<IntVec> normals{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  std::vector<Rational> offsets{Rational(1), Rational(0), Rational(1), Rational(0)};
  auto verts = vertices_of_halfspaces(normals, offsets, 2);
  CHECK(verts == std::vector<QPoint>{qp({0, 0}), qp({0, 1}), qp({1, 0}), qp({1, 1})});
}

TEST_CASE("exact solver and kernel") {
  std::vector<std::vector<Int>> a{{2, 1}, {1, 1}};
  auto x = solve_int_system(a, {Rational(3), Rational(2)});
  CHECK(x == std::vector<Rational>{Rational(1), Rational(1)});
  CHECK_THROWS_WITH_AS(solve_int_system({{1, 2}, {2, 4}}, {Rational(1), Rational(2)}),
                       doctest::Contains("SingularSystem"), Error);
  auto u = kernel_vector({{1, 1, 0}, {0, 1, 1}});
  // (1,-1,1) up to sign
  CHECK(u[0] * u[1] < 0);
  CHECK(u[1] * u[2] < 0);
  std::vector<Int> dots{u[0] + u[1], u[1] + u[2]};
  CHECK(dots[0] == 0);
  CHECK(dots[1] == 0);
}
