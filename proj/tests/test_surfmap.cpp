#include "doctest.h"
#include "trisect/surfmap.hpp"

#include <random>

using namespace trisect;

namespace {

CombinatorialSurface torus() { return standard_surface(1, 0); }

// Closed torus from a periodic n x n quad grid; curves along rows/columns.
struct GridTorus {
  PolygonSet P;
  int n;
  std::map<std::pair<int, int>, int> eid;
  int v(int x, int y) const { return ((x % n + n) % n) * n + ((y % n + n) % n); }
  int side(int a, int b) {
    auto key = std::minmax(a, b);
    auto it = eid.find({key.first, key.second});
    int e;
    if (it == eid.end()) {
      e = static_cast<int>(P.edges.size());
      P.edges.push_back({a, b});
      eid[{key.first, key.second}] = e;
    } else {
      e = it->second;
    }
    return 2 * e + (P.edges[e][0] == a ? 0 : 1);
  }
  explicit GridTorus(int n_) : n(n_) {
    P.num_vertices = n * n;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        P.faces.push_back({side(v(x, y), v(x + 1, y)), side(v(x + 1, y), v(x + 1, y + 1)),
                           side(v(x + 1, y + 1), v(x, y + 1)), side(v(x, y + 1), v(x, y))});
  }
};

Curve walk(const SurfaceBuild& B, GridTorus& T, const std::vector<std::pair<int, int>>& pts, bool closed) {
  Curve c;
  c.closed = closed;
  size_t m = closed ? pts.size() : pts.size() - 1;
  for (size_t j = 0; j < m; ++j) {
    auto [x0, y0] = pts[j];
    auto [x1, y1] = pts[(j + 1) % pts.size()];
    c.darts.push_back(B.dart(T.side(T.v(x0, y0), T.v(x1, y1))));
  }
  return c;
}

}  // namespace

TEST_CASE("standard surfaces classify as built") {
  CHECK(classify_surface(standard_surface(0, 1)) == Classification{0, 1, 1, 1});
  CHECK(classify_surface(standard_surface(1, 1)).euler == -1);
  CHECK(classify_surface(standard_surface(0, 3)).euler == -1);
  CHECK(classify_surface(standard_surface(2, 0)) == Classification{2, 0, 1, -2});
  CHECK(classify_surface(standard_surface(1, 2)) == Classification{1, 2, 1, -2});
  CHECK(classify_surface(standard_surface(0, 0)) == Classification{0, 0, 1, 2});
  for (int g = 0; g < 4; ++g)
    for (int b = 0; b < 4; ++b) {
      auto k = classify_surface(standard_surface(g, b));
      CHECK(k.genus == g);
      CHECK(k.boundary_count == b);
      CHECK(k.euler == 2 - 2 * g - b);
    }
}

TEST_CASE("disjoint union of two disks") {
  PolygonSet P;
  P.num_vertices = 6;
  P.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  P.faces = {{0, 2, 4}, {6, 8, 10}};
  auto S = build_surface(P).surface;
  CHECK(classify_surface(S) == Classification{0, 2, 2, 2});
}

TEST_CASE("malformed tables are rejected") {
  CombinatorialSurface S = torus();
  S.opposite[0] = 0;
  CHECK_THROWS_AS(classify_surface(S), TopologyError);
  CombinatorialSurface T = torus();
  std::swap(T.vertex_of[0], T.vertex_of[T.opposite[0]]);
  CHECK_THROWS_AS(classify_surface(T), TopologyError);
}

TEST_CASE("meridian and longitude meet once positively") {
  auto S = torus();
  auto C = standard_curves(1, 0);
  auto ix = curve_intersections(S, C.curves[0], C.curves[1]);
  REQUIRE(ix.size() == 1);
  CHECK(ix[0].sign == 1);
  auto back = curve_intersections(S, C.curves[1], C.curves[0]);
  REQUIRE(back.size() == 1);
  CHECK(back[0].sign == -1);
}

TEST_CASE("parallel curves do not meet") {
  GridTorus T(4);
  auto B = build_surface(T.P);
  auto a = walk(B, T, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, true);
  auto b = walk(B, T, {{0, 2}, {1, 2}, {2, 2}, {3, 2}}, true);
  CHECK(curve_intersections(B.surface, a, b).empty());
}

TEST_CASE("cutting") {
  GridTorus T(4);
  auto B = build_surface(T.P);
  CurveSystem C;
  C.curves.push_back(walk(B, T, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, true));
  auto A = cut_along(B.surface, C);
  CHECK(classify_surface(A) == Classification{0, 2, 1, 0});
  CHECK(verify_cut_system(B.surface, C).ok);

  CurveSystem trivial;
  trivial.curves.push_back(walk(B, T, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true));
  auto rep = verify_cut_system(B.surface, trivial);
  CHECK_FALSE(rep.ok);
  auto pieces = classify_surface(cut_along(B.surface, trivial));
  CHECK(pieces.component_count == 2);
  CHECK(pieces.genus == 1);

  CurveSystem none;
  CHECK_FALSE(verify_cut_system(B.surface, none).ok);
  CHECK(verify_cut_system(standard_surface(0, 0), none).ok);
}

TEST_CASE("genus two cut into a sphere with four holes") {
  auto S = standard_surface(2, 0);
  auto std_c = standard_curves(2, 0);
  CurveSystem C;
  C.curves = {std_c.curves[0], std_c.curves[2]};
  auto A = cut_along(S, C);
  CHECK(classify_surface(A) == Classification{0, 4, 1, -2});
  CHECK(verify_cut_system(S, C).ok);
  C.curves.pop_back();
  auto rep = verify_cut_system(S, C);
  CHECK_FALSE(rep.ok);
}

TEST_CASE("disk cut along a neat arc") {
  PolygonSet P;
  P.num_vertices = 4;
  P.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  P.faces = {{0, 2, 9}, {8, 4, 6}};
  auto B = build_surface(P);
  CHECK(classify_surface(B.surface).euler == 1);
  CurveSystem C;
  C.curves.push_back(Curve{{B.dart(8)}, false});
  auto A = cut_along(B.surface, C);
  auto k = classify_surface(A);
  CHECK(k.component_count == 2);
  CHECK(k.euler == 2);
}

TEST_CASE("subdivision keeps classification and intersections") {
  GridTorus T(4);
  auto B = build_surface(T.P);
  CurveSystem C;
  C.curves.push_back(walk(B, T, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, true));
  C.curves.push_back(walk(B, T, {{1, 0}, {1, 1}, {1, 2}, {1, 3}}, true));
  auto before = curve_intersections(B.surface, C.curves[0], C.curves[1]);
  REQUIRE(before.size() == 1);
  auto r1 = subdivide(B.surface, C.curves[0].darts[2], Subdivision::EdgeMidpoint, {C});
  auto r2 = subdivide(r1.surface, 3, Subdivision::FaceBarycentric, r1.tracked);
  auto r3 = subdivide(r2.surface, 0, Subdivision::FaceStar, r2.tracked);
  for (auto* r : {&r1, &r2, &r3}) {
    CHECK(classify_surface(r->surface) == classify_surface(B.surface));
    auto after = curve_intersections(r->surface, r->tracked[0].curves[0], r->tracked[0].curves[1]);
    REQUIRE(after.size() == 1);
    CHECK(after[0].sign == before[0].sign);
  }
  CHECK_THROWS_AS(subdivide(B.surface, 999, Subdivision::FaceStar, {}), TopologyError);
}

TEST_CASE("gluing") {
  auto D = standard_surface(0, 1);
  Assembly A;
  A.surfaces = {D, D};
  int L = static_cast<int>(D.boundary[0].darts.size());
  A.identifications.push_back({0, 0, 1, 0, 0, -1});
  auto G = glue_surfaces(A);
  CHECK(G.euler() == 2);
  auto closed = build_surface(G.cells);
  CHECK(classify_surface(closed.surface) == Classification{0, 0, 1, 2});

  Assembly three;
  three.surfaces = {D, D, D};
  three.identifications = {{0, 0, 1, 0, 0, 1}, {0, 0, 2, 0, 0, 1}};
  auto W = glue_surfaces(three);
  // three disks on one circle: V - E + F = 3
  CHECK(W.euler() == 3);

  auto T = standard_surface(1, 1);
  Assembly bad;
  bad.surfaces = {D, T};
  bad.identifications.push_back({0, 0, 1, 0, 0, -1});
  if (static_cast<int>(T.boundary[0].darts.size()) != L) CHECK_THROWS_AS(glue_surfaces(bad), TopologyError);
}
