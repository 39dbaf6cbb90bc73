#include "doctest.h"
#include "trisect/homology.hpp"

#include <random>

using namespace trisect;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int m, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix M(m, std::vector<BigInt>(n));
  for (auto& row : M)
    for (auto& x : row) x = d(rng);
  return M;
}

bool is_diagonal_chain(const IntMatrix& D, const std::vector<BigInt>& diag) {
  for (size_t i = 0; i < D.size(); ++i)
    for (size_t j = 0; j < D[i].size(); ++j)
      if (i != j && D[i][j] != 0) return false;
  for (size_t k = 0; k + 1 < diag.size(); ++k) {
    if (diag[k] < 0) return false;
    if (diag[k] == 0 && diag[k + 1] != 0) return false;
    if (diag[k] != 0 && diag[k + 1] % diag[k] != 0) return false;
  }
  return true;
}

// Two closed surfaces glued from polygons, as skeletons with one "surface".
Skeleton skeleton_of(const PolygonSet& P) {
  Skeleton W;
  W.cells = P;
  W.face_surface.assign(P.faces.size(), 0);
  return W;
}

}  // namespace

TEST_CASE("smith normal form small cases") {
  auto r = smith_normal_form({{1, 0}, {0, 1}});
  CHECK(r.diagonal == std::vector<BigInt>{1, 1});
  r = smith_normal_form({{2}});
  CHECK(r.diagonal == std::vector<BigInt>{2});
  r = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(r.diagonal == std::vector<BigInt>{2, 6, 12});
  r = smith_normal_form({{0, 0}, {0, 0}});
  CHECK(r.diagonal == std::vector<BigInt>{0, 0});
}

TEST_CASE("smith normal form certificates multiply back") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto M = random_matrix(rng, 6, 7, -9, 9);
    auto r = smith_normal_form(M);
    auto D = multiply(multiply(r.U, M), r.V);
    CHECK(is_diagonal_chain(D, r.diagonal));
    for (size_t k = 0; k < r.diagonal.size(); ++k) CHECK(D[k][k] == r.diagonal[k]);
    auto du = determinant(r.U), dv = determinant(r.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
  }
}

TEST_CASE("sparse invariant factors agree with dense smith form") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 3 + trial % 5, n = 2 + trial % 6;
    auto M = random_matrix(rng, m, n, -2, 2);
    SparseMatrix S(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) S.add(i, j, static_cast<long long>(M[i][j]));
    auto f = invariant_factors(S);
    auto r = smith_normal_form(M);
    std::vector<BigInt> nz;
    for (auto& d : r.diagonal)
      if (d != 0) nz.push_back(d);
    CHECK(f == nz);
  }
}

TEST_CASE("determinant oracle") {
  CHECK(determinant({{2, 0}, {0, 3}}) == 6);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
}

TEST_CASE("homology of a sphere and a torus") {
  auto D = standard_surface(0, 1);
  Assembly A;
  A.surfaces = {D, D};
  A.identifications.push_back({0, 0, 1, 0, 0, -1});
  auto G = glue_surfaces(A);
  auto R = cw_from_realization(skeleton_of(G.cells), {}, {});
  auto H = homology_all(R.complex);
  CHECK(H[0].is_free(1));
  CHECK(H[1].is_free(0));
  CHECK(H[2].is_free(1));

  auto T = standard_surface(1, 0);
  PolygonSet P;
  P.num_vertices = T.num_vertices();
  std::map<int, int> ed;
  for (int d = 0; d < T.num_darts(); ++d) {
    int e = T.edge_of(d);
    if (!ed.count(e)) {
      ed[e] = static_cast<int>(P.edges.size());
      P.edges.push_back({T.tail(e), T.head(e)});
    }
  }
  for (auto& f : T.faces()) {
    std::vector<int> s;
    for (int d : f) s.push_back(2 * ed[T.edge_of(d)] + (d == T.edge_of(d) ? 0 : 1));
    P.faces.push_back(s);
  }
  auto RT = cw_from_realization(skeleton_of(P), {}, {});
  auto HT = homology_all(RT.complex);
  CHECK(HT[1].is_free(2));
  CHECK(HT[2].is_free(1));
  CHECK_THROWS_AS(homology(RT.complex, 4), TopologyError);
}

TEST_CASE("torsion appears") {
  // Moore space: one vertex, one loop, one disk wrapped three times
  Skeleton W;
  W.cells.num_vertices = 1;
  W.cells.edges = {{0, 0}};
  auto R = cw_from_realization(W, {{0, 0, 0}}, {});
  auto H = homology_all(R.complex);
  CHECK(H[1].rank == 0);
  CHECK(H[1].torsion == std::vector<BigInt>{3});
  CHECK(H[1].str() == "Z/3");
}
