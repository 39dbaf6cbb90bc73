#include "doctest.h"
#include "trisect/corpus.hpp"
#include "trisect/triheeg.hpp"

using namespace trisect;

namespace {

std::string sig(const std::vector<AbelianGroup>& h) {
  std::string s;
  for (size_t n = 0; n < h.size(); ++n) s += (n ? ";" : "") + h[n].str();
  return s;
}

TrisectionIndices3 idx(std::array<int, 3> y, int b) {
  TrisectionIndices3 I;
  I.y = y;
  I.b = b;
  for (int i = 0; i < 3; ++i) I.p[i] = (y[(i + 2) % 3] + y[i] - y[(i + 1) % 3] - b + 1) / 2;
  return I;
}

void require_valid(const TripleHeegaardDiagram& D) {
  auto r = validate_triheeg(D);
  INFO(r.first_failure());
  REQUIRE(r.ok);
}

}  // namespace

TEST_CASE("trivial S3 trisection") {
  auto D = corpus::trivial_s3();
  require_valid(D);
  CHECK(indices_3(D) == idx({0, 0, 0}, 1));
  CHECK(complexity_3(D) == 0);
  CHECK(sig(realize_homology_3(D)) == "Z;0;0;Z");
}

TEST_CASE("corpus triple diagrams match their recorded invariants") {
  for (auto D : {corpus::trivial_s3(), corpus::s1xs2(), corpus::two_s1xs2(), corpus::t3()}) {
    INFO(D.name);
    require_valid(D);
    CHECK(sig(realize_homology_3(D)) == D.meta.at("expect.homology"));
    auto I = indices_3(D);
    CHECK(std::to_string(I.y[0]) + "," + std::to_string(I.y[1]) + "," + std::to_string(I.y[2]) == D.meta.at("expect.y"));
    CHECK(std::to_string(I.b) == D.meta.at("expect.b"));
    CHECK(std::to_string(complexity_3(D)) == D.meta.at("expect.c"));
  }
}

TEST_CASE("T3: homology and a genus-2 pair") {
  auto D = corpus::t3();
  auto h = realize_homology_3(D);
  CHECK(h[1].is_free(3));
  CHECK(h[2].is_free(3));
  // sigma_2 and sigma_3 glue to a genus-2 surface carrying delta_2
  SurfaceBuild G = glued_pair(D, 2, 3);
  CHECK(classify_surface(G.surface).genus == 2);
  CurveSystem C;
  for (auto& w : D.fam[fam_delta(2)]) C.curves.push_back(to_curve(G, w));
  CHECK(verify_cut_system(G.surface, C).ok);
}

TEST_CASE("deleting a curve breaks the cut system") {
  auto D = corpus::t3();
  D.fam[fam_delta(1)].pop_back();
  CHECK_FALSE(validate_triheeg(D).ok);
}

TEST_CASE("two S1xS2: complexity 3, H1 = Z^2") {
  auto D = corpus::two_s1xs2();
  CHECK(complexity_3(D) == 3);
  auto h = realize_homology_3(D);
  CHECK(h[1].is_free(2));
  CHECK(h[2].is_free(2));
}

TEST_CASE("Heegaard stabilisation") {
  auto D = corpus::trivial_s3();
  auto R = heegaard_stabilize_3(D, 1, D.faces_of(1).front());
  require_valid(R);
  CHECK(indices_3(R).y == std::array<int, 3>{1, 0, 1});
  CHECK(complexity_3(R) == 2);
  CHECK(sig(realize_homology_3(R)) == "Z;0;0;Z");

  auto T = corpus::t3();
  for (int i = 1; i <= 3; ++i) {
    auto S = heegaard_stabilize_3(T, i, T.faces_of(i).front());
    require_valid(S);
    auto y0 = indices_3(T).y, y1 = indices_3(S).y;
    y0[i - 1] += 1;
    y0[cyc(i - 1) - 1] += 1;
    CHECK(y1 == y0);
    CHECK(realize_homology_3(S)[1].is_free(3));
  }
  CHECK_THROWS_AS(heegaard_stabilize_3(D, 2, D.faces_of(1).front()), TopologyError);
}

TEST_CASE("stabilisation along a neat arc") {
  auto D = corpus::s1xs2();
  auto arcs = neat_arcs(D, 2, 3);
  REQUIRE(!arcs.empty());
  for (auto& a : arcs) {
    auto R = stabilize_3(D, 2, a);
    require_valid(R);
    auto I0 = indices_3(D), I1 = indices_3(R);
    CHECK(I1.y[0] == I0.y[0]);
    CHECK(I1.y[1] == I0.y[1]);
    CHECK(I1.y[2] == I0.y[2] + 1);
    CHECK(std::abs(I1.b - I0.b) == 1);
    CHECK(complexity_3(R) == complexity_3(D) + 1);
    CHECK(sig(realize_homology_3(R)) == "Z;Z;Z;Z");
  }
  // disks admit no band
  auto S = corpus::trivial_s3();
  CHECK(neat_arcs(S, 1, 3).empty());
}

TEST_CASE("stabilisation on annuli changes b by -1") {
  auto D = corpus::two_s1xs2();
  for (int i = 1; i <= 3; ++i) {
    auto arcs = neat_arcs(D, i, 2);
    REQUIRE(!arcs.empty());
    auto R = stabilize_3(D, i, arcs[0]);
    require_valid(R);
    CHECK(indices_3(R).b == 1);
    CHECK(sig(realize_homology_3(R)) == "Z;Z^2;Z^2;Z");
  }
}

TEST_CASE("separating arcs are rejected") {
  auto D = corpus::s1xs2();
  // a short arc between neighbouring binding vertices cuts off a disk
  auto bv = binding_vertices(D, D.tags());
  bool tried = false;
  for (int f : D.faces_of(2)) {
    const auto& F = D.cx.faces[f];
    for (size_t j = 0; j < F.size() && !tried; ++j) {
      int s1 = F[j], s2 = F[(j + 1) % F.size()];
      int a = D.tail(s1), m = D.head(s1), b = D.head(s2);
      if (bv.count(a) && !bv.count(m) && bv.count(b) && a != b) {
        CHECK_THROWS_WITH_AS(stabilize_3(D, 2, Walk{{s1, s2}, false}), doctest::Contains("SeparatingArc"), TopologyError);
        tried = true;
      }
    }
  }
  CHECK(tried);
}

TEST_CASE("handleslide keeps the cut system") {
  auto T = corpus::t3();
  int slides = 0;
  const int f = fam_delta(1);
  for (int s = 0; s < 3; ++s)
    for (int o = 0; o < 3; ++o) {
      if (s == o) continue;
      auto g = find_guide(T, f, s, o);
      if (!g) continue;
      auto R = handleslide_3(T, 1, s, o, *g);
      require_valid(R);
      CHECK(indices_3(R) == indices_3(T));
      CHECK(realize_homology_3(R)[1].is_free(3));
      ++slides;
    }
  CHECK(slides > 0);
}

TEST_CASE("connected sum") {
  auto A = corpus::s1xs2();
  for (int r = 0; r < 3; ++r) {
    auto R = connected_sum_3(A, A, 0, 0, r);
    require_valid(R);
    CHECK(sig(realize_homology_3(R)) == "Z;Z^2;Z^2;Z");
    auto I = indices_3(R);
    CHECK(I.b == 1);
    CHECK(I.y[0] + I.y[1] + I.y[2] == 4);
  }
  auto S = corpus::trivial_s3();
  auto R = connected_sum_3(S, S, 0, 0, 0);
  require_valid(R);
  CHECK(indices_3(R) == idx({0, 0, 0}, 1));
  auto W = connected_sum_3(corpus::two_s1xs2(), S, 1, 0, 2);
  require_valid(W);
  CHECK(indices_3(W).b == 2);
}
