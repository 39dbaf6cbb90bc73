#include "doctest.h"
#include "trisect/corpus.hpp"
#include "trisect/ptri.hpp"

using namespace trisect;

namespace {

void require_valid(const PseudoTrisectionDiagram& D) {
  auto r = validate_ptri(D);
  INFO(r.first_failure());
  REQUIRE(r.ok);
}

std::string join3(const std::array<int, 3>& a) {
  return std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]);
}

int sum(const std::array<int, 3>& a) { return a[0] + a[1] + a[2]; }

}  // namespace

TEST_CASE("corpus pseudo-trisections match their recorded invariants") {
  for (auto D : {corpus::trivial_b4(), corpus::s1xb3(), corpus::s2xd2(), corpus::cp2_minus_b4(), corpus::two_s2xd2()}) {
    INFO(D.name);
    require_valid(D);
    auto I = indices_4(D);
    CHECK(std::to_string(I.g) == D.meta.at("expect.g"));
    CHECK(join3(I.k) == D.meta.at("expect.k"));
    CHECK(join3(I.y) == D.meta.at("expect.y"));
    CHECK(std::to_string(I.b) == D.meta.at("expect.b"));
    CHECK(std::to_string(I.chi) == D.meta.at("expect.chi"));
    CHECK(std::to_string(I.c) == D.meta.at("expect.c"));
    CHECK(std::to_string(I.c_pair) == D.meta.at("expect.c_pair"));
    // the index identities, recomputed from the raw counts
    CHECK((sum(I.y) + I.b) % 2 == 1);
    CHECK(2 * I.chi == 2 * I.g - 2 * sum(I.k) + sum(I.y) + I.b + 1);
    CHECK(I.c == I.g + sum(I.p) + 2 * I.b - 2);
    CHECK(I.c_pair == I.c + I.c_boundary);
    for (int i = 0; i < 3; ++i) CHECK(I.h[i] == I.g + I.p[i] + I.b - 1);
    // the boundary is a triple Heegaard diagram with the same y and b
    auto Y = restrict_boundary(D);
    auto r = validate_triheeg(Y);
    CHECK(r.ok);
    CHECK(indices_3(Y).y == I.y);
    CHECK(complexity_3(Y) == I.c_boundary);
  }
}

TEST_CASE("validation info reports k") {
  auto r = validate_ptri(corpus::s1xb3());
  REQUIRE(r.ok);
  CHECK(r.info.front() == "k=1,1,0");
}

TEST_CASE("an extra alpha curve is rejected") {
  auto D = corpus::s2xd2();
  D.fam[fam_alpha(1)].push_back(D.fam[fam_delta(1)][0]);
  CHECK_FALSE(validate_ptri(D).ok);
  auto B = corpus::trivial_b4();
  B.fam[fam_alpha(1)].push_back(Walk{{0, 1}, true});
  CHECK_FALSE(validate_ptri(B).ok);
}

TEST_CASE("torus stabilisations") {
  for (auto D : {corpus::trivial_b4(), corpus::s2xd2()}) {
    auto I0 = indices_4(D);
    for (auto type : {TorusType::I, TorusType::II})
      for (int j = 1; j <= 3; ++j) {
        INFO(D.name, " type ", type == TorusType::I ? "I" : "II", " j=", j);
        auto R = torus_stabilize(D, type, j);
        require_valid(R);
        auto I1 = indices_4(R);
        CHECK(I1.c == I0.c + 1);
        CHECK(I1.chi == I0.chi);
        auto k = I0.k;
        k[torus_k_sector(type, j) - 1] += 1;
        CHECK(I1.k == k);
        auto y = I0.y;
        if (type == TorusType::I) {
          y[j - 1] += 1;
          y[cyc(j - 1) - 1] += 1;
          CHECK(I1.g == I0.g);
        } else {
          CHECK(I1.g == I0.g + 1);
        }
        CHECK(I1.y == y);
      }
  }
  auto B = corpus::trivial_b4();
  CHECK_THROWS_AS(torus_stabilize(B, TorusType::II, 1, B.faces_of(1).front()), TopologyError);
}

TEST_CASE("band stabilisation and its boundary") {
  auto D = torus_stabilize(corpus::trivial_b4(), TorusType::I, 2);
  auto I0 = indices_4(D);
  auto arcs = neat_arcs(D, 2, 2);
  REQUIRE(!arcs.empty());
  for (auto& arc : arcs) {
    auto S = band_stabilize_at(D, 2, arc);
    require_valid(S.D);
    auto I1 = indices_4(S.D);
    CHECK(I1.c == I0.c + 1);
    CHECK(I1.chi == I0.chi);
    auto k = I0.k;
    k[2] += 1;  // sector i+1 = 3 gains an S1 x S2
    CHECK(I1.k == k);
    CHECK(I1.y[2] == I0.y[2] + 1);
    CHECK(std::abs(I1.b - I0.b) == 1);
    // the boundary saw an ordinary stabilisation along the same arc
    auto Dm = D;
    Dm.fam[fam_delta(1)].push_back(arc);  // carried through the restriction
    auto Y0 = restrict_boundary(Dm), Y1 = restrict_boundary(S.D);
    Walk same = Y0.fam[fam_delta(1)].back();
    Y0.fam[fam_delta(1)].pop_back();
    auto Ys = stabilize_3(Y0, 2, same);
    CHECK(indices_3(Y1) == indices_3(Ys));
    CHECK(realize_homology_3(Y1) == realize_homology_3(Ys));
  }
  CHECK_THROWS_WITH_AS(band_stabilize(corpus::trivial_b4(), 1, Walk{{0}, false}), doctest::Contains("Arc"), TopologyError);
}

TEST_CASE("shifting a boundary stabilisation inward") {
  auto D = torus_stabilize(corpus::trivial_b4(), TorusType::I, 2);
  auto arcs = neat_arcs(D, 2, 1);
  REQUIRE(!arcs.empty());
  auto S = band_stabilize_at(D, 2, arcs[0]);
  auto I1 = indices_4(S.D);
  auto T = boundary_stab_shift(S.D, S.site);
  require_valid(T);
  auto I2 = indices_4(T);
  CHECK(I2.c == I1.c);
  CHECK(I2.c_boundary == I1.c_boundary - 1);
  CHECK(I2.k == I1.k);
  CHECK(I2.chi == I1.chi);
  auto I0 = indices_4(D);
  CHECK(I2.b == I0.b);
  CHECK(I2.y == I0.y);
  CHECK(realize_homology_3(restrict_boundary(T)) == realize_homology_3(restrict_boundary(D)));

  // a site that does not describe the band is refused
  BandSite bad = S.site;
  bad.next_faces.pop_back();
  CHECK_THROWS_WITH_AS(boundary_stab_shift(S.D, bad), doctest::Contains("PatternNotFound"), TopologyError);
  bad = S.site;
  bad.i = cyc(bad.i + 1);
  CHECK_THROWS_WITH_AS(boundary_stab_shift(S.D, bad), doctest::Contains("PatternNotFound"), TopologyError);
}

TEST_CASE("boundary connected sum") {
  auto A = corpus::s2xd2();
  auto R = boundary_connect_sum_4(A, A, 0, 0, 0);
  require_valid(R);
  auto I = indices_4(R);
  CHECK(I.c == 2);
  CHECK(I.b == 1);
  CHECK(I.chi == 3);
  auto B = boundary_connect_sum_4(corpus::trivial_b4(), corpus::cp2_minus_b4(), 0, 0, 1);
  require_valid(B);
  CHECK(indices_4(B) == indices_4(corpus::cp2_minus_b4()));
}

TEST_CASE("handleslides in the pseudo-trisection") {
  auto D = torus_stabilize(torus_stabilize(corpus::trivial_b4(), TorusType::II, 1), TorusType::II, 2);
  auto I0 = indices_4(D);
  int slides = 0;
  for (int f = 0; f < 6 && slides < 2; ++f)
    for (int s = 0; s < static_cast<int>(D.fam[f].size()); ++s)
      for (int o = 0; o < static_cast<int>(D.fam[f].size()); ++o) {
        if (s == o) continue;
        auto g = find_guide(D, f, s, o);
        if (!g) continue;
        auto R = handleslide_4(D, f, s, o, *g);
        require_valid(R);
        CHECK(indices_4(R) == I0);
        ++slides;
      }
  CHECK(slides > 0);
}

TEST_CASE("orientation from one binding component") {
  auto D = corpus::two_s2xd2();
  auto P = orient_ptri(D, 0, 1), M = orient_ptri(D, 0, -1), Q = orient_ptri(D, 1, 1);
  for (size_t f = 0; f < D.cx.faces.size(); ++f) CHECK(P.face_sign[f] == -M.face_sign[f]);
  CHECK(P.face_sign == Q.face_sign);
  CHECK(P.sectors == M.sectors);
  CHECK(P.sectors[0].second == "Y_1 + H_1 - H_2");
  CHECK(P.balls[0].second == std::array<int, 2>{kCentral, 1});
  CHECK_THROWS_AS(orient_ptri(D, 2, 1), TopologyError);
}

TEST_CASE("shift round trip on every sector") {
  for (int i = 1; i <= 3; ++i) {
    INFO("i=", i);
    auto D = torus_stabilize(corpus::s2xd2(), TorusType::I, i);
    auto arcs = neat_arcs(D, i, 1, 7);
    REQUIRE(!arcs.empty());
    auto S = band_stabilize_at(D, i, arcs[0]);
    auto T = boundary_stab_shift(S.D, S.site);
    require_valid(T);
    auto I1 = indices_4(S.D), I2 = indices_4(T);
    CHECK(I2.c == I1.c);
    CHECK(I2.c_boundary == I1.c_boundary - 1);
    CHECK(I2.k == I1.k);
  }
}
