#include <functional>
#include <set>

#include "doctest.h"
#include "trisect/link.hpp"
#include "trisect/surfmap.hpp"

using namespace trisect;

namespace {

Laurent t_half(std::initializer_list<std::pair<int, long long>> terms) {
  Laurent p;
  for (auto [e, c] : terms) p += Laurent::monomial(e, c);
  return p;
}

// Independent bracket: states visited from the top down, loops counted by
// walking the smoothed label graph.
Laurent bracket_oracle(const PDCode& pd) {
  const int n = static_cast<int>(pd.x.size());
  Laurent d = Laurent::monomial(2, -1) + Laurent::monomial(-2, -1);
  Laurent total;
  for (long long s = (1LL << n) - 1; s >= 0; --s) {
    std::map<int, std::vector<int>> adj;
    int e = 0;
    for (int c = 0; c < n; ++c) {
      auto x = pd.x[c];
      bool a = ((s >> c) & 1) != 0;
      e += a ? 1 : -1;
      auto link = [&](int p, int q) {
        adj[p].push_back(q);
        adj[q].push_back(p);
      };
      if (a) {
        link(x[0], x[1]);
        link(x[2], x[3]);
      } else {
        link(x[0], x[3]);
        link(x[1], x[2]);
      }
    }
    std::set<int> seen;
    int loops = pd.free_loops;
    for (auto& [l, nb] : adj) {
      if (seen.count(l)) continue;
      ++loops;
      std::vector<int> stack{l};
      seen.insert(l);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
          if (seen.insert(w).second) stack.push_back(w);
      }
    }
    Laurent term = Laurent::monomial(e);
    for (int k = 1; k < loops; ++k) term = term * d;
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
  auto p = Laurent::monomial(1) + Laurent::monomial(-1, 2);
  CHECK((p * p).str() == "A^2 + 4 + 4*A^-2");
  CHECK((p + (-p)).is_zero());
  CHECK(p.mirrored().str() == "2*A + A^-1");
}

TEST_CASE("reference diagrams are planar and valid") {
  for (auto L : {unknot_diagram(), hopf_link(1), hopf_link(-1), trefoil_diagram(1), trefoil_diagram(-1),
                 figure_eight_diagram()}) {
    INFO(L.name);
    CHECK_NOTHROW(check_link(L));
    CHECK(is_planar(L));
  }
  // a virtual trefoil: one sign flipped
  auto V = trefoil_diagram(-1);
  V.signs[0] = 1;
  CHECK_FALSE(is_planar(V));
}

TEST_CASE("bracket and jones of small knots") {
  CHECK(kauffman_bracket(unknot_diagram()) == Laurent::monomial(0));
  // left-handed trefoil: t^-1 + t^-3 - t^-4, in units of t^(1/2)
  auto lht = t_half({{-2, 1}, {-6, 1}, {-8, -1}});
  CHECK(jones(trefoil_diagram(-1)) == lht);
  CHECK(jones(trefoil_diagram(1)) == lht.mirrored());
  CHECK(jones(trefoil_diagram(-1)) != jones(trefoil_diagram(1)));
  CHECK(jones_string(lht) == "t^-1 + t^-3 - t^-4");
  CHECK(jones(figure_eight_diagram()) == t_half({{4, 1}, {2, -1}, {0, 1}, {-2, -1}, {-4, 1}}));
  // positive Hopf link: -t^(1/2) - t^(5/2)
  CHECK(jones(hopf_link(1)) == t_half({{1, -1}, {5, -1}}));
  CHECK(jones_string(jones(hopf_link(1))) == "-t^(5/2) - t^(1/2)");
  // two-component unlink
  LinkDiagram U;
  U.components = {{}, {}};
  CHECK(kauffman_bracket(U) == Laurent::monomial(2, -1) + Laurent::monomial(-2, -1));
}

TEST_CASE("hopf bracket matches the reversed state enumeration") {
  for (int s : {1, -1}) {
    auto pd = pd_code(hopf_link(s));
    CHECK(bracket_pd(pd) == bracket_oracle(pd));
  }
}

TEST_CASE("skein relation at every crossing") {
  for (auto L : {hopf_link(1), trefoil_diagram(-1), trefoil_diagram(1), figure_eight_diagram()}) {
    auto pd = pd_code(L);
    for (int k = 0; k < static_cast<int>(pd.x.size()); ++k) {
      auto a = bracket_oracle(smooth(pd, k, true)), b = bracket_oracle(smooth(pd, k, false));
      CHECK(bracket_pd(pd) == Laurent::monomial(1) * a + Laurent::monomial(-1) * b);
    }
  }
}

TEST_CASE("writhe and crossing bound") {
  CHECK(writhe(trefoil_diagram(-1)) == -3);
  CHECK(writhe(figure_eight_diagram()) == 0);
  CHECK_THROWS_WITH_AS(kauffman_bracket(trefoil_diagram(1), 2), doctest::Contains("TooManyCrossings"), TopologyError);
}

TEST_CASE("linking numbers") {
  CHECK(linking_number(hopf_link(1), 0, 1) == 1);
  CHECK(linking_number(hopf_link(-1), 1, 0) == -1);
  LinkDiagram split;
  split.components = {{}, {}};
  CHECK(linking_number(split, 0, 1) == 0);
  CHECK_THROWS_WITH_AS(linking_number(hopf_link(1), 1, 1), doctest::Contains("SameComponent"), TopologyError);
}

TEST_CASE("gauss code round trip") {
  for (auto L : {unknot_diagram(), hopf_link(-1), trefoil_diagram(-1), figure_eight_diagram()}) {
    auto text = gauss_code(L);
    auto R = parse_gauss_code(text);
    CHECK(R.components == L.components);
    CHECK(R.signs == L.signs);
  }
  CHECK(gauss_code(trefoil_diagram(-1)) == "O1- U2- O3- U1- O2- U3-");
  CHECK(gauss_code(hopf_link(1)) == "O1+ U2+ | U1+ O2+");
  CHECK_THROWS_WITH_AS(parse_gauss_code("O1+ U1-"), doctest::Contains("SyntaxError"), TopologyError);
  CHECK_THROWS_WITH_AS(parse_gauss_code("O1+ X2"), doctest::Contains("column 5"), TopologyError);
  CHECK_THROWS_WITH_AS(parse_gauss_code("O1+ O1+"), doctest::Contains("MalformedLink"), TopologyError);
}

TEST_CASE("malformed link data") {
  LinkDiagram L;
  L.components = {{1, 1}};
  L.signs = {1};
  CHECK_THROWS_AS(check_link(L), TopologyError);
  auto H = hopf_link(1);
  H.partition = {"K"};
  CHECK_THROWS_AS(check_link(H), TopologyError);
}

TEST_CASE("simplify removes kinks and bigons and keeps the jones polynomial") {
  struct Case {
    std::string code;
    int crossings;
  };
  for (auto [code, crossings] : std::vector<Case>{{"O1+ U1+", 0},
                                                 {"O1- U1-", 0},
                                                 {"O1+ O2- | U1+ U2-", 0},
                                                 {"O1- U2- O3- U1- O2- U3- O4+ U4+", 3},
                                                 {"O1- U2- O3- U1- O2- U3- U4- O4-", 3},
                                                 {"O1+ U2+ O3+ U1+ O2+ U3+ O4- U4-", 3}}) {
    INFO(code);
    auto L = parse_gauss_code(code);
    REQUIRE(is_planar(L));
    auto S = simplify(L);
    CHECK(S.num_crossings() == crossings);
    CHECK(S.components.size() == L.components.size());
    CHECK(is_planar(S));
    CHECK(jones(S) == jones(L));
  }
  // already reduced diagrams come back unchanged
  for (auto L : {trefoil_diagram(-1), figure_eight_diagram(), hopf_link(1)}) CHECK(simplify(L).num_crossings() == L.num_crossings());
  // non-planar input is left alone
  auto V = parse_gauss_code("O1+ U2- | U1+ O2-");
  REQUIRE_FALSE(is_planar(V));
  CHECK(simplify(V) == V);
}
