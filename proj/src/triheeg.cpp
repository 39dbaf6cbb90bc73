#include "trisect/triheeg.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace trisect {

namespace {

const std::vector<int> kSectorTags{1, 2, 3};

SectorSpec boundary_spec() {
  return {{1, 2, 3}, {fam_delta(1), fam_delta(2), fam_delta(3)}, {BallSpec{1, 2}, BallSpec{2, 3}, BallSpec{3, 1}}};
}

[[noreturn]] void invalid_site(const std::string& m) { throw TopologyError("InvalidSite", m); }

}  // namespace

int surface_genus(const Diagram& D, int tag) { return classify_surface(surface_of(D, tag).surface).genus; }

int binding_count(const Diagram& D, int tag) { return classify_surface(surface_of(D, tag).surface).boundary_count; }

void check_surfaces(const Diagram& D, const std::vector<int>& tags, CheckReport& rep) {
  if (D.tags() != tags) {
    rep.fail("expected surfaces on tags " + std::to_string(tags.size()) + " with faces, found " + std::to_string(D.tags().size()));
    return;
  }
  EdgeUse U = edge_use(D);
  std::set<int> bind_v;
  for (size_t e = 0; e < U.count.size(); ++e) {
    const auto& c = U.count[e];
    if (c.empty()) continue;
    if (c.size() == 1) {
      if (c.begin()->second != 2) {
        rep.fail("edge " + std::to_string(e) + " is on the boundary of surface " + std::to_string(c.begin()->first) + " only");
        return;
      }
      continue;
    }
    if (c.size() != tags.size()) {
      rep.fail("edge " + std::to_string(e) + " is shared by some but not all surfaces");
      return;
    }
    std::set<int> dirs;
    for (auto& [t, n] : c) {
      if (n != 1) {
        rep.fail("binding edge " + std::to_string(e) + " used twice by surface " + std::to_string(t));
        return;
      }
      dirs.insert(U.dir[e].at(t));
    }
    if (dirs.size() != 1) {
      rep.fail("surfaces induce opposite orientations on binding edge " + std::to_string(e));
      return;
    }
    for (int v : D.cx.edges[e]) bind_v.insert(v);
  }
  if (bind_v.empty()) {
    rep.fail("surfaces have no common binding");
    return;
  }
  std::map<int, std::set<int>> vtags;
  for (size_t f = 0; f < D.cx.faces.size(); ++f)
    for (int s : D.cx.faces[f]) vtags[D.tail(s)].insert(D.face_tag[f]);
  for (auto& [v, ts] : vtags)
    if (ts.size() > 1 && !bind_v.count(v)) {
      rep.fail("surfaces touch at vertex " + std::to_string(v) + " away from the binding");
      return;
    }
  for (int t : tags) {
    Classification k = classify_surface(surface_of(D, t).surface);
    if (k.component_count != 1) {
      rep.fail("surface " + std::to_string(t) + " is disconnected");
      return;
    }
  }
}

void check_family(const Diagram& D, int f, CheckReport& rep) {
  auto [a, b] = family_surfaces(f);
  EdgeUse U = edge_use(D);
  std::set<int> used;
  const std::string name = family_name(f);
  for (size_t k = 0; k < D.fam[f].size(); ++k) {
    const Walk& w = D.fam[f][k];
    try {
      check_walk(D, w);
    } catch (const TopologyError& e) {
      rep.fail(name + " curve " + std::to_string(k) + ": " + e.what());
      return;
    }
    if (!w.closed) {
      rep.fail(name + " curve " + std::to_string(k) + " is not closed");
      return;
    }
    for (int s : w.sides) {
      const auto& c = U.count[s >> 1];
      bool ok = c.size() == 1 && (c.begin()->first == a || c.begin()->first == b) && c.begin()->second == 2;
      if (!ok) {
        rep.fail(name + " curve " + std::to_string(k) + " leaves the interior of its surfaces at edge " + std::to_string(s >> 1));
        return;
      }
    }
    for (int v : walk_vertices(D, w))
      if (!used.insert(v).second) {
        rep.fail(name + " curves meet at vertex " + std::to_string(v));
        return;
      }
  }
  SurfaceBuild G = glued_pair(D, a, b);
  CurveSystem C;
  C.family = name;
  for (auto& w : D.fam[f]) C.curves.push_back(to_curve(G, w));
  CheckReport r = verify_cut_system(G.surface, C);
  if (!r.ok) rep.fail(name + ": " + r.first_failure());
}

CheckReport validate_triheeg(const TripleHeegaardDiagram& D) {
  CheckReport rep;
  try {
    check_surfaces(D, kSectorTags, rep);
    if (!rep.ok) return rep;
    for (int f = 0; f < kFamilies; ++f)
      if (fam_kind(f) != kDelta && !D.fam[f].empty()) {
        rep.fail("unexpected family " + family_name(f) + " in a triple Heegaard diagram");
        return rep;
      }
    for (int i = 1; i <= 3; ++i) {
      check_family(D, fam_delta(i), rep);
      if (!rep.ok) return rep;
    }
    auto h = realize_homology_3(D);
    if (!(h[0].is_free(1) && h[3].is_free(1))) rep.fail("realization is not a closed connected oriented 3-manifold");
    if (h[1].rank != h[2].rank) rep.fail("realization violates duality: rank H1 != rank H2");
  } catch (const TopologyError& e) {
    rep.fail(e.what());
  }
  return rep;
}

TrisectionIndices3 indices_3(const TripleHeegaardDiagram& D) {
  TrisectionIndices3 I;
  I.b = binding_count(D, 1);
  for (int i = 1; i <= 3; ++i) {
    I.p[i - 1] = surface_genus(D, i);
    I.y[i - 1] = static_cast<int>(D.fam[fam_delta(i)].size());
  }
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, h = (i + 2) % 3;
    if (I.y[i] != I.p[i] + I.p[j] + I.b - 1) throw TopologyError("InconsistentIndices", "y_i != p_i + p_{i+1} + b - 1");
    if (2 * I.p[i] != I.y[h] + I.y[i] - I.y[j] - I.b + 1) throw TopologyError("InconsistentIndices", "p_i does not match y");
  }
  return I;
}

int complexity_3(const TripleHeegaardDiagram& D) {
  auto I = indices_3(D);
  int c = I.y[0] + I.y[1] + I.y[2];
  if (c != 2 * (I.p[0] + I.p[1] + I.p[2]) + 3 * I.b - 3) throw TopologyError("InconsistentIndices", "|y| != 2|p| + 3b - 3");
  return c;
}

std::vector<AbelianGroup> realize_homology_3(const TripleHeegaardDiagram& D) { return sector_homology(D, boundary_spec()); }

// ---------------------------------------------------------------------------
// Orientation and local surgery helpers

void reorient_surface(Diagram& D, int tag) {
  auto fs = D.faces_of(tag);
  PolygonSet P = faces_subset(D, fs);
  orient_polygons(P);
  for (size_t j = 0; j < fs.size(); ++j) D.cx.faces[fs[j]] = P.faces[j];
  EdgeUse U = edge_use(D);
  for (size_t e = 0; e < U.count.size(); ++e) {
    if (U.count[e].size() < 2 || !U.count[e].count(tag)) continue;
    for (auto& [t, d] : U.dir[e]) {
      if (t == tag) continue;
      if (d != U.dir[e].at(tag))
        for (int f : fs) {
          auto& face = D.cx.faces[f];
          std::reverse(face.begin(), face.end());
          for (int& s : face) s ^= 1;
        }
      return;
    }
  }
}

HandleGrid attach_handle(Diagram& D, int face) {
  if (face < 0 || face >= static_cast<int>(D.cx.faces.size())) invalid_site("no face " + std::to_string(face));
  const int tag = D.face_tag[face];
  const std::vector<int> F = D.cx.faces[face];
  std::vector<int> A;
  for (int s : F) A.push_back(D.tail(s));
  if (std::set<int>(A.begin(), A.end()).size() != A.size()) invalid_site("face " + std::to_string(face) + " revisits a vertex");
  constexpr int n = kHandleSize;
  HandleGrid g{};
  for (auto& row : g)
    for (int& v : row) v = D.add_vertex();
  std::map<std::pair<int, int>, int> made;
  auto side = [&](int u, int v) {
    auto it = made.find({std::min(u, v), std::max(u, v)});
    int e;
    if (it == made.end()) {
      e = D.add_edge(u, v);
      made[{std::min(u, v), std::max(u, v)}] = e;
    } else {
      e = it->second;
    }
    return 2 * e + (D.cx.edges[e][0] == u ? 0 : 1);
  };
  // triangulated torus grid minus the square at (n-1, n-1)
  std::vector<std::vector<int>> faces;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == n - 1 && y == n - 1) continue;
      int a = g[x][y], b = g[(x + 1) % n][y], c = g[(x + 1) % n][(y + 1) % n], d = g[x][(y + 1) % n];
      faces.push_back({side(a, b), side(b, c), side(c, a)});
      faces.push_back({side(a, c), side(c, d), side(d, a)});
    }
  const std::array<int, 4> H{g[n - 1][n - 1], g[0][n - 1], g[0][0], g[n - 1][0]};
  const int k = static_cast<int>(A.size());
  int i = 0, j = 0;
  while (i < k || j < 4) {
    bool adv_a = j == 4 || (i < k && (i + 1) * 4 <= (j + 1) * k);
    if (adv_a) {
      faces.push_back({F[i], side(A[(i + 1) % k], H[j % 4]), side(H[j % 4], A[i])});
      ++i;
    } else {
      faces.push_back({side(A[i % k], H[(j + 1) % 4]), side(H[(j + 1) % 4], H[j]), side(H[j], A[i % k])});
      ++j;
    }
  }
  D.cx.faces[face] = faces[0];
  for (size_t m = 1; m < faces.size(); ++m) D.add_face(tag, faces[m]);
  reorient_surface(D, tag);
  return g;
}

Walk handle_meridian(const Diagram& D, const HandleGrid& g, int x) {
  std::vector<int> v;
  for (int y = 0; y < kHandleSize; ++y) v.push_back(g[x][y]);
  return walk_through(D, v, true);
}

Walk handle_longitude(const Diagram& D, const HandleGrid& g, int y) {
  std::vector<int> v;
  for (int x = 0; x < kHandleSize; ++x) v.push_back(g[x][y]);
  return walk_through(D, v, true);
}

Walk handle_diagonal(const Diagram& D, const HandleGrid& g, int offset) {
  std::vector<int> v;
  for (int t = 0; t < kHandleSize; ++t) v.push_back(g[t][(t + offset) % kHandleSize]);
  return walk_through(D, v, true);
}

Diagram boundary_sum(const Diagram& D1, const Diagram& D2, int q1, int q2, int rotation) {
  const auto tags = D1.tags();
  if (D2.tags() != tags) throw TopologyError("LabelMismatch", "diagrams have different surface sets");
  auto c1 = binding_circles(D1, tags);
  auto c2 = binding_circles(D2, tags);
  if (q1 < 0 || q1 >= static_cast<int>(c1.size())) throw TopologyError("LabelMismatch", "no binding component " + std::to_string(q1));
  if (q2 < 0 || q2 >= static_cast<int>(c2.size())) throw TopologyError("LabelMismatch", "no binding component " + std::to_string(q2));
  if (rotation < 0 || rotation > 2) throw TopologyError("LabelMismatch", "rotation must be 0, 1 or 2");
  Diagram R = D1;
  const int vo = D1.cx.num_vertices, eo = static_cast<int>(D1.cx.edges.size());
  auto tag_map = [&](int t) { return t == kCentral ? kCentral : cyc(t - rotation); };
  auto fam_map = [&](int f) { return fam(fam_kind(f), fam_index(f) - rotation); };
  R.cx.num_vertices += D2.cx.num_vertices;
  for (auto& e : D2.cx.edges) R.cx.edges.push_back({e[0] + vo, e[1] + vo});
  for (size_t f = 0; f < D2.cx.faces.size(); ++f) {
    std::vector<int> sides;
    for (int s : D2.cx.faces[f]) sides.push_back(s + 2 * eo);
    R.add_face(tag_map(D2.face_tag[f]), sides);
  }
  for (int f = 0; f < kFamilies; ++f)
    for (auto w : D2.fam[f]) {
      for (int& s : w.sides) s += 2 * eo;
      R.fam[fam_map(f)].push_back(w);
    }
  for (int v : D2.bridge) R.bridge.push_back(v + vo);
  for (auto c : D2.flags) {
    c.vertex += vo;
    c.over_family = fam_map(c.over_family);
    c.under_family = fam_map(c.under_family);
    R.flags.push_back(c);
  }
  const int s1 = c1[q1].sides[0], s2 = c2[q2].sides[0] + 2 * eo;
  const int u1 = R.tail(s1), v1 = R.head(s1), u2 = R.tail(s2), v2 = R.head(s2);
  const int n1 = R.add_edge(u1, v2), n2 = R.add_edge(u2, v1);
  for (int t : tags) {
    int e1 = R.add_edge(u1, v1), e2 = R.add_edge(u2, v2);
    for (int f : R.faces_of(t))
      for (int& s : R.cx.faces[f]) {
        if ((s >> 1) == (s1 >> 1)) s = 2 * e1 + ((s ^ s1) & 1);
        else if ((s >> 1) == (s2 >> 1)) s = 2 * e2 + ((s ^ s2) & 1);
      }
    R.add_face(t, {2 * e1 + 1, 2 * n1, 2 * e2 + 1, 2 * n2});
  }
  compact(R);
  return R;
}

// ---------------------------------------------------------------------------
// Band surgery

namespace {

struct BandNeighbourhood {
  std::vector<int> faces;
  std::vector<int> l1, l2;  // long sides as side lists
  std::set<int> long_vertices, interior, short_edges, long_edges, inner_edges;
};

// The faces of sigma_i around the arc, checked to be a disk whose boundary is
// two binding segments (through p and q) and two long sides.
std::optional<BandNeighbourhood> neighbourhood(const Diagram& D, int i, const Walk& arc, std::string& why) {
  BandNeighbourhood N;
  auto A = walk_vertices(D, arc);
  const int p = A.front(), q = A.back();
  std::set<int> Aset(A.begin(), A.end());
  for (size_t f = 0; f < D.cx.faces.size(); ++f) {
    if (D.face_tag[f] != i) continue;
    for (int s : D.cx.faces[f])
      if (Aset.count(D.tail(s))) {
        N.faces.push_back(static_cast<int>(f));
        break;
      }
  }
  SurfaceBuild B;
  try {
    B = build_surface(faces_subset(D, N.faces));
  } catch (const TopologyError& e) {
    why = e.what();
    return std::nullopt;
  }
  auto k = classify_surface(B.surface);
  if (k.genus != 0 || k.boundary_count != 1 || k.component_count != 1) {
    why = "band neighbourhood is not a disk";
    return std::nullopt;
  }
  EdgeUse U = edge_use(D);
  std::vector<int> circ;
  for (int d : B.surface.boundary[0].darts) circ.push_back(B.dart_side[d]);
  const int n = static_cast<int>(circ.size());
  auto bind = [&](int s) { return U.count[s >> 1].size() > 1; };
  // rotate to start at a binding run
  int start = -1;
  for (int j = 0; j < n; ++j)
    if (bind(circ[j]) && !bind(circ[(j + n - 1) % n])) {
      start = j;
      break;
    }
  if (start < 0) {
    why = "band neighbourhood boundary has no binding run";
    return std::nullopt;
  }
  std::rotate(circ.begin(), circ.begin() + start, circ.end());
  std::vector<std::pair<bool, std::vector<int>>> runs;
  for (int s : circ) {
    if (runs.empty() || runs.back().first != bind(s)) runs.push_back({bind(s), {}});
    runs.back().second.push_back(s);
  }
  if (runs.size() != 4) {
    why = "band neighbourhood meets the binding in " + std::to_string(runs.size() / 2) + " segments";
    return std::nullopt;
  }
  auto middle = [&](const std::vector<int>& r) { return r.size() == 2 ? D.head(r[0]) : -1; };
  if (middle(runs[0].second) == q) std::rotate(runs.begin(), runs.begin() + 2, runs.end());
  if (middle(runs[0].second) != p || middle(runs[2].second) != q) {
    why = "band neighbourhood meets the binding away from the arc endpoints";
    return std::nullopt;
  }
  N.l1 = runs[1].second;
  N.l2 = runs[3].second;
  std::set<int> bverts;
  for (size_t e = 0; e < U.count.size(); ++e)
    if (U.count[e].size() > 1)
      for (int v : D.cx.edges[e]) bverts.insert(v);
  for (auto* l : {&N.l1, &N.l2}) {
    for (size_t j = 0; j < l->size(); ++j) {
      N.long_edges.insert((*l)[j] >> 1);
      N.long_vertices.insert(D.tail((*l)[j]));
      N.long_vertices.insert(D.head((*l)[j]));
      if (j > 0 && bverts.count(D.tail((*l)[j]))) {
        why = "long side of the band touches the binding";
        return std::nullopt;
      }
    }
  }
  for (int r : {0, 2})
    for (int s : runs[r].second) N.short_edges.insert(s >> 1);
  for (int f : N.faces)
    for (int s : D.cx.faces[f]) {
      int v = D.tail(s);
      if (!N.long_vertices.count(v) && v != p && v != q) N.interior.insert(v);
      int e = s >> 1;
      if (!N.long_edges.count(e) && !N.short_edges.count(e)) N.inner_edges.insert(e);
    }
  return N;
}

// Shortest path through the band from the first long side to the second.
std::vector<int> cocore(const Diagram& D, const BandNeighbourhood& N) {
  std::set<int> from, to;
  for (size_t j = 1; j < N.l1.size(); ++j) from.insert(D.tail(N.l1[j]));
  for (size_t j = 1; j < N.l2.size(); ++j) to.insert(D.tail(N.l2[j]));
  std::map<int, std::vector<int>> adj;  // vertex -> sides leaving it
  for (int e : N.inner_edges) {
    adj[D.cx.edges[e][0]].push_back(2 * e);
    adj[D.cx.edges[e][1]].push_back(2 * e + 1);
  }
  std::map<int, int> parent;  // vertex -> side used to reach it
  std::deque<int> Q;
  for (int v : from) {
    parent[v] = -1;
    Q.push_back(v);
  }
  while (!Q.empty()) {
    int v = Q.front();
    Q.pop_front();
    for (int s : adj[v]) {
      int w = D.head(s);
      if (parent.count(w)) continue;
      if (to.count(w)) {
        std::vector<int> path{s};
        for (int x = v; parent[x] >= 0; x = D.tail(parent[x])) path.push_back(parent[x]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!N.interior.count(w)) continue;
      parent[w] = s;
      Q.push_back(w);
    }
  }
  invalid_site("no cocore crosses the band");
}

}  // namespace

BandResult band_surgery(const Diagram& D0, int i, const Walk& arc0, bool central) {
  const auto tags = D0.tags();
  if (i < 1 || i > 3) invalid_site("sector index must be 1..3");
  if (arc0.closed || arc0.sides.empty()) throw TopologyError("InvalidArc", "band moves need a neat arc");
  try {
    check_walk(D0, arc0);
  } catch (const TopologyError& e) {
    throw TopologyError("InvalidArc", e.what());
  }
  const auto bverts = binding_vertices(D0, tags);
  auto av = walk_vertices(D0, arc0);
  const int p = av.front(), q = av.back();
  if (!bverts.count(p) || !bverts.count(q)) throw TopologyError("InvalidArc", "arc endpoints must lie on the binding");
  for (size_t j = 1; j + 1 < av.size(); ++j)
    if (bverts.count(av[j])) throw TopologyError("InvalidArc", "arc interior meets the binding");
  EdgeUse U0 = edge_use(D0);
  for (int s : arc0.sides) {
    const auto& c = U0.count[s >> 1];
    if (!(c.size() == 1 && c.begin()->first == i)) throw TopologyError("InvalidArc", "arc leaves the interior of its surface");
  }
  for (auto& fam : D0.fam)
    for (auto& w : fam)
      for (int v : walk_vertices(D0, w))
        if (v == p || v == q) throw TopologyError("InvalidArc", "arc endpoint lies on a curve");
  SurfaceBuild S = surface_of(D0, i);
  auto k = classify_surface(S.surface);
  if (k.genus == 0 && k.boundary_count == 1) throw TopologyError("DiskSector", "sigma_" + std::to_string(i) + " is a disk");
  CurveSystem cs;
  cs.curves.push_back(to_curve(S, arc0));
  if (classify_surface(cut_along(S.surface, cs)).component_count != 1) throw TopologyError("SeparatingArc", "arc separates its surface");

  Diagram D = D0;
  std::vector<Walk> extra{arc0};
  std::optional<BandNeighbourhood> N;
  std::string why;
  for (int round = 0; round < 3 && !N; ++round) {
    const std::vector<Walk> around = extra;
    refine_near(D, around, 3, &extra);
    N = neighbourhood(D, i, extra[0], why);
  }
  if (!N) invalid_site(why);

  const int ip1 = cyc(i + 1), ip2 = cyc(i + 2);
  std::vector<int> targets{ip1, ip2};
  if (central) targets.push_back(kCentral);
  const std::set<int> band(N->faces.begin(), N->faces.end());
  std::map<int, std::map<int, int>> vmap, emap;
  const int nfaces = static_cast<int>(D.cx.faces.size());
  for (int t : targets) {
    auto& vm = vmap[t];
    auto& em = emap[t];
    for (int v : N->long_vertices) vm[v] = v;
    for (int v : N->interior) vm[v] = D.add_vertex();
    vm[p] = D.add_vertex();
    vm[q] = D.add_vertex();
    for (int e : N->long_edges) em[e] = e;
    auto copy_edge = [&](int e) {
      auto [a, b] = D.cx.edges[e];
      em[e] = D.add_edge(vm.at(a), vm.at(b));
    };
    for (int e : N->inner_edges) copy_edge(e);
    for (int e : N->short_edges) copy_edge(e);
    // the surface's own faces now meet the copy along the old binding
    std::set<int> at_ends;
    for (int f = 0; f < nfaces; ++f) {
      if (D.face_tag[f] != t) continue;
      for (int& s : D.cx.faces[f]) {
        int e = s >> 1;
        if (N->short_edges.count(e)) s = 2 * em[e] + (s & 1);
        else if (D.cx.edges[e][0] == p || D.cx.edges[e][0] == q || D.cx.edges[e][1] == p || D.cx.edges[e][1] == q)
          at_ends.insert(e);
      }
    }
    for (int e : at_ends)
      for (int& v : D.cx.edges[e])
        if (v == p || v == q) v = vm.at(v);
  }
  // family -> surface its band segments move to
  auto target_of = [&](int f) {
    if (f == fam_delta(i)) return ip1;
    if (f == fam_delta(ip2)) return ip2;
    if (central && f == fam_alpha(i)) return kCentral;
    return -1;
  };
  for (int f = 0; f < kFamilies; ++f)
    for (auto& w : D.fam[f])
      for (int& s : w.sides) {
        int e = s >> 1;
        if (N->long_edges.count(e) || N->short_edges.count(e)) invalid_site(family_name(f) + " runs along the band boundary");
        if (!N->inner_edges.count(e)) continue;
        int t = target_of(f);
        if (t < 0) invalid_site(family_name(f) + " crosses the band");
        s = 2 * emap[t][e] + (s & 1);
      }
  const std::vector<int> core = cocore(D, *N);
  auto mapped = [&](int t, bool rev) {
    Walk w;
    w.closed = false;
    for (int s : core) w.sides.push_back(2 * emap[t][s >> 1] + (s & 1));
    return rev ? reversed(w) : w;
  };
  auto join = [&](int t1, int t2) {
    Walk a = mapped(t1, false), b = mapped(t2, true);
    a.sides.insert(a.sides.end(), b.sides.begin(), b.sides.end());
    a.closed = true;
    return a;
  };

  // assemble faces: untouched ones first, then the copies
  PolygonSet P;
  std::vector<int> ftags;
  for (int f = 0; f < nfaces; ++f) {
    if (band.count(f)) continue;
    P.faces.push_back(D.cx.faces[f]);
    ftags.push_back(D.face_tag[f]);
  }
  BandResult out;
  out.site.i = i;
  for (int t : targets) {
    std::vector<int>& ids = t == ip1 ? out.site.next_faces : t == ip2 ? out.site.next2_faces : out.site.central_faces;
    for (int f : N->faces) {
      std::vector<int> sides;
      for (auto it = D.cx.faces[f].rbegin(); it != D.cx.faces[f].rend(); ++it) sides.push_back((2 * emap[t][*it >> 1] + (*it & 1)) ^ 1);
      ids.push_back(static_cast<int>(P.faces.size()));
      P.faces.push_back(std::move(sides));
      ftags.push_back(t);
    }
  }
  D.cx.faces = std::move(P.faces);
  D.face_tag = std::move(ftags);
  D.fam[fam_delta(ip1)].push_back(join(ip1, ip2));
  out.site.gamma = static_cast<int>(D.fam[fam_delta(ip1)].size()) - 1;
  if (central) {
    D.fam[fam_alpha(ip1)].push_back(join(kCentral, ip1));
    D.fam[fam_alpha(ip2)].push_back(join(kCentral, ip2));
    out.site.companion_next = static_cast<int>(D.fam[fam_alpha(ip1)].size()) - 1;
    out.site.companion_next2 = static_cast<int>(D.fam[fam_alpha(ip2)].size()) - 1;
  }
  compact(D);
  out.D = std::move(D);
  return out;
}

std::optional<Walk> find_dual_curve(const Diagram& D, int a, int b, const Walk& w, const std::set<int>& avoid) {
  EdgeUse U = edge_use(D);
  std::map<int, std::vector<int>> adj;
  for (size_t e = 0; e < U.count.size(); ++e) {
    const auto& c = U.count[e];
    if (c.size() != 1) continue;
    int t = c.begin()->first;
    if (t != a && t != b) continue;
    adj[D.cx.edges[e][0]].push_back(static_cast<int>(2 * e));
    adj[D.cx.edges[e][1]].push_back(static_cast<int>(2 * e + 1));
  }
  auto wv = walk_vertices(D, w);
  std::set<int> blocked(avoid.begin(), avoid.end());
  blocked.insert(wv.begin(), wv.end());
  const int n = static_cast<int>(w.sides.size());
  for (int j = 0; j < n; ++j) {
    int s_out = w.sides[j], s_back = w.sides[(j + n - 1) % n] ^ 1;
    int t = U.count[s_out >> 1].begin()->first;
    if (U.count[s_back >> 1].begin()->first != t) continue;  // x sits on the binding
    SurfaceBuild S = surface_of(D, t);
    const auto& M = S.surface;
    int d_out = S.dart(s_out), d_back = S.dart(s_back);
    std::vector<int> left, right;  // sides leaving x
    bool past = false;
    for (int d = M.next[d_out]; d != d_out; d = M.next[d]) {
      if (d == d_back) {
        past = true;
        continue;
      }
      if (M.hole[d]) continue;
      (past ? right : left).push_back(S.dart_side[d]);
    }
    std::map<int, int> first_side;  // left neighbour -> side from x
    std::map<int, int> last_side;   // right neighbour -> side into x
    for (int s : left)
      if (!blocked.count(D.head(s))) first_side.emplace(D.head(s), s);
    for (int s : right)
      if (!blocked.count(D.head(s))) last_side.emplace(D.head(s), s ^ 1);
    for (auto it = first_side.begin(); it != first_side.end();)
      if (last_side.count(it->first)) {
        last_side.erase(it->first);
        it = first_side.erase(it);
      } else {
        ++it;
      }
    std::map<int, int> parent, root;
    std::deque<int> Q;
    for (auto& [v, s] : first_side) {
      parent[v] = -1;
      root[v] = v;
      Q.push_back(v);
    }
    while (!Q.empty()) {
      int v = Q.front();
      Q.pop_front();
      if (last_side.count(v)) {
        std::vector<int> path{last_side[v]};
        for (int y = v; parent[y] >= 0; y = D.tail(parent[y])) path.push_back(parent[y]);
        path.push_back(first_side[root[v]]);
        std::reverse(path.begin(), path.end());
        return Walk{path, true};
      }
      for (int s : adj[v]) {
        int y = D.head(s);
        if (parent.count(y) || blocked.count(y)) continue;
        parent[y] = s;
        root[y] = root[v];
        Q.push_back(y);
      }
    }
  }
  return std::nullopt;
}

std::vector<Walk> neat_arcs(const Diagram& D, int i, int count, unsigned seed) {
  std::vector<Walk> out;
  SurfaceBuild S = surface_of(D, i);
  auto k = classify_surface(S.surface);
  if (k.genus == 0 && k.boundary_count == 1) return out;
  const auto bverts = binding_vertices(D, D.tags());
  std::set<int> on_curve;
  for (auto& fam : D.fam)
    for (auto& w : fam)
      for (int v : walk_vertices(D, w)) on_curve.insert(v);
  EdgeUse U = edge_use(D);
  std::map<int, std::vector<int>> adj;
  for (size_t e = 0; e < U.count.size(); ++e) {
    const auto& c = U.count[e];
    if (c.size() != 1 || c.begin()->first != i) continue;
    adj[D.cx.edges[e][0]].push_back(static_cast<int>(2 * e));
    adj[D.cx.edges[e][1]].push_back(static_cast<int>(2 * e + 1));
  }
  std::vector<int> starts;
  for (auto& [v, ss] : adj)
    if (bverts.count(v) && !on_curve.count(v)) starts.push_back(v);
  if (starts.empty()) return out;
  std::mt19937 rng(seed);
  std::set<std::vector<int>> seen;
  const int budget = 200 * count + 200;
  for (int attempt = 0; attempt < budget && static_cast<int>(out.size()) < count; ++attempt) {
    int v = starts[rng() % starts.size()];
    std::set<int> visited{v};
    Walk w;
    w.closed = false;
    for (int step = 0; step < 4 * D.cx.num_vertices; ++step) {
      std::vector<int> opts;
      for (int s : adj[v]) {
        int h = D.head(s);
        if (visited.count(h)) continue;
        if (bverts.count(h) && (w.sides.empty() || on_curve.count(h))) continue;
        opts.push_back(s);
      }
      if (opts.empty()) break;
      int s = opts[rng() % opts.size()];
      w.sides.push_back(s);
      v = D.head(s);
      visited.insert(v);
      if (bverts.count(v)) break;
    }
    if (w.sides.size() < 2 || !bverts.count(D.head(w.sides.back()))) continue;
    if (!seen.insert(w.sides).second) continue;
    CurveSystem cs;
    cs.curves.push_back(to_curve(S, w));
    if (classify_surface(cut_along(S.surface, cs)).component_count == 1) out.push_back(w);
  }
  return out;
}

std::optional<Walk> find_guide(const Diagram& D, int f, int slider, int over) {
  auto [a, b] = family_surfaces(f);
  EdgeUse U = edge_use(D);
  std::map<int, std::vector<int>> adj;
  for (size_t e = 0; e < U.count.size(); ++e) {
    const auto& c = U.count[e];
    if (c.size() != 1 || (c.begin()->first != a && c.begin()->first != b)) continue;
    adj[D.cx.edges[e][0]].push_back(static_cast<int>(2 * e));
    adj[D.cx.edges[e][1]].push_back(static_cast<int>(2 * e + 1));
  }
  auto sv = walk_vertices(D, D.fam[f][slider]), ov = walk_vertices(D, D.fam[f][over]);
  std::set<int> target(ov.begin(), ov.end()), blocked;
  for (size_t c = 0; c < D.fam[f].size(); ++c)
    for (int v : walk_vertices(D, D.fam[f][c])) blocked.insert(v);
  for (int v : binding_vertices(D, D.tags())) blocked.insert(v);
  std::map<int, int> parent;
  std::deque<int> Q;
  for (int v : sv) {
    parent[v] = -1;
    Q.push_back(v);
  }
  while (!Q.empty()) {
    int v = Q.front();
    Q.pop_front();
    for (int s : adj[v]) {
      int h = D.head(s);
      if (parent.count(h)) continue;
      if (target.count(h)) {
        Walk w{{s}, false};
        for (int x = v; parent[x] >= 0; x = D.tail(parent[x])) w.sides.push_back(parent[x]);
        std::reverse(w.sides.begin(), w.sides.end());
        return w;
      }
      if (blocked.count(h)) continue;
      parent[h] = s;
      Q.push_back(h);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Three-dimensional moves

TripleHeegaardDiagram stabilize_3(const TripleHeegaardDiagram& D, int i, const Walk& arc) {
  if (D.tags() != kSectorTags) invalid_site("not a triple Heegaard diagram");
  TripleHeegaardDiagram R;
  static_cast<Diagram&>(R) = band_surgery(D, i, arc, false).D;
  return R;
}

TripleHeegaardDiagram heegaard_stabilize_3(const TripleHeegaardDiagram& D, int i, int face) {
  if (i < 1 || i > 3) invalid_site("sector index must be 1..3");
  if (face < 0 || face >= static_cast<int>(D.cx.faces.size()) || D.face_tag[face] != i)
    invalid_site("face " + std::to_string(face) + " is not in sigma_" + std::to_string(i));
  TripleHeegaardDiagram R = D;
  auto g = attach_handle(R, face);
  R.fam[fam_delta(i)].push_back(handle_meridian(R, g, 1));
  R.fam[fam_delta(i - 1)].push_back(handle_longitude(R, g, 1));
  return R;
}

Diagram handleslide(const Diagram& D, int f, int slider, int over, const Walk& guide) {
  if (f < 0 || f >= kFamilies || fam_kind(f) == kTau || fam_kind(f) == kLink)
    throw TopologyError("BandObstructed", "handleslides act on alpha and delta families");
  const int n = static_cast<int>(D.fam[f].size());
  if (slider < 0 || over < 0 || slider >= n || over >= n || slider == over)
    throw TopologyError("BandObstructed", "slider and over must be distinct curves of " + family_name(f));
  const auto [a, b] = family_surfaces(f);
  if (guide.closed) throw TopologyError("BandObstructed", "guide must be an arc");
  try {
    check_walk(D, guide);
  } catch (const TopologyError& e) {
    throw TopologyError("BandObstructed", e.what());
  }
  auto gv = walk_vertices(D, guide);
  auto sv = walk_vertices(D, D.fam[f][slider]), ov = walk_vertices(D, D.fam[f][over]);
  if (std::find(sv.begin(), sv.end(), gv.front()) == sv.end() || std::find(ov.begin(), ov.end(), gv.back()) == ov.end())
    throw TopologyError("BandObstructed", "guide must run from the slider to the other curve");
  std::set<int> fam_v;
  for (auto& w : D.fam[f])
    for (int v : walk_vertices(D, w)) fam_v.insert(v);
  for (size_t j = 1; j + 1 < gv.size(); ++j)
    if (fam_v.count(gv[j])) throw TopologyError("BandObstructed", "guide meets a curve of " + family_name(f));
  EdgeUse U = edge_use(D);
  for (int s : guide.sides) {
    const auto& c = U.count[s >> 1];
    if (!(c.size() == 1 && (c.begin()->first == a || c.begin()->first == b)))
      throw TopologyError("BandObstructed", "guide leaves the interior of the surfaces");
  }
  Diagram R = D;
  std::vector<Walk> extra{guide};
  for (int round = 0; round < 2; ++round) {
    const std::vector<Walk> around{R.fam[f][slider], R.fam[f][over], extra[0]};
    refine_near(R, around, 3, &extra);
  }
  const Walk& g = extra[0];
  std::set<int> core;
  for (const Walk* w : std::initializer_list<const Walk*>{&R.fam[f][slider], &R.fam[f][over], &g})
    for (int v : walk_vertices(R, *w)) core.insert(v);
  std::vector<int> nf;
  std::vector<char> rev;
  for (size_t x = 0; x < R.cx.faces.size(); ++x) {
    int t = R.face_tag[x];
    if (t != a && t != b) continue;
    for (int s : R.cx.faces[x])
      if (core.count(R.tail(s))) {
        nf.push_back(static_cast<int>(x));
        break;
      }
  }
  PolygonSet P = faces_subset(R, {});
  for (int x : nf) {
    auto sides = R.cx.faces[x];
    if (R.face_tag[x] == a) {
      std::reverse(sides.begin(), sides.end());
      for (int& s : sides) s ^= 1;
    }
    P.faces.push_back(sides);
  }
  SurfaceBuild B;
  try {
    B = build_surface(P);
  } catch (const TopologyError& e) {
    throw TopologyError("BandObstructed", std::string("neighbourhood of the band is singular: ") + e.what());
  }
  auto k = classify_surface(B.surface);
  if (k.genus != 0 || k.boundary_count != 3 || k.component_count != 1)
    throw TopologyError("BandObstructed", "neighbourhood of slider, guide and curve is not a pair of pants");
  std::set<int> guide_edges;
  auto gvr = walk_vertices(R, g);
  std::set<int> ginner(gvr.begin() + 1, gvr.end() - 1);
  for (int x : nf)
    for (int s : R.cx.faces[x])
      if (ginner.count(R.tail(s))) {
        for (int s2 : R.cx.faces[x]) guide_edges.insert(s2 >> 1);
        break;
      }
  std::optional<Walk> sum;
  for (auto& bc : B.surface.boundary) {
    Walk w;
    for (int d : bc.darts) w.sides.push_back(B.dart_side[d]);
    bool touches = std::any_of(w.sides.begin(), w.sides.end(), [&](int s) { return guide_edges.count(s >> 1) > 0; });
    if (touches) {
      if (sum) throw TopologyError("BandObstructed", "band sum is ambiguous");
      sum = w;
    }
  }
  if (!sum) throw TopologyError("BandObstructed", "band sum not found");
  std::set<int> others;
  for (int c = 0; c < n; ++c)
    if (c != slider)
      for (int v : walk_vertices(R, R.fam[f][c])) others.insert(v);
  for (int v : walk_vertices(R, *sum))
    if (others.count(v)) throw TopologyError("BandObstructed", "band sum meets another curve");
  R.fam[f][slider] = *sum;
  compact(R);
  return R;
}

TripleHeegaardDiagram handleslide_3(const TripleHeegaardDiagram& D, int i, int slider, int over, const Walk& guide) {
  if (i < 1 || i > 3) throw TopologyError("BandObstructed", "sector index must be 1..3");
  TripleHeegaardDiagram R;
  static_cast<Diagram&>(R) = handleslide(D, fam_delta(i), slider, over, guide);
  return R;
}

TripleHeegaardDiagram connected_sum_3(const TripleHeegaardDiagram& D1, const TripleHeegaardDiagram& D2, int q1, int q2,
                                      int rotation) {
  if (D1.tags() != kSectorTags || D2.tags() != kSectorTags) throw TopologyError("LabelMismatch", "not triple Heegaard diagrams");
  TripleHeegaardDiagram R;
  static_cast<Diagram&>(R) = boundary_sum(D1, D2, q1, q2, rotation);
  return R;
}

}  // namespace trisect
