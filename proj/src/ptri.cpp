#include "trisect/ptri.hpp"

#include <algorithm>
#include <deque>

namespace trisect {

namespace {

const std::vector<int> kAllTags{0, 1, 2, 3};

template <class T>
T as(Diagram D) {
  T out;
  static_cast<Diagram&>(out) = std::move(D);
  return out;
}

[[noreturn]] void no_pattern(const std::string& m) { throw TopologyError("PatternNotFound", m); }

std::string join3(const std::array<int, 3>& a) {
  return std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]);
}

}  // namespace

SectorSpec sector_spec(int i) {
  const int j = cyc(i + 1);
  return {{kCentral, i, j},
          {fam_alpha(i), fam_delta(i), fam_alpha(j)},
          {BallSpec{kCentral, i}, BallSpec{i, j}, BallSpec{j, kCentral}}};
}

std::array<int, 3> sector_k(const PseudoTrisectionDiagram& D) {
  std::array<int, 3> k{};
  for (int i = 1; i <= 3; ++i) {
    auto h = sector_homology(D, sector_spec(i));
    if (!(h[0].is_free(1) && h[3].is_free(1) && h[1].torsion.empty() && h[1] == h[2]))
      throw TopologyError("InconsistentIndices", "sector " + std::to_string(i) + " is not a homology #^k S1 x S2 (H1 = " +
                                                     h[1].str() + ")");
    k[i - 1] = h[1].rank;
  }
  return k;
}

CheckReport validate_ptri(const PseudoTrisectionDiagram& D) {
  CheckReport rep;
  try {
    check_surfaces(D, kAllTags, rep);
    if (!rep.ok) return rep;
    for (int f = 0; f < kFamilies; ++f)
      if ((fam_kind(f) == kTau || fam_kind(f) == kLink) && !D.fam[f].empty()) {
        rep.fail("unexpected family " + family_name(f) + " in a pseudo-trisection diagram");
        return rep;
      }
    for (int i = 1; i <= 3; ++i)
      for (int f : {fam_alpha(i), fam_delta(i)}) {
        check_family(D, f, rep);
        if (!rep.ok) return rep;
      }
    auto k = sector_k(D);
    rep.info.push_back("k=" + join3(k));
  } catch (const TopologyError& e) {
    rep.fail(e.what());
  }
  return rep;
}

TrisectionIndices4 indices_4(const PseudoTrisectionDiagram& D) {
  TrisectionIndices4 I;
  I.g = surface_genus(D, kCentral);
  I.b = binding_count(D, kCentral);
  for (int i = 1; i <= 3; ++i) {
    I.p[i - 1] = surface_genus(D, i);
    I.y[i - 1] = static_cast<int>(D.fam[fam_delta(i)].size());
    I.h[i - 1] = static_cast<int>(D.fam[fam_alpha(i)].size());
  }
  I.k = sector_k(D);
  int sy = 0, sk = 0, sp = 0;
  for (int i = 0; i < 3; ++i) {
    if (I.h[i] != I.g + I.p[i] + I.b - 1) throw TopologyError("InconsistentIndices", "h_i != g + p_i + b - 1");
    if (I.y[i] != I.p[i] + I.p[(i + 1) % 3] + I.b - 1) throw TopologyError("InconsistentIndices", "y_i != p_i + p_{i+1} + b - 1");
    sy += I.y[i];
    sk += I.k[i];
    sp += I.p[i];
  }
  if ((sy + I.b) % 2 == 0) throw TopologyError("InconsistentIndices", "|y| + b is even");
  I.chi = I.g - sk + (sy + I.b + 1) / 2;
  I.c = I.g + sp + 2 * I.b - 2;
  if (I.c != I.chi + sk - 1) throw TopologyError("InconsistentIndices", "c != chi + |k| - 1");
  I.c_boundary = sy;
  I.c_pair = I.c + sy;
  return I;
}

TripleHeegaardDiagram restrict_boundary(const PseudoTrisectionDiagram& D) {
  Diagram R;
  R.cx.num_vertices = D.cx.num_vertices;
  R.cx.edges = D.cx.edges;
  for (size_t f = 0; f < D.cx.faces.size(); ++f)
    if (D.face_tag[f] != kCentral) R.add_face(D.face_tag[f], D.cx.faces[f]);
  for (int i = 1; i <= 3; ++i) R.fam[fam_delta(i)] = D.fam[fam_delta(i)];
  R.name = D.name.empty() ? "" : D.name + "_boundary";
  compact(R);
  return as<TripleHeegaardDiagram>(std::move(R));
}

// ---------------------------------------------------------------------------
// Torus stabilisation

int torus_k_sector(TorusType type, int j) { return type == TorusType::I ? cyc(j - 1) : cyc(j + 1); }

PseudoTrisectionDiagram torus_stabilize(const PseudoTrisectionDiagram& D, TorusType type, int j, int face) {
  if (j < 1 || j > 3) throw TopologyError("InvalidSite", "sector index must be 1..3");
  const int tag = type == TorusType::I ? j : kCentral;
  if (face < 0) {
    auto fs = D.faces_of(tag);
    if (fs.empty()) throw TopologyError("InvalidSite", "surface has no faces");
    face = fs.front();
  }
  if (face >= static_cast<int>(D.cx.faces.size()) || D.face_tag[face] != tag)
    throw TopologyError("InvalidSite", "face " + std::to_string(face) + " is not on the stabilised surface");
  PseudoTrisectionDiagram R = D;
  auto g = attach_handle(R, face);
  if (type == TorusType::I) {
    R.fam[fam_alpha(j)].push_back(handle_meridian(R, g, 1));
    R.fam[fam_delta(j - 1)].push_back(handle_meridian(R, g, 2));
    R.fam[fam_delta(j)].push_back(handle_longitude(R, g, 1));
  } else {
    R.fam[fam_alpha(j)].push_back(handle_longitude(R, g, 1));
    R.fam[fam_alpha(j + 1)].push_back(handle_meridian(R, g, 1));
    R.fam[fam_alpha(j - 1)].push_back(handle_meridian(R, g, 2));
  }
  return R;
}

// ---------------------------------------------------------------------------
// Band stabilisation

BandStabilization band_stabilize_at(const PseudoTrisectionDiagram& D, int i, const Walk& arc) {
  for (int f = 0; f < kFamilies; ++f)
    if ((fam_kind(f) == kTau || fam_kind(f) == kLink) && !D.fam[f].empty())
      throw TopologyError("InvalidSite", "band stabilisation of a diagram with shadow curves");
  auto r = band_surgery(D, i, arc, true);
  return {as<PseudoTrisectionDiagram>(std::move(r.D)), r.site};
}

PseudoTrisectionDiagram band_stabilize(const PseudoTrisectionDiagram& D, int i, const Walk& arc) {
  return band_stabilize_at(D, i, arc).D;
}

// ---------------------------------------------------------------------------
// Shifting a boundary stabilisation to the interior

namespace {

using VPair = std::pair<int, int>;
VPair vkey(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// One band copy: a disk whose boundary alternates binding runs (the long
// sides, shared by all copies) and short runs.
struct BandCopy {
  std::vector<int> faces;
  std::set<int> verts, edges, inner_edges, inner_verts;
  std::set<int> long_edges, long_verts, short_edges, short_inner, corners;
  std::map<VPair, int> by_ends;              // endpoints -> edge
  std::map<int, std::vector<int>> faces_at;  // edge -> band faces using it
};

BandCopy read_band(const Diagram& D, const EdgeUse& U, const std::vector<int>& faces, int tag, const std::string& what) {
  BandCopy B;
  if (faces.empty()) no_pattern(what + " is empty");
  for (int f : faces) {
    if (f < 0 || f >= static_cast<int>(D.cx.faces.size()) || D.face_tag[f] != tag)
      no_pattern(what + ": face " + std::to_string(f) + " is not on surface " + std::to_string(tag));
    B.faces.push_back(f);
  }
  if (std::set<int>(faces.begin(), faces.end()).size() != faces.size()) no_pattern(what + " repeats a face");
  SurfaceBuild S;
  try {
    S = build_surface(faces_subset(D, faces));
  } catch (const TopologyError& e) {
    no_pattern(what + ": " + e.what());
  }
  auto k = classify_surface(S.surface);
  if (k.genus != 0 || k.boundary_count != 1 || k.component_count != 1) no_pattern(what + " is not a disk");
  std::vector<int> circ;
  for (int d : S.surface.boundary[0].darts) circ.push_back(S.dart_side[d]);
  auto bind = [&](int s) { return U.count[s >> 1].size() > 1; };
  const int n = static_cast<int>(circ.size());
  int start = -1;
  for (int j = 0; j < n; ++j)
    if (bind(circ[j]) && !bind(circ[(j + n - 1) % n])) {
      start = j;
      break;
    }
  if (start < 0) no_pattern(what + " has no binding side");
  std::rotate(circ.begin(), circ.begin() + start, circ.end());
  std::vector<std::pair<bool, std::vector<int>>> runs;
  for (int s : circ) {
    if (runs.empty() || runs.back().first != bind(s)) runs.push_back({bind(s), {}});
    runs.back().second.push_back(s);
  }
  if (runs.size() != 4) no_pattern(what + " does not meet the binding in two arcs");
  for (int r : {0, 2}) {
    const auto& run = runs[r].second;
    if (run.size() < 2) no_pattern(what + ": a binding side has no interior vertex");
    for (size_t j = 0; j < run.size(); ++j) {
      B.long_edges.insert(run[j] >> 1);
      B.long_verts.insert(D.tail(run[j]));
      B.long_verts.insert(D.head(run[j]));
    }
    B.corners.insert(D.tail(run.front()));
    B.corners.insert(D.head(run.back()));
  }
  for (int r : {1, 3}) {
    const auto& run = runs[r].second;
    for (size_t j = 0; j < run.size(); ++j) {
      B.short_edges.insert(run[j] >> 1);
      if (j > 0) B.short_inner.insert(D.tail(run[j]));
    }
  }
  if (B.corners.size() != 4) no_pattern(what + ": sides share a corner");
  for (int f : faces)
    for (int s : D.cx.faces[f]) {
      const int e = s >> 1, v = D.tail(s);
      B.verts.insert(v);
      if (B.edges.insert(e).second) {
        auto key = vkey(D.cx.edges[e][0], D.cx.edges[e][1]);
        if (B.by_ends.count(key)) no_pattern(what + " has parallel edges");
        B.by_ends[key] = e;
      }
      B.faces_at[e].push_back(f);
      if (!B.long_edges.count(e) && !B.short_edges.count(e)) B.inner_edges.insert(e);
    }
  for (int v : B.verts)
    if (!B.long_verts.count(v) && !B.short_inner.count(v)) B.inner_verts.insert(v);
  return B;
}

// Vertex isomorphism X -> Y fixing the long sides, grown face by face.
std::map<int, int> band_iso(const Diagram& D, const BandCopy& X, const BandCopy& Y) {
  std::map<int, int> m;
  for (int v : X.long_verts) m[v] = v;
  auto cycle = [&](int f) {
    std::vector<int> c;
    for (int s : D.cx.faces[f]) c.push_back(D.tail(s));
    return c;
  };
  // vertex sequence of f starting x0 then x1
  auto from = [&](int f, int x0, int x1) {
    auto c = cycle(f);
    const int n = static_cast<int>(c.size());
    for (int a = 0; a < n; ++a) {
      if (c[a] != x0) continue;
      std::vector<int> out;
      if (c[(a + 1) % n] == x1)
        for (int t = 0; t < n; ++t) out.push_back(c[(a + t) % n]);
      else if (c[(a + n - 1) % n] == x1)
        for (int t = 0; t < n; ++t) out.push_back(c[(a - t + n) % n]);
      else
        continue;
      return out;
    }
    no_pattern("band copies are not isomorphic");
  };
  std::set<int> seen;
  std::deque<std::array<int, 6>> Q;  // fx, fy, x0, x1, y0, y1
  for (int e : X.long_edges) {
    if (!Y.long_edges.count(e)) no_pattern("band copies do not share their binding sides");
    auto [u, v] = D.cx.edges[e];
    Q.push_back({X.faces_at.at(e)[0], Y.faces_at.at(e)[0], u, v, u, v});
  }
  while (!Q.empty()) {
    auto [fx, fy, x0, x1, y0, y1] = Q.front();
    Q.pop_front();
    if (seen.count(fx)) continue;
    seen.insert(fx);
    auto sx = from(fx, x0, x1), sy = from(fy, y0, y1);
    if (sx.size() != sy.size()) no_pattern("band copies are not isomorphic");
    const int n = static_cast<int>(sx.size());
    for (int t = 0; t < n; ++t) {
      auto [it, fresh] = m.emplace(sx[t], sy[t]);
      if (!fresh && it->second != sy[t]) no_pattern("band copies are not isomorphic");
    }
    for (int t = 0; t < n; ++t) {
      int a = sx[t], b = sx[(t + 1) % n], c = sy[t], d = sy[(t + 1) % n];
      int ex = X.by_ends.at(vkey(a, b));
      if (!X.inner_edges.count(ex)) continue;
      auto ity = Y.by_ends.find(vkey(c, d));
      if (ity == Y.by_ends.end() || !Y.inner_edges.count(ity->second)) no_pattern("band copies are not isomorphic");
      const auto& fxs = X.faces_at.at(ex);
      const auto& fys = Y.faces_at.at(ity->second);
      if (fxs.size() != 2 || fys.size() != 2) no_pattern("band copies are not isomorphic");
      int gx = fxs[0] == fx ? fxs[1] : fxs[0];
      int gy = fys[0] == fy ? fys[1] : fys[0];
      if (!seen.count(gx)) Q.push_back({gx, gy, a, b, c, d});
    }
  }
  if (seen.size() != X.faces.size() || X.faces.size() != Y.faces.size() || m.size() != X.verts.size())
    no_pattern("band copies are not isomorphic");
  std::set<int> image;
  for (auto& [x, y] : m) {
    if (!Y.verts.count(y)) no_pattern("band copies are not isomorphic");
    image.insert(y);
  }
  if (image.size() != m.size()) no_pattern("band copies are not isomorphic");
  return m;
}

int side_between(const Diagram& D, const std::map<VPair, int>& table, int u, int v) {
  auto it = table.find(vkey(u, v));
  if (it == table.end()) no_pattern("curve leaves the band copy");
  return 2 * it->second + (D.cx.edges[it->second][0] == u ? 0 : 1);
}

}  // namespace

PseudoTrisectionDiagram boundary_stab_shift(const PseudoTrisectionDiagram& D0, const BandSite& site) {
  const int i = site.i;
  if (i < 1 || i > 3) no_pattern("sector index must be 1..3");
  const int ip1 = cyc(i + 1), ip2 = cyc(i + 2);
  Diagram D = D0;
  EdgeUse U = edge_use(D);
  const BandCopy B1 = read_band(D, U, site.next_faces, ip1, "band copy in sigma_" + std::to_string(ip1));
  const BandCopy B2 = read_band(D, U, site.next2_faces, ip2, "band copy in sigma_" + std::to_string(ip2));
  const BandCopy BC = read_band(D, U, site.central_faces, kCentral, "band copy in sigma_C");
  if (B1.long_edges != BC.long_edges || B2.long_edges != BC.long_edges) no_pattern("band copies do not share their binding sides");
  const auto m1 = band_iso(D, B1, BC), m2 = band_iso(D, B2, BC);
  std::map<int, int> m1inv;
  for (auto& [x, y] : m1) m1inv[y] = x;

  const int fg = fam_delta(ip1), fa = fam_alpha(ip1), fa2 = fam_alpha(ip2);
  auto in_range = [](const std::vector<Walk>& v, int k) { return k >= 0 && k < static_cast<int>(v.size()); };
  if (!in_range(D.fam[fg], site.gamma) || !in_range(D.fam[fa], site.companion_next) || !in_range(D.fam[fa2], site.companion_next2))
    no_pattern("site names a missing curve");

  // which curves may cross which copy
  auto allowed = [&](int f, int k, int e) {
    const bool g = f == fg && k == site.gamma, a = f == fa && k == site.companion_next, a2 = f == fa2 && k == site.companion_next2;
    if (B1.inner_edges.count(e)) return g || a || f == fam_delta(i);
    if (B2.inner_edges.count(e)) return g || a2 || f == fam_delta(ip2);
    if (BC.inner_edges.count(e)) return a || a2 || f == fam_alpha(i);
    return !g && !a && !a2;
  };
  std::set<int> forbidden;
  for (const BandCopy* B : {&B1, &B2, &BC}) {
    forbidden.insert(B->corners.begin(), B->corners.end());
    forbidden.insert(B->short_inner.begin(), B->short_inner.end());
  }
  for (int f = 0; f < kFamilies; ++f)
    for (int k = 0; k < static_cast<int>(D.fam[f].size()); ++k) {
      const Walk& w = D.fam[f][k];
      for (int s : w.sides)
        if (!allowed(f, k, s >> 1)) no_pattern(family_name(f) + " curve " + std::to_string(k) + " does not fit the site");
      for (int v : walk_vertices(D, w))
        if (forbidden.count(v)) no_pattern(family_name(f) + " curve " + std::to_string(k) + " meets a band corner");
    }
  for (int v : D.bridge)
    if (B1.verts.count(v) || B2.verts.count(v) || BC.verts.count(v)) no_pattern("bridge point on a band copy");

  // fresh vertices and edges
  std::set<int> lint;
  for (int v : BC.long_verts)
    if (!BC.corners.count(v)) lint.insert(v);
  std::map<int, int> lc;  // long interior vertex -> copy in sigma_C
  for (int v : lint) lc[v] = D.add_vertex();
  auto via_c = [&](int v) { return lc.count(v) ? lc[v] : v; };
  std::map<int, int> ri, rn;  // BC vertex -> R_i, R_new vertex
  for (int v : BC.verts) {
    if (BC.long_verts.count(v)) {
      ri[v] = v;
      rn[v] = via_c(v);
    } else if (BC.short_inner.count(v)) {
      ri[v] = rn[v] = m1inv.at(v);
    } else {
      ri[v] = D.add_vertex();
      rn[v] = D.add_vertex();
    }
  }
  std::map<VPair, int> ti, tn;  // R_i, R_new edges by endpoints
  std::map<int, int> lce;       // long edge -> sigma_C copy
  for (int e : BC.edges) {
    auto [u, v] = D.cx.edges[e];
    if (BC.long_edges.count(e)) {
      ti[vkey(u, v)] = e;
      lce[e] = D.add_edge(via_c(u), via_c(v));
      tn[vkey(via_c(u), via_c(v))] = lce[e];
    } else if (BC.short_edges.count(e)) {
      int b = B1.by_ends.at(vkey(m1inv.at(u), m1inv.at(v)));
      ti[vkey(ri[u], ri[v])] = b;
      tn[vkey(rn[u], rn[v])] = b;
    } else {
      ti[vkey(ri[u], ri[v])] = D.add_edge(ri[u], ri[v]);
      tn[vkey(rn[u], rn[v])] = D.add_edge(rn[u], rn[v]);
    }
  }
  auto copy_face = [&](int f, const std::map<int, int>& vm, const std::map<VPair, int>& table) {
    std::vector<int> sides;
    const auto& F = D.cx.faces[f];
    for (auto it = F.rbegin(); it != F.rend(); ++it) {
      int u = vm.at(D.head(*it)), v = vm.at(D.tail(*it));
      sides.push_back(side_between(D, table, u, v));
    }
    return sides;
  };
  std::vector<std::vector<int>> faces_i, faces_new;
  for (int f : BC.faces) {
    faces_i.push_back(copy_face(f, ri, ti));
    faces_new.push_back(copy_face(f, rn, tn));
  }

  // curves, computed against the original edges
  auto remap = [&](const Walk& w, auto&& pick) {
    Walk out;
    out.closed = w.closed;
    for (int s : w.sides) out.sides.push_back(pick(s));
    return out;
  };
  auto through = [&](int s, const std::map<int, int>* pre, const std::map<int, int>& vm, const std::map<VPair, int>& table) {
    int u = D.tail(s), v = D.head(s);
    if (pre) {
      u = pre->at(u);
      v = pre->at(v);
    }
    return side_between(D, table, vm.at(u), vm.at(v));
  };
  std::array<std::vector<Walk>, kFamilies> fam = D.fam;
  for (int f = 0; f < kFamilies; ++f)
    for (int k = 0; k < static_cast<int>(fam[f].size()); ++k) {
      const bool a = f == fa && k == site.companion_next, a2 = f == fa2 && k == site.companion_next2;
      fam[f][k] = remap(D.fam[f][k], [&](int s) {
        const int e = s >> 1;
        if (BC.inner_edges.count(e)) return (a || a2) ? s : through(s, nullptr, ri, ti);
        if (B1.inner_edges.count(e)) return a ? through(s, &m1, rn, tn) : through(s, &m1, ri, ti);
        if (B2.inner_edges.count(e)) return a2 ? through(s, &m2, rn, tn) : through(s, &m2, ri, ti);
        return s;
      });
    }
  fam[fg].erase(fam[fg].begin() + site.gamma);

  // rewire sigma_C along the long sides
  for (int f : BC.faces)
    for (int& s : D.cx.faces[f]) {
      const int e = s >> 1;
      if (BC.long_edges.count(e)) s = 2 * lce[e] + (s & 1);
    }
  for (int e : BC.inner_edges)
    for (int& v : D.cx.edges[e]) v = via_c(v);
  // sigma_{i+2} now meets the binding along the short sides of B1
  std::map<int, int> short2;  // B2 short vertex -> B1 short vertex
  for (int v : B2.short_inner) short2[v] = m1inv.at(m2.at(v));
  std::set<int> b2faces(B2.faces.begin(), B2.faces.end());
  std::set<int> touched;
  for (int f : D.faces_of(ip2)) {
    if (b2faces.count(f)) continue;
    for (int& s : D.cx.faces[f]) {
      const int e = s >> 1;
      if (B2.short_edges.count(e)) {
        s = side_between(D, B1.by_ends, m1inv.at(m2.at(D.tail(s))), m1inv.at(m2.at(D.head(s))));
      } else if (short2.count(D.cx.edges[e][0]) || short2.count(D.cx.edges[e][1])) {
        touched.insert(e);
      }
    }
  }
  for (int e : touched)
    for (int& v : D.cx.edges[e])
      if (short2.count(v)) v = short2[v];

  std::set<int> drop(B1.faces.begin(), B1.faces.end());
  drop.insert(B2.faces.begin(), B2.faces.end());
  PolygonSet P;
  std::vector<int> tags;
  for (size_t f = 0; f < D.cx.faces.size(); ++f) {
    if (drop.count(static_cast<int>(f))) continue;
    P.faces.push_back(D.cx.faces[f]);
    tags.push_back(D.face_tag[f]);
  }
  for (auto& F : faces_i) {
    P.faces.push_back(F);
    tags.push_back(i);
  }
  for (auto& F : faces_new) {
    P.faces.push_back(F);
    tags.push_back(kCentral);
  }
  D.cx.faces = std::move(P.faces);
  D.face_tag = std::move(tags);
  D.fam = std::move(fam);
  const int a_index = site.companion_next;
  compact(D);

  // a now lies in sigma_C; give alpha_i a dual to it
  for (int round = 0; round < 3; ++round) {
    std::set<int> avoid;
    for (auto& w : D.fam[fam_alpha(i)])
      for (int v : walk_vertices(D, w)) avoid.insert(v);
    auto mu = find_dual_curve(D, kCentral, i, D.fam[fa][a_index], avoid);
    if (mu) {
      D.fam[fam_alpha(i)].push_back(*mu);
      return as<PseudoTrisectionDiagram>(std::move(D));
    }
    const std::vector<Walk> around{D.fam[fa][a_index]};
    refine_near(D, around, 2);
  }
  no_pattern("no dual curve for the new alpha curve");
}

// ---------------------------------------------------------------------------

PseudoTrisectionDiagram boundary_connect_sum_4(const PseudoTrisectionDiagram& D1, const PseudoTrisectionDiagram& D2, int q1,
                                               int q2, int rotation) {
  auto R = as<PseudoTrisectionDiagram>(boundary_sum(D1, D2, q1, q2, rotation));
  if (!D1.name.empty() && !D2.name.empty()) R.name = D1.name + "_bsum_" + D2.name;
  return R;
}

PseudoTrisectionDiagram handleslide_4(const PseudoTrisectionDiagram& D, int family, int slider, int over, const Walk& guide) {
  return as<PseudoTrisectionDiagram>(handleslide(D, family, slider, over, guide));
}

OrientationAssignment orient_ptri(const PseudoTrisectionDiagram& D, int component, int direction) {
  if (direction != 1 && direction != -1) throw TopologyError("InvalidSite", "direction must be +1 or -1");
  auto circles = binding_circles(D, D.tags());
  if (component < 0 || component >= static_cast<int>(circles.size()))
    throw TopologyError("InvalidSite", "no binding component " + std::to_string(component));
  OrientationAssignment O;
  O.sign = direction;
  O.face_sign.assign(D.cx.faces.size(), direction);
  O.binding_sign.assign(circles.size(), direction);
  for (int i = 1; i <= 3; ++i) O.balls.push_back({"H_" + std::to_string(i), {kCentral, i}});
  for (int i = 1; i <= 3; ++i) O.balls.push_back({"Y_" + std::to_string(i), {i, cyc(i + 1)}});
  for (int i = 1; i <= 3; ++i) {
    std::string a = std::to_string(i), b = std::to_string(cyc(i + 1));
    O.sectors.push_back({"X_" + a, "Y_" + a + " + H_" + a + " - H_" + b});
  }
  return O;
}

}  // namespace trisect
