#include "trisect/surfmap.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

namespace trisect {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    p[a] = b;
    return true;
  }
};

[[noreturn]] void malformed(const std::string& m) { throw TopologyError("MalformedMap", m); }

}  // namespace

// ---------------------------------------------------------------------------
// CombinatorialSurface

void CombinatorialSurface::finalize() {
  const int n = num_darts();
  if (static_cast<int>(next.size()) != n || static_cast<int>(vertex_of.size()) != n)
    malformed("dart tables have different lengths");
  if (hole.empty()) hole.assign(n, 0);
  if (static_cast<int>(hole.size()) != n) malformed("hole table has wrong length");
  if (n % 2 != 0) malformed("odd number of darts");
  for (int d = 0; d < n; ++d) {
    int o = opposite[d];
    if (o < 0 || o >= n || o == d || opposite[o] != d) malformed("opposite is not a fixed-point-free involution at dart " + std::to_string(d));
  }
  prev_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    int x = next[d];
    if (x < 0 || x >= n || prev_[x] != -1) malformed("next is not a permutation at dart " + std::to_string(d));
    prev_[x] = d;
  }
  // vertex ids: constant on rotation orbits, distinct across orbits
  std::map<int, int> orbit_of_vertex;
  std::vector<char> seen(n, 0);
  int orbits = 0;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    int v = vertex_of[d];
    if (orbit_of_vertex.count(v)) malformed("vertex " + std::to_string(v) + " spans two rotation orbits");
    orbit_of_vertex[v] = orbits++;
    for (int x = d; !seen[x]; x = next[x]) {
      seen[x] = 1;
      if (vertex_of[x] != v) malformed("vertex_of not constant on a rotation orbit");
    }
  }
  num_vertices_ = orbits;
  for (auto& [v, o] : orbit_of_vertex)
    if (v < 0 || v >= orbits) malformed("vertex ids are not 0..V-1");
  for (int d = 0; d < n; ++d)
    if (hole[d] && hole[opposite[d]]) malformed("edge with no surface side at dart " + std::to_string(d));

  faces_.clear();
  face_of_.assign(n, -1);
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<std::vector<int>> hole_orbits;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    std::vector<int> orb;
    for (int x = d; !seen[x]; x = phi(x)) {
      seen[x] = 1;
      orb.push_back(x);
      if (hole[x] != hole[d]) malformed("hole flag not constant on a face");
    }
    if (hole[d]) {
      hole_orbits.push_back(orb);
    } else {
      for (int x : orb) face_of_[x] = static_cast<int>(faces_.size());
      faces_.push_back(orb);
    }
  }
  on_boundary_.assign(num_vertices_, 0);
  for (int d = 0; d < n; ++d)
    if (hole[d]) on_boundary_[vertex_of[d]] = 1;

  if (boundary.empty() && !hole_orbits.empty()) {
    // surface-side darts run against the hole orbit
    std::vector<BoundaryCircle> circles;
    for (auto& orb : hole_orbits) {
      BoundaryCircle c;
      for (auto it = orb.rbegin(); it != orb.rend(); ++it) c.darts.push_back(opposite[*it]);
      auto best = std::min_element(c.darts.begin(), c.darts.end(),
                                   [&](int a, int b) { return vertex_of[a] < vertex_of[b]; });
      std::rotate(c.darts.begin(), best, c.darts.end());
      circles.push_back(c);
    }
    std::sort(circles.begin(), circles.end(), [&](const BoundaryCircle& a, const BoundaryCircle& b) {
      return vertex_of[a.darts[0]] < vertex_of[b.darts[0]];
    });
    for (size_t i = 0; i < circles.size(); ++i) circles[i].label = static_cast<int>(i);
    boundary = std::move(circles);
  } else {
    size_t covered = 0;
    for (auto& c : boundary) {
      const int L = static_cast<int>(c.darts.size());
      if (L == 0) malformed("empty boundary circle");
      for (int k = 0; k < L; ++k) {
        int d = c.darts[k];
        if (d < 0 || d >= n || hole[d] || !hole[opposite[d]]) malformed("boundary circle lists a non-boundary dart");
        if (head(d) != tail(c.darts[(k + 1) % L])) malformed("boundary circle is not a cycle");
      }
      covered += L;
    }
    size_t holes = 0;
    for (auto& o : hole_orbits) holes += o.size();
    if (covered != holes) malformed("boundary circles do not cover the hole faces exactly");
  }
}

std::vector<int> CombinatorialSurface::rotation(int v) const {
  int start = -1;
  for (int d = 0; d < num_darts(); ++d)
    if (vertex_of[d] == v) {
      start = d;
      break;
    }
  std::vector<int> out;
  if (start < 0) return out;
  int x = start;
  do {
    out.push_back(x);
    x = next[x];
  } while (x != start);
  return out;
}

int SurfaceBuild::dart(int side) const {
  auto it = side_dart.find(side);
  if (it == side_dart.end()) throw TopologyError("DanglingReference", "side " + std::to_string(side) + " is not in this surface");
  return it->second;
}

// ---------------------------------------------------------------------------
// Building from polygons

SurfaceBuild build_surface(const PolygonSet& P) {
  SurfaceBuild B;
  std::vector<int> side;  // dart -> side code
  std::vector<int> face_succ;
  std::vector<int> face_pred;
  std::map<int, std::vector<int>> uses;  // edge -> darts
  for (const auto& f : P.faces) {
    if (f.empty()) malformed("empty face");
    int base = static_cast<int>(side.size());
    int k = static_cast<int>(f.size());
    for (int j = 0; j < k; ++j) {
      if (P.head(f[j]) != P.tail(f[(j + 1) % k])) malformed("face sides do not chain");
      side.push_back(f[j]);
      face_succ.push_back(base + (j + 1) % k);
      face_pred.push_back(base + (j + k - 1) % k);
      uses[f[j] >> 1].push_back(base + j);
    }
  }
  const int nface_darts = static_cast<int>(side.size());
  std::vector<int> opp(nface_darts, -1);
  std::vector<int> hole_darts;
  for (auto& [e, ds] : uses) {
    if (ds.size() == 1) {
      int h = static_cast<int>(side.size());
      side.push_back(side[ds[0]] ^ 1);
      opp.push_back(ds[0]);
      opp[ds[0]] = h;
      hole_darts.push_back(h);
    } else if (ds.size() == 2) {
      if (side[ds[0]] == side[ds[1]]) malformed("edge " + std::to_string(e) + " used twice in the same direction");
      opp[ds[0]] = ds[1];
      opp[ds[1]] = ds[0];
    } else {
      malformed("edge " + std::to_string(e) + " used by " + std::to_string(ds.size()) + " faces");
    }
  }
  const int n = static_cast<int>(side.size());
  std::vector<int> nxt(n, -1);
  for (int d = 0; d < nface_darts; ++d) nxt[d] = opp[face_pred[d]];
  // close each boundary fan: the hole dart leaving v points back to the fan start
  std::vector<char> is_image(n, 0);
  for (int d = 0; d < nface_darts; ++d) is_image[nxt[d]] = 1;
  std::map<int, std::vector<int>> fan_start, hole_out;
  for (int d = 0; d < nface_darts; ++d)
    if (!is_image[d]) fan_start[P.tail(side[d])].push_back(d);
  for (int h : hole_darts) hole_out[P.tail(side[h])].push_back(h);
  for (auto& [v, hs] : hole_out) {
    auto& fs = fan_start[v];
    if (hs.size() != 1 || fs.size() != 1) malformed("pinched boundary at vertex " + std::to_string(v));
    nxt[hs[0]] = fs[0];
  }
  // one rotation orbit per global vertex
  std::vector<int> orbit(n, -1);
  std::map<int, int> orbit_vertex;
  int norb = 0;
  for (int d = 0; d < n; ++d) {
    if (orbit[d] >= 0) continue;
    for (int x = d; orbit[x] < 0; x = nxt[x]) {
      if (x < 0) malformed("rotation does not close");
      orbit[x] = norb;
    }
    int g = P.tail(side[d]);
    if (orbit_vertex.count(g)) malformed("pinched vertex " + std::to_string(g));
    orbit_vertex[g] = norb++;
  }
  // local vertex ids follow global order
  std::vector<int> orb_local(norb);
  int lv = 0;
  for (auto& [g, o] : orbit_vertex) {
    orb_local[o] = lv++;
    B.vertex_global.push_back(g);
  }
  CombinatorialSurface& S = B.surface;
  S.opposite = opp;
  S.next = nxt;
  S.vertex_of.resize(n);
  S.hole.assign(n, 0);
  for (int d = 0; d < n; ++d) S.vertex_of[d] = orb_local[orbit[d]];
  for (int h : hole_darts) S.hole[h] = 1;
  S.finalize();
  B.dart_side = side;
  for (int d = 0; d < n; ++d) B.side_dart[side[d]] = d;
  return B;
}

void orient_polygons(PolygonSet& P) {
  const int nf = static_cast<int>(P.faces.size());
  std::map<int, std::vector<std::pair<int, int>>> uses;  // edge -> (face, dir)
  for (int f = 0; f < nf; ++f)
    for (int s : P.faces[f]) uses[s >> 1].push_back({f, s & 1});
  std::vector<int> flip(nf, -1);
  for (int root = 0; root < nf; ++root) {
    if (flip[root] >= 0) continue;
    flip[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int s : P.faces[f]) {
        for (auto [g, dir] : uses[s >> 1]) {
          if (g == f) continue;
          // coherent iff the two faces run the edge in opposite directions
          int want = flip[f] ^ (s & 1) ^ dir ^ 1;
          if (flip[g] < 0) {
            flip[g] = want;
            stack.push_back(g);
          } else if (flip[g] != want) {
            malformed("polygon set is not orientable");
          }
        }
      }
    }
  }
  for (int f = 0; f < nf; ++f) {
    if (!flip[f]) continue;
    auto& face = P.faces[f];
    std::reverse(face.begin(), face.end());
    for (int& s : face) s ^= 1;
  }
}

namespace {

// Keyed vertex/edge factory used by the fixed constructions below.
struct KeyedPolygons {
  PolygonSet P;
  std::map<std::array<int, 4>, int> vid;
  std::map<std::pair<int, int>, int> eid;

  int vertex(std::array<int, 4> key) {
    auto it = vid.find(key);
    if (it != vid.end()) return it->second;
    vid[key] = P.num_vertices;
    return P.num_vertices++;
  }
  int side(int u, int v) {
    auto key = std::minmax(u, v);
    auto it = eid.find({key.first, key.second});
    int e;
    if (it == eid.end()) {
      e = static_cast<int>(P.edges.size());
      P.edges.push_back({u, v});
      eid[{key.first, key.second}] = e;
    } else {
      e = it->second;
    }
    return 2 * e + (P.edges[e][0] == u ? 0 : 1);
  }
  void face(const std::vector<int>& vs) {
    std::vector<int> f;
    for (size_t j = 0; j < vs.size(); ++j) f.push_back(side(vs[j], vs[(j + 1) % vs.size()]));
    P.faces.push_back(f);
  }
};

// Cube surface with an n x n grid on every side; returns the chosen, pairwise
// far apart, quads (as vertex 4-cycles) that later become holes or handles.
std::vector<std::array<int, 4>> cube_sphere(KeyedPolygons& K, int n, int wanted) {
  std::vector<std::array<int, 4>> picks;
  for (int axis = 0; axis < 3; ++axis) {
    for (int top = 0; top < 2; ++top) {
      int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          auto at = [&](int x, int y) {
            std::array<int, 4> key{0, 0, 0, 0};
            key[axis] = top ? n : 0;
            key[a1] = x;
            key[a2] = y;
            return K.vertex(key);
          };
          std::array<int, 4> q{at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
          bool pick = (i % 2 == 1) && (j % 2 == 1) && i < n - 1 && j < n - 1 &&
                      static_cast<int>(picks.size()) < wanted;
          if (pick) {
            picks.push_back(q);
          } else {
            K.face({q[0], q[1], q[2], q[3]});
          }
        }
      }
    }
  }
  return picks;
}

// One-holed torus: 4x4 periodic quad grid minus the quad at (3,3), whose
// corners are identified with the given hole corners.
void torus_patch(KeyedPolygons& K, int tag, const std::array<int, 4>& corners) {
  auto at = [&](int x, int y) {
    x = ((x % 4) + 4) % 4;
    y = ((y % 4) + 4) % 4;
    if (x == 3 && y == 3) return corners[0];
    if (x == 0 && y == 3) return corners[1];
    if (x == 0 && y == 0) return corners[2];
    if (x == 3 && y == 0) return corners[3];
    return K.vertex({1000 + tag, x, y, 0});
  };
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      if (x == 3 && y == 3) continue;
      K.face({at(x, y), at(x + 1, y), at(x + 1, y + 1), at(x, y + 1)});
    }
}

int sphere_grid_size(int wanted) {
  int n = 3;
  while (6 * ((n - 1) / 2) * ((n - 1) / 2) < wanted) n += 2;
  return n;
}

struct StandardBuild {
  SurfaceBuild build;
  KeyedPolygons K;
};

StandardBuild build_standard(int genus, int boundary_count) {
  if (genus < 0 || boundary_count < 0) throw TopologyError("InvalidTarget", "negative genus or boundary count");
  StandardBuild sb;
  int n = sphere_grid_size(genus + boundary_count);
  auto picks = cube_sphere(sb.K, n, genus + boundary_count);
  for (int k = 0; k < genus; ++k) torus_patch(sb.K, k, picks[boundary_count + k]);
  orient_polygons(sb.K.P);
  sb.build = build_surface(sb.K.P);
  return sb;
}

}  // namespace

// Dart numbering of standard_surface: faces in construction order (cube sides
// by axis then bottom/top, quads row-major; handle quads last), darts of a face
// consecutive in its boundary order, then hole darts by edge creation order.
CombinatorialSurface standard_surface(int genus, int boundary_count) {
  return build_standard(genus, boundary_count).build.surface;
}

CurveSystem standard_curves(int genus, int boundary_count) {
  auto sb = build_standard(genus, boundary_count);
  const auto& S = sb.build.surface;
  CurveSystem cs;
  cs.family = "standard";
  auto walk = [&](const std::vector<int>& vs) {
    Curve c;
    for (size_t j = 0; j < vs.size(); ++j) {
      int u = vs[j], v = vs[(j + 1) % vs.size()];
      int e = sb.K.eid.at(std::minmax(u, v));
      int s = 2 * e + (sb.K.P.edges[e][0] == u ? 0 : 1);
      c.darts.push_back(sb.build.dart(s));
    }
    return c;
  };
  for (int k = 0; k < genus; ++k) {
    auto v = [&](int x, int y) { return sb.K.vid.at({1000 + k, x, y, 0}); };
    Curve m = walk({v(0, 1), v(1, 1), v(2, 1), v(3, 1)});
    Curve l = walk({v(1, 0), v(1, 1), v(1, 2), v(1, 3)});
    auto ix = curve_intersections(S, m, l);
    if (ix.size() == 1 && ix[0].sign < 0) l = walk({v(1, 3), v(1, 2), v(1, 1), v(1, 0)});
    cs.curves.push_back(m);
    cs.curves.push_back(l);
  }
  return cs;
}

Classification classify_surface(const CombinatorialSurface& S) {
  CombinatorialSurface T = S;
  T.finalize();
  const int n = T.num_darts();
  UnionFind uf(n);
  for (int d = 0; d < n; ++d) {
    uf.unite(d, T.opposite[d]);
    uf.unite(d, T.next[d]);
  }
  std::map<int, std::array<int, 4>> comp;  // V, E2, F, holes
  std::vector<char> vseen(T.num_vertices(), 0);
  for (int d = 0; d < n; ++d) {
    auto& c = comp[uf.find(d)];
    c[1] += 1;
    if (!vseen[T.vertex_of[d]]) {
      vseen[T.vertex_of[d]] = 1;
      c[0] += 1;
    }
  }
  std::vector<char> fseen(n, 0);
  for (int d = 0; d < n; ++d) {
    if (fseen[d]) continue;
    for (int x = d; !fseen[x]; x = T.phi(x)) fseen[x] = 1;
    comp[uf.find(d)][T.hole[d] ? 3 : 2] += 1;
  }
  Classification r;
  r.component_count = static_cast<int>(comp.size());
  for (auto& [root, c] : comp) {
    int chi = c[0] - c[1] / 2 + c[2];
    int twice_genus = 2 - chi - c[3];
    if (twice_genus < 0 || twice_genus % 2) malformed("inconsistent Euler characteristic");
    r.genus += twice_genus / 2;
    r.boundary_count += c[3];
    r.euler += chi;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Polygon form of a surface

namespace {

struct PolygonForm {
  PolygonSet P;
  std::vector<int> dart_side;
};

PolygonForm to_polygons(const CombinatorialSurface& S) {
  PolygonForm F;
  F.P.num_vertices = S.num_vertices();
  F.dart_side.assign(S.num_darts(), -1);
  for (int d = 0; d < S.num_darts(); ++d) {
    if (F.dart_side[d] >= 0) continue;
    int e = static_cast<int>(F.P.edges.size());
    F.P.edges.push_back({S.tail(d), S.head(d)});
    F.dart_side[d] = 2 * e;
    F.dart_side[S.opposite[d]] = 2 * e + 1;
  }
  for (const auto& f : S.faces()) {
    std::vector<int> sides;
    for (int d : f) sides.push_back(F.dart_side[d]);
    F.P.faces.push_back(sides);
  }
  return F;
}

std::vector<std::vector<int>> curves_to_sides(const CurveSystem& C, const std::vector<int>& dart_side) {
  std::vector<std::vector<int>> out;
  for (auto& c : C.curves) {
    std::vector<int> s;
    for (int d : c.darts) s.push_back(dart_side.at(d));
    out.push_back(s);
  }
  return out;
}

CurveSystem sides_to_curves(const CurveSystem& like, const std::vector<std::vector<int>>& sides,
                            const SurfaceBuild& B) {
  CurveSystem out;
  out.family = like.family;
  for (size_t i = 0; i < sides.size(); ++i) {
    Curve c;
    c.closed = like.curves[i].closed;
    for (int s : sides[i]) c.darts.push_back(B.dart(s));
    out.curves.push_back(c);
  }
  return out;
}

// Splits edge e at a new vertex; every side list (faces and curves) is updated.
int split_edge_in(PolygonSet& P, int e, std::vector<std::vector<int>*>& lists) {
  int m = P.num_vertices++;
  int v = P.edges[e][1];
  int e2 = static_cast<int>(P.edges.size());
  P.edges[e][1] = m;
  P.edges.push_back({m, v});
  for (auto* L : lists) {
    std::vector<int> out;
    for (int s : *L) {
      if ((s >> 1) != e) {
        out.push_back(s);
      } else if ((s & 1) == 0) {
        out.push_back(2 * e);
        out.push_back(2 * e2);
      } else {
        out.push_back(2 * e2 + 1);
        out.push_back(2 * e + 1);
      }
    }
    *L = out;
  }
  return m;
}

}  // namespace

void check_curve(const CombinatorialSurface& S, const Curve& c) {
  if (c.darts.empty()) throw TopologyError("NotEmbedded", "empty curve");
  std::set<int> verts;
  for (size_t k = 0; k < c.darts.size(); ++k) {
    int d = c.darts[k];
    if (d < 0 || d >= S.num_darts()) throw TopologyError("DanglingReference", "dart " + std::to_string(d) + " out of range");
    if (k + 1 < c.darts.size() && S.head(d) != S.tail(c.darts[k + 1]))
      throw TopologyError("NotEmbedded", "curve darts do not chain");
    if (!verts.insert(S.tail(d)).second) throw TopologyError("NotEmbedded", "curve revisits vertex " + std::to_string(S.tail(d)));
  }
  int last = S.head(c.darts.back());
  if (c.closed) {
    if (last != S.tail(c.darts.front())) throw TopologyError("NotEmbedded", "closed curve does not close");
  } else if (!verts.insert(last).second) {
    throw TopologyError("NotEmbedded", "arc revisits vertex " + std::to_string(last));
  }
}

SubdivisionResult subdivide(const CombinatorialSurface& S, int target, Subdivision scheme,
                            const std::vector<CurveSystem>& tracked) {
  auto F = to_polygons(S);
  std::vector<std::vector<std::vector<int>>> curve_sides;
  for (auto& cs : tracked) {
    for (auto& c : cs.curves) check_curve(S, c);
    curve_sides.push_back(curves_to_sides(cs, F.dart_side));
  }
  std::vector<std::vector<int>*> lists;
  for (auto& f : F.P.faces) lists.push_back(&f);
  for (auto& cs : curve_sides)
    for (auto& c : cs) lists.push_back(&c);

  if (scheme == Subdivision::EdgeMidpoint) {
    if (target < 0 || target >= S.num_darts()) throw TopologyError("InvalidTarget", "no dart " + std::to_string(target));
    split_edge_in(F.P, F.dart_side[target] >> 1, lists);
  } else {
    if (target < 0 || target >= S.num_faces()) throw TopologyError("InvalidTarget", "no face " + std::to_string(target));
    if (scheme == Subdivision::FaceBarycentric) {
      std::vector<int> edges;
      for (int s : F.P.faces[target]) edges.push_back(s >> 1);
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      for (int e : edges) split_edge_in(F.P, e, lists);
    }
    std::vector<int> face = F.P.faces[target];
    int c = F.P.num_vertices++;
    std::map<int, int> spoke;  // corner vertex -> edge id (corner -> c)
    auto spoke_to = [&](int v) {
      auto it = spoke.find(v);
      if (it != spoke.end()) return it->second;
      int e = static_cast<int>(F.P.edges.size());
      F.P.edges.push_back({v, c});
      spoke[v] = e;
      return e;
    };
    std::vector<std::vector<int>> tris;
    for (int s : face) tris.push_back({s, 2 * spoke_to(F.P.head(s)), 2 * spoke_to(F.P.tail(s)) + 1});
    F.P.faces[target] = tris[0];
    for (size_t k = 1; k < tris.size(); ++k) F.P.faces.push_back(tris[k]);
  }
  auto B = build_surface(F.P);
  SubdivisionResult r;
  r.surface = B.surface;
  for (size_t i = 0; i < tracked.size(); ++i) r.tracked.push_back(sides_to_curves(tracked[i], curve_sides[i], B));
  return r;
}

// ---------------------------------------------------------------------------
// Cutting

CombinatorialSurface cut_along(const CombinatorialSurface& S, const CurveSystem& C) {
  std::set<int> used_vertices;
  for (auto& c : C.curves) {
    check_curve(S, c);
    std::set<int> mine;
    for (int d : c.darts) {
      mine.insert(S.tail(d));
      mine.insert(S.head(d));
      if (S.hole[d] || S.hole[S.opposite[d]]) throw TopologyError("NotEmbedded", "curve runs along the boundary");
    }
    for (int v : mine)
      if (used_vertices.count(v)) throw TopologyError("NotEmbedded", "curves of the system meet at vertex " + std::to_string(v));
    used_vertices.insert(mine.begin(), mine.end());
  }
  std::vector<char> cut(S.num_darts(), 0);
  for (auto& c : C.curves)
    for (int d : c.darts) cut[d] = cut[S.opposite[d]] = 1;

  // corners: non-hole dart d stands for the corner at tail(d) between phi^{-1}(d) and d
  const int n = S.num_darts();
  UnionFind uf(n);
  for (int d = 0; d < n; ++d) {
    if (S.hole[d]) continue;
    int o = S.opposite[d];
    if (S.hole[o] || cut[d]) continue;
    // corner of the other face at the same vertex sits right after o
    uf.unite(d, S.phi(o));
  }
  PolygonSet P;
  std::map<int, int> vid;
  auto vertex = [&](int corner) {
    int r = uf.find(corner);
    auto it = vid.find(r);
    if (it != vid.end()) return it->second;
    vid[r] = P.num_vertices;
    return P.num_vertices++;
  };
  std::map<int, int> edge_of_dart;  // uncut darts share an edge with their opposite
  for (const auto& f : S.faces()) {
    std::vector<int> sides;
    for (int d : f) {
      int t = vertex(d), h = vertex(S.phi(d));
      int o = S.opposite[d];
      if (!cut[d] && !S.hole[o] && edge_of_dart.count(o)) {
        int e = edge_of_dart[o];
        sides.push_back(2 * e + 1);
      } else {
        int e = static_cast<int>(P.edges.size());
        P.edges.push_back({t, h});
        edge_of_dart[d] = e;
        sides.push_back(2 * e);
      }
    }
    P.faces.push_back(sides);
  }
  return build_surface(P).surface;
}

CheckReport verify_cut_system(const CombinatorialSurface& S, const CurveSystem& C) {
  CheckReport rep;
  Classification k;
  try {
    k = classify_surface(S);
  } catch (const TopologyError& e) {
    rep.fail(e.what());
    return rep;
  }
  if (k.boundary_count != 0 || k.component_count != 1) {
    rep.fail("surface is not closed and connected");
    return rep;
  }
  if (static_cast<int>(C.curves.size()) != k.genus) {
    rep.fail("cut-system cardinality " + std::to_string(C.curves.size()) + " differs from genus " + std::to_string(k.genus));
    return rep;
  }
  for (auto& c : C.curves)
    if (!c.closed) {
      rep.fail("cut system contains an arc");
      return rep;
    }
  CombinatorialSurface cutS;
  try {
    cutS = cut_along(S, C);
  } catch (const TopologyError& e) {
    rep.fail(e.what());
    return rep;
  }
  auto r = classify_surface(cutS);
  if (r.component_count != 1) {
    rep.fail("cutting disconnects the surface into " + std::to_string(r.component_count) + " pieces");
  } else if (r.genus != 0) {
    rep.fail("cut surface has genus " + std::to_string(r.genus));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Gluing

int GluedComplex::euler() const {
  std::set<int> vs;
  std::set<int> es;
  for (auto& f : cells.faces)
    for (int s : f) {
      es.insert(s >> 1);
      vs.insert(cells.tail(s));
    }
  return static_cast<int>(vs.size()) - static_cast<int>(es.size()) + static_cast<int>(cells.faces.size());
}

GluedComplex glue_surfaces(const Assembly& A) {
  GluedComplex G;
  std::vector<int> voff, eoff;
  std::vector<PolygonForm> forms;
  int nv = 0, ne = 0;
  for (auto& S : A.surfaces) {
    forms.push_back(to_polygons(S));
    voff.push_back(nv);
    eoff.push_back(ne);
    nv += forms.back().P.num_vertices;
    ne += static_cast<int>(forms.back().P.edges.size());
  }
  UnionFind vuf(nv);
  // edge union-find with parity (relative direction)
  std::vector<int> ep(ne), epar(ne, 0);
  std::iota(ep.begin(), ep.end(), 0);
  std::function<std::pair<int, int>(int)> efind = [&](int e) -> std::pair<int, int> {
    if (ep[e] == e) return {e, 0};
    auto [r, p] = efind(ep[e]);
    ep[e] = r;
    epar[e] ^= p;
    return {r, epar[e]};
  };
  auto eunite = [&](int a, int b, int par) {
    auto [ra, pa] = efind(a);
    auto [rb, pb] = efind(b);
    if (ra == rb) {
      if ((pa ^ pb) != par) throw TopologyError("LabelMismatch", "identifications disagree on an edge direction");
      return;
    }
    if (ra > rb) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    ep[rb] = ra;
    epar[rb] = pa ^ pb ^ par;
  };
  for (auto& id : A.identifications) {
    if (id.a < 0 || id.b < 0 || id.a >= static_cast<int>(A.surfaces.size()) || id.b >= static_cast<int>(A.surfaces.size()))
      throw TopologyError("DanglingReference", "identification names a missing surface");
    const auto& SA = A.surfaces[id.a];
    const auto& SB = A.surfaces[id.b];
    if (id.a_circle >= static_cast<int>(SA.boundary.size()) || id.b_circle >= static_cast<int>(SB.boundary.size()))
      throw TopologyError("DanglingReference", "identification names a missing circle");
    const auto& ca = SA.boundary[id.a_circle];
    const auto& cb = SB.boundary[id.b_circle];
    if (ca.darts.size() != cb.darts.size()) throw TopologyError("LengthMismatch", "glued circles differ in length");
    if (ca.label != cb.label) throw TopologyError("LabelMismatch", "glued circles carry different labels");
    const int L = static_cast<int>(ca.darts.size());
    auto mod = [L](int x) { return ((x % L) + L) % L; };
    for (int j = 0; j < L; ++j) {
      int da = ca.darts[j];
      int sa = forms[id.a].dart_side[da];
      if (id.direction > 0) {
        int db = cb.darts[mod(id.offset + j)];
        int sb = forms[id.b].dart_side[db];
        vuf.unite(voff[id.a] + SA.tail(da), voff[id.b] + SB.tail(db));
        eunite(eoff[id.a] + (sa >> 1), eoff[id.b] + (sb >> 1), (sa ^ sb) & 1);
      } else {
        int db = cb.darts[mod(id.offset - j - 1)];
        int sb = forms[id.b].dart_side[db];
        vuf.unite(voff[id.a] + SA.tail(da), voff[id.b] + SB.head(db));
        eunite(eoff[id.a] + (sa >> 1), eoff[id.b] + (sb >> 1), ((sa ^ sb) & 1) ^ 1);
      }
    }
  }
  std::map<int, int> vnew, enew;
  auto V = [&](int g) {
    int r = vuf.find(g);
    auto it = vnew.find(r);
    if (it != vnew.end()) return it->second;
    vnew[r] = G.cells.num_vertices++;
    return vnew[r];
  };
  for (size_t s = 0; s < A.surfaces.size(); ++s) {
    for (int v = 0; v < forms[s].P.num_vertices; ++v) {
      int before = G.cells.num_vertices;
      if (V(voff[s] + v) == before) G.vertex_origin.push_back({static_cast<int>(s), v});
    }
  }
  for (size_t s = 0; s < A.surfaces.size(); ++s) {
    for (size_t e = 0; e < forms[s].P.edges.size(); ++e) {
      auto [r, par] = efind(eoff[s] + static_cast<int>(e));
      if (enew.count(r)) continue;
      // the root's own direction defines the merged edge
      int rs = 0;
      while (rs + 1 < static_cast<int>(eoff.size()) && eoff[rs + 1] <= r) ++rs;
      const auto& re = forms[rs].P.edges[r - eoff[rs]];
      enew[r] = static_cast<int>(G.cells.edges.size());
      G.cells.edges.push_back({V(voff[rs] + re[0]), V(voff[rs] + re[1])});
      int dart = -1;
      for (int d = 0; d < A.surfaces[rs].num_darts(); ++d)
        if (forms[rs].dart_side[d] == 2 * (r - eoff[rs])) dart = d;
      G.edge_origin.push_back({rs, dart});
    }
  }
  G.dart_side.resize(A.surfaces.size());
  for (size_t s = 0; s < A.surfaces.size(); ++s) {
    auto side_of = [&](int local_side) {
      auto [r, par] = efind(eoff[s] + (local_side >> 1));
      return 2 * enew[r] + ((local_side & 1) ^ par);
    };
    for (size_t f = 0; f < forms[s].P.faces.size(); ++f) {
      std::vector<int> sides;
      for (int ls : forms[s].P.faces[f]) sides.push_back(side_of(ls));
      G.cells.faces.push_back(sides);
      G.face_origin.push_back({static_cast<int>(s), static_cast<int>(f)});
    }
    for (int d = 0; d < A.surfaces[s].num_darts(); ++d) G.dart_side[s].push_back(side_of(forms[s].dart_side[d]));
  }
  for (auto& f : G.cells.faces)
    for (size_t j = 0; j < f.size(); ++j)
      if (G.cells.head(f[j]) != G.cells.tail(f[(j + 1) % f.size()]))
        throw TopologyError("LengthMismatch", "glued faces do not chain; offsets inconsistent");
  return G;
}

// ---------------------------------------------------------------------------
// Intersections

std::vector<Intersection> curve_intersections(const CombinatorialSurface& S, const Curve& c1, const Curve& c2) {
  check_curve(S, c1);
  check_curve(S, c2);
  // vertex -> (dart back along the curve, dart forward along the curve)
  auto passes = [&](const Curve& c) {
    std::map<int, std::pair<int, int>> m;
    const int k = static_cast<int>(c.darts.size());
    for (int j = 0; j < k; ++j) {
      if (!c.closed && j == 0) continue;
      int in = c.darts[(j + k - 1) % k];
      m[S.tail(c.darts[j])] = {S.opposite[in], c.darts[j]};
    }
    return m;
  };
  auto p1 = passes(c1), p2 = passes(c2);
  std::vector<Intersection> out;
  for (auto& [v, a] : p1) {
    auto it = p2.find(v);
    if (it == p2.end()) continue;
    auto b = it->second;
    auto [a_in, a_out] = a;
    auto [b_in, b_out] = b;
    if (a_in == b_in || a_in == b_out || a_out == b_in || a_out == b_out)
      throw TopologyError("NonTransverse", "curves share an edge at vertex " + std::to_string(v));
    // position of each dart counterclockwise from a_out
    std::map<int, int> pos;
    int x = a_out, k = 0;
    do {
      pos[x] = k++;
      x = S.next[x];
    } while (x != a_out);
    bool bin_between = pos[b_in] < pos[a_in];
    bool bout_between = pos[b_out] < pos[a_in];
    if (bin_between == bout_between) throw TopologyError("NonTransverse", "curves touch without crossing at vertex " + std::to_string(v));
    out.push_back({v, bout_between ? 1 : -1});
  }
  std::sort(out.begin(), out.end(), [](const Intersection& a, const Intersection& b) { return a.vertex < b.vertex; });
  return out;
}

}  // namespace trisect
