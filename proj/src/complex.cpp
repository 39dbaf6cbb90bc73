#include "trisect/complex.hpp"

#include <algorithm>

namespace trisect {

std::string family_name(int f) {
  static const char* kinds[] = {"alpha", "delta", "tau", "L"};
  return std::string(kinds[f / 3]) + "_" + std::to_string(f % 3 + 1);
}

int family_from_name(const std::string& name) {
  for (int f = 0; f < kFamilies; ++f)
    if (family_name(f) == name) return f;
  return -1;
}

std::array<int, 2> family_surfaces(int f) {
  int i = fam_index(f);
  switch (fam_kind(f)) {
    case kAlpha:
      return {kCentral, i};
    case kTau:
      return {i, kCentral};
    default:
      return {i, cyc(i + 1)};
  }
}

std::vector<int> Diagram::tags() const {
  std::set<int> s(face_tag.begin(), face_tag.end());
  return {s.begin(), s.end()};
}

std::vector<int> Diagram::faces_of(int tag) const {
  std::vector<int> out;
  for (size_t f = 0; f < face_tag.size(); ++f)
    if (face_tag[f] == tag) out.push_back(static_cast<int>(f));
  return out;
}

EdgeUse edge_use(const Diagram& D) {
  EdgeUse U;
  U.count.resize(D.cx.edges.size());
  U.dir.resize(D.cx.edges.size());
  for (size_t f = 0; f < D.cx.faces.size(); ++f)
    for (int s : D.cx.faces[f]) {
      U.count[s >> 1][D.face_tag[f]]++;
      U.dir[s >> 1][D.face_tag[f]] = s & 1;
    }
  return U;
}

PolygonSet faces_subset(const Diagram& D, const std::vector<int>& faces, bool rev) {
  PolygonSet P;
  P.num_vertices = D.cx.num_vertices;
  P.edges = D.cx.edges;
  for (int f : faces) {
    auto sides = D.cx.faces[f];
    if (rev) {
      std::reverse(sides.begin(), sides.end());
      for (int& s : sides) s ^= 1;
    }
    P.faces.push_back(std::move(sides));
  }
  return P;
}

SurfaceBuild surface_of(const Diagram& D, int tag) { return build_surface(faces_subset(D, D.faces_of(tag))); }

SurfaceBuild glued_pair(const Diagram& D, int a, int b) {
  PolygonSet P = faces_subset(D, D.faces_of(a), true);
  PolygonSet Q = faces_subset(D, D.faces_of(b));
  P.faces.insert(P.faces.end(), Q.faces.begin(), Q.faces.end());
  return build_surface(P);
}

Curve to_curve(const SurfaceBuild& B, const Walk& w) {
  Curve c;
  c.closed = w.closed;
  for (int s : w.sides) c.darts.push_back(B.dart(s));
  return c;
}

std::vector<BindingCircle> binding_circles(const Diagram& D, const std::vector<int>& tags) {
  std::vector<BindingCircle> first;
  std::set<int> first_sides;
  for (size_t t = 0; t < tags.size(); ++t) {
    SurfaceBuild B = surface_of(D, tags[t]);
    std::vector<BindingCircle> circles;
    std::set<int> sides;
    for (auto& bc : B.surface.boundary) {
      BindingCircle c;
      for (int d : bc.darts) {
        c.sides.push_back(B.dart_side[d]);
        sides.insert(B.dart_side[d]);
      }
      circles.push_back(std::move(c));
    }
    if (t == 0) {
      first = std::move(circles);
      first_sides = std::move(sides);
    } else if (sides != first_sides) {
      throw TopologyError("BindingMismatch", "surface " + std::to_string(tags[t]) + " does not share the binding of surface " +
                                                 std::to_string(tags[0]));
    }
  }
  return first;
}

std::set<int> binding_vertices(const Diagram& D, const std::vector<int>& tags) {
  std::set<int> out;
  for (auto& c : binding_circles(D, tags))
    for (int s : c.sides) out.insert(D.tail(s));
  return out;
}

std::vector<int> walk_vertices(const Diagram& D, const Walk& w) {
  std::vector<int> out;
  for (int s : w.sides) out.push_back(D.tail(s));
  if (!w.closed && !w.sides.empty()) out.push_back(D.head(w.sides.back()));
  return out;
}

void check_walk(const Diagram& D, const Walk& w) {
  if (w.sides.empty()) throw TopologyError("NotEmbedded", "empty walk");
  const int ne = static_cast<int>(D.cx.edges.size());
  for (int s : w.sides)
    if (s < 0 || (s >> 1) >= ne) throw TopologyError("DanglingReference", "walk uses missing edge " + std::to_string(s >> 1));
  for (size_t j = 0; j + 1 < w.sides.size(); ++j)
    if (D.head(w.sides[j]) != D.tail(w.sides[j + 1])) throw TopologyError("NotEmbedded", "walk does not chain");
  if (w.closed && D.head(w.sides.back()) != D.tail(w.sides.front())) throw TopologyError("NotEmbedded", "closed walk does not close");
  auto vs = walk_vertices(D, w);
  std::set<int> seen(vs.begin(), vs.end());
  if (seen.size() != vs.size()) throw TopologyError("NotEmbedded", "walk revisits a vertex");
}

Walk reversed(const Walk& w) {
  Walk r;
  r.closed = w.closed;
  for (auto it = w.sides.rbegin(); it != w.sides.rend(); ++it) r.sides.push_back(*it ^ 1);
  return r;
}

int find_side(const Diagram& D, int u, int v) {
  for (size_t e = 0; e < D.cx.edges.size(); ++e) {
    if (D.cx.edges[e][0] == u && D.cx.edges[e][1] == v) return static_cast<int>(2 * e);
    if (D.cx.edges[e][1] == u && D.cx.edges[e][0] == v) return static_cast<int>(2 * e + 1);
  }
  return -1;
}

Walk walk_through(const Diagram& D, const std::vector<int>& verts, bool closed) {
  Walk w;
  w.closed = closed;
  const size_t n = verts.size();
  const size_t steps = closed ? n : n - 1;
  for (size_t j = 0; j < steps; ++j) {
    int s = find_side(D, verts[j], verts[(j + 1) % n]);
    if (s < 0)
      throw TopologyError("DanglingReference", "no edge between " + std::to_string(verts[j]) + " and " + std::to_string(verts[(j + 1) % n]));
    w.sides.push_back(s);
  }
  return w;
}

namespace {

template <class F>
void for_each_walk(Diagram& D, F&& f) {
  for (auto& fam : D.fam)
    for (auto& w : fam) f(w);
}

}  // namespace

void refine(Diagram& D, std::vector<Walk>* extra, const std::vector<char>* only) {
  const PolygonSet old = D.cx;
  const int ne = static_cast<int>(old.edges.size());
  auto picked = [&](size_t f) { return !only || (*only)[f]; };
  std::vector<char> split(ne, 0);
  for (size_t f = 0; f < old.faces.size(); ++f)
    if (picked(f))
      for (int s : old.faces[f]) split[s >> 1] = 1;
  PolygonSet P;
  P.num_vertices = old.num_vertices;
  // new edges: e -> (a, b); a unsplit edge keeps a single piece a
  std::vector<int> piece(ne), mid(ne, -1);
  for (int e = 0; e < ne; ++e) {
    piece[e] = static_cast<int>(P.edges.size());
    if (split[e]) {
      mid[e] = P.num_vertices++;
      P.edges.push_back({old.edges[e][0], mid[e]});
      P.edges.push_back({mid[e], old.edges[e][1]});
    } else {
      P.edges.push_back(old.edges[e]);
    }
  }
  auto first_half = [&](int s) { return (s & 1) ? 2 * (piece[s >> 1] + 1) + 1 : 2 * piece[s >> 1]; };
  auto second_half = [&](int s) { return (s & 1) ? 2 * piece[s >> 1] + 1 : 2 * (piece[s >> 1] + 1); };
  auto expand = [&](const std::vector<int>& sides) {
    std::vector<int> out;
    for (int s : sides) {
      if (split[s >> 1]) {
        out.push_back(first_half(s));
        out.push_back(second_half(s));
      } else {
        out.push_back(2 * piece[s >> 1] + (s & 1));
      }
    }
    return out;
  };
  std::vector<int> tags;
  for (size_t f = 0; f < old.faces.size(); ++f) {
    const auto& F = old.faces[f];
    if (!picked(f)) {
      P.faces.push_back(expand(F));
      tags.push_back(D.face_tag[f]);
      continue;
    }
    const int k = static_cast<int>(F.size());
    int c = P.num_vertices++;
    std::vector<int> spoke(k);
    for (int j = 0; j < k; ++j) {
      spoke[j] = static_cast<int>(P.edges.size());
      P.edges.push_back({mid[F[j] >> 1], c});
    }
    for (int j = 0; j < k; ++j) {
      int jm = (j + k - 1) % k;
      P.faces.push_back({first_half(F[j]), 2 * spoke[j], 2 * spoke[jm] + 1, second_half(F[jm])});
      tags.push_back(D.face_tag[f]);
    }
  }
  D.cx = std::move(P);
  D.face_tag = std::move(tags);
  for_each_walk(D, [&](Walk& w) { w.sides = expand(w.sides); });
  if (extra)
    for (auto& w : *extra) w.sides = expand(w.sides);
}

std::vector<char> faces_near(const Diagram& D, const std::set<int>& verts, int radius) {
  std::vector<std::vector<int>> vfaces(D.cx.num_vertices);
  for (size_t f = 0; f < D.cx.faces.size(); ++f)
    for (int s : D.cx.faces[f]) vfaces[D.tail(s)].push_back(static_cast<int>(f));
  std::vector<char> mark(D.cx.faces.size(), 0);
  std::set<int> frontier = verts;
  std::set<int> seen = verts;
  for (int r = 0; r < radius; ++r) {
    std::set<int> next;
    for (int v : frontier)
      for (int f : vfaces[v]) {
        if (mark[f]) continue;
        mark[f] = 1;
        for (int s : D.cx.faces[f]) {
          int u = D.tail(s);
          if (seen.insert(u).second) next.insert(u);
        }
      }
    frontier = std::move(next);
  }
  return mark;
}

void refine_near(Diagram& D, const std::vector<Walk>& around, int radius, std::vector<Walk>* extra) {
  std::set<int> verts;
  for (auto& w : around)
    for (int v : walk_vertices(D, w)) verts.insert(v);
  auto mask = faces_near(D, verts, radius);
  refine(D, extra, &mask);
}

int split_edge(Diagram& D, int e) {
  if (e < 0 || e >= static_cast<int>(D.cx.edges.size())) throw TopologyError("InvalidTarget", "no edge " + std::to_string(e));
  int m = D.add_vertex();
  int v = D.cx.edges[e][1];
  D.cx.edges[e][1] = m;
  int e2 = D.add_edge(m, v);
  auto expand = [&](std::vector<int>& sides) {
    std::vector<int> out;
    for (int s : sides) {
      if ((s >> 1) != e) {
        out.push_back(s);
      } else if (s & 1) {
        out.push_back(2 * e2 + 1);
        out.push_back(2 * e + 1);
      } else {
        out.push_back(2 * e);
        out.push_back(2 * e2);
      }
    }
    sides = std::move(out);
  };
  for (auto& f : D.cx.faces) expand(f);
  for_each_walk(D, [&](Walk& w) { expand(w.sides); });
  return m;
}

void compact(Diagram& D) {
  const int ne = static_cast<int>(D.cx.edges.size());
  std::vector<char> used_e(ne, 0);
  for (auto& f : D.cx.faces)
    for (int s : f) used_e[s >> 1] = 1;
  for (auto& fam : D.fam)
    for (auto& w : fam)
      for (int s : w.sides) used_e[s >> 1] = 1;
  std::vector<char> used_v(D.cx.num_vertices, 0);
  for (int e = 0; e < ne; ++e)
    if (used_e[e])
      for (int v : D.cx.edges[e]) used_v[v] = 1;
  for (int v : D.bridge) used_v[v] = 1;
  for (auto& c : D.flags) used_v[c.vertex] = 1;
  std::vector<int> vmap(D.cx.num_vertices, -1), emap(ne, -1);
  int nv = 0, nne = 0;
  for (int v = 0; v < D.cx.num_vertices; ++v)
    if (used_v[v]) vmap[v] = nv++;
  std::vector<std::array<int, 2>> edges;
  for (int e = 0; e < ne; ++e)
    if (used_e[e]) {
      emap[e] = nne++;
      edges.push_back({vmap[D.cx.edges[e][0]], vmap[D.cx.edges[e][1]]});
    }
  auto remap = [&](int s) { return 2 * emap[s >> 1] + (s & 1); };
  for (auto& f : D.cx.faces)
    for (int& s : f) s = remap(s);
  for (auto& fam : D.fam)
    for (auto& w : fam)
      for (int& s : w.sides) s = remap(s);
  for (int& v : D.bridge) v = vmap[v];
  for (auto& c : D.flags) c.vertex = vmap[c.vertex];
  D.cx.edges = std::move(edges);
  D.cx.num_vertices = nv;
}

Realization realize_sector(const Diagram& D, const SectorSpec& spec) {
  Skeleton W;
  W.cells.num_vertices = D.cx.num_vertices;
  W.cells.edges = D.cx.edges;
  for (size_t f = 0; f < D.cx.faces.size(); ++f) {
    int t = D.face_tag[f];
    if (std::find(spec.surfaces.begin(), spec.surfaces.end(), t) == spec.surfaces.end()) continue;
    W.cells.faces.push_back(D.cx.faces[f]);
    W.face_surface.push_back(t);
  }
  std::vector<std::vector<int>> disks;
  for (int f : spec.families)
    for (auto& w : D.fam[f]) {
      if (!w.closed) throw TopologyError("NotALoop", family_name(f) + " contains an arc");
      disks.push_back(w.sides);
    }
  return cw_from_realization(W, disks, {spec.balls.begin(), spec.balls.end()});
}

std::vector<AbelianGroup> sector_homology(const Diagram& D, const SectorSpec& spec) {
  return homology_all(realize_sector(D, spec).complex);
}

int NamedBuilder::vertex(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  int v = D.add_vertex();
  ids_[name] = v;
  return v;
}

void NamedBuilder::face(int tag, const std::vector<std::string>& cycle) {
  std::vector<int> sides;
  const size_t n = cycle.size();
  for (size_t j = 0; j < n; ++j) {
    int u = vertex(cycle[j]), v = vertex(cycle[(j + 1) % n]);
    auto key = std::minmax(u, v);
    auto it = edges_.find({key.first, key.second});
    int e;
    if (it == edges_.end()) {
      e = D.add_edge(u, v);
      edges_[{key.first, key.second}] = e;
    } else {
      e = it->second;
    }
    sides.push_back(2 * e + (D.cx.edges[e][0] == u ? 0 : 1));
  }
  D.add_face(tag, std::move(sides));
}

Walk NamedBuilder::walk(const std::vector<std::string>& verts, bool closed) const {
  std::vector<int> ids;
  for (auto& n : verts) {
    auto it = ids_.find(n);
    if (it == ids_.end()) throw TopologyError("DanglingReference", "unknown vertex " + n);
    ids.push_back(it->second);
  }
  return walk_through(D, ids, closed);
}

void NamedBuilder::orient() {
  auto flip_faces = [&](const std::vector<int>& fs) {
    for (int f : fs) {
      auto& face = D.cx.faces[f];
      std::reverse(face.begin(), face.end());
      for (int& s : face) s ^= 1;
    }
  };
  std::map<int, int> ref_dir;  // binding edge -> direction from the first surface
  bool first = true;
  for (int t : D.tags()) {
    auto fs = D.faces_of(t);
    PolygonSet P = faces_subset(D, fs);
    orient_polygons(P);
    for (size_t j = 0; j < fs.size(); ++j) D.cx.faces[fs[j]] = P.faces[j];
    std::map<int, std::vector<int>> uses;
    for (int f : fs)
      for (int s : D.cx.faces[f]) uses[s >> 1].push_back(s & 1);
    if (first) {
      for (auto& [e, d] : uses)
        if (d.size() == 1) ref_dir[e] = d[0];
      first = false;
      continue;
    }
    for (auto& [e, d] : uses)
      if (d.size() == 1 && ref_dir.count(e)) {
        if (ref_dir[e] != d[0]) flip_faces(fs);
        break;
      }
  }
}

}  // namespace trisect
