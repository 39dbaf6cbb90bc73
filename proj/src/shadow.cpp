#include "trisect/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>

#include "trisect/embed.hpp"

namespace trisect {

namespace {

bool is_shadow(int f) { return fam_kind(f) == kTau || fam_kind(f) == kLink; }

std::string arc_name(int f, int j) { return family_name(f) + "[" + std::to_string(j) + "]"; }

std::vector<int> arc_vertices(const Diagram& D, const Walk& w) {
  std::vector<int> v{D.tail(w.sides.front())};
  for (int s : w.sides) v.push_back(D.head(s));
  return v;
}

// An arc passing through an interior vertex.
struct Pass {
  int family = 0, index = 0;
  int side_in = 0, side_out = 0;
};

// Lookup tables shared by the checks.
struct ShadowIndex {
  const Diagram& D;
  EdgeUse use;
  std::vector<std::set<int>> vtags;
  std::set<int> binding;

  explicit ShadowIndex(const Diagram& d) : D(d), use(edge_use(d)), vtags(d.cx.num_vertices) {
    for (size_t f = 0; f < D.cx.faces.size(); ++f)
      for (int s : D.cx.faces[f]) vtags[D.tail(s)].insert(D.face_tag[f]);
    for (size_t e = 0; e < D.cx.edges.size(); ++e)
      if (!use.count[e].empty() && use.binding(static_cast<int>(e))) {
        binding.insert(D.cx.edges[e][0]);
        binding.insert(D.cx.edges[e][1]);
      }
  }
  // The surface of an interior edge, -1 for binding or unused edges.
  int edge_tag(int e) const {
    const auto& c = use.count[e];
    if (c.size() != 1 || c.begin()->second != 2) return -1;
    return c.begin()->first;
  }
  int vertex_surface(int v) const {
    if (v < 0 || v >= D.cx.num_vertices || binding.count(v) || vtags[v].size() != 1) return -1;
    return *vtags[v].begin();
  }
};

// Interior passes at non-binding vertices, by vertex. Assumes checked arcs.
std::map<int, std::vector<Pass>> interior_passes(const Diagram& D, const ShadowIndex& X) {
  std::map<int, std::vector<Pass>> out;
  for (int f = 0; f < kFamilies; ++f) {
    if (!is_shadow(f)) continue;
    for (int j = 0; j < static_cast<int>(D.fam[f].size()); ++j) {
      const auto& w = D.fam[f][j];
      for (size_t p = 1; p < w.sides.size(); ++p) {
        int v = D.tail(w.sides[p]);
        if (X.binding.count(v)) continue;
        out[v].push_back({f, j, w.sides[p - 1], w.sides[p]});
      }
    }
  }
  return out;
}

const CrossFlag* find_flag(const Diagram& D, int v, int f, int a, int b) {
  for (auto& fl : D.flags)
    if (fl.vertex == v && fl.over_family == f && fl.under_family == f &&
        ((fl.over_index == a && fl.under_index == b) || (fl.over_index == b && fl.under_index == a)))
      return &fl;
  return nullptr;
}

// Cyclic positions of the four darts of two passes at their vertex.
struct LocalPicture {
  int a_out, a_back, b_out, b_back;  // positions in the ccw rotation
  int n;
};

LocalPicture picture(const SurfaceBuild& B, const Pass& a, const Pass& b) {
  int ao = B.dart(a.side_out), ab = B.dart(a.side_in ^ 1), bo = B.dart(b.side_out), bb = B.dart(b.side_in ^ 1);
  auto rot = B.surface.rotation(B.surface.tail(ao));
  auto pos = [&](int d) {
    auto it = std::find(rot.begin(), rot.end(), d);
    if (it == rot.end()) throw TopologyError("MalformedMap", "dart missing from its rotation");
    return static_cast<int>(it - rot.begin());
  };
  return {pos(ao), pos(ab), pos(bo), pos(bb), static_cast<int>(rot.size())};
}

bool transverse(const LocalPicture& P) {
  auto between = [&](int x) {  // strictly on the ccw way from a_out to a_back
    int d = (x - P.a_out + P.n) % P.n, e = (P.a_back - P.a_out + P.n) % P.n;
    return d > 0 && d < e;
  };
  return between(P.b_out) != between(P.b_back);
}

// +1 iff the ccw order is over_out, under_out, over_back, under_back.
int local_sign(const SurfaceBuild& B, const Pass& over, const Pass& under) {
  auto P = picture(B, over, under);
  int du = (P.b_out - P.a_out + P.n) % P.n, db = (P.b_back - P.a_out + P.n) % P.n;
  return du < db ? 1 : -1;
}

// Ambient 3-manifolds an arc family lives in: 0 is Y, i is dX_i.
std::set<int> family_ambients(int f) {
  int i = fam_index(f);
  if (fam_kind(f) == kTau) return {i, cyc(i - 1)};
  return {0, i};
}

std::set<int> surface_ambients(int t) {
  if (t == kCentral) return {1, 2, 3};
  return {0, t, cyc(t - 1)};
}

// Does family f lie above family g?
std::optional<bool> lies_above(int f, int g) {
  auto rule = [](int x, int y) {
    int i = fam_index(x), j = fam_index(y);
    FamilyKind a = fam_kind(x), b = fam_kind(y);
    if (a == kLink && b == kLink) return j == cyc(i + 1);
    if (a == kTau && b == kLink) return i == j;
    if (a == kLink && b == kTau) return j == cyc(i + 1);
    if (a == kTau && b == kTau) return i == cyc(j + 1);
    return false;
  };
  if (rule(f, g)) return true;
  if (rule(g, f)) return false;
  return std::nullopt;
}

// Is a flagged self-crossing of family f kept when lifted from surface t into ambient A?
bool flag_kept(int f, int t, int A) {
  int i = fam_index(f);
  if (fam_kind(f) == kLink) return t == cyc(i + 1);
  if (A == i) return t == i;
  return t == kCentral;
}

struct ArcEnd {
  int family, index, end;  // end 0: start of the walk, 1: its end
};

std::vector<std::vector<ArcStep>> trace(const Diagram& D, const std::vector<int>& families) {
  std::map<int, std::vector<ArcEnd>> ends;
  for (int f : families)
    for (int j = 0; j < static_cast<int>(D.fam[f].size()); ++j) {
      const auto& w = D.fam[f][j];
      if (w.closed || w.sides.empty()) throw TopologyError("OpenStrand", arc_name(f, j) + " is not an arc");
      ends[D.tail(w.sides.front())].push_back({f, j, 0});
      ends[D.head(w.sides.back())].push_back({f, j, 1});
    }
  for (auto& [v, e] : ends)
    if (e.size() != 2)
      throw TopologyError("OpenStrand", "vertex " + std::to_string(v) + " meets " + std::to_string(e.size()) +
                                            " arc ends of the traced families");
  std::set<std::pair<int, int>> used;
  std::vector<std::vector<ArcStep>> loops;
  for (int f : families)
    for (int j = 0; j < static_cast<int>(D.fam[f].size()); ++j) {
      if (used.count({f, j})) continue;
      std::vector<ArcStep> loop;
      ArcStep cur{f, j, true};
      while (true) {
        used.insert({cur.family, cur.index});
        loop.push_back(cur);
        const auto& w = D.fam[cur.family][cur.index];
        int q = cur.forward ? D.head(w.sides.back()) : D.tail(w.sides.front());
        int arrive = cur.forward ? 1 : 0;
        const auto& e = ends.at(q);
        const ArcEnd& nx = (e[0].family == cur.family && e[0].index == cur.index && e[0].end == arrive) ? e[1] : e[0];
        ArcStep next{nx.family, nx.index, nx.end == 0};
        if (next == loop.front()) break;
        if (used.count({next.family, next.index}))
          throw TopologyError("OpenStrand", "tracing re-entered " + arc_name(next.family, next.index));
        cur = next;
      }
      loops.push_back(std::move(loop));
    }
  return loops;
}

std::vector<int> sector_families(int i) { return {fam_tau(i), fam_tau(i + 1), fam_link(i)}; }

Walk loop_walk(const Diagram& D, const std::vector<ArcStep>& loop) {
  Walk out;
  for (auto& st : loop) {
    const auto& w = D.fam[st.family][st.index];
    Walk piece = st.forward ? w : reversed(w);
    out.sides.insert(out.sides.end(), piece.sides.begin(), piece.sides.end());
  }
  out.closed = true;
  return out;
}

void require_orientation(const Diagram& D, const OrientationAssignment& orient) {
  if ((orient.sign != 1 && orient.sign != -1) || orient.face_sign.size() != D.cx.faces.size())
    throw TopologyError("MissingOrientation", "no orientation assignment for this diagram");
}

// A crossing met along an arc, at a position on its stored walk (side k runs
// from k to k + 1).
struct ArcEvent {
  double pos = 0;
  int crossing = 0;
  bool over = false;
};

struct CrossingTable {
  std::map<std::pair<int, int>, std::vector<ArcEvent>> on;  // (family, index) -> events
  std::vector<int> sign;                                    // for the stored directions
  int vertex_crossings = 0;

  void add(int of, int oi, double op, int uf, int ui, double up, int s) {
    int c = static_cast<int>(sign.size());
    sign.push_back(s);
    on[{of, oi}].push_back({op, c, true});
    on[{uf, ui}].push_back({up, c, false});
  }
};

// Crossings at shared vertices, resolved in one ambient.
void add_vertex_crossings(const Diagram& D, const std::vector<ResolvedCrossing>& all, int ambient,
                          const std::set<int>& families, CrossingTable& T) {
  auto position = [&](int f, int j, int v) {
    auto vs = arc_vertices(D, D.fam[f][j]);
    return static_cast<double>(std::find(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (auto& rc : all) {
    if (rc.ambient != ambient || !families.count(rc.over_family) || !families.count(rc.under_family)) continue;
    T.add(rc.over_family, rc.over_index, position(rc.over_family, rc.over_index, rc.vertex), rc.under_family,
          rc.under_index, position(rc.under_family, rc.under_index, rc.vertex), rc.sign);
    ++T.vertex_crossings;
  }
}

double orient2(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

// Arcs on different surfaces of one ambient also cross where the surfaces,
// laid over one another, overlap. The ambient is an open book with the
// surfaces as pages in the order `pages`; every lies-above rule puts the
// earlier page on top, so a crossing between pages goes over on the earlier
// one. Pages are drawn as harmonic disks on a shared binding circle, each
// nudged by its own tiny translation so that coincident drawings separate.
// An arc leaving one page for the next passes around the binding, where no
// other arc comes near.
void add_overlay_crossings(const Diagram& D, const ShadowIndex& X, const std::set<int>& families,
                           const std::array<int, 3>& pages, int orient_sign, CrossingTable& T) {
  std::map<int, std::map<int, Point>> at;
  try {
    auto ring = binding_layout(D, pages[0]);
    for (int t : pages) at[t] = disk_embedding(D, t, &ring);
  } catch (const TopologyError& e) {
    if (e.kind() != "NotADisk") throw;
    throw TopologyError("NotStandardized", e.what());
  }
  std::map<int, int> depth;
  for (int p = 0; p < 3; ++p) depth[pages[p]] = p;

  struct Seg {
    Point a, b;
    int family, index, page;  // page -1: the step around the binding
    double pos;
  };
  std::vector<Seg> raw;
  double shortest = 1;
  for (int f : families)
    for (int j = 0; j < static_cast<int>(D.fam[f].size()); ++j) {
      const auto& w = D.fam[f][j];
      for (int k = 0; k < static_cast<int>(w.sides.size()); ++k) {
        int s = w.sides[k], t = X.edge_tag(s >> 1);
        if (!depth.count(t)) throw TopologyError("MalformedShadow", arc_name(f, j) + " leaves its surfaces");
        const Point &a = at[t].at(D.tail(s)), &b = at[t].at(D.head(s));
        shortest = std::min(shortest, std::hypot(b.x - a.x, b.y - a.y));
        raw.push_back({a, b, f, j, t, static_cast<double>(k)});
      }
    }
  const double eta = shortest * 1e-3;
  auto shift = [&](Point p, int page) {
    int d = depth[page];
    return Point{p.x + d * eta * std::cos(0.7 + 2.1 * d), p.y + d * eta * std::sin(0.7 + 2.1 * d)};
  };
  std::vector<Seg> segs;
  for (size_t k = 0; k < raw.size(); ++k) {
    Seg g = raw[k];
    g.a = shift(g.a, g.page);
    g.b = shift(g.b, g.page);
    if (!segs.empty() && segs.back().family == g.family && segs.back().index == g.index && segs.back().page != g.page)
      segs.push_back({segs.back().b, g.a, g.family, g.index, -1, g.pos});
    segs.push_back(g);
  }
  const double tol = 1e-14;
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j) {
      const Seg &p = segs[i], &q = segs[j];
      if (p.page == q.page && p.page >= 0) continue;
      bool same_arc = p.family == q.family && p.index == q.index;
      if ((p.page < 0 || q.page < 0) && same_arc) continue;
      if (std::max(p.a.x, p.b.x) < std::min(q.a.x, q.b.x) || std::max(q.a.x, q.b.x) < std::min(p.a.x, p.b.x) ||
          std::max(p.a.y, p.b.y) < std::min(q.a.y, q.b.y) || std::max(q.a.y, q.b.y) < std::min(p.a.y, p.b.y))
        continue;
      double o1 = orient2(p.a, p.b, q.a), o2 = orient2(p.a, p.b, q.b);
      double o3 = orient2(q.a, q.b, p.a), o4 = orient2(q.a, q.b, p.b);
      if (std::abs(o1) < tol || std::abs(o2) < tol || std::abs(o3) < tol || std::abs(o4) < tol)
        throw TopologyError("DegenerateOverlay", arc_name(p.family, p.index) + " and " + arc_name(q.family, q.index) +
                                                     " touch when the surfaces are overlaid");
      if ((o1 > 0) == (o2 > 0) || (o3 > 0) == (o4 > 0)) continue;
      if (p.page < 0 || q.page < 0)
        throw TopologyError("DegenerateOverlay", "an arc crosses the step of " +
                                                     arc_name(p.page < 0 ? p.family : q.family, p.page < 0 ? p.index : q.index) +
                                                     " around the binding");
      double tp = o3 / (o3 - o4), tq = o1 / (o1 - o2);
      bool p_over = depth[p.page] < depth[q.page];
      const Seg &o = p_over ? p : q, &u = p_over ? q : p;
      double to = p_over ? tp : tq, tu = p_over ? tq : tp;
      double c = (o.b.x - o.a.x) * (u.b.y - u.a.y) - (o.b.y - o.a.y) * (u.b.x - u.a.x);
      T.add(o.family, o.index, o.pos + to, u.family, u.index, u.pos + tu, (c > 0 ? 1 : -1) * orient_sign);
    }
}

// Link diagram of traced loops. Crossings are numbered in order of first
// traversal; signs follow the traversal directions.
LinkDiagram link_from_loops(const Diagram& D, const std::vector<std::vector<ArcStep>>& loops, CrossingTable T) {
  (void)D;
  LinkDiagram L;
  std::map<int, int> id;
  std::map<std::pair<int, int>, int> direction;  // (crossing, over?) -> traversal direction
  std::vector<int> order;
  for (auto& loop : loops) {
    std::vector<int> comp;
    for (auto& st : loop) {
      auto events = T.on[{st.family, st.index}];
      std::sort(events.begin(), events.end(), [&](const ArcEvent& a, const ArcEvent& b) {
        return st.forward ? a.pos < b.pos : a.pos > b.pos;
      });
      for (auto& ev : events) {
        auto [it, fresh] = id.insert({ev.crossing, static_cast<int>(id.size())});
        if (fresh) order.push_back(ev.crossing);
        direction[{ev.crossing, ev.over ? 1 : 0}] = st.forward ? 1 : -1;
        comp.push_back(ev.over ? it->second + 1 : -(it->second + 1));
      }
    }
    L.components.push_back(std::move(comp));
  }
  for (int c : order) L.signs.push_back(T.sign[c] * direction[{c, 1}] * direction[{c, 0}]);
  check_link(L);
  return L;
}

// The link of `loops` in one ambient: vertex crossings resolved there plus
// the crossings between pages, reduced by Reidemeister I and II moves.
LinkDiagram ambient_link(const Diagram& D, const std::vector<std::vector<ArcStep>>& loops, int ambient,
                         const std::set<int>& families, const std::array<int, 3>& pages,
                         const OrientationAssignment& orient) {
  ShadowIndex X(D);
  CrossingTable T;
  PseudoShadowDiagram SD;
  static_cast<Diagram&>(SD) = D;
  add_vertex_crossings(D, resolve_crossings(SD, orient), ambient, families, T);
  add_overlay_crossings(D, X, families, pages, orient.sign, T);
  auto raw = link_from_loops(D, loops, T);
  auto L = simplify(raw);
  L.meta["crossings.traced"] = std::to_string(raw.num_crossings());
  L.meta["crossings.vertex"] = std::to_string(T.vertex_crossings);
  return L;
}

std::vector<long long> loop_chain(const Realization& R, const Walk& w) {
  std::vector<long long> z(R.complex.ranks[1], 0);
  for (int s : w.sides) {
    int c = R.edge_index.at(s >> 1);
    if (c < 0) throw TopologyError("OpenStrand", "loop leaves the sector");
    z[c] += (s & 1) ? -1 : 1;
  }
  return z;
}

}  // namespace

PseudoTrisectionDiagram shadow_base(const PseudoShadowDiagram& SD) {
  PseudoTrisectionDiagram B;
  static_cast<Diagram&>(B) = SD;
  for (int f = 0; f < kFamilies; ++f)
    if (is_shadow(f)) B.fam[f].clear();
  B.bridge.clear();
  B.flags.clear();
  return B;
}

CheckReport validate_shadow(const PseudoShadowDiagram& SD) {
  CheckReport rep;
  auto base = shadow_base(SD);
  auto br = validate_ptri(base);
  for (auto& f : br.failures) rep.fail("base: " + f);
  if (!br.ok) return rep;

  const Diagram& D = SD;
  ShadowIndex X(D);
  std::set<int> bridge;
  for (int b : D.bridge) {
    if (!bridge.insert(b).second) rep.fail("bridge point " + std::to_string(b) + " listed twice");
    if (X.vertex_surface(b) < 0) rep.fail("bridge point " + std::to_string(b) + " is not interior to one surface");
  }
  if (!rep.ok) return rep;

  std::map<int, std::vector<int>> ends_at;  // vertex -> families of arc ends
  std::map<int, int> binding_hits;
  for (int f = 0; f < kFamilies; ++f) {
    if (!is_shadow(f)) continue;
    const auto allowed = family_surfaces(f);
    for (int j = 0; j < static_cast<int>(D.fam[f].size()); ++j) {
      const auto& w = D.fam[f][j];
      const std::string nm = arc_name(f, j);
      if (w.closed || w.sides.empty()) {
        rep.fail(nm + " is not an arc");
        continue;
      }
      try {
        check_walk(D, w);
      } catch (const TopologyError& e) {
        rep.fail(nm + ": " + e.what());
        continue;
      }
      auto vs = arc_vertices(D, w);
      if (std::set<int>(vs.begin(), vs.end()).size() != vs.size()) {
        rep.fail(nm + " is not simple");
        continue;
      }
      for (int s : w.sides) {
        int t = X.edge_tag(s >> 1);
        if (t != allowed[0] && t != allowed[1]) {
          rep.fail(nm + " runs along edge " + std::to_string(s >> 1) + " outside its surfaces");
          break;
        }
      }
      for (int v : {vs.front(), vs.back()}) {
        if (!bridge.count(v)) rep.fail(nm + " ends at vertex " + std::to_string(v) + ", not a bridge point");
        ends_at[v].push_back(f);
      }
      for (size_t p = 1; p + 1 < vs.size(); ++p) {
        int v = vs[p];
        if (bridge.count(v)) rep.fail(nm + " passes through bridge point " + std::to_string(v));
        if (X.binding.count(v)) {
          ++binding_hits[v];
          if (X.edge_tag(w.sides[p - 1] >> 1) == X.edge_tag(w.sides[p] >> 1))
            rep.fail(nm + " touches the binding at vertex " + std::to_string(v) + " without crossing it");
        }
      }
    }
  }
  for (auto [v, n] : binding_hits)
    if (n > 1) rep.fail("binding vertex " + std::to_string(v) + " is crossed by " + std::to_string(n) + " arcs");
  for (int b : bridge) {
    int t = X.vertex_surface(b);
    std::vector<int> want = t == kCentral ? std::vector<int>{fam_tau(1), fam_tau(2), fam_tau(3)}
                                          : std::vector<int>{fam_tau(t), fam_link(t), fam_link(t - 1)};
    auto got = ends_at[b];
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (got != want) {
      std::string fams;
      for (int f : got) fams += (fams.empty() ? "" : ",") + family_name(f);
      rep.fail("bridge point " + std::to_string(b) + " has degree " + std::to_string(got.size()) + " with families {" +
               fams + "}");
    }
  }
  if (!rep.ok) return rep;

  auto passes = interior_passes(D, X);
  std::map<int, SurfaceBuild> surf;
  std::set<const CrossFlag*> matched;
  for (auto& [v, ps] : passes) {
    if (ps.size() < 2) continue;
    if (ps.size() > 2) {
      rep.fail("vertex " + std::to_string(v) + " is a multiple point of " + std::to_string(ps.size()) + " arcs");
      continue;
    }
    int t = X.vertex_surface(v);
    if (!surf.count(t)) surf.emplace(t, surface_of(D, t));
    if (!transverse(picture(surf.at(t), ps[0], ps[1])))
      rep.fail(arc_name(ps[0].family, ps[0].index) + " and " + arc_name(ps[1].family, ps[1].index) +
               " touch at vertex " + std::to_string(v) + " without crossing");
    if (ps[0].family == ps[1].family) {
      auto* fl = find_flag(D, v, ps[0].family, ps[0].index, ps[1].index);
      if (!fl)
        rep.fail("crossing of " + arc_name(ps[0].family, ps[0].index) + " and " + arc_name(ps[1].family, ps[1].index) +
                 " at vertex " + std::to_string(v) + " has no order flag");
      else
        matched.insert(fl);
    }
  }
  for (auto& fl : D.flags)
    if (!matched.count(&fl)) rep.fail("flag at vertex " + std::to_string(fl.vertex) + " marks no crossing");
  if (!rep.ok) return rep;

  std::array<int, 3> F{0, 0, 0};
  for (int i = 1; i <= 3; ++i) {
    std::vector<std::vector<ArcStep>> loops;
    try {
      loops = sector_loops(SD, i);
    } catch (const TopologyError& e) {
      rep.fail("sector " + std::to_string(i) + ": " + e.what());
      continue;
    }
    F[i - 1] = static_cast<int>(loops.size());
    auto R = realize_sector(base, sector_spec(i));
    for (size_t k = 0; k < loops.size(); ++k)
      if (!is_boundary(R.complex, loop_chain(R, loop_walk(D, loops[k]))))
        rep.fail("sector " + std::to_string(i) + " loop " + std::to_string(k) + " is not null-homologous");
    const bool bare = D.fam[fam_alpha(i)].empty() && D.fam[fam_delta(i)].empty() && D.fam[fam_alpha(i + 1)].empty();
    if (bare && !loops.empty()) {
      LinkDiagram L;
      try {
        L = sector_link(SD, i, orient_ptri(base, 0, 1));
      } catch (const TopologyError& e) {
        if (e.kind() != "NotStandardized") throw;
        rep.info.push_back("sector " + std::to_string(i) + " Jones check skipped: " + e.what());
        continue;
      }
      if (L.num_crossings() <= 12 && is_planar(L)) {
        Laurent unlink = Laurent::monomial(0);
        for (size_t k = 1; k < L.components.size(); ++k) unlink = unlink * (Laurent::monomial(1, -1) + Laurent::monomial(-1, -1));
        if (jones(L) != unlink) rep.fail("sector " + std::to_string(i) + " link has the Jones polynomial of no unlink");
      } else if (!is_planar(L)) {
        rep.fail("sector " + std::to_string(i) + " link is not planar");
      }
    }
  }
  rep.warn(
      "UNVERIFIED-TRIVIALITY: sector loops close up and are null-homologous, but the tangles are not certified "
      "trivial");
  if (rep.ok) {
    rep.info.push_back("F=" + std::to_string(F[0]) + "," + std::to_string(F[1]) + "," + std::to_string(F[2]));
    rep.info.push_back("bridge=" + std::to_string(D.bridge.size()));
  }
  return rep;
}

std::vector<std::vector<ArcStep>> sector_loops(const PseudoShadowDiagram& SD, int i) {
  return trace(SD, sector_families(i));
}

int sector_link_components(const PseudoShadowDiagram& SD, int i) {
  return static_cast<int>(sector_loops(SD, i).size());
}

int surface_euler_characteristic(const PseudoShadowDiagram& SD) {
  int B = static_cast<int>(SD.bridge.size());
  if (B % 2 != 0) throw TopologyError("OddBridgeCount", std::to_string(B) + " bridge points");
  int F = 0;
  for (int i = 1; i <= 3; ++i) F += sector_link_components(SD, i);
  return F - B / 2;
}

OrientabilityResult orientability(const PseudoShadowDiagram& SD) {
  const Diagram& D = SD;
  ShadowIndex X(D);
  OrientabilityResult out;
  std::map<int, std::vector<int>> adj;  // vertex -> edge ids
  for (int f = 0; f < kFamilies; ++f) {
    if (!is_shadow(f)) continue;
    for (auto& w : D.fam[f]) {
      if (w.sides.empty()) continue;
      auto vs = arc_vertices(D, w);
      int last = vs.front();
      for (size_t p = 1; p < vs.size(); ++p) {
        if (p + 1 < vs.size() && !X.binding.count(vs[p])) continue;
        out.edges.push_back({last, vs[p]});
        last = vs[p];
      }
    }
  }
  for (int e = 0; e < static_cast<int>(out.edges.size()); ++e) {
    adj[out.edges[e].first].push_back(e);
    if (out.edges[e].second != out.edges[e].first) adj[out.edges[e].second].push_back(e);
  }
  auto other = [&](int e, int v) { return out.edges[e].first == v ? out.edges[e].second : out.edges[e].first; };
  // two-colouring
  for (auto& [s, _] : adj) {
    if (out.label.count(s)) continue;
    out.label[s] = 1;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int e : adj[v]) {
        int w = other(e, v);
        if (!out.label.count(w)) {
          out.label[w] = -out.label[v];
          q.push_back(w);
        } else if (out.label[w] == out.label[v]) {
          out.orientable = false;
        }
      }
    }
  }
  if (out.orientable) return out;
  out.label.clear();
  // shortest odd cycle: BFS from every vertex
  size_t best = SIZE_MAX;
  for (auto& [s, _] : adj) {
    std::map<int, int> dist, parent;
    dist[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int e : adj[v]) {
        int w = other(e, v);
        if (!dist.count(w)) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push_back(w);
        }
      }
    }
    for (auto& [a, b] : out.edges) {
      if (!dist.count(a) || !dist.count(b) || dist[a] != dist[b]) continue;
      size_t len = 2 * dist[a] + 1;
      if (len >= best) continue;
      std::vector<int> pa, pb;
      for (int v = a; v != s; v = parent[v]) pa.push_back(v);
      for (int v = b; v != s; v = parent[v]) pb.push_back(v);
      std::vector<int> cyc{s};
      cyc.insert(cyc.end(), pa.rbegin(), pa.rend());
      if (a != b) cyc.insert(cyc.end(), pb.begin(), pb.end());
      if (std::set<int>(cyc.begin(), cyc.end()).size() != cyc.size()) continue;
      best = len;
      out.odd_cycle = cyc;
    }
  }
  return out;
}

std::vector<ShadowCrossing> shadow_crossings(const PseudoShadowDiagram& SD) {
  ShadowIndex X(SD);
  std::vector<ShadowCrossing> out;
  for (auto& [v, ps] : interior_passes(SD, X)) {
    if (ps.size() != 2) continue;
    out.push_back({v, X.vertex_surface(v), ps[0].family, ps[0].index, ps[1].family, ps[1].index});
  }
  return out;
}

std::vector<ResolvedCrossing> resolve_crossings(const PseudoShadowDiagram& SD, const OrientationAssignment& orient) {
  const Diagram& D = SD;
  require_orientation(D, orient);
  ShadowIndex X(D);
  std::map<int, SurfaceBuild> surf;
  std::vector<ResolvedCrossing> out;
  for (auto& [v, ps] : interior_passes(D, X)) {
    if (ps.size() != 2) continue;
    const Pass &a = ps[0], &b = ps[1];
    int t = X.vertex_surface(v);
    if (!surf.count(t)) surf.emplace(t, surface_of(D, t));
    std::set<int> common;
    auto fa = family_ambients(a.family), fb = family_ambients(b.family), st = surface_ambients(t);
    for (int A : fa)
      if (fb.count(A) && st.count(A)) common.insert(A);
    for (int A : common) {
      const Pass* over;
      if (a.family != b.family) {
        auto up = lies_above(a.family, b.family);
        if (!up) throw TopologyError("MalformedShadow", "no order between " + family_name(a.family) + " and " + family_name(b.family));
        over = *up ? &a : &b;
      } else {
        auto* fl = find_flag(D, v, a.family, a.index, b.index);
        if (!fl) throw TopologyError("MalformedShadow", "unflagged crossing at vertex " + std::to_string(v));
        const Pass* flagged = fl->over_index == a.index ? &a : &b;
        over = flag_kept(a.family, t, A) ? flagged : (flagged == &a ? &b : &a);
      }
      const Pass* under = over == &a ? &b : &a;
      ResolvedCrossing rc;
      rc.vertex = v;
      rc.surface = t;
      rc.ambient = A;
      rc.over_family = over->family;
      rc.over_index = over->index;
      rc.under_family = under->family;
      rc.under_index = under->index;
      rc.sign = local_sign(surf.at(t), *over, *under) * orient.sign;
      out.push_back(rc);
    }
  }
  return out;
}

LinkDiagram boundary_link(const PseudoShadowDiagram& SD, const OrientationAssignment& orient) {
  for (int i = 1; i <= 3; ++i)
    if (!SD.fam[fam_delta(i)].empty())
      throw TopologyError("NotStandardized", "the boundary carries delta curves; slide them off before lifting");
  require_orientation(SD, orient);
  auto loops = trace(SD, {fam_link(1), fam_link(2), fam_link(3)});
  auto L = ambient_link(SD, loops, 0, {fam_link(1), fam_link(2), fam_link(3)}, {1, 2, 3}, orient);
  L.name = SD.name + "_boundary";
  return L;
}

LinkDiagram boundary_link(const PseudoShadowDiagram& SD) { return boundary_link(SD, orient_ptri(shadow_base(SD), 0, 1)); }

LinkDiagram sector_link(const PseudoShadowDiagram& SD, int i, const OrientationAssignment& orient) {
  i = cyc(i);
  if (!SD.fam[fam_alpha(i)].empty() || !SD.fam[fam_delta(i)].empty() || !SD.fam[fam_alpha(i + 1)].empty())
    throw TopologyError("NotStandardized", "sector " + std::to_string(i) + " carries curves");
  require_orientation(SD, orient);
  auto L = ambient_link(SD, sector_loops(SD, i), i, {fam_tau(i), fam_tau(i + 1), fam_link(i)},
                        {i, cyc(i + 1), kCentral}, orient);
  L.name = SD.name + "_X" + std::to_string(i);
  return L;
}

std::vector<int> sector_pairings(const PseudoShadowDiagram& K, const std::vector<LinkDiagram>& lifts) {
  if (lifts.size() != 3) throw TopologyError("BadPartition", "need one lifted link per sector");
  std::vector<int> out;
  for (int i = 1; i <= 3; ++i) {
    const auto& L = lifts[i - 1];
    check_link(L);
    if (L.partition.size() != L.components.size())
      throw TopologyError("BadPartition", "sector " + std::to_string(i) + " lift is not partitioned");
    std::vector<int> ks, es;
    for (int c = 0; c < static_cast<int>(L.components.size()); ++c) {
      if (L.partition[c] == "K")
        ks.push_back(c);
      else if (L.partition[c] == "E")
        es.push_back(c);
      else
        throw TopologyError("BadPartition", "component label '" + L.partition[c] + "'");
    }
    if (static_cast<int>(ks.size()) != sector_link_components(K, i))
      throw TopologyError("BadPartition", "sector " + std::to_string(i) + " lift has " + std::to_string(ks.size()) +
                                              " K components, the shadow has " +
                                              std::to_string(sector_link_components(K, i)) + " loops");
    int s = 0;
    for (int a : ks)
      for (int b : es) s += linking_number(L, a, b);
    out.push_back(s);
  }
  return out;
}

int intersection_pairing(const PseudoShadowDiagram& K, const std::vector<LinkDiagram>& lifts) {
  int s = 0;
  for (int x : sector_pairings(K, lifts)) s += x;
  return s;
}

}  // namespace trisect
