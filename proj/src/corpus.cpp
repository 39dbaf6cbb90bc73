#include "trisect/corpus.hpp"

#include <deque>

#include "trisect/triheeg.hpp"

namespace trisect::corpus {

namespace {

std::string nm(const std::string& a, int k) { return a + std::to_string(k); }

// Disks on `tags` sharing one binding circle of n vertices (b0..b{n-1}).
NamedBuilder disks(const std::vector<int>& tags, int n = 4) {
  NamedBuilder B;
  for (int t : tags)
    for (int k = 0; k < n; ++k) B.face(t, {nm("c", t), nm("b", k), nm("b", (k + 1) % n)});
  B.orient();
  return B;
}

// Annuli on `tags` between binding circles o and i; surface t has core ring m<t>_k.
NamedBuilder annuli(const std::vector<int>& tags, int n = 4) {
  NamedBuilder B;
  for (int t : tags) {
    std::string m = "m" + std::to_string(t) + "_";
    for (int k = 0; k < n; ++k) {
      int l = (k + 1) % n;
      B.face(t, {nm("o", k), nm("o", l), nm(m, l), nm(m, k)});
      B.face(t, {nm(m, k), nm(m, l), nm("i", l), nm("i", k)});
    }
  }
  B.orient();
  return B;
}

std::vector<std::string> ring(const std::string& prefix, int n) {
  std::vector<std::string> r;
  for (int k = 0; k < n; ++k) r.push_back(nm(prefix, k));
  return r;
}

int first_face(const Diagram& D, int tag) { return D.faces_of(tag).front(); }

template <class T>
T as(Diagram D) {
  T out;
  static_cast<Diagram&>(out) = std::move(D);
  return out;
}

}  // namespace

TripleHeegaardDiagram trivial_s3() {
  auto D = as<TripleHeegaardDiagram>(disks({1, 2, 3}).D);
  D.name = "trivial_s3";
  D.meta["expect.homology"] = "Z;0;0;Z";
  D.meta["expect.y"] = "0,0,0";
  D.meta["expect.b"] = "1";
  D.meta["expect.c"] = "0";
  return D;
}

TripleHeegaardDiagram s1xs2() {
  auto D = as<TripleHeegaardDiagram>(disks({1, 2, 3}).D);
  auto g = attach_handle(D, first_face(D, 2));
  D.fam[fam_delta(1)].push_back(handle_meridian(D, g, 1));
  D.fam[fam_delta(2)].push_back(handle_meridian(D, g, 2));
  D.name = "s1xs2";
  D.meta["expect.homology"] = "Z;Z;Z;Z";
  D.meta["expect.y"] = "1,1,0";
  D.meta["expect.b"] = "1";
  D.meta["expect.c"] = "2";
  return D;
}

TripleHeegaardDiagram two_s1xs2() {
  NamedBuilder B = annuli({1, 2, 3});
  for (int t = 1; t <= 3; ++t) B.curve(fam_delta(t), ring("m" + std::to_string(t) + "_", 4));
  auto D = as<TripleHeegaardDiagram>(B.D);
  D.name = "two_s1xs2";
  D.meta["expect.homology"] = "Z;Z^2;Z^2;Z";
  D.meta["expect.y"] = "1,1,1";
  D.meta["expect.b"] = "2";
  D.meta["expect.c"] = "3";
  D.meta["reading"] =
      "three annuli with every delta curve the core of one annulus; the only placement of one curve per "
      "pair that gives H1 = Z^2";
  return D;
}

TripleHeegaardDiagram t3() {
  // Boundary of a neighbourhood of the 1-skeleton of the cube complex: a
  // truncated octahedron (vertex u|w sits on edge uw next to u) with the six
  // squares replaced by three tubes. delta_1 are the tube meridians, the
  // other families are the boundaries of the three 2-cells.
  const std::vector<std::string> ax{"x", "y", "z"};
  auto V = [](const std::string& u, const std::string& w) { return u + "|" + w; };
  auto M = [](const std::string& a, const std::string& w) { return "m" + a + w; };
  NamedBuilder B;
  for (char sx : {'+', '-'})
    for (char sy : {'+', '-'})
      for (char sz : {'+', '-'}) {
        std::string u = std::string(1, sx) + "x", v = std::string(1, sy) + "y", w = std::string(1, sz) + "z";
        B.face(2, {V(u, v), V(v, u), V(v, w), V(w, v), V(w, u), V(u, w)});
      }
  const std::map<std::string, std::vector<std::string>> around{
      {"x", {"+y", "+z", "-y", "-z"}}, {"y", {"+z", "+x", "-z", "-x"}}, {"z", {"+x", "+y", "-x", "-y"}}};
  for (auto& a : ax) {
    const auto& ws = around.at(a);
    for (int k = 0; k < 4; ++k) {
      const std::string &w1 = ws[k], &w2 = ws[(k + 1) % 4];
      B.face(2, {V("+" + a, w1), V("+" + a, w2), M(a, w2), M(a, w1)});
      B.face(2, {M(a, w1), M(a, w2), V("-" + a, w2), V("-" + a, w1)});
    }
  }
  B.orient();
  for (auto& a : ax) {
    std::vector<std::string> r;
    for (auto& w : around.at(a)) r.push_back(M(a, w));
    B.curve(fam_delta(1), r);
  }
  auto cell = [&](const std::string& a, const std::string& b) {
    std::string pa = "+" + a, na = "-" + a, pb = "+" + b, nb = "-" + b;
    return B.walk({V(pa, pb), M(a, pb), V(na, pb), V(pb, na), M(b, na), V(nb, na), V(na, nb), M(a, nb), V(pa, nb),
                   V(nb, pa), M(b, pa), V(pb, pa)},
                  true);
  };
  Diagram D = B.D;
  D.fam[fam_delta(2)] = {cell("y", "z"), cell("z", "x")};
  std::vector<Walk> xyv{cell("x", "y")};
  refine(D, &xyv);
  const Walk xy = xyv[0];
  // sigma_1 is a neighbourhood of the xy cell boundary and a dual loop that
  // misses the other two; sigma_3 caps it off.
  std::set<int> avoid;
  for (auto& w : D.fam[fam_delta(2)])
    for (int v : walk_vertices(D, w)) avoid.insert(v);
  auto dual = find_dual_curve(D, 2, 2, xy, avoid);
  if (!dual) throw TopologyError("InvalidSite", "no dual loop for the T3 split");
  std::vector<Walk> extra{xy, *dual};
  for (int round = 0; round < 2; ++round) {
    const std::vector<Walk> around = extra;
    refine_near(D, around, 3, &extra);
  }
  std::set<int> core;
  for (auto& w : extra)
    for (int v : walk_vertices(D, w)) core.insert(v);
  for (size_t f = 0; f < D.cx.faces.size(); ++f)
    for (int s : D.cx.faces[f])
      if (core.count(D.tail(s))) {
        D.face_tag[f] = 1;
        break;
      }
  reorient_surface(D, 1);
  auto circles = binding_circles(D, {1, 2});
  for (auto& c : circles) D.add_face(3, c.sides);
  D.fam[fam_delta(3)] = {extra[0]};
  compact(D);
  auto out = as<TripleHeegaardDiagram>(std::move(D));
  out.name = "t3";
  out.meta["expect.homology"] = "Z;Z^3;Z^3;Z";
  out.meta["expect.y"] = "3,2,1";
  out.meta["expect.b"] = "1";
  out.meta["expect.c"] = "6";
  out.meta["reading"] =
      "standard genus-3 splitting of the cube complex; sigma_1 is a one-holed torus around one 2-cell "
      "boundary, sigma_2 the genus-2 rest, sigma_3 a disk";
  return out;
}

// ---------------------------------------------------------------------------
// Pseudo-trisection diagrams

namespace {

void expect4(Diagram& D, const std::string& g, const std::string& k, const std::string& y, const std::string& b,
             const std::string& chi, const std::string& c, const std::string& c_pair) {
  D.meta["expect.g"] = g;
  D.meta["expect.k"] = k;
  D.meta["expect.y"] = y;
  D.meta["expect.b"] = b;
  D.meta["expect.chi"] = chi;
  D.meta["expect.c"] = c;
  D.meta["expect.c_pair"] = c_pair;
}

}  // namespace

PseudoTrisectionDiagram trivial_b4() {
  auto D = as<PseudoTrisectionDiagram>(disks({0, 1, 2, 3}).D);
  D.name = "trivial_b4";
  expect4(D, "0", "0,0,0", "0,0,0", "1", "1", "0", "0");
  return D;
}

namespace {

// Four disks with a handle on sigma_2 carrying parallel meridians in delta_1
// and delta_2, plus one alpha_2 curve chosen by `alpha`.
PseudoTrisectionDiagram genus_one_boundary(bool longitude) {
  auto D = as<PseudoTrisectionDiagram>(disks({0, 1, 2, 3}).D);
  auto g = attach_handle(D, first_face(D, 2));
  D.fam[fam_delta(1)].push_back(handle_meridian(D, g, 1));
  D.fam[fam_delta(2)].push_back(handle_meridian(D, g, 2));
  D.fam[fam_alpha(2)].push_back(longitude ? handle_longitude(D, g, 1) : handle_meridian(D, g, 3));
  return D;
}

}  // namespace

PseudoTrisectionDiagram s1xb3() {
  auto D = genus_one_boundary(false);
  D.name = "s1xb3";
  expect4(D, "0", "1,1,0", "1,1,0", "1", "0", "1", "3");
  return D;
}

PseudoTrisectionDiagram s2xd2() {
  auto D = genus_one_boundary(true);
  D.name = "s2xd2";
  expect4(D, "0", "0,0,0", "1,1,0", "1", "2", "1", "3");
  return D;
}

PseudoTrisectionDiagram cp2_minus_b4() {
  auto D = as<PseudoTrisectionDiagram>(disks({0, 1, 2, 3}).D);
  auto g = attach_handle(D, first_face(D, kCentral));
  D.fam[fam_alpha(1)].push_back(handle_longitude(D, g, 1));
  D.fam[fam_alpha(2)].push_back(handle_meridian(D, g, 1));
  D.fam[fam_alpha(3)].push_back(handle_diagonal(D, g, 2));
  D.name = "cp2_minus_b4";
  expect4(D, "1", "0,0,0", "0,0,0", "1", "2", "1", "1");
  return D;
}

PseudoTrisectionDiagram two_s2xd2() {
  NamedBuilder B = annuli({0, 1, 2, 3});
  for (int t = 1; t <= 3; ++t) {
    B.curve(fam_delta(t), ring("m" + std::to_string(t) + "_", 4));
    B.curve(fam_alpha(t), {nm("o", t), nm("m" + std::to_string(t) + "_", t), nm("i", t), nm("m0_", t)});
  }
  auto D = as<PseudoTrisectionDiagram>(B.D);
  D.name = "two_s2xd2";
  expect4(D, "0", "0,0,0", "1,1,1", "2", "3", "2", "5");
  D.meta["reading"] =
      "four annuli; delta_i is the core of sigma_i and alpha_i crosses sigma_C and sigma_i once each. The "
      "index formulas force k = (0,0,0), so each sector realizes S3";
  return D;
}

// ---------------------------------------------------------------------------
// Pseudo-shadow diagrams

namespace {

// Four polar-grid disks (tags 0..3) on one binding circle b0..b{n-1}. A
// position (r, k) is the centre for r = 0, ring r for 1 <= r <= rings and the
// binding vertex k for r = rings + 1.
class Polar {
 public:
  using Pt = std::pair<int, int>;

  Polar(int n, int rings) : n_(n), rings_(rings) {
    for (int t = 0; t <= 3; ++t)
      for (int k = 0; k < n; ++k) {
        B.face(t, {at(t, {0, 0}), at(t, {1, k}), at(t, {1, k + 1})});
        for (int r = 1; r <= rings; ++r)
          B.face(t, {at(t, {r, k}), at(t, {r + 1, k}), at(t, {r + 1, k + 1}), at(t, {r, k + 1})});
      }
    B.orient();
  }

  int binding() const { return rings_ + 1; }

  std::string at(int t, Pt p) const {
    auto [r, k] = p;
    k = ((k % n_) + n_) % n_;
    if (r == 0) return "p" + std::to_string(t);
    if (r > rings_) return nm("b", k);
    return "s" + std::to_string(t) + "_" + std::to_string(r) + "_" + std::to_string(k);
  }

  void bridge(int t, Pt p) {
    auto v = at(t, p);
    used_.insert(v);
    B.D.bridge.push_back(B.id(v));
  }

  // An explicit path; every vertex becomes used.
  std::vector<std::string> line(int t, const std::vector<Pt>& pts) {
    std::vector<std::string> out;
    for (auto& p : pts) out.push_back(at(t, p));
    used_.insert(out.begin(), out.end());
    return out;
  }

  // Ring r from angle a to angle b, stepping by +-1 (both ends included).
  static std::vector<Pt> arc(int r, int a, int b) {
    std::vector<Pt> out;
    for (int k = a;; k += (b >= a ? 1 : -1)) {
      out.push_back({r, k});
      if (k == b) break;
    }
    return out;
  }

  // Shortest path on surface t avoiding used vertices (the ends excepted).
  // The centre and binding vertices are only ever ends.
  std::vector<std::string> route(int t, Pt from, Pt to) {
    const std::string src = at(t, from), dst = at(t, to);
    auto key = [&](Pt p) { return at(t, p); };
    auto norm = [&](Pt p) -> Pt { return p.first == 0 ? Pt{0, 0} : Pt{p.first, ((p.second % n_) + n_) % n_}; };
    std::map<std::string, Pt> prev;
    std::deque<Pt> queue{norm(from)};
    prev[src] = norm(from);
    while (!queue.empty()) {
      Pt p = queue.front();
      queue.pop_front();
      if (key(p) == dst) break;
      if ((p.first == binding() || p.first == 0) && key(p) != src) continue;
      std::vector<Pt> nb;
      if (p.first == 0) {
        for (int k = 0; k < n_; ++k) nb.push_back({1, k});
      } else {
        // inward first, so paths drop to the inner rings before turning
        nb.push_back({p.first - 1, p.second});
        if (p.first <= rings_) {
          nb.push_back({p.first, p.second + 1});
          nb.push_back({p.first, p.second - 1});
          nb.push_back({p.first + 1, p.second});
        }
      }
      for (Pt q : nb) {
        q = norm(q);
        auto v = key(q);
        if (prev.count(v) || (used_.count(v) && v != dst)) continue;
        prev[v] = p;
        queue.push_back(q);
      }
    }
    if (!prev.count(dst)) throw TopologyError("InvalidSite", "no route from " + src + " to " + dst);
    std::vector<std::string> out{dst};
    for (Pt p = prev[dst]; out.back() != src; p = prev[key(p)]) out.push_back(key(p));
    std::reverse(out.begin(), out.end());
    used_.insert(out.begin(), out.end());
    return out;
  }

  // Join path pieces that share their end vertices.
  static std::vector<std::string> join(std::vector<std::vector<std::string>> parts) {
    std::vector<std::string> out;
    for (auto& p : parts) {
      if (!out.empty() && out.back() == p.front()) out.pop_back();
      out.insert(out.end(), p.begin(), p.end());
    }
    return out;
  }
  static std::vector<std::string> rev(std::vector<std::string> p) {
    std::reverse(p.begin(), p.end());
    return p;
  }

  void add(int family, const std::vector<std::string>& path) { B.D.fam[family].push_back(B.walk(path, false)); }

  // A central face none of whose vertices is used.
  int free_central_face() const {
    for (int f : B.D.faces_of(kCentral)) {
      bool free = true;
      for (int s : B.D.cx.faces[f]) {
        int v = B.D.tail(s);
        for (auto& u : used_)
          if (B.id(u) == v) free = false;
      }
      if (free) return f;
    }
    throw TopologyError("InvalidSite", "no free central face");
  }

  NamedBuilder B;

 private:
  int n_, rings_;
  std::set<std::string> used_;
};

// The CP2 - B4 handle on a central face away from every arc.
void cp2_handle(Polar& P) {
  Diagram& D = P.B.D;
  auto g = attach_handle(D, P.free_central_face());
  D.fam[fam_alpha(1)].push_back(handle_longitude(D, g, 1));
  D.fam[fam_alpha(2)].push_back(handle_meridian(D, g, 1));
  D.fam[fam_alpha(3)].push_back(handle_diagonal(D, g, 2));
}

void expect_shadow(Diagram& D, const std::string& F, const std::string& bridge, const std::string& chi,
                   const std::string& orientable) {
  D.meta["expect.F"] = F;
  D.meta["expect.bridge"] = bridge;
  D.meta["expect.chi"] = chi;
  D.meta["expect.orientable"] = orientable;
}

}  // namespace

PseudoShadowDiagram disk_b4_a() {
  Polar P(12, 2);
  const int out = P.binding();
  for (int t = 0; t <= 3; ++t) P.bridge(t, {0, 0});
  for (int i = 1; i <= 3; ++i) {
    int s = 4 * (i - 1);
    P.add(fam_tau(i), Polar::join({P.route(i, {0, 0}, {out, s}), P.route(kCentral, {out, s}, {0, 0})}));
    P.add(fam_link(i), Polar::join({P.route(i, {0, 0}, {out, s + 2}), P.route(cyc(i + 1), {out, s + 2}, {0, 0})}));
  }
  auto D = as<PseudoShadowDiagram>(P.B.D);
  D.name = "disk_b4_a";
  expect_shadow(D, "1,1,1", "4", "1", "true");
  D.meta["expect.boundary_link"] = "unknot";
  D.meta["reading"] = "one bridge point per surface at its centre, every arc radial";
  return D;
}

PseudoShadowDiagram disk_b4_b() {
  Polar P(12, 2);
  const int out = P.binding();
  for (int t = 1; t <= 3; ++t) P.bridge(t, {0, 0});
  P.bridge(kCentral, {1, 0});  // c1
  P.bridge(kCentral, {1, 6});  // c2
  P.bridge(kCentral, {0, 0});  // c3
  const int C = kCentral;
  P.add(fam_tau(1), Polar::join({P.route(1, {0, 0}, {out, 0}), P.line(C, {{out, 0}, {2, 0}, {1, 0}})}));
  P.add(fam_tau(1), P.line(C, {{0, 0}, {1, 6}}));
  P.add(fam_tau(2), Polar::join({P.route(2, {0, 0}, {out, 6}), P.line(C, {{out, 6}, {2, 6}, {1, 6}})}));
  P.add(fam_tau(2), P.line(C, {{0, 0}, {1, 0}}));
  P.add(fam_tau(3), Polar::join({P.route(3, {0, 0}, {out, 11}), P.line(C, {{out, 11}, {2, 11}, {1, 11}, {1, 0}})}));
  P.add(fam_tau(3), P.line(C, {{1, 6}, {1, 5}, {1, 4}, {0, 0}}));
  const int spoke[4] = {0, 2, 8, 4};
  for (int i = 1; i <= 3; ++i)
    P.add(fam_link(i),
          Polar::join({P.route(i, {0, 0}, {out, spoke[i]}), P.route(cyc(i + 1), {out, spoke[i]}, {0, 0})}));
  auto D = as<PseudoShadowDiagram>(P.B.D);
  D.name = "disk_b4_b";
  expect_shadow(D, "1,1,2", "6", "1", "true");
  D.meta["expect.boundary_link"] = "unknot";
  D.meta["reading"] =
      "three central bridge points; sector 3 closes off an extra loop formed by the tau_1 and tau_3 arcs "
      "between two of them";
  return D;
}

PseudoShadowDiagram moebius() {
  Polar P(12, 3);
  const int out = P.binding();
  const int C = kCentral;
  for (int t = 1; t <= 3; ++t) P.bridge(t, {0, 0});
  for (int j = 0; j < 3; ++j) P.bridge(C, {1, 4 * j});
  // the central triangle: tau_j from c_j to c_{j+1} along ring 1
  for (int j = 0; j < 3; ++j) P.add(fam_tau(j + 1), P.line(C, Polar::arc(1, 4 * j, 4 * j + 4)));
  // tau_{j+2} reaches c_j radially on spoke 4j
  for (int j = 0; j < 3; ++j) {
    int i = cyc(j + 2), s = 4 * j;
    P.add(fam_tau(i), Polar::join({P.route(i, {0, 0}, {out, s}), P.line(C, {{out, s}, {3, s}, {2, s}, {1, s}})}));
  }
  for (int i = 1; i <= 3; ++i) {
    int s = 4 * (i - 1) + 2;
    P.add(fam_link(i), Polar::join({P.route(i, {0, 0}, {out, s}), P.route(cyc(i + 1), {out, s}, {0, 0})}));
  }
  cp2_handle(P);
  auto D = as<PseudoShadowDiagram>(P.B.D);
  D.name = "moebius";
  expect_shadow(D, "1,1,1", "6", "0", "false");
  D.meta["expect.boundary_link"] = "unknot";
  D.meta["reading"] =
      "three central bridge points joined in a triangle by one arc of each tau family; the other tau arcs "
      "run radially, so the triangle is an odd cycle";
  return D;
}

PseudoShadowDiagram cp1() {
  Polar P(12, 3);
  const int C = kCentral;
  P.bridge(C, {1, 0});
  P.bridge(C, {1, 6});
  P.add(fam_tau(1), P.line(C, {{1, 0}, {0, 0}, {1, 6}}));
  P.add(fam_tau(2), P.line(C, Polar::arc(1, 0, 6)));
  P.add(fam_tau(3), P.line(C, Polar::arc(1, 12, 6)));
  cp2_handle(P);
  auto D = as<PseudoShadowDiagram>(P.B.D);
  D.name = "cp1";
  expect_shadow(D, "1,1,1", "2", "2", "true");
  D.meta["expect.boundary_link"] = "empty";
  D.meta["reading"] =
      "a closed sphere: three central arcs between two bridge points, one per tau family, and no binding "
      "crossings";
  return D;
}

PseudoShadowDiagram tau_kink() {
  Polar P(12, 2);
  const int out = P.binding(), C = kCentral;
  for (int t = 0; t <= 3; ++t) P.bridge(t, {0, 0});
  // tau_1 runs along ring 2 past spoke 4, where tau_2 comes in
  auto tau2 = P.line(C, {{out, 4}, {2, 4}, {1, 4}, {0, 0}});
  std::vector<Polar::Pt> t1{{out, 0}};
  for (auto& pt : Polar::arc(2, 0, 5)) t1.push_back(pt);
  t1.push_back({1, 5});
  t1.push_back({0, 0});
  auto tau1 = P.line(C, t1);
  P.add(fam_tau(1), Polar::join({P.route(1, {0, 0}, {out, 0}), tau1}));
  P.add(fam_tau(2), Polar::join({P.route(2, {0, 0}, {out, 4}), tau2}));
  P.add(fam_tau(3), Polar::join({P.route(3, {0, 0}, {out, 8}), P.route(C, {out, 8}, {0, 0})}));
  for (int i = 1; i <= 3; ++i) {
    int s = 4 * (i - 1) + 2;
    P.add(fam_link(i), Polar::join({P.route(i, {0, 0}, {out, s}), P.route(cyc(i + 1), {out, s}, {0, 0})}));
  }
  auto D = as<PseudoShadowDiagram>(P.B.D);
  D.name = "tau_kink";
  expect_shadow(D, "1,1,1", "4", "1", "true");
  return D;
}

namespace {

// Shared layout of the knotted fixtures (n = 48, six rings). Each sector
// surface holds two bridge points; the L arcs run
//   L1: b1 -> b2, b1' -> b2'   L2: b2 -> b3, b2' -> b3'   L3: b3 -> b1', b3' -> b1
// and the two L_{j-1} arcs cross once in sigma_j. `over_a[j]` puts the arc
// arriving at b_j on top there. The central surface is left to the caller.
struct KnotLayout {
  Polar P{48, 6};
  // bridge points b_j (0) and b_j' (1) on sigma_j
  std::array<std::array<Polar::Pt, 2>, 4> b{};
  // tau spokes: tau_j leaves b_j (0) and b_j' (1)
  std::array<std::array<int, 2>, 4> tau_spoke{};
  // sigma_j part of each tau arc, bridge point to binding
  std::array<std::array<std::vector<std::string>, 2>, 4> tau_part;
};

KnotLayout knot_layout(const std::array<bool, 4>& over_a) {
  KnotLayout K;
  Polar& P = K.P;
  const int out = P.binding();
  K.b = {{{}, {{{2, 40}, {2, 28}}}, {{{2, 20}, {2, 44}}}, {{{2, 4}, {2, 16}}}}};
  K.tau_spoke = {{{}, {{40, 28}}, {{14, 38}}, {{4, 16}}}};
  // L_i arcs by (source bridge, binding spoke); arc x of L_i starts at b_i^x
  const int l_spoke[4][2] = {{}, {36, 32}, {12, 8}, {0, 24}};
  // L_i arc x ends at b_{i+1}^{end[i][x]}
  const int end[4][2] = {{}, {0, 1}, {0, 1}, {1, 0}};
  // crossing gadget in sigma_j between the two L_{j-1} arcs (p < q)
  const int gp[4] = {0, 0, 32, 8}, gq[4] = {0, 24, 36, 12};
  for (int j = 1; j <= 3; ++j)
    for (int x = 0; x < 2; ++x) P.bridge(j, K.b[j][x]);
  // gadget pieces first so the router steers around them; arc A ends at
  // spoke q and B at spoke p, seen from the binding inwards.
  std::array<std::array<std::vector<std::string>, 2>, 4> incoming;  // sigma_j part of L_{j-1}, binding -> b
  std::array<int, 4> crossing{};
  for (int j = 1; j <= 3; ++j) {
    int p = gp[j], q = gq[j];
    std::vector<Polar::Pt> a{{4, p}, {5, p}};
    for (auto& pt : Polar::arc(5, p + 1, q)) a.push_back(pt);
    a.push_back({6, q});
    a.push_back({out, q});
    std::vector<Polar::Pt> bb = Polar::arc(4, q, p + 1);
    bb.push_back({5, p + 1});
    bb.push_back({6, p + 1});
    bb.push_back({6, p});
    bb.push_back({out, p});
    auto la = P.line(j, a), lb = P.line(j, bb);
    crossing[j] = P.B.id(P.at(j, {5, p + 1}));
    // which of the incoming arcs ends at b_j (x = 0): the one entering at q
    int i = cyc(j - 1);
    for (int x = 0; x < 2; ++x) {
      bool to_b = end[i][x] == 0;
      int spoke = l_spoke[i][x];
      const auto& piece = (spoke == q) ? la : lb;
      Polar::Pt pre = (spoke == q) ? Polar::Pt{4, p} : Polar::Pt{4, q};
      if ((spoke == q) != to_b) throw TopologyError("InvalidSite", "gadget does not match the L pattern");
      auto lead = P.route(j, K.b[j][end[i][x]], pre);
      incoming[j][end[i][x]] = Polar::rev(Polar::join({lead, piece}));
    }
  }
  // tau pieces, then the outgoing L pieces, shortest first
  for (int j = 1; j <= 3; ++j)
    for (int x = 0; x < 2; ++x) K.tau_part[j][x] = P.route(j, K.b[j][x], {out, K.tau_spoke[j][x]});
  for (int i = 1; i <= 3; ++i)
    for (int x = 0; x < 2; ++x) {
      auto first = P.route(i, K.b[i][x], {out, l_spoke[i][x]});
      P.add(fam_link(i), Polar::join({first, incoming[cyc(i + 1)][end[i][x]]}));
    }
  for (int j = 1; j <= 3; ++j) {
    // the arc arriving at b_j is the one leaving b_{j-1}^x with end 0
    int i = cyc(j - 1);
    int a = end[i][0] == 0 ? 0 : 1;
    CrossFlag f;
    f.vertex = crossing[j];
    f.over_family = f.under_family = fam_link(i);
    f.over_index = over_a[j] ? a : 1 - a;
    f.under_index = over_a[j] ? 1 - a : a;
    P.B.D.flags.push_back(f);
  }
  return K;
}

}  // namespace

PseudoShadowDiagram trefoil_surface() {
  KnotLayout K = knot_layout({false, true, true, true});
  Polar& P = K.P;
  const int out = P.binding(), C = kCentral;
  P.bridge(C, {2, 44});  // c0
  P.bridge(C, {2, 20});  // c1
  const Polar::Pt c[2] = {{2, 44}, {2, 20}};
  // tau_j from b_j / b_j' to c0 / c1: tau1 (c0, c1), tau2 (c1, c0), tau3 (c0, c1)
  const int target[4][2] = {{}, {0, 1}, {1, 0}, {0, 1}};
  for (int j = 1; j <= 3; ++j)
    for (int x = 0; x < 2; ++x)
      P.add(fam_tau(j), Polar::join({K.tau_part[j][x], P.route(C, {out, K.tau_spoke[j][x]}, c[target[j][x]])}));
  auto D = as<PseudoShadowDiagram>(P.B.D);
  D.name = "trefoil_surface";
  expect_shadow(D, "1,1,1", "8", "-1", "true");
  D.meta["expect.boundary_link"] = "left-handed trefoil";
  D.meta["reading"] =
      "two bridge points per surface; the L arcs form one loop crossing itself once in each sector "
      "surface, with the flags chosen for three negative crossings";
  return D;
}

PseudoShadowDiagram lht_disk() {
  KnotLayout K = knot_layout({false, true, true, true});
  Polar& P = K.P;
  const int out = P.binding(), C = kCentral;
  const Polar::Pt c[4] = {{2, 4}, {4, 20}, {4, 36}, {2, 30}};
  for (auto& p : c) P.bridge(C, p);
  // interior arcs: tau1 c2-c3, tau2 c1-c3, tau3 c2-c3
  P.add(fam_tau(2), P.route(C, c[1], c[3]));
  P.add(fam_tau(1), P.route(C, c[2], c[3]));
  P.add(fam_tau(3), P.route(C, c[2], c[3]));
  // tau1: b1-c0, b1'-c1; tau2: b2-c0, b2'-c2; tau3: b3-c0, b3'-c1
  const int target[4][2] = {{}, {0, 1}, {0, 2}, {0, 1}};
  for (int j = 1; j <= 3; ++j)
    for (int x = 0; x < 2; ++x)
      P.add(fam_tau(j), Polar::join({K.tau_part[j][x], P.route(C, {out, K.tau_spoke[j][x]}, c[target[j][x]])}));
  cp2_handle(P);
  auto D = as<PseudoShadowDiagram>(P.B.D);
  D.name = "lht_disk";
  expect_shadow(D, "2,2,2", "10", "1", "true");
  D.meta["expect.boundary_link"] = "left-handed trefoil";
  D.meta["reading"] =
      "the trefoil boundary pattern over CP2 - B4 with four central bridge points; every sector closes two "
      "loops";
  return D;
}

namespace {

LinkDiagram lift(const std::string& name, std::vector<std::vector<int>> comps, std::vector<int> signs) {
  LinkDiagram L;
  L.components = std::move(comps);
  L.signs = std::move(signs);
  L.partition = {"K", "K", "E"};
  L.name = name;
  return L;
}

}  // namespace

std::vector<LinkDiagram> lht_cp1_lifts() {
  // Components: the two lht_disk loops of the sector, then the cp1 loop.
  // X1: the E loop passes over one K loop twice (unlinked).
  auto x1 = lift("lht_cp1_x1", {{-1, -2}, {}, {1, 2}}, {1, -1});
  // X2: the E loop clasps the first K loop and passes under the second.
  auto x2 = lift("lht_cp1_x2", {{1, -2}, {3, 4}, {-1, 2, -3, -4}}, {-1, -1, 1, -1});
  // X3: the E loop clasps the second K loop.
  auto x3 = lift("lht_cp1_x3", {{}, {1, -2}, {-1, 2}}, {-1, -1});
  x1.meta["expect.lk"] = "0";
  x2.meta["expect.lk"] = "-1";
  x3.meta["expect.lk"] = "-1";
  for (auto* L : {&x1, &x2, &x3})
    L->meta["reading"] =
        "reconstructed lift; the sector 2 picture shows a clasp with one K loop and an unlinked overlap with "
        "the other, and the remaining sectors are fixed by their stated linking numbers";
  return {x1, x2, x3};
}

std::vector<Entry> all() {
  std::vector<Entry> out;
  for (auto D : {trivial_s3(), s1xs2(), two_s1xs2(), t3()}) out.push_back({D.name + ".thd", D, {}, "triheeg"});
  for (auto D : {trivial_b4(), s1xb3(), s2xd2(), cp2_minus_b4(), two_s2xd2()})
    out.push_back({D.name + ".ptd", D, {}, "ptri"});
  for (auto D : {disk_b4_a(), disk_b4_b(), trefoil_surface(), moebius(), lht_disk(), cp1()})
    out.push_back({D.name + ".shd", D, {}, "shadow"});
  for (auto& L : lht_cp1_lifts()) out.push_back({L.name + ".lnk", {}, L, "link"});
  return out;
}

}  // namespace trisect::corpus
