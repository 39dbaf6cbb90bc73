#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "trisect/homology.hpp"
#include "trisect/surfmap.hpp"

namespace trisect {

// Surface tags: 0 is the central surface, 1..3 the sector surfaces.
constexpr int kCentral = 0;
inline int cyc(int i) { return ((i - 1) % 3 + 3) % 3 + 1; }

// Curve families.
enum FamilyKind { kAlpha = 0, kDelta = 1, kTau = 2, kLink = 3 };
constexpr int kFamilies = 12;
inline int fam(FamilyKind k, int i) { return 3 * k + cyc(i) - 1; }
inline int fam_alpha(int i) { return fam(kAlpha, i); }
inline int fam_delta(int i) { return fam(kDelta, i); }
inline int fam_tau(int i) { return fam(kTau, i); }
inline int fam_link(int i) { return fam(kLink, i); }
inline FamilyKind fam_kind(int f) { return static_cast<FamilyKind>(f / 3); }
inline int fam_index(int f) { return f % 3 + 1; }
std::string family_name(int f);
int family_from_name(const std::string& name);  // -1 if unknown
// The two surfaces a family lives on.
std::array<int, 2> family_surfaces(int f);

struct Walk {
  std::vector<int> sides;
  bool closed = true;
  bool operator==(const Walk&) const = default;
};

// Which strand is drawn on top at a same-family crossing.
struct CrossFlag {
  int vertex = 0;
  int over_family = 0, over_index = 0;
  int under_family = 0, under_index = 0;
  bool operator==(const CrossFlag&) const = default;
};

// Surfaces share one polygon complex: faces carry a surface tag, curves are
// side walks. Binding edges are used once by every surface, all in the same
// direction; interior edges twice by one surface.
struct Diagram {
  PolygonSet cx;
  std::vector<int> face_tag;
  std::array<std::vector<Walk>, kFamilies> fam;
  std::vector<int> bridge;
  std::vector<CrossFlag> flags;
  std::string name;
  std::map<std::string, std::string> meta;

  int tail(int s) const { return cx.tail(s); }
  int head(int s) const { return cx.head(s); }
  std::vector<int> tags() const;  // surface tags that have faces
  std::vector<int> faces_of(int tag) const;
  int add_vertex() { return cx.num_vertices++; }
  int add_edge(int u, int v) {
    cx.edges.push_back({u, v});
    return static_cast<int>(cx.edges.size()) - 1;
  }
  int add_face(int tag, std::vector<int> sides) {
    cx.faces.push_back(std::move(sides));
    face_tag.push_back(tag);
    return static_cast<int>(cx.faces.size()) - 1;
  }
};

struct TripleHeegaardDiagram : Diagram {};
struct PseudoTrisectionDiagram : Diagram {};
struct PseudoShadowDiagram : Diagram {};

// Per-edge usage: which tags use an edge, and how often.
struct EdgeUse {
  std::vector<std::map<int, int>> count;  // edge -> tag -> uses
  std::vector<std::map<int, int>> dir;    // edge -> tag -> direction bit of last use
  bool binding(int e) const { return count[e].size() > 1 || (count[e].size() == 1 && count[e].begin()->second == 1); }
};
EdgeUse edge_use(const Diagram& D);

// The oriented map of the faces with one tag (or the reversed-a plus b glued pair).
SurfaceBuild surface_of(const Diagram& D, int tag);
SurfaceBuild glued_pair(const Diagram& D, int a, int b);
Curve to_curve(const SurfaceBuild& B, const Walk& w);
PolygonSet faces_subset(const Diagram& D, const std::vector<int>& faces, bool reversed = false);

struct BindingCircle {
  std::vector<int> sides;  // binding edges in order, as sides in binding direction
};

// Binding circles of the given surfaces; throws BindingMismatch when the
// surfaces do not share one binding.
std::vector<BindingCircle> binding_circles(const Diagram& D, const std::vector<int>& tags);
std::set<int> binding_vertices(const Diagram& D, const std::vector<int>& tags);

// Vertices of a walk (closed walks list each vertex once).
std::vector<int> walk_vertices(const Diagram& D, const Walk& w);
void check_walk(const Diagram& D, const Walk& w);
Walk reversed(const Walk& w);
// Walk through named vertices; edges looked up by endpoints (no multi-edges).
Walk walk_through(const Diagram& D, const std::vector<int>& verts, bool closed);
int find_side(const Diagram& D, int u, int v);  // -1 if no edge

// Quadrangulate every face (edge midpoints plus face centres), or only the
// faces flagged in `only`; their neighbours just gain the edge midpoints.
// Curves follow.
void refine(Diagram& D, std::vector<Walk>* extra = nullptr, const std::vector<char>* only = nullptr);
// Faces with a vertex within `radius` face-steps of `verts` (radius 1: faces
// touching verts).
std::vector<char> faces_near(const Diagram& D, const std::set<int>& verts, int radius);
// Refine the faces near the given walks (which are not updated unless they
// are also in `extra`).
void refine_near(Diagram& D, const std::vector<Walk>& around, int radius, std::vector<Walk>* extra = nullptr);
// Split one edge at a new vertex; curves follow. Returns the new vertex.
int split_edge(Diagram& D, int e);
// Drop unused vertices and edges, renumbering everything.
void compact(Diagram& D);

// Realization of three surfaces (a, b, c in cyclic order) with one family on
// each consecutive pair and balls bounded by consecutive surfaces.
struct SectorSpec {
  std::array<int, 3> surfaces;
  std::array<int, 3> families;
  std::array<BallSpec, 3> balls;
};
Realization realize_sector(const Diagram& D, const SectorSpec& spec);
std::vector<AbelianGroup> sector_homology(const Diagram& D, const SectorSpec& spec);

// Builder keyed by vertex names; faces are given as vertex cycles.
class NamedBuilder {
 public:
  int vertex(const std::string& name);
  bool has(const std::string& name) const { return ids_.count(name) > 0; }
  int id(const std::string& name) const { return ids_.at(name); }
  void face(int tag, const std::vector<std::string>& cycle);
  // a walk along existing edges
  Walk walk(const std::vector<std::string>& verts, bool closed) const;
  void curve(int family, const std::vector<std::string>& verts, bool closed = true) {
    D.fam[family].push_back(walk(verts, closed));
  }
  // Orient every surface coherently (anchored on its first face) and flip
  // whole surfaces so the binding directions agree with the first surface.
  void orient();
  Diagram D;

 private:
  std::map<std::string, int> ids_;
  std::map<std::pair<int, int>, int> edges_;
};

}  // namespace trisect
