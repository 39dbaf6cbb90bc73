#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisect {

// All library failures carry a short machine-readable kind ("MalformedMap",
// "SeparatingArc", ...) next to the human message.
class TopologyError : public std::runtime_error {
 public:
  TopologyError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  std::vector<std::string> info;

  void fail(const std::string& m) {
    ok = false;
    failures.push_back(m);
  }
  void warn(const std::string& m) { warnings.push_back(m); }
  std::string first_failure() const { return failures.empty() ? "" : failures.front(); }
};

// A boundary circle lists the surface-side darts of its edges in boundary
// order (surface on the left); position k is the tail of darts[k].
struct BoundaryCircle {
  int label = 0;
  std::vector<int> darts;
};

// Oriented map with marked hole faces.
//
// Darts come in opposite pairs. next[d] is the counterclockwise successor of d
// around its tail vertex. Faces are orbits of phi(d) = next^{-1}(opposite(d)).
// Every boundary edge has one surface-side dart and one hole dart, and the
// hole darts of one boundary circle form a single face orbit.
class CombinatorialSurface {
 public:
  std::vector<int> opposite;
  std::vector<int> next;
  std::vector<int> vertex_of;
  std::vector<char> hole;
  std::vector<BoundaryCircle> boundary;

  CombinatorialSurface() = default;

  // Recompute derived tables; throws MalformedMap on bad input.
  void finalize();

  int num_darts() const { return static_cast<int>(opposite.size()); }
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return num_darts() / 2; }
  // Non-hole faces.
  int num_faces() const { return static_cast<int>(faces_.size()); }

  int tail(int d) const { return vertex_of[d]; }
  int head(int d) const { return vertex_of[opposite[d]]; }
  int prev(int d) const { return prev_[d]; }
  int phi(int d) const { return prev_[opposite[d]]; }
  int face_of(int d) const { return face_of_[d]; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  // Darts leaving v, counterclockwise, starting at the smallest dart.
  std::vector<int> rotation(int v) const;
  bool on_boundary(int v) const { return on_boundary_[v]; }
  int edge_of(int d) const { return std::min(d, opposite[d]); }

 private:
  std::vector<int> prev_;
  std::vector<int> face_of_;
  std::vector<std::vector<int>> faces_;
  std::vector<char> on_boundary_;
  int num_vertices_ = 0;
};

// A closed curve or a neat arc as a dart walk (head of each dart is the tail
// of the next).
struct Curve {
  std::vector<int> darts;
  bool closed = true;
};

struct CurveSystem {
  std::string family;
  std::vector<Curve> curves;
};

struct Classification {
  int genus = 0;
  int boundary_count = 0;
  int component_count = 0;
  int euler = 0;
  bool operator==(const Classification&) const = default;
};

// Polygons over global edge ids. A side is 2*edge + r: r = 0 runs the edge
// from endpoints[0] to endpoints[1], r = 1 the other way.
inline int side_edge(int s) { return s >> 1; }
inline int side_rev(int s) { return s ^ 1; }

struct PolygonSet {
  int num_vertices = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> faces;

  int tail(int s) const { return edges[s >> 1][s & 1]; }
  int head(int s) const { return edges[s >> 1][(s & 1) ^ 1]; }
};

// Surface plus the bookkeeping back to the polygon set it came from.
struct SurfaceBuild {
  CombinatorialSurface surface;
  std::vector<int> dart_side;      // side code of every dart (hole darts too)
  std::vector<int> vertex_global;  // local vertex -> polygon-set vertex
  std::map<int, int> side_dart;    // side code -> dart

  int dart(int side) const;
};

// Build the oriented map of a polygon set. Edges used once become boundary;
// edges used twice must be used in opposite directions. Pinched vertices are
// rejected. Boundary circles are labelled by their smallest global vertex and
// start there, so surfaces sharing a binding agree on labels and positions.
SurfaceBuild build_surface(const PolygonSet& P);

// Flip faces so each connected component is coherently oriented, anchored on
// its first face. Throws MalformedMap if a component is non-orientable.
void orient_polygons(PolygonSet& P);

CombinatorialSurface standard_surface(int genus, int boundary_count);
// Meridian/longitude pairs of standard_surface's handles: curves[2k] is the
// k-th meridian, curves[2k+1] the k-th longitude; they meet once with sign +1.
CurveSystem standard_curves(int genus, int boundary_count);

Classification classify_surface(const CombinatorialSurface& S);

enum class Subdivision { EdgeMidpoint, FaceStar, FaceBarycentric };

struct SubdivisionResult {
  CombinatorialSurface surface;
  std::vector<CurveSystem> tracked;
};

SubdivisionResult subdivide(const CombinatorialSurface& S, int target, Subdivision scheme,
                            const std::vector<CurveSystem>& tracked);

CombinatorialSurface cut_along(const CombinatorialSurface& S, const CurveSystem& C);

CheckReport verify_cut_system(const CombinatorialSurface& S, const CurveSystem& C);

// Gluing record: circle a_circle of surface a to circle b_circle of surface b,
// position j of a meeting position (offset - j) of b (direction -1) or
// (offset + j) (direction +1). Direction -1 reverses the boundary orientation
// and gives an orientable result.
struct Identification {
  int a = 0, a_circle = 0, b = 0, b_circle = 0, offset = 0, direction = -1;
};

struct Assembly {
  std::vector<CombinatorialSurface> surfaces;
  std::vector<Identification> identifications;
};

struct GluedComplex {
  PolygonSet cells;
  std::vector<std::array<int, 2>> face_origin;    // (surface, face index)
  std::vector<std::array<int, 2>> edge_origin;    // (surface, dart) of one representative
  std::vector<std::array<int, 2>> vertex_origin;  // (surface, vertex)
  std::vector<std::vector<int>> dart_side;        // per surface, dart -> side code
  int euler() const;
};

GluedComplex glue_surfaces(const Assembly& A);

struct Intersection {
  int vertex = 0;
  int sign = 0;
  bool operator==(const Intersection&) const = default;
};

std::vector<Intersection> curve_intersections(const CombinatorialSurface& S, const Curve& c1,
                                              const Curve& c2);

// Checks that a curve is a walk in S, simple, and closes up when closed.
void check_curve(const CombinatorialSurface& S, const Curve& c);

}  // namespace trisect
