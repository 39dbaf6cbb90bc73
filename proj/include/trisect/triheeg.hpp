#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "trisect/complex.hpp"

namespace trisect {

struct TrisectionIndices3 {
  std::array<int, 3> y{0, 0, 0};
  std::array<int, 3> p{0, 0, 0};
  int b = 0;
  bool operator==(const TrisectionIndices3&) const = default;
};

CheckReport validate_triheeg(const TripleHeegaardDiagram& D);
TrisectionIndices3 indices_3(const TripleHeegaardDiagram& D);
int complexity_3(const TripleHeegaardDiagram& D);
std::vector<AbelianGroup> realize_homology_3(const TripleHeegaardDiagram& D);

// Moves. Sector indices are 1..3.
TripleHeegaardDiagram stabilize_3(const TripleHeegaardDiagram& D, int i, const Walk& arc);
TripleHeegaardDiagram heegaard_stabilize_3(const TripleHeegaardDiagram& D, int i, int face);
// Band-sum curve `slider` of delta_i with `over` along the guide walk, which
// runs from a vertex of slider to a vertex of over.
TripleHeegaardDiagram handleslide_3(const TripleHeegaardDiagram& D, int i, int slider, int over, const Walk& guide);
TripleHeegaardDiagram connected_sum_3(const TripleHeegaardDiagram& D1, const TripleHeegaardDiagram& D2, int q1, int q2,
                                      int rotation);

// ---------------------------------------------------------------------------
// Building blocks shared with the pseudo-trisection moves.

// Structural checks on a set of surfaces sharing one binding.
void check_surfaces(const Diagram& D, const std::vector<int>& tags, CheckReport& rep);
// Walk checks plus the cut-system check on the family's glued pair.
void check_family(const Diagram& D, int f, CheckReport& rep);
int surface_genus(const Diagram& D, int tag);
// Band-sum curve `slider` of family f with `over` along `guide`.
Diagram handleslide(const Diagram& D, int f, int slider, int over, const Walk& guide);
int binding_count(const Diagram& D, int tag);

// Where a band move left its three band copies (face ids) and new curves.
struct BandSite {
  int i = 1;
  std::vector<int> next_faces, next2_faces, central_faces;  // copies in sigma_{i+1}, sigma_{i+2}, sigma_C
  int gamma = -1;                                          // index in delta_{i+1}
  int companion_next = -1, companion_next2 = -1;           // indices in alpha_{i+1}, alpha_{i+2}
};

struct BandResult {
  Diagram D;
  BandSite site;
};

// Remove a band around `arc` (a neat arc in sigma_i) and attach copies to the
// other sector surfaces, and to sigma_C when `central` is set.
BandResult band_surgery(const Diagram& D, int i, const Walk& arc, bool central);

// Replace a face by a one-holed torus (a triangulated 5x5 grid with the
// square at (4, 4) removed). Curves on the handle: meridians x = 1..3,
// longitudes y = 1..3, and diagonals through (t, t + offset) for offsets 2, 3.
constexpr int kHandleSize = 5;
using HandleGrid = std::array<std::array<int, kHandleSize>, kHandleSize>;
HandleGrid attach_handle(Diagram& D, int face);
Walk handle_meridian(const Diagram& D, const HandleGrid& g, int x);
Walk handle_longitude(const Diagram& D, const HandleGrid& g, int y);
Walk handle_diagonal(const Diagram& D, const HandleGrid& g, int offset);

// Orient a surface coherently and match the binding direction of the others.
void reorient_surface(Diagram& D, int tag);

// Boundary connected sum along binding circles q1, q2; D2's sector j is
// placed at sector j - rotation.
Diagram boundary_sum(const Diagram& D1, const Diagram& D2, int q1, int q2, int rotation);

// A closed walk on surfaces a and b that crosses `w` exactly once and avoids
// the vertices in `avoid`.
std::optional<Walk> find_dual_curve(const Diagram& D, int a, int b, const Walk& w, const std::set<int>& avoid);

// Move sites. Neat non-separating arcs in sigma_i with endpoints off every
// curve, found by seeded random self-avoiding walks (deterministic per seed).
std::vector<Walk> neat_arcs(const Diagram& D, int i, int count, unsigned seed = 1);
// Shortest guide from curve `slider` to curve `over` of family f that stays in
// the interior of the family's surfaces and misses the family's other curves.
std::optional<Walk> find_guide(const Diagram& D, int f, int slider, int over);

}  // namespace trisect
