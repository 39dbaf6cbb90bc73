#pragma once

#include <map>
#include <string>
#include <vector>

#include "trisect/complex.hpp"
#include "trisect/link.hpp"
#include "trisect/ptri.hpp"

namespace trisect {

// A pseudo-shadow diagram is a pseudo-trisection diagram whose tau and L
// families hold open walks: tau_i on sigma_i and sigma_C, L_i on sigma_i and
// sigma_{i+1}. Arc endpoints are the bridge points (Diagram::bridge). Arcs
// cross the binding at binding vertices and cross each other at shared
// interior vertices; a crossing of two arcs of one family needs a CrossFlag.
// Arcs are simple. The alpha and delta curves play no part in crossings.

// The underlying pseudo-trisection (arcs, bridge points and flags dropped).
PseudoTrisectionDiagram shadow_base(const PseudoShadowDiagram& SD);

// Structural checks, loop closure and null-homology of every sector loop.
// Where a sector is a bare S3 (no alpha or delta curves on it) the sector
// link is also compared against the unlink by its Jones polynomial. Unlink
// triviality itself is not certified: a warning beginning
// "UNVERIFIED-TRIVIALITY" is always emitted.
CheckReport validate_shadow(const PseudoShadowDiagram& SD);

// One arc traversed in a given direction.
struct ArcStep {
  int family = 0, index = 0;
  bool forward = true;
  bool operator==(const ArcStep&) const = default;
};

// Closed loops of tau_i, tau_{i+1} and L_i joined at bridge points.
std::vector<std::vector<ArcStep>> sector_loops(const PseudoShadowDiagram& SD, int i);  // OpenStrand
int sector_link_components(const PseudoShadowDiagram& SD, int i);
// F - |B| / 2 with F the total number of sector loops.
int surface_euler_characteristic(const PseudoShadowDiagram& SD);  // OddBridgeCount

// Two-colouring of the arc graph whose vertices are bridge points and binding
// crossings. label[v] = +1 marks a source, -1 a sink; orienting every edge
// from its source end makes each vertex a source or a sink. Otherwise
// odd_cycle lists the vertices of a shortest odd cycle.
struct OrientabilityResult {
  bool orientable = true;
  std::map<int, int> label;
  std::vector<int> odd_cycle;
  // edges of the graph as vertex pairs, for inspection
  std::vector<std::pair<int, int>> edges;
};
OrientabilityResult orientability(const PseudoShadowDiagram& SD);

// A crossing of two arcs as drawn.
struct ShadowCrossing {
  int vertex = 0, surface = 0;
  int family_a = 0, index_a = 0, family_b = 0, index_b = 0;
};
std::vector<ShadowCrossing> shadow_crossings(const PseudoShadowDiagram& SD);

// A crossing lifted into one ambient 3-manifold: 0 is the boundary Y, i the
// sector boundary dX_i. The sign is for the arcs' stored directions, taken in
// the right-handed frame of the surface orientation chosen by `orient`.
struct ResolvedCrossing {
  int vertex = 0, surface = 0, ambient = 0;
  int over_family = 0, over_index = 0, under_family = 0, under_index = 0;
  int sign = 1;
  bool operator==(const ResolvedCrossing&) const = default;
};
// Over/under follows the lies-above order between families:
//   L_{i-1} over L_i, tau_i over L_i, L_i over tau_{i+1}, tau_{i+1} over tau_i.
// Flagged crossings of one family are kept or reversed:
//   L_i   in sigma_{i+1}: kept            in sigma_i: reversed
//   tau_i in (dX_i, sigma_i), (dX_{i-1}, sigma_C): kept
//   tau_i in (dX_i, sigma_C), (dX_{i-1}, sigma_i): reversed
// A crossing appears once per ambient that contains both arcs.
std::vector<ResolvedCrossing> resolve_crossings(const PseudoShadowDiagram& SD, const OrientationAssignment& orient);

// The boundary link traced through L_1, L_2, L_3. Needs a boundary with no
// delta curves, so Y is S3 split into three balls (NotStandardized
// otherwise). Components start at the lowest-numbered unused L arc in its
// stored direction.
LinkDiagram boundary_link(const PseudoShadowDiagram& SD, const OrientationAssignment& orient);
LinkDiagram boundary_link(const PseudoShadowDiagram& SD);  // orientation from binding component 0

// The loops of sector i as a link in dX_i. Needs alpha_i, delta_i and
// alpha_{i+1} empty (NotStandardized otherwise).
LinkDiagram sector_link(const PseudoShadowDiagram& SD, int i, const OrientationAssignment& orient);

// Sum over sectors of the linking numbers between K-side and E-side
// components of each lifted link. Each lift labels its components "K" or "E";
// the K-side count must equal the sector loop count of `K` (BadPartition).
std::vector<int> sector_pairings(const PseudoShadowDiagram& K, const std::vector<LinkDiagram>& lifts);
int intersection_pairing(const PseudoShadowDiagram& K, const std::vector<LinkDiagram>& lifts);

}  // namespace trisect
