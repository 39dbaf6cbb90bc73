#pragma once

#include <array>
#include <string>
#include <vector>

#include "trisect/complex.hpp"
#include "trisect/triheeg.hpp"

namespace trisect {

struct TrisectionIndices4 {
  int g = 0, b = 0;
  std::array<int, 3> k{0, 0, 0}, y{0, 0, 0}, p{0, 0, 0}, h{0, 0, 0};
  int chi = 0;
  int c = 0, c_boundary = 0, c_pair = 0;
  bool operator==(const TrisectionIndices4&) const = default;
};

// Sector i: surfaces (C, i, i+1), families (alpha_i, delta_i, alpha_{i+1}),
// balls H_i, Y_i and -H_{i+1}.
SectorSpec sector_spec(int i);

// Validation runs the structural checks, the ten cut-system checks and the
// sector homology checks. On success info[0] reads "k=a,b,c".
CheckReport validate_ptri(const PseudoTrisectionDiagram& D);
// k_i from sector homology; throws InconsistentIndices if a sector is not a
// homology #^k S1 x S2.
std::array<int, 3> sector_k(const PseudoTrisectionDiagram& D);
TrisectionIndices4 indices_4(const PseudoTrisectionDiagram& D);
TripleHeegaardDiagram restrict_boundary(const PseudoTrisectionDiagram& D);

enum class TorusType { I, II };
// face < 0 picks the first face of the surface that receives the handle.
PseudoTrisectionDiagram torus_stabilize(const PseudoTrisectionDiagram& D, TorusType type, int j, int face = -1);
// The sector whose k grows under a torus stabilisation: I -> j-1, II -> j+1.
int torus_k_sector(TorusType type, int j);

struct BandStabilization {
  PseudoTrisectionDiagram D;
  BandSite site;
};
BandStabilization band_stabilize_at(const PseudoTrisectionDiagram& D, int i, const Walk& arc);
PseudoTrisectionDiagram band_stabilize(const PseudoTrisectionDiagram& D, int i, const Walk& arc);

// Exchange the boundary stabilisation recorded by `site` for an internal one.
// The site names the three band copies and the curves gamma, a, a'; it is
// verified, never searched for (PatternNotFound otherwise).
PseudoTrisectionDiagram boundary_stab_shift(const PseudoTrisectionDiagram& D, const BandSite& site);

PseudoTrisectionDiagram boundary_connect_sum_4(const PseudoTrisectionDiagram& D1, const PseudoTrisectionDiagram& D2, int q1,
                                               int q2, int rotation);

// Handleslide within one alpha or delta family (delegates to the glued pair).
PseudoTrisectionDiagram handleslide_4(const PseudoTrisectionDiagram& D, int family, int slider, int over, const Walk& guide);

// Orientations induced from one oriented binding component. Stored faces
// are coherently oriented with every surface inducing the stored binding
// direction, so everything is a global sign relative to storage.
struct OrientationAssignment {
  int sign = 1;                   // +1: chosen orientation agrees with storage
  std::vector<int> face_sign;     // per face
  std::vector<int> binding_sign;  // per binding component
  // ball -> (minus surface, plus surface), e.g. "Y_1" -> {1, 2}
  std::vector<std::pair<std::string, std::array<int, 2>>> balls;
  // sector -> boundary as signed ball list, e.g. "X_1" -> "Y_1 + H_1 - H_2"
  std::vector<std::pair<std::string, std::string>> sectors;
};
OrientationAssignment orient_ptri(const PseudoTrisectionDiagram& D, int component, int direction);

}  // namespace trisect
