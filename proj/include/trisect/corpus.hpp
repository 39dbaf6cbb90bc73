#pragma once

#include <string>
#include <vector>

#include "trisect/complex.hpp"
#include "trisect/link.hpp"

namespace trisect {

// Hand-built diagrams of small manifolds and surfaces. Each carries expected
// invariants in meta ("expect.*") and, where the construction involved a
// choice, the choice made in meta["reading"].
namespace corpus {

TripleHeegaardDiagram trivial_s3();
// Genus-1 Heegaard splitting of S1 x S2 as a (1,1,0;1) trisection.
TripleHeegaardDiagram s1xs2();
// Three annuli, each carrying a core curve: (S1 x S2) # (S1 x S2), complexity 3.
TripleHeegaardDiagram two_s1xs2();
// Genus-3 splitting of T3 from the cube complex, with sigma_3 a disk.
TripleHeegaardDiagram t3();

PseudoTrisectionDiagram trivial_b4();
PseudoTrisectionDiagram s1xb3();
PseudoTrisectionDiagram s2xd2();
PseudoTrisectionDiagram cp2_minus_b4();
PseudoTrisectionDiagram two_s2xd2();

PseudoShadowDiagram disk_b4_a();
PseudoShadowDiagram disk_b4_b();
PseudoShadowDiagram trefoil_surface();
PseudoShadowDiagram moebius();
PseudoShadowDiagram lht_disk();
PseudoShadowDiagram cp1();
// Test fixture only, not in all(): disk_b4_a with tau_1 rerouted in
// sigma_C so that it crosses tau_2 once.
PseudoShadowDiagram tau_kink();

// Lifted sector links pairing lht_disk (components "K") against cp1 ("E"),
// one per sector. Reconstructed so the linking numbers sum to -2.
std::vector<LinkDiagram> lht_cp1_lifts();

// Every corpus entry under its file name (e.g. "trivial_b4.ptd").
struct Entry {
  std::string file;
  Diagram diagram;   // unused for links
  LinkDiagram link;  // kind "link" only
  std::string kind;  // triheeg | ptri | shadow | link
};
std::vector<Entry> all();

}  // namespace corpus
}  // namespace trisect
