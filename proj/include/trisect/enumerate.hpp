#pragma once

#include <string>
#include <vector>

#include "trisect/homology.hpp"
#include "trisect/triheeg.hpp"

namespace trisect {

enum class Provenance { Enumerated, Corpus, DerivedByMove };
std::string provenance_name(Provenance p);

struct CatalogEntry {
  std::string encoding;  // canonical_encoding of the diagram
  TrisectionIndices3 indices;
  int complexity = 0;
  std::vector<AbelianGroup> homology;  // H0..H3 of the realization
  std::string signature;               // e.g. "Z;Z/3;0;Z"
  Provenance provenance = Provenance::Enumerated;
  TripleHeegaardDiagram diagram;  // canonical representative
};

CatalogEntry catalog_entry(const TripleHeegaardDiagram& D, Provenance p);

// The search space. Every sector surface is built from fixed pieces sharing
// triangular binding circles: a disk is a cone on its binding triangle, an
// annulus has one ring of three interior vertices, and each handle is a
// copy of the seven-vertex torus with one triangle opened up (a second
// handle goes into a triangle of the first that misses the binding).
// Candidate delta curves are the simple closed edge cycles of length at most
// max_curve_length through the interior of the two surfaces; a family is any
// set of pairwise disjoint candidates forming a cut system. Index triples p
// are taken up to cyclic rotation, which canonical_encoding also identifies.
struct EnumerationOptions {
  int max_complexity = 2;  // 0..4
  int max_b = 1;
  int max_curve_length = 3;
  long long budget = 5'000'000;  // curve-family combinations examined
  unsigned seed = 0;             // shard order only; the catalog does not depend on it
  int threads = 0;               // 0: hardware concurrency
};

struct Enumeration {
  std::vector<CatalogEntry> entries;  // sorted by (complexity, encoding)
  bool budget_exceeded = false;       // entries are then a partial catalog
  long long examined = 0;
};

// BadBounds for max_complexity outside 0..4 or max_b < 1.
Enumeration enumerate_triheeg(const EnumerationOptions& opt);

}  // namespace trisect
