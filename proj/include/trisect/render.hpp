#pragma once

#include <map>
#include <string>
#include <vector>

#include "trisect/complex.hpp"
#include "trisect/embed.hpp"

namespace trisect {

// A surface cut open into one polygon. Faces are glued across a spanning
// tree of the dual graph, then cut edges ending at an interior vertex are
// zipped shut until every remaining cut runs between boundary points or
// round a handle. Each remaining cut edge shows up twice on the polygon's
// boundary.
struct Unfolding {
  Diagram disk;                                // one surface (tag 1) that is a disk
  std::vector<int> faces;                      // disk face k is surface face faces[k]
  std::vector<std::vector<int>> corner;        // [k][j]: disk vertex at the tail of side j of disk face k
  std::vector<int> original;                   // disk vertex -> surface vertex
  std::map<int, std::vector<int>> copies;      // surface edge -> disk edges
  std::vector<int> cut_edges;                  // surface edges left open
  std::map<int, Point> at;                     // disk vertex positions
};

Unfolding unfold(const Diagram& D, int tag);

// Schematic SVG: one panel per surface, binding drawn black, cut edges
// labelled by the number they share with their partner, curves coloured by
// family, bridge points as dots and flagged crossings as rings.
std::string render_svg(const Diagram& D);

}  // namespace trisect
