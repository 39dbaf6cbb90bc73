#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trisect/format.hpp"

namespace trisect {

using Invariants = std::vector<std::pair<std::string, std::string>>;

// Every invariant of a file's kind under a fixed key:
//   triheeg: y p b c homology
//   ptri:    g b k y p h chi c c_boundary c_pair
//   shadow:  F bridge chi orientable boundary_link crossings jones
//   link:    components crossings writhe jones [lk]
// Index tuples print as "a,b,c", homology as "H0;H1;H2;H3". A value that
// cannot be computed for this diagram reads "n/a (<error kind>)".
Invariants compute_invariants(const DiagramFile& f);

// The kind's validator, then every "expect.<key>" entry of the metadata
// against the recomputed invariant <key>.
CheckReport validate_file(const DiagramFile& f);

// Name of the reference link (unknot, unlink of n, Hopf links, trefoils,
// figure eight) with the same component count and Jones polynomial, else
// "jones " followed by the polynomial. Matching Jones polynomials do not
// prove the links equal.
std::string identify_link(const LinkDiagram& L);

}  // namespace trisect
