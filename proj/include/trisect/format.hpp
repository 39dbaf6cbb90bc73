#pragma once

#include <string>
#include <vector>

#include "trisect/complex.hpp"
#include "trisect/link.hpp"

namespace trisect {

constexpr int kFormatVersion = 1;

// One diagram per file. Diagrams of kind triheeg / ptri / shadow are stored
// as the shared polygon complex:
//
//   {"format_version":1, "kind":"shadow", "name":"...", "meta":{...},
//    "vertices":N, "edges":[[u,v],...],
//    "faces":[{"surface":t,"sides":[s,...]},...],
//    "families":{"tau_1":[{"closed":false,"sides":[...]}],...},
//    "bridge":[v,...],
//    "crossings":[{"vertex":v,"over":{"family":"tau_1","index":0},"under":{...}}]}
//
// A side is 2 * edge + r with r = 1 running the edge backwards. Links are
//
//   {"format_version":1, "kind":"link", "name":"...", "meta":{...},
//    "components":[[1,-2],...], "signs":[1,-1], "partition":["K","E"]}
//
// Canonical text is the JSON with sorted keys, no whitespace, and one
// trailing LF.
struct DiagramFile {
  std::string kind;  // triheeg | ptri | shadow | link
  Diagram diagram;
  LinkDiagram link;
};

std::string extension_for(const std::string& kind);  // ".thd", ".ptd", ".shd", ".lnk"
std::string kind_for_path(const std::string& path);  // "" when the extension is unknown

// Errors: SyntaxError (line and column), DanglingReference (JSON pointer plus
// line and column), VersionMismatch.
DiagramFile parse_diagram(const std::string& text);
std::string serialize(const DiagramFile& f);

// File wrappers; reading also checks the extension against the kind
// (KindMismatch) and reports unreadable files as IOError.
DiagramFile read_diagram_file(const std::string& path);
void write_diagram_file(const std::string& path, const DiagramFile& f);

DiagramFile as_file(const Diagram& D, const std::string& kind);

// Canonical relabeling. A root is a face side together with a cyclic
// rotation of the sector labels; from the root, faces are visited breadth
// first across shared edges and vertices, edges and faces are numbered in
// order of first visit. Closed walks are rotated and reversed to their least
// form, walks sorted within each family. The canonical diagram is the one
// whose encoding is least over all roots. Name and meta are carried over.
Diagram canonical_relabel(const Diagram& D);
// The encoding of canonical_relabel(D) as text; equal for diagrams that
// differ by a relabeling of vertices, edges, faces and walk order, and by a
// cyclic rotation of the sectors.
std::string canonical_encoding(const Diagram& D);

}  // namespace trisect
