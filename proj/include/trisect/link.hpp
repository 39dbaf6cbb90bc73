#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace trisect {

// Laurent polynomial with integer coefficients; zero terms are never stored.
struct Laurent {
  std::map<int, long long> terms;  // exponent -> coefficient

  static Laurent monomial(int e, long long c = 1);
  Laurent& operator+=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  bool operator==(const Laurent&) const = default;
  bool is_zero() const { return terms.empty(); }
  // Exponents e -> -e.
  Laurent mirrored() const;
  // Highest power first, e.g. "-A^-5 + A^3".
  std::string str(const std::string& var = "A") const;
};

// Link diagram as signed Gauss data. A component lists the crossings it
// meets in order: c + 1 passing over crossing c, -(c + 1) passing under. An
// empty component is a circle with no crossings. Every crossing is met once
// over and once under. signs[c] is +1 for a right-handed crossing: seen from
// above with the over strand heading right, the under strand heads up.
struct LinkDiagram {
  std::vector<std::vector<int>> components;
  std::vector<int> signs;
  // Optional per-component labels ("K" / "E" for intersection pairings).
  std::vector<std::string> partition;
  std::string name;
  std::map<std::string, std::string> meta;

  int num_crossings() const { return static_cast<int>(signs.size()); }
  bool operator==(const LinkDiagram&) const = default;
};

// Throws MalformedLink unless every crossing is met exactly once over and
// once under and the partition (if any) has one label per component.
void check_link(const LinkDiagram& L);

// Over and under visits of a crossing as (component, position).
struct CrossingVisits {
  int over_component = 0, over_position = 0;
  int under_component = 0, under_position = 0;
};
std::vector<CrossingVisits> crossing_visits(const LinkDiagram& L);

// Planar diagram code. Edges between consecutive visits carry labels; each
// crossing lists its four edges counterclockwise from the incoming under
// edge, so a positive crossing reads X[a, over_out, c, over_in] and a
// negative one X[a, over_in, c, over_out].
struct PDCode {
  std::vector<std::array<int, 4>> x;
  int free_loops = 0;  // circles without crossings
};
PDCode pd_code(const LinkDiagram& L);

// Does the Gauss data come from a diagram in the plane? Counts the faces of
// the ribbon graph given by the PD rotation: F = n + 2 * (connected pieces).
bool is_planar(const LinkDiagram& L);
bool is_planar(const PDCode& pd);

int writhe(const LinkDiagram& L);

// Reidemeister reductions of a planar diagram: a crossing met twice in a
// row is untwisted, a bigon face bounded by one over-over edge and one
// under-under edge is pulled apart, and when neither applies a bounded search
// over Reidemeister III moves looks for a diagram where one does.
// Non-planar input comes back unchanged.
LinkDiagram simplify(const LinkDiagram& L);

// State sum normalized so the crossingless unknot has bracket 1. An
// A-smoothing of X[a,b,c,d] joins a with b and c with d.
Laurent bracket_pd(const PDCode& pd);
Laurent kauffman_bracket(const LinkDiagram& L, int max_crossings = 16);  // TooManyCrossings
// Remove crossing k by its A- or B-smoothing.
PDCode smooth(const PDCode& pd, int k, bool a_smoothing);

// Jones polynomial V(t) = (-A^3)^-w <L> at A = t^(-1/4). Exponents are in
// units of t^(1/2).
Laurent jones(const LinkDiagram& L, int max_crossings = 16);
std::string jones_string(const Laurent& v);

// Half the signed count of crossings between two components.
int linking_number(const LinkDiagram& L, int a, int b);  // SameComponent

// Gauss code text. Grammar:
//   link      := component ("|" component)*
//   component := "o" | token+
//   token     := ("O" | "U") crossing ("+" | "-")
// Crossings are numbered from 1; whitespace separates tokens. Example, the
// left-handed trefoil: "O1- U2- O3- U1- O2- U3-".
std::string gauss_code(const LinkDiagram& L);
LinkDiagram parse_gauss_code(const std::string& text);  // SyntaxError, MalformedLink

// Standard diagrams used as references.
LinkDiagram unknot_diagram();
LinkDiagram hopf_link(int sign);
LinkDiagram trefoil_diagram(int sign);  // sign -1: left-handed
LinkDiagram figure_eight_diagram();

}  // namespace trisect
