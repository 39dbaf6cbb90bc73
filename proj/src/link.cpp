#include "trisect/link.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "trisect/surfmap.hpp"

namespace trisect {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

int max_label(const PDCode& pd) {
  int m = -1;
  for (auto& x : pd.x)
    for (int l : x) m = std::max(m, l);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Laurent polynomials

Laurent Laurent::monomial(int e, long long c) {
  Laurent p;
  if (c != 0) p.terms[e] = c;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto [e, c] : o.terms) {
    long long& v = terms[e];
    v += c;
    if (v == 0) terms.erase(e);
  }
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (auto [e1, c1] : terms)
    for (auto [e2, c2] : o.terms) r += monomial(e1 + e2, c1 * c2);
  return r;
}

Laurent Laurent::mirrored() const {
  Laurent r;
  for (auto [e, c] : terms) r.terms[-e] = c;
  return r;
}

std::string Laurent::str(const std::string& var) const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    auto [e, c] = *it;
    long long a = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      out << a;
      continue;
    }
    if (a != 1) out << a << "*";
    out << var;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Link diagrams

void check_link(const LinkDiagram& L) {
  const int n = L.num_crossings();
  std::vector<int> over(n, 0), under(n, 0);
  for (auto& comp : L.components)
    for (int v : comp) {
      int c = std::abs(v) - 1;
      if (v == 0 || c >= n) throw TopologyError("MalformedLink", "visit to unknown crossing " + std::to_string(v));
      ++(v > 0 ? over : under)[c];
    }
  for (int c = 0; c < n; ++c) {
    if (over[c] != 1 || under[c] != 1)
      throw TopologyError("MalformedLink", "crossing " + std::to_string(c + 1) + " is not met once over and once under");
    if (L.signs[c] != 1 && L.signs[c] != -1)
      throw TopologyError("MalformedLink", "crossing " + std::to_string(c + 1) + " has no sign");
  }
  if (!L.partition.empty() && L.partition.size() != L.components.size())
    throw TopologyError("MalformedLink", "partition does not label every component");
}

std::vector<CrossingVisits> crossing_visits(const LinkDiagram& L) {
  check_link(L);
  std::vector<CrossingVisits> out(L.num_crossings());
  for (int k = 0; k < static_cast<int>(L.components.size()); ++k) {
    const auto& comp = L.components[k];
    for (int j = 0; j < static_cast<int>(comp.size()); ++j) {
      auto& cv = out[std::abs(comp[j]) - 1];
      if (comp[j] > 0) {
        cv.over_component = k;
        cv.over_position = j;
      } else {
        cv.under_component = k;
        cv.under_position = j;
      }
    }
  }
  return out;
}

PDCode pd_code(const LinkDiagram& L) {
  auto cv = crossing_visits(L);
  PDCode pd;
  // Edge j of a component runs from visit j to visit j + 1.
  std::vector<int> base(L.components.size() + 1, 0);
  for (size_t k = 0; k < L.components.size(); ++k) base[k + 1] = base[k] + static_cast<int>(L.components[k].size());
  auto edge_out = [&](int comp, int pos) { return base[comp] + pos; };
  auto edge_in = [&](int comp, int pos) {
    int m = static_cast<int>(L.components[comp].size());
    return base[comp] + (pos + m - 1) % m;
  };
  for (auto& comp : L.components)
    if (comp.empty()) ++pd.free_loops;
  for (int c = 0; c < L.num_crossings(); ++c) {
    const auto& v = cv[c];
    int a = edge_in(v.under_component, v.under_position), cc = edge_out(v.under_component, v.under_position);
    int oi = edge_in(v.over_component, v.over_position), oo = edge_out(v.over_component, v.over_position);
    pd.x.push_back(L.signs[c] > 0 ? std::array<int, 4>{a, oo, cc, oi} : std::array<int, 4>{a, oi, cc, oo});
  }
  return pd;
}

bool is_planar(const PDCode& pd) {
  const int n = static_cast<int>(pd.x.size());
  if (n == 0) return true;
  std::map<int, std::vector<std::pair<int, int>>> where;
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < 4; ++j) where[pd.x[c][j]].push_back({c, j});
  Dsu pieces(n);
  for (auto& [l, occ] : where) {
    if (occ.size() != 2) return false;
    pieces.unite(occ[0].first, occ[1].first);
  }
  int np = 0;
  for (int c = 0; c < n; ++c)
    if (pieces.find(c) == c) ++np;
  // Faces: leave along slot j, arrive at the other end of the edge, turn to
  // the next slot clockwise.
  std::vector<char> seen(4 * n, 0);
  int faces = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    ++faces;
    int d = start;
    while (!seen[d]) {
      seen[d] = 1;
      int c = d / 4, j = d % 4;
      const auto& occ = where[pd.x[c][j]];
      auto other = occ[0] == std::make_pair(c, j) ? occ[1] : occ[0];
      d = 4 * other.first + (other.second + 3) % 4;
    }
  }
  return faces == n + 2 * np;
}

bool is_planar(const LinkDiagram& L) { return is_planar(pd_code(L)); }

namespace {

void drop_crossings(LinkDiagram& L, const std::set<int>& gone) {
  std::vector<int> id(L.signs.size(), -1), signs;
  for (int c = 0; c < L.num_crossings(); ++c)
    if (!gone.count(c)) {
      id[c] = static_cast<int>(signs.size());
      signs.push_back(L.signs[c]);
    }
  for (auto& comp : L.components) {
    std::vector<int> kept;
    for (int v : comp) {
      int c = std::abs(v) - 1;
      if (!gone.count(c)) kept.push_back(v > 0 ? id[c] + 1 : -(id[c] + 1));
    }
    comp = std::move(kept);
  }
  L.signs = std::move(signs);
}

bool untwist(LinkDiagram& L) {
  for (auto& comp : L.components) {
    const int m = static_cast<int>(comp.size());
    for (int p = 0; p < m && m >= 2; ++p)
      if (std::abs(comp[p]) == std::abs(comp[(p + 1) % m])) {
        drop_crossings(L, {std::abs(comp[p]) - 1});
        return true;
      }
  }
  return false;
}

struct FaceData {
  std::vector<std::vector<int>> faces;           // darts 4c + j, slot j leaving crossing c
  std::map<int, std::pair<int, int>> edge_at;    // edge label -> (component, position of its first visit)
  std::vector<std::array<int, 4>> x;
};

FaceData face_data(const LinkDiagram& L) {
  FaceData F;
  PDCode pd = pd_code(L);
  F.x = pd.x;
  const int n = static_cast<int>(pd.x.size());
  int label = 0;
  for (int k = 0; k < static_cast<int>(L.components.size()); ++k)
    for (int p = 0; p < static_cast<int>(L.components[k].size()); ++p) F.edge_at[label++] = {k, p};
  std::map<int, std::vector<std::pair<int, int>>> where;
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < 4; ++j) where[pd.x[c][j]].push_back({c, j});
  std::vector<char> seen(4 * n, 0);
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    std::vector<int> face;
    for (int d = start; !seen[d];) {
      seen[d] = 1;
      face.push_back(d);
      int c = d / 4, j = d % 4;
      const auto& occ = where[pd.x[c][j]];
      auto other = occ[0] == std::make_pair(c, j) ? occ[1] : occ[0];
      d = 4 * other.first + (other.second + 3) % 4;
    }
    F.faces.push_back(std::move(face));
  }
  return F;
}

// The visits at both ends of the edge leaving dart d.
std::pair<int, int> edge_visits(const LinkDiagram& L, const FaceData& F, int d) {
  auto [k, p] = F.edge_at.at(F.x[d / 4][d % 4]);
  const auto& comp = L.components[k];
  return {comp[p], comp[(p + 1) % comp.size()]};
}

bool unpoke(LinkDiagram& L) {
  FaceData F = face_data(L);
  for (auto& face : F.faces) {
    if (face.size() != 2 || face[0] / 4 == face[1] / 4) continue;
    auto e1 = edge_visits(L, F, face[0]), e2 = edge_visits(L, F, face[1]);
    auto over = [](std::pair<int, int> e) { return e.first > 0 && e.second > 0; };
    auto under = [](std::pair<int, int> e) { return e.first < 0 && e.second < 0; };
    if ((over(e1) && under(e2)) || (under(e1) && over(e2))) {
      drop_crossings(L, {face[0] / 4, face[1] / 4});
      return true;
    }
  }
  return false;
}

// Every diagram one Reidemeister III move away: a triangle face with one
// strand over at both its corners has each strand's two visits swapped.
std::vector<LinkDiagram> triangle_moves(const LinkDiagram& L) {
  std::vector<LinkDiagram> out;
  FaceData F = face_data(L);
  for (auto& face : F.faces) {
    if (face.size() != 3) continue;
    std::set<int> corners{face[0] / 4, face[1] / 4, face[2] / 4};
    if (corners.size() != 3) continue;
    bool top = false;
    for (int d : face) {
      auto e = edge_visits(L, F, d);
      if (e.first > 0 && e.second > 0) top = true;
    }
    if (!top) continue;
    LinkDiagram M = L;
    for (int d : face) {
      auto [k, p] = F.edge_at.at(F.x[d / 4][d % 4]);
      auto& comp = M.components[k];
      std::swap(comp[p], comp[(p + 1) % comp.size()]);
    }
    out.push_back(std::move(M));
  }
  return out;
}

bool reduce_once(LinkDiagram& L) { return untwist(L) || unpoke(L); }

// Crossings renumbered in order of first visit.
void renumber(LinkDiagram& L) {
  std::map<int, int> id;
  std::vector<int> signs;
  for (auto& comp : L.components)
    for (int& v : comp) {
      int c = std::abs(v) - 1;
      auto [it, fresh] = id.insert({c, static_cast<int>(id.size())});
      if (fresh) signs.push_back(L.signs[c]);
      v = v > 0 ? it->second + 1 : -(it->second + 1);
    }
  L.signs = std::move(signs);
}

}  // namespace

LinkDiagram simplify(const LinkDiagram& L) {
  check_link(L);
  LinkDiagram out = L;
  if (!is_planar(out)) return out;
  for (;;) {
    while (reduce_once(out)) {
    }
    // Breadth-first over Reidemeister III moves until some diagram admits a
    // reduction; the search is bounded, so a stubborn diagram may stay larger
    // than minimal.
    std::set<std::vector<std::vector<int>>> seen{out.components};
    std::deque<LinkDiagram> queue{out};
    bool progressed = false;
    while (!queue.empty() && seen.size() < 5000 && !progressed) {
      LinkDiagram cur = std::move(queue.front());
      queue.pop_front();
      for (auto& next : triangle_moves(cur)) {
        if (!seen.insert(next.components).second) continue;
        LinkDiagram trial = next;
        if (reduce_once(trial)) {
          out = std::move(trial);
          progressed = true;
          break;
        }
        queue.push_back(std::move(next));
      }
    }
    if (!progressed) {
      renumber(out);
      return out;
    }
  }
}

int writhe(const LinkDiagram& L) {
  check_link(L);
  return std::accumulate(L.signs.begin(), L.signs.end(), 0);
}

Laurent bracket_pd(const PDCode& pd) {
  const int n = static_cast<int>(pd.x.size());
  const int labels = max_label(pd) + 1;
  // (A-exponent, loop count) -> number of states
  std::map<std::pair<int, int>, long long> states;
  for (unsigned long long s = 0; s < (1ULL << n); ++s) {
    Dsu u(labels);
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = pd.x[c];
      if (!((s >> c) & 1ULL)) {
        ++a_count;
        u.unite(x[0], x[1]);
        u.unite(x[2], x[3]);
      } else {
        u.unite(x[0], x[3]);
        u.unite(x[1], x[2]);
      }
    }
    std::vector<char> used(labels, 0);
    for (auto& x : pd.x)
      for (int l : x) used[l] = 1;
    int loops = pd.free_loops;
    for (int l = 0; l < labels; ++l)
      if (used[l] && u.find(l) == l) ++loops;
    ++states[{a_count - (n - a_count), loops}];
  }
  const Laurent d = Laurent::monomial(2, -1) + Laurent::monomial(-2, -1);
  std::map<int, Laurent> dpow{{0, Laurent::monomial(0)}};
  Laurent out;
  for (auto [key, count] : states) {
    auto [e, loops] = key;
    int k = std::max(loops - 1, 0);
    while (static_cast<int>(dpow.size()) <= k) dpow[static_cast<int>(dpow.size())] = dpow.rbegin()->second * d;
    out += Laurent::monomial(e, count) * dpow[k];
  }
  return out;
}

Laurent kauffman_bracket(const LinkDiagram& L, int max_crossings) {
  if (L.num_crossings() > max_crossings)
    throw TopologyError("TooManyCrossings", std::to_string(L.num_crossings()) + " crossings exceed the bound " +
                                                std::to_string(max_crossings));
  if (L.components.empty()) throw TopologyError("MalformedLink", "empty link");
  return bracket_pd(pd_code(L));
}

PDCode smooth(const PDCode& pd, int k, bool a_smoothing) {
  const int labels = max_label(pd) + 1;
  Dsu u(labels);
  const auto& x = pd.x.at(k);
  if (a_smoothing) {
    u.unite(x[0], x[1]);
    u.unite(x[2], x[3]);
  } else {
    u.unite(x[0], x[3]);
    u.unite(x[1], x[2]);
  }
  PDCode out;
  out.free_loops = pd.free_loops;
  std::set<int> remaining;
  for (int c = 0; c < static_cast<int>(pd.x.size()); ++c) {
    if (c == k) continue;
    std::array<int, 4> y;
    for (int j = 0; j < 4; ++j) remaining.insert(y[j] = u.find(pd.x[c][j]));
    out.x.push_back(y);
  }
  std::set<int> classes;
  for (int l : x) classes.insert(u.find(l));
  for (int r : classes)
    if (!remaining.count(r)) ++out.free_loops;
  return out;
}

Laurent jones(const LinkDiagram& L, int max_crossings) {
  Laurent b = kauffman_bracket(L, max_crossings);
  int w = writhe(L);
  // (-A^3)^-w
  Laurent f = Laurent::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
  Laurent p = f * b;
  // A^e = t^(-e/4) = (t^(1/2))^(-e/2); e is always even here.
  Laurent v;
  for (auto [e, c] : p.terms) {
    if (e % 2 != 0) throw TopologyError("MalformedLink", "odd exponent in the normalized bracket");
    v.terms[-e / 2] = c;
  }
  return v;
}

std::string jones_string(const Laurent& v) {
  if (v.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = v.terms.rbegin(); it != v.terms.rend(); ++it) {
    auto [e, c] = *it;
    long long a = c < 0 ? -c : c;
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (e == 0) {
      out << a;
      continue;
    }
    if (a != 1) out << a << "*";
    out << "t";
    if (e % 2 != 0)
      out << "^(" << e << "/2)";
    else if (e != 2)
      out << "^" << e / 2;
  }
  return out.str();
}

int linking_number(const LinkDiagram& L, int a, int b) {
  if (a == b) throw TopologyError("SameComponent", "linking number needs two components");
  const int m = static_cast<int>(L.components.size());
  if (a < 0 || b < 0 || a >= m || b >= m) throw TopologyError("MalformedLink", "no such component");
  auto cv = crossing_visits(L);
  int s = 0;
  for (int c = 0; c < L.num_crossings(); ++c) {
    auto p = std::minmax(cv[c].over_component, cv[c].under_component);
    if (p == std::minmax(a, b)) s += L.signs[c];
  }
  if (s % 2 != 0) throw TopologyError("MalformedLink", "odd crossing count between two components");
  return s / 2;
}

// ---------------------------------------------------------------------------
// Gauss code text

std::string gauss_code(const LinkDiagram& L) {
  check_link(L);
  std::ostringstream out;
  for (size_t k = 0; k < L.components.size(); ++k) {
    if (k) out << " | ";
    if (L.components[k].empty()) {
      out << "o";
      continue;
    }
    for (size_t j = 0; j < L.components[k].size(); ++j) {
      int v = L.components[k][j];
      int c = std::abs(v);
      if (j) out << ' ';
      out << (v > 0 ? 'O' : 'U') << c << (L.signs[c - 1] > 0 ? '+' : '-');
    }
  }
  return out.str();
}

LinkDiagram parse_gauss_code(const std::string& text) {
  LinkDiagram L;
  std::map<int, int> sign;
  L.components.emplace_back();
  bool saw_loop = false;
  size_t i = 0;
  auto fail = [&](const std::string& m) {
    throw TopologyError("SyntaxError", "column " + std::to_string(i + 1) + ": " + m);
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '|') {
      if (L.components.back().empty() && !saw_loop) fail("empty component");
      L.components.emplace_back();
      saw_loop = false;
      ++i;
      continue;
    }
    if (ch == 'o') {
      if (!L.components.back().empty() || saw_loop) fail("'o' must stand alone");
      saw_loop = true;
      ++i;
      continue;
    }
    if (ch != 'O' && ch != 'U') fail(std::string("unexpected '") + ch + "'");
    if (saw_loop) fail("'o' must stand alone");
    ++i;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("crossing number expected");
    int c = std::stoi(text.substr(start, i - start));
    if (c < 1) fail("crossings are numbered from 1");
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) fail("sign expected");
    int s = text[i] == '+' ? 1 : -1;
    ++i;
    if (sign.count(c) && sign[c] != s) fail("crossing " + std::to_string(c) + " has two signs");
    sign[c] = s;
    L.components.back().push_back(ch == 'O' ? c : -c);
  }
  if (L.components.back().empty() && !saw_loop) fail("empty component");
  int n = sign.empty() ? 0 : sign.rbegin()->first;
  if (static_cast<int>(sign.size()) != n) throw TopologyError("MalformedLink", "crossing numbers are not 1..n");
  for (auto [c, s] : sign) L.signs.push_back(s);
  check_link(L);
  return L;
}

LinkDiagram unknot_diagram() {
  LinkDiagram L;
  L.components = {{}};
  L.name = "unknot";
  return L;
}

LinkDiagram hopf_link(int sign) {
  LinkDiagram L;
  L.components = {{1, -2}, {-1, 2}};
  L.signs = {sign, sign};
  L.name = sign > 0 ? "hopf_positive" : "hopf_negative";
  return L;
}

LinkDiagram trefoil_diagram(int sign) {
  LinkDiagram L;
  L.components = {{1, -2, 3, -1, 2, -3}};
  L.signs = {sign, sign, sign};
  L.name = sign < 0 ? "left_trefoil" : "right_trefoil";
  return L;
}

LinkDiagram figure_eight_diagram() {
  LinkDiagram L;
  L.components = {{1, -2, 3, -4, 2, -1, 4, -3}};
  L.signs = {-1, -1, 1, 1};
  L.name = "figure_eight";
  return L;
}

}  // namespace trisect
