#include "trisect/render.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace trisect {

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void join(int a, int b) { up[find(a)] = find(b); }
};

const char* kFamilyColour[4][3] = {
    {"#c0392b", "#e67e22", "#d35400"},  // alpha
    {"#1f5fbf", "#16a2b8", "#5b4bd6"},  // delta
    {"#1e8449", "#7dab21", "#0b7a5f"},  // tau
    {"#8e2a8e", "#c2185b", "#6d4c41"},  // L
};

}  // namespace

Unfolding unfold(const Diagram& D, int tag) {
  Unfolding U;
  U.faces = D.faces_of(tag);
  if (U.faces.empty()) throw TopologyError("NotADisk", "surface " + std::to_string(tag) + " has no faces");
  const int nf = static_cast<int>(U.faces.size());

  // corners are numbered face by face
  std::vector<int> base(nf + 1, 0);
  for (int k = 0; k < nf; ++k) base[k + 1] = base[k] + static_cast<int>(D.cx.faces[U.faces[k]].size());
  auto side_at = [&](int k, int j) { return D.cx.faces[U.faces[k]][j]; };
  auto len = [&](int k) { return base[k + 1] - base[k]; };

  std::map<int, std::vector<std::pair<int, int>>> uses;  // edge -> (disk face, position)
  for (int k = 0; k < nf; ++k)
    for (int j = 0; j < len(k); ++j) uses[side_at(k, j) >> 1].push_back({k, j});
  std::set<int> boundary_vertices;
  for (auto& [e, u] : uses)
    if (u.size() == 1)
      for (int v : D.cx.edges[e]) boundary_vertices.insert(v);

  // dual spanning tree
  std::set<int> glued;
  std::vector<char> seen(nf, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  while (!q.empty()) {
    int k = q.front();
    q.pop_front();
    for (int j = 0; j < len(k); ++j) {
      int e = side_at(k, j) >> 1;
      for (auto [g, i] : uses[e])
        if (!seen[g] && uses[e].size() == 2) {
          seen[g] = 1;
          glued.insert(e);
          q.push_back(g);
        }
    }
  }
  for (int k = 0; k < nf; ++k)
    if (!seen[k]) throw TopologyError("NotADisk", "surface " + std::to_string(tag) + " is disconnected");

  // zip cut edges that end at an interior vertex of degree one in the cut graph
  std::map<int, std::set<int>> cut_at;
  for (auto& [e, u] : uses)
    if (u.size() == 2 && !glued.count(e))
      for (int v : D.cx.edges[e]) cut_at[v].insert(e);
  std::deque<int> leaves;
  for (auto& [v, es] : cut_at)
    if (es.size() == 1 && !boundary_vertices.count(v)) leaves.push_back(v);
  while (!leaves.empty()) {
    int v = leaves.front();
    leaves.pop_front();
    if (cut_at[v].size() != 1 || boundary_vertices.count(v)) continue;
    int e = *cut_at[v].begin();
    glued.insert(e);
    for (int w : D.cx.edges[e]) {
      cut_at[w].erase(e);
      if (cut_at[w].size() == 1 && !boundary_vertices.count(w)) leaves.push_back(w);
    }
  }

  UnionFind uf(base[nf]);
  for (int e : glued) {
    auto [a, b] = std::pair{uses[e][0], uses[e][1]};
    auto corner = [&](std::pair<int, int> u, int step) { return base[u.first] + (u.second + step) % len(u.first); };
    // the two uses run opposite ways
    uf.join(corner(a, 0), corner(b, 1));
    uf.join(corner(a, 1), corner(b, 0));
  }
  std::map<int, int> vid;
  for (int c = 0; c < base[nf]; ++c)
    if (!vid.count(uf.find(c))) vid.emplace(uf.find(c), static_cast<int>(vid.size()));

  Diagram& Q = U.disk;
  Q.cx.num_vertices = static_cast<int>(vid.size());
  U.original.assign(Q.cx.num_vertices, -1);
  U.corner.resize(nf);
  std::map<std::tuple<int, int, int>, int> edge_key;  // glued edges once, cut edges per use
  for (int k = 0; k < nf; ++k) {
    std::vector<int> sides;
    for (int j = 0; j < len(k); ++j) {
      int s = side_at(k, j), e = s >> 1;
      int t = vid[uf.find(base[k] + j)], h = vid[uf.find(base[k] + (j + 1) % len(k))];
      U.corner[k].push_back(t);
      U.original[t] = D.tail(s);
      auto key = glued.count(e) ? std::tuple{e, -1, -1} : std::tuple{e, k, j};
      auto it = edge_key.find(key);
      if (it == edge_key.end()) {
        int ne = (s & 1) ? Q.add_edge(h, t) : Q.add_edge(t, h);
        it = edge_key.emplace(key, ne).first;
        U.copies[e].push_back(ne);
      }
      sides.push_back(2 * it->second + (s & 1));
    }
    Q.add_face(1, sides);
  }
  for (auto& [e, u] : uses)
    if (u.size() == 2 && !glued.count(e)) U.cut_edges.push_back(e);
  U.at = disk_embedding(Q, 1);
  return U;
}

std::string render_svg(const Diagram& D) {
  const double panel = 320, pad = 24, title = 22;
  auto tags = D.tags();
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  const double width = panel * std::max<size_t>(tags.size(), 1), height = panel + title;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  EdgeUse use = edge_use(D);
  std::set<int> flagged;
  for (auto& f : D.flags) flagged.insert(f.vertex);

  for (size_t p = 0; p < tags.size(); ++p) {
    const int t = tags[p];
    const double ox = p * panel;
    auto X = [&](const Point& a) { return ox + pad + (a.x + 1) / 2 * (panel - 2 * pad); };
    auto Y = [&](const Point& a) { return title + pad + (1 - a.y) / 2 * (panel - 2 * pad); };
    os << "<g id=\"surface-" << t << "\">\n";
    os << "<text x=\"" << ox + panel / 2 << "\" y=\"16\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
       << (t == kCentral ? std::string("sigma_C") : "sigma_" + std::to_string(t)) << "</text>\n";
    Unfolding U;
    try {
      U = unfold(D, t);
    } catch (const TopologyError& e) {
      os << "<text x=\"" << ox + pad << "\" y=\"" << title + 40 << "\" font-family=\"sans-serif\" font-size=\"11\">"
         << e.kind() << "</text>\n</g>\n";
      continue;
    }
    const Diagram& Q = U.disk;
    auto seg = [&](int qe, const char* colour, double w) {
      const Point &a = U.at.at(Q.cx.edges[qe][0]), &b = U.at.at(Q.cx.edges[qe][1]);
      os << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b) << "\" stroke=\""
         << colour << "\" stroke-width=\"" << w << "\" stroke-linecap=\"round\"/>\n";
    };
    for (size_t qe = 0; qe < Q.cx.edges.size(); ++qe) seg(static_cast<int>(qe), "#d8d8d8", 0.6);
    for (auto& [e, qs] : U.copies) {
      if (!use.binding(e)) continue;
      for (int qe : qs) seg(qe, "black", 2.2);
    }
    // identified edges
    for (size_t n = 0; n < U.cut_edges.size(); ++n)
      for (int qe : U.copies.at(U.cut_edges[n])) {
        seg(qe, "#999999", 1.4);
        const Point &a = U.at.at(Q.cx.edges[qe][0]), &b = U.at.at(Q.cx.edges[qe][1]);
        Point m{(a.x + b.x) / 2, (a.y + b.y) / 2};
        os << "<text x=\"" << X(m) << "\" y=\"" << Y(m) - 2 << "\" font-family=\"sans-serif\" font-size=\"8\" fill=\"#555\">"
           << n + 1 << "</text>\n";
      }
    for (int f = 0; f < kFamilies; ++f) {
      auto on = family_surfaces(f);
      if (on[0] != t && on[1] != t) continue;
      const char* colour = kFamilyColour[fam_kind(f)][fam_index(f) - 1];
      for (auto& w : D.fam[f])
        for (int s : w.sides) {
          auto it = U.copies.find(s >> 1);
          if (it == U.copies.end()) continue;
          seg(it->second.front(), colour, 2.4);
        }
    }
    for (size_t v = 0; v < U.original.size(); ++v) {
      int o = U.original[v];
      bool bridge = std::find(D.bridge.begin(), D.bridge.end(), o) != D.bridge.end();
      if (!bridge && !flagged.count(o)) continue;
      const Point& a = U.at.at(static_cast<int>(v));
      if (bridge) os << "<circle cx=\"" << X(a) << "\" cy=\"" << Y(a) << "\" r=\"3.5\" fill=\"black\"/>\n";
      if (flagged.count(o))
        os << "<circle cx=\"" << X(a) << "\" cy=\"" << Y(a) << "\" r=\"5\" fill=\"none\" stroke=\"black\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace trisect
