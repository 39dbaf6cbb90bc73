#include "trisect/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include "trisect/format.hpp"

namespace trisect {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Enumerated:
      return "enumerated";
    case Provenance::Corpus:
      return "corpus";
    default:
      return "derived-by-move";
  }
}

CatalogEntry catalog_entry(const TripleHeegaardDiagram& D, Provenance p) {
  CatalogEntry e;
  e.diagram = TripleHeegaardDiagram{canonical_relabel(D)};
  e.encoding = canonical_encoding(D);
  e.indices = indices_3(D);
  e.complexity = complexity_3(D);
  e.homology = realize_homology_3(D);
  for (size_t n = 0; n < e.homology.size(); ++n) e.signature += (n ? ";" : "") + e.homology[n].str();
  e.provenance = p;
  return e;
}

namespace {

std::string nm(const std::string& p, int k) { return p + std::to_string(k); }

// Seven-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
std::vector<std::array<int, 3>> torus7() {
  std::vector<std::array<int, 3>> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return f;
}

bool same_triangle(std::array<int, 3> a, std::array<int, 3> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Handle `h` of surface t: torus vertices 0, 1, 3 are `hole`, the others new.
// `keep_out` (if any) is a triangle left open for the next handle.
void add_handle(NamedBuilder& B, int t, int h, const std::array<std::string, 3>& hole, const std::array<int, 3>* keep_out,
                std::array<std::string, 3>* next_hole) {
  auto name = [&](int i) {
    if (i == 0) return hole[0];
    if (i == 1) return hole[1];
    if (i == 3) return hole[2];
    return "h" + std::to_string(t) + "_" + std::to_string(h) + "_" + std::to_string(i);
  };
  for (auto f : torus7()) {
    if (same_triangle(f, {0, 1, 3})) continue;
    if (keep_out && same_triangle(f, *keep_out)) continue;
    B.face(t, {name(f[0]), name(f[1]), name(f[2])});
  }
  if (keep_out && next_hole) *next_hole = {name((*keep_out)[0]), name((*keep_out)[1]), name((*keep_out)[2])};
}

void add_surface(NamedBuilder& B, int t, int genus, int b) {
  auto bind = [](int q, int k) { return "B" + std::to_string(q) + "_" + std::to_string(k % 3); };
  if (b == 2) {
    std::string m = "m" + std::to_string(t) + "_";
    for (int k = 0; k < 3; ++k) {
      B.face(t, {bind(0, k), bind(0, k + 1), nm(m, (k + 1) % 3), nm(m, k)});
      B.face(t, {nm(m, k), nm(m, (k + 1) % 3), bind(1, k + 1), bind(1, k)});
    }
    return;
  }
  if (genus == 0) {
    for (int k = 0; k < 3; ++k) B.face(t, {"c" + std::to_string(t), bind(0, k), bind(0, k + 1)});
    return;
  }
  const std::array<int, 3> second{2, 4, 5};  // misses 0, 1, 3
  std::array<std::string, 3> hole{bind(0, 0), bind(0, 1), bind(0, 2)}, next;
  add_handle(B, t, 0, hole, genus > 1 ? &second : nullptr, &next);
  if (genus > 1) add_handle(B, t, 1, next, nullptr, nullptr);
}

Diagram model(const std::array<int, 3>& p, int b) {
  NamedBuilder B;
  for (int t = 1; t <= 3; ++t) add_surface(B, t, p[t - 1], b);
  B.orient();
  return B.D;
}

// Simple cycles of length 3..max_len in the graph of interior edges of the
// family's two surfaces, each listed once.
std::vector<Walk> candidate_curves(const Diagram& D, int f, int max_len) {
  auto [a, b] = family_surfaces(f);
  EdgeUse U = edge_use(D);
  std::vector<std::vector<int>> adj(D.cx.num_vertices);
  for (size_t e = 0; e < D.cx.edges.size(); ++e) {
    const auto& c = U.count[e];
    if (c.size() != 1 || c.begin()->second != 2 || (c.begin()->first != a && c.begin()->first != b)) continue;
    adj[D.cx.edges[e][0]].push_back(D.cx.edges[e][1]);
    adj[D.cx.edges[e][1]].push_back(D.cx.edges[e][0]);
  }
  for (auto& n : adj) std::sort(n.begin(), n.end());
  std::vector<Walk> out;
  std::vector<int> path;
  std::vector<char> on(D.cx.num_vertices, 0);
  std::function<void(int)> dfs = [&](int v) {
    for (int w : adj[v]) {
      if (w == path[0] && path.size() >= 3 && path[1] < path.back()) out.push_back(walk_through(D, path, true));
      if (w <= path[0] || on[w] || static_cast<int>(path.size()) >= max_len) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < D.cx.num_vertices; ++s) {
    path = {s};
    on[s] = 1;
    dfs(s);
    on[s] = 0;
  }
  return out;
}

// Cut systems of size y for family f built from candidate curves.
std::vector<std::vector<Walk>> cut_systems(const Diagram& base, int f, int y, int max_len) {
  if (y == 0) return {{}};
  Diagram D = base;
  auto fits = [&](const std::vector<Walk>& ws) {
    D.fam[f] = ws;
    CheckReport rep;
    check_family(D, f, rep);
    return rep.ok;
  };
  // members of a larger system need only be non-separating
  auto [a, b] = family_surfaces(f);
  SurfaceBuild G = glued_pair(base, a, b);
  auto nonseparating = [&](const Walk& w) {
    CurveSystem C;
    C.curves.push_back(to_curve(G, w));
    return classify_surface(cut_along(G.surface, C)).component_count == 1;
  };
  std::vector<Walk> single;
  for (auto& w : candidate_curves(base, f, max_len))
    if (y == 1 ? fits({w}) : nonseparating(w)) single.push_back(w);
  std::vector<std::set<int>> verts;
  for (auto& w : single) {
    auto vs = walk_vertices(base, w);
    verts.push_back({vs.begin(), vs.end()});
  }
  std::vector<std::vector<Walk>> out;
  std::vector<int> pick;
  std::function<void(int)> grow = [&](int from) {
    if (static_cast<int>(pick.size()) == y) {
      std::vector<Walk> ws;
      for (int k : pick) ws.push_back(single[k]);
      if (y == 1 || fits(ws)) out.push_back(ws);

      return;
    }
    for (int k = from; k < static_cast<int>(single.size()); ++k) {
      bool disjoint = true;
      for (int j : pick)
        for (int v : verts[k]) disjoint = disjoint && !verts[j].count(v);
      if (!disjoint) continue;
      pick.push_back(k);
      grow(k + 1);
      pick.pop_back();
    }
  };
  grow(0);
  return out;
}

struct Shape {
  std::array<int, 3> p;
  int b;
};

// Index triples up to rotation (least rotation kept) with complexity <= max_c.
std::vector<Shape> shapes(int max_c, int max_b) {
  std::vector<Shape> out;
  for (int b = 1; b <= max_b; ++b)
    for (int sum = 0; 2 * sum + 3 * b - 3 <= max_c; ++sum)
      for (int p1 = 0; p1 <= sum; ++p1)
        for (int p2 = 0; p1 + p2 <= sum; ++p2) {
          std::array<int, 3> p{p1, p2, sum - p1 - p2};
          std::array<int, 3> r1{p[1], p[2], p[0]}, r2{p[2], p[0], p[1]};
          if (r1 < p || r2 < p) continue;
          // the pieces cover at most two handles per surface, and no handles beside two binding circles
          if (*std::max_element(p.begin(), p.end()) > 2 || (b > 2) || (b == 2 && sum > 0)) continue;
          out.push_back({p, b});
        }
  return out;
}

}  // namespace

Enumeration enumerate_triheeg(const EnumerationOptions& opt) {
  if (opt.max_complexity < 0 || opt.max_complexity > 4)
    throw TopologyError("BadBounds", "max_complexity must lie in 0..4");
  if (opt.max_b < 1) throw TopologyError("BadBounds", "max_b must be at least 1");

  // One branch per shape and choice of the first family's cut system.
  struct Branch {
    int shape;
    size_t first;
  };
  struct Space {
    Diagram base;
    std::array<std::vector<std::vector<Walk>>, 3> systems;
  };
  std::vector<Space> spaces;
  std::vector<Branch> branches;
  for (const Shape& s : shapes(opt.max_complexity, opt.max_b)) {
    Space sp;
    sp.base = model(s.p, s.b);
    for (int i = 1; i <= 3; ++i) {
      int y = s.p[i - 1] + s.p[i % 3] + s.b - 1;
      sp.systems[i - 1] = cut_systems(sp.base, fam_delta(i), y, opt.max_curve_length);
    }
    for (size_t k = 0; k < sp.systems[0].size(); ++k) branches.push_back({static_cast<int>(spaces.size()), k});
    spaces.push_back(std::move(sp));
  }
  std::mt19937 rng(opt.seed);
  std::shuffle(branches.begin(), branches.end(), rng);

  std::atomic<long long> examined{0};
  std::atomic<bool> over{false};
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::map<std::string, Diagram> found;

  auto work = [&]() {
    std::map<std::string, Diagram> local;
    while (!over) {
      size_t k = next++;
      if (k >= branches.size()) break;
      const Space& sp = spaces[branches[k].shape];
      Diagram D = sp.base;
      D.fam[fam_delta(1)] = sp.systems[0][branches[k].first];
      for (auto& s2 : sp.systems[1])
        for (auto& s3 : sp.systems[2]) {
          if (examined++ >= opt.budget) {
            over = true;
            break;
          }
          D.fam[fam_delta(2)] = s2;
          D.fam[fam_delta(3)] = s3;
          std::string code = canonical_encoding(D);
          if (!local.count(code)) local.emplace(std::move(code), canonical_relabel(D));
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    for (auto& [c, D] : local) found.emplace(c, std::move(D));
  };
  int nthreads = opt.threads > 0 ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  // Validate and annotate the distinct diagrams, again in parallel.
  std::vector<std::pair<std::string, Diagram>> todo(found.begin(), found.end());
  std::vector<std::optional<CatalogEntry>> done(todo.size());
  next = 0;
  auto annotate = [&]() {
    for (size_t k; (k = next++) < todo.size();) {
      TripleHeegaardDiagram D{todo[k].second};
      D.name = "enum";
      if (!validate_triheeg(D).ok) continue;
      done[k] = catalog_entry(D, Provenance::Enumerated);
    }
  };
  pool.clear();
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(annotate);
  for (auto& t : pool) t.join();

  Enumeration out;
  for (auto& e : done)
    if (e) out.entries.push_back(std::move(*e));
  std::sort(out.entries.begin(), out.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::tie(a.complexity, a.encoding) < std::tie(b.complexity, b.encoding);
  });
  out.budget_exceeded = over;
  out.examined = std::min<long long>(examined, opt.budget);
  return out;
}

}  // namespace trisect
