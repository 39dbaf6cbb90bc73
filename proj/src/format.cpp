#include "trisect/format.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <optional>
#include <json.hpp>
#include <sstream>

namespace trisect {

using nlohmann::json;

namespace {

const std::vector<std::pair<std::string, std::string>> kExtensions{
    {"triheeg", ".thd"}, {"ptri", ".ptd"}, {"shadow", ".shd"}, {"link", ".lnk"}};

std::pair<int, int> line_column(const std::string& text, size_t pos) {
  int line = 1, col = 1;
  for (size_t k = 0; k < pos && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Byte offset of the value at a JSON pointer in already valid JSON text.
class Locator {
 public:
  explicit Locator(const std::string& t) : t_(t) {}

  size_t find(const std::vector<std::string>& path) {
    p_ = 0;
    ws();
    for (const auto& tok : path) {
      if (p_ >= t_.size()) break;
      if (t_[p_] == '{') {
        ++p_;
        bool found = false;
        while (true) {
          ws();
          if (t_[p_] == '}') break;
          std::string key = str();
          ws();
          ++p_;  // ':'
          ws();
          if (key == tok) {
            found = true;
            break;
          }
          skip();
          ws();
          if (t_[p_] == ',') ++p_;
        }
        if (!found) return p_;
      } else if (t_[p_] == '[') {
        ++p_;
        int want = std::atoi(tok.c_str());
        for (int k = 0; k < want; ++k) {
          ws();
          if (t_[p_] == ']') return p_;
          skip();
          ws();
          if (t_[p_] == ',') ++p_;
        }
        ws();
      } else {
        break;
      }
    }
    return p_;
  }

 private:
  void ws() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  std::string str() {
    std::string out;
    ++p_;
    while (p_ < t_.size() && t_[p_] != '"') {
      if (t_[p_] == '\\') ++p_;
      out += t_[p_++];
    }
    ++p_;
    return out;
  }
  void skip() {
    if (t_[p_] == '"') {
      str();
      return;
    }
    if (t_[p_] == '{' || t_[p_] == '[') {
      int depth = 0;
      do {
        if (t_[p_] == '"') {
          str();
          continue;
        }
        if (t_[p_] == '{' || t_[p_] == '[') ++depth;
        if (t_[p_] == '}' || t_[p_] == ']') --depth;
        ++p_;
      } while (depth > 0 && p_ < t_.size());
      return;
    }
    while (p_ < t_.size() && t_[p_] != ',' && t_[p_] != '}' && t_[p_] != ']' &&
           !std::isspace(static_cast<unsigned char>(t_[p_])))
      ++p_;
  }

  const std::string& t_;
  size_t p_ = 0;
};

// Typed access into the parsed document; every error names where it happened.
class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  using Path = std::vector<std::string>;

  static Path at(Path p, const std::string& key) {
    p.push_back(key);
    return p;
  }
  static Path at(Path p, size_t k) {
    p.push_back(std::to_string(k));
    return p;
  }

  [[noreturn]] void fail(const std::string& kind, const Path& p, const std::string& what) const {
    std::string ptr;
    for (auto& t : p) ptr += "/" + t;
    if (ptr.empty()) ptr = "/";
    auto [l, c] = line_column(text_, Locator(text_).find(p));
    throw TopologyError(kind, ptr + " (line " + std::to_string(l) + ", column " + std::to_string(c) + "): " + what);
  }

  const json& get(const json& obj, const Path& p, const std::string& key) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail("SyntaxError", p, "missing key \"" + key + "\"");
    return *it;
  }
  int integer(const json& v, const Path& p) const {
    if (!v.is_number_integer()) fail("SyntaxError", p, "expected an integer");
    return v.get<int>();
  }
  std::string string(const json& v, const Path& p) const {
    if (!v.is_string()) fail("SyntaxError", p, "expected a string");
    return v.get<std::string>();
  }
  bool boolean(const json& v, const Path& p) const {
    if (!v.is_boolean()) fail("SyntaxError", p, "expected true or false");
    return v.get<bool>();
  }
  const json& array(const json& v, const Path& p) const {
    if (!v.is_array()) fail("SyntaxError", p, "expected an array");
    return v;
  }
  const json& object(const json& v, const Path& p) const {
    if (!v.is_object()) fail("SyntaxError", p, "expected an object");
    return v;
  }
  std::vector<int> ints(const json& v, const Path& p) const {
    std::vector<int> out;
    for (size_t k = 0; k < array(v, p).size(); ++k) out.push_back(integer(v[k], at(p, k)));
    return out;
  }
  void keys(const json& obj, const Path& p, const std::vector<std::string>& allowed) const {
    for (auto& [k, v] : obj.items())
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) fail("SyntaxError", at(p, k), "unknown key");
  }

 private:
  const std::string& text_;
};

void read_meta(const Reader& R, const json& doc, std::string& name, std::map<std::string, std::string>& meta) {
  if (doc.contains("name")) name = R.string(doc["name"], {"name"});
  if (doc.contains("meta"))
    for (auto& [k, v] : R.object(doc["meta"], {"meta"}).items()) meta[k] = R.string(v, {"meta", k});
}

Walk read_walk(const Reader& R, const json& v, const Reader::Path& p, int sides_limit) {
  R.object(v, p);
  R.keys(v, p, {"closed", "sides"});
  Walk w;
  w.closed = R.boolean(R.get(v, p, "closed"), Reader::at(p, "closed"));
  auto sp = Reader::at(p, "sides");
  w.sides = R.ints(R.get(v, p, "sides"), sp);
  for (size_t k = 0; k < w.sides.size(); ++k)
    if (w.sides[k] < 0 || w.sides[k] >= sides_limit)
      R.fail("DanglingReference", Reader::at(sp, k), "side " + std::to_string(w.sides[k]) + " names a missing edge");
  return w;
}

Diagram read_diagram(const Reader& R, const json& doc) {
  Diagram D;
  read_meta(R, doc, D.name, D.meta);
  D.cx.num_vertices = R.integer(R.get(doc, {}, "vertices"), {"vertices"});
  if (D.cx.num_vertices < 0) R.fail("SyntaxError", {"vertices"}, "negative vertex count");
  const int nv = D.cx.num_vertices;
  auto vertex = [&](const json& v, const Reader::Path& p) {
    int x = R.integer(v, p);
    if (x < 0 || x >= nv) R.fail("DanglingReference", p, "vertex " + std::to_string(x) + " does not exist");
    return x;
  };

  const json& edges = R.array(R.get(doc, {}, "edges"), {"edges"});
  for (size_t e = 0; e < edges.size(); ++e) {
    auto p = Reader::at({"edges"}, e);
    if (!edges[e].is_array() || edges[e].size() != 2) R.fail("SyntaxError", p, "an edge is a pair of vertices");
    D.cx.edges.push_back({vertex(edges[e][0], Reader::at(p, 0)), vertex(edges[e][1], Reader::at(p, 1))});
  }
  const int sides_limit = 2 * static_cast<int>(D.cx.edges.size());

  const json& faces = R.array(R.get(doc, {}, "faces"), {"faces"});
  for (size_t f = 0; f < faces.size(); ++f) {
    auto p = Reader::at({"faces"}, f);
    R.object(faces[f], p);
    R.keys(faces[f], p, {"sides", "surface"});
    int tag = R.integer(R.get(faces[f], p, "surface"), Reader::at(p, "surface"));
    if (tag < 0 || tag > 3) R.fail("DanglingReference", Reader::at(p, "surface"), "surfaces are 0..3");
    Walk w = read_walk(R, json{{"closed", true}, {"sides", R.get(faces[f], p, "sides")}}, p, sides_limit);
    D.add_face(tag, w.sides);
  }

  if (doc.contains("families")) {
    const json& fams = R.object(doc["families"], {"families"});
    for (auto& [name, walks] : fams.items()) {
      auto p = Reader::at({"families"}, name);
      int f = family_from_name(name);
      if (f < 0) R.fail("DanglingReference", p, "unknown family \"" + name + "\"");
      for (size_t k = 0; k < R.array(walks, p).size(); ++k)
        D.fam[f].push_back(read_walk(R, walks[k], Reader::at(p, k), sides_limit));
    }
  }

  if (doc.contains("bridge")) {
    const json& b = R.array(doc["bridge"], {"bridge"});
    for (size_t k = 0; k < b.size(); ++k) D.bridge.push_back(vertex(b[k], Reader::at({"bridge"}, k)));
  }

  if (doc.contains("crossings")) {
    const json& xs = R.array(doc["crossings"], {"crossings"});
    for (size_t k = 0; k < xs.size(); ++k) {
      auto p = Reader::at({"crossings"}, k);
      R.object(xs[k], p);
      R.keys(xs[k], p, {"over", "under", "vertex"});
      auto strand = [&](const std::string& which, int& family, int& index) {
        auto q = Reader::at(p, which);
        const json& s = R.object(R.get(xs[k], p, which), q);
        R.keys(s, q, {"family", "index"});
        std::string name = R.string(R.get(s, q, "family"), Reader::at(q, "family"));
        family = family_from_name(name);
        if (family < 0) R.fail("DanglingReference", Reader::at(q, "family"), "unknown family \"" + name + "\"");
        index = R.integer(R.get(s, q, "index"), Reader::at(q, "index"));
        if (index < 0 || index >= static_cast<int>(D.fam[family].size()))
          R.fail("DanglingReference", Reader::at(q, "index"), name + " has no walk " + std::to_string(index));
      };
      CrossFlag c;
      c.vertex = vertex(R.get(xs[k], p, "vertex"), Reader::at(p, "vertex"));
      strand("over", c.over_family, c.over_index);
      strand("under", c.under_family, c.under_index);
      D.flags.push_back(c);
    }
  }
  return D;
}

LinkDiagram read_link(const Reader& R, const json& doc) {
  LinkDiagram L;
  read_meta(R, doc, L.name, L.meta);
  L.signs = R.ints(R.get(doc, {}, "signs"), {"signs"});
  for (size_t k = 0; k < L.signs.size(); ++k)
    if (L.signs[k] != 1 && L.signs[k] != -1) R.fail("SyntaxError", Reader::at({"signs"}, k), "a sign is 1 or -1");
  const json& comps = R.array(R.get(doc, {}, "components"), {"components"});
  for (size_t c = 0; c < comps.size(); ++c) {
    auto p = Reader::at({"components"}, c);
    L.components.push_back(R.ints(comps[c], p));
    for (size_t k = 0; k < L.components.back().size(); ++k) {
      int x = L.components.back()[k];
      if (x == 0 || std::abs(x) > L.num_crossings())
        R.fail("DanglingReference", Reader::at(p, k), "crossing " + std::to_string(std::abs(x)) + " does not exist");
    }
  }
  if (doc.contains("partition")) {
    const json& part = R.array(doc["partition"], {"partition"});
    for (size_t k = 0; k < part.size(); ++k) L.partition.push_back(R.string(part[k], Reader::at({"partition"}, k)));
  }
  try {
    check_link(L);
  } catch (const TopologyError& e) {
    R.fail(e.kind(), {"components"}, e.what());
  }
  return L;
}

json walk_json(const Walk& w) { return json{{"closed", w.closed}, {"sides", w.sides}}; }

}  // namespace

std::string extension_for(const std::string& kind) {
  for (auto& [k, e] : kExtensions)
    if (k == kind) return e;
  throw TopologyError("UnknownKind", "no diagram kind \"" + kind + "\"");
}

std::string kind_for_path(const std::string& path) {
  for (auto& [k, e] : kExtensions)
    if (path.size() >= e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0) return k;
  return "";
}

DiagramFile parse_diagram(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [l, c] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (auto k = what.find("syntax error"); k != std::string::npos) what = what.substr(k);
    throw TopologyError("SyntaxError", "line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what);
  }
  Reader R(text);
  R.object(doc, {});
  if (!doc.contains("format_version")) throw TopologyError("VersionMismatch", "format_version is missing");
  int version = R.integer(doc["format_version"], {"format_version"});
  if (version != kFormatVersion)
    throw TopologyError("VersionMismatch",
                        "format_version " + std::to_string(version) + ", expected " + std::to_string(kFormatVersion));
  DiagramFile f;
  f.kind = R.string(R.get(doc, {}, "kind"), {"kind"});
  if (f.kind == "link") {
    R.keys(doc, {}, {"components", "format_version", "kind", "meta", "name", "partition", "signs"});
    f.link = read_link(R, doc);
    return f;
  }
  if (f.kind != "triheeg" && f.kind != "ptri" && f.kind != "shadow")
    R.fail("SyntaxError", {"kind"}, "unknown kind \"" + f.kind + "\"");
  R.keys(doc, {},
         {"bridge", "crossings", "edges", "faces", "families", "format_version", "kind", "meta", "name", "vertices"});
  f.diagram = read_diagram(R, doc);
  return f;
}

std::string serialize(const DiagramFile& f) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = f.kind;
  if (f.kind == "link") {
    const LinkDiagram& L = f.link;
    doc["name"] = L.name;
    doc["meta"] = L.meta;
    doc["components"] = L.components;
    doc["signs"] = L.signs;
    if (!L.partition.empty()) doc["partition"] = L.partition;
    return doc.dump() + "\n";
  }
  const Diagram& D = f.diagram;
  doc["name"] = D.name;
  doc["meta"] = D.meta;
  doc["vertices"] = D.cx.num_vertices;
  doc["edges"] = json::array();
  for (auto& e : D.cx.edges) doc["edges"].push_back({e[0], e[1]});
  doc["faces"] = json::array();
  for (size_t k = 0; k < D.cx.faces.size(); ++k)
    doc["faces"].push_back(json{{"surface", D.face_tag[k]}, {"sides", D.cx.faces[k]}});
  doc["families"] = json::object();
  for (int fm = 0; fm < kFamilies; ++fm) {
    if (D.fam[fm].empty()) continue;
    json ws = json::array();
    for (auto& w : D.fam[fm]) ws.push_back(walk_json(w));
    doc["families"][family_name(fm)] = ws;
  }
  if (!D.bridge.empty()) doc["bridge"] = D.bridge;
  if (!D.flags.empty()) {
    doc["crossings"] = json::array();
    for (auto& c : D.flags)
      doc["crossings"].push_back(json{{"vertex", c.vertex},
                                      {"over", {{"family", family_name(c.over_family)}, {"index", c.over_index}}},
                                      {"under", {{"family", family_name(c.under_family)}, {"index", c.under_index}}}});
  }
  return doc.dump() + "\n";
}

DiagramFile read_diagram_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TopologyError("IOError", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  DiagramFile f = parse_diagram(ss.str());
  std::string want = kind_for_path(path);
  if (!want.empty() && want != f.kind)
    throw TopologyError("KindMismatch", path + " holds a " + f.kind + " diagram, expected " + want);
  return f;
}

void write_diagram_file(const std::string& path, const DiagramFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw TopologyError("IOError", "cannot write " + path);
  out << serialize(f);
}

DiagramFile as_file(const Diagram& D, const std::string& kind) {
  DiagramFile f;
  f.kind = kind;
  f.diagram = D;
  return f;
}

// ---------------------------------------------------------------------------
// Canonical relabeling

namespace {

int rotate_tag(int t, int r) { return t == kCentral ? t : cyc(t + r); }
int rotate_family(int f, int r) { return fam(fam_kind(f), fam_index(f) + r); }

struct Labeling {
  std::vector<int> vnew, enew, eflip, forder, fstart;
  std::vector<long long> code;
};

// Least rotation of a closed walk, either way round.
std::vector<int> least_cycle(const std::vector<int>& s) {
  std::vector<int> best = s;
  if (s.empty()) return best;
  std::vector<int> rev(s.rbegin(), s.rend());
  for (int& x : rev) x ^= 1;
  for (const std::vector<int>* seq : std::array<const std::vector<int>*, 2>{&s, &rev})
    for (size_t k = 0; k < seq->size(); ++k) {
      std::vector<int> c(seq->begin() + k, seq->end());
      c.insert(c.end(), seq->begin(), seq->begin() + k);
      best = std::min(best, c);
    }
  return best;
}

class Canonizer {
 public:
  explicit Canonizer(const Diagram& D) : D_(D) {
    inc_.resize(D.cx.edges.size());
    for (size_t f = 0; f < D.cx.faces.size(); ++f)
      for (size_t k = 0; k < D.cx.faces[f].size(); ++k) inc_[D.cx.faces[f][k] >> 1].push_back({static_cast<int>(f), static_cast<int>(k)});
  }

  Diagram best() {
    std::optional<Labeling> best;
    int best_r = 0;
    // roots: faces whose (rotated tag, size) is least
    for (int r = 0; r < 3; ++r) {
      std::pair<int, size_t> key{99, 0};
      for (size_t f = 0; f < D_.cx.faces.size(); ++f)
        key = std::min(key, {rotate_tag(D_.face_tag[f], r), D_.cx.faces[f].size()});
      bool any = false;
      for (size_t f = 0; f < D_.cx.faces.size(); ++f) {
        if (std::pair<int, size_t>{rotate_tag(D_.face_tag[f], r), D_.cx.faces[f].size()} != key) continue;
        for (size_t k = 0; k < D_.cx.faces[f].size(); ++k) {
          any = true;
          auto L = label(r, static_cast<int>(f), static_cast<int>(k), best ? &best->code : nullptr);
          if (L && (!best || L->code < best->code)) {
            best = std::move(L);
            best_r = r;
          }
        }
      }
      if (!any) {
        auto L = label(r, -1, 0, best ? &best->code : nullptr);
        if (L && (!best || L->code < best->code)) {
          best = std::move(L);
          best_r = r;
        }
      }
    }
    return apply(*best, best_r);
  }

 private:
  // With a bound, gives up (nullopt) as soon as the faces encode past it.
  std::optional<Labeling> label(int r, int root, int start, const std::vector<long long>* bound = nullptr) const {
    const int nv = D_.cx.num_vertices, ne = static_cast<int>(D_.cx.edges.size()), nf = static_cast<int>(D_.cx.faces.size());
    Labeling L;
    auto& c = L.code;
    c = {nv, ne, nf};
    bool below = bound == nullptr, over = false;
    auto emit = [&](long long x) {
      if (!below) {
        long long b = c.size() < bound->size() ? (*bound)[c.size()] : -2;
        if (x > b) over = true;
        if (x < b) below = true;
      }
      c.push_back(x);
    };
    L.vnew.assign(nv, -1);
    L.enew.assign(ne, -1);
    L.eflip.assign(ne, 0);
    std::vector<char> queued(nf, 0);
    std::vector<int> fstart(nf, 0);
    int nvc = 0, nec = 0;
    std::deque<int> q;
    auto push = [&](int f, int k) {
      queued[f] = 1;
      fstart[f] = k;
      q.push_back(f);
    };
    auto run = [&]() {
      while (!q.empty() && !over) {
        int f = q.front();
        q.pop_front();
        L.forder.push_back(f);
        const auto& sides = D_.cx.faces[f];
        for (size_t j = 0; j < sides.size(); ++j) {
          int s = sides[(fstart[f] + j) % sides.size()], e = s >> 1;
          int t = D_.cx.tail(s);
          if (L.vnew[t] < 0) L.vnew[t] = nvc++;
          if (L.enew[e] < 0) {
            L.enew[e] = nec++;
            L.eflip[e] = s & 1;
          }
          std::vector<std::pair<int, int>> nb;
          for (auto [g, k] : inc_[e])
            if (!queued[g]) nb.push_back({g, k});
          std::sort(nb.begin(), nb.end(), [&](auto a, auto b) {
            int ta = rotate_tag(D_.face_tag[a.first], r), tb = rotate_tag(D_.face_tag[b.first], r);
            return ta != tb ? ta < tb : a < b;
          });
          for (auto [g, k] : nb)
            if (!queued[g]) push(g, k);
        }
        emit(rotate_tag(D_.face_tag[f], r));
        emit(static_cast<long long>(sides.size()));
        for (size_t j = 0; j < sides.size(); ++j) {
          int s = sides[(fstart[f] + j) % sides.size()];
          emit(2 * L.enew[s >> 1] + ((s & 1) ^ L.eflip[s >> 1]));
        }
      }
    };
    if (root >= 0) push(root, start);
    run();
    if (over) return std::nullopt;
    for (int f = 0; f < nf; ++f)
      if (!queued[f]) {
        push(f, 0);
        run();
        if (over) return std::nullopt;
      }
    for (int e = 0; e < ne; ++e) {
      for (int v : D_.cx.edges[e])
        if (L.vnew[v] < 0) L.vnew[v] = nvc++;
      if (L.enew[e] < 0) L.enew[e] = nec++;
    }
    for (int v = 0; v < nv; ++v)
      if (L.vnew[v] < 0) L.vnew[v] = nvc++;
    L.fstart = fstart;

    std::vector<std::array<int, 2>> edges(ne);
    for (int e = 0; e < ne; ++e) {
      auto [u, v] = D_.cx.edges[e];
      edges[L.enew[e]] = L.eflip[e] ? std::array<int, 2>{L.vnew[v], L.vnew[u]} : std::array<int, 2>{L.vnew[u], L.vnew[v]};
    }
    for (auto& e : edges) c.insert(c.end(), {e[0], e[1]});
    auto fams = families(L, r);
    for (auto& walks : fams.walks) {
      c.push_back(static_cast<long long>(walks.size()));
      for (auto& w : walks) {
        c.push_back(w.closed);
        c.push_back(static_cast<long long>(w.sides.size()));
        c.insert(c.end(), w.sides.begin(), w.sides.end());
      }
    }
    c.push_back(-1);
    for (int v : fams.bridge) c.push_back(v);
    c.push_back(-1);
    for (auto& x : fams.flags) c.insert(c.end(), {x.vertex, x.over_family, x.over_index, x.under_family, x.under_index});
    return L;
  }

  struct Families {
    std::array<std::vector<Walk>, kFamilies> walks;
    std::vector<int> bridge;
    std::vector<CrossFlag> flags;
  };

  Families families(const Labeling& L, int r) const {
    auto side = [&](int s) { return 2 * L.enew[s >> 1] + ((s & 1) ^ L.eflip[s >> 1]); };
    Families F;
    std::array<std::vector<int>, kFamilies> index_map;
    for (int f = 0; f < kFamilies; ++f) {
      int g = rotate_family(f, r);
      std::vector<std::pair<Walk, int>> ws;
      for (size_t k = 0; k < D_.fam[f].size(); ++k) {
        Walk w = D_.fam[f][k];
        for (int& s : w.sides) s = side(s);
        if (w.closed) w.sides = least_cycle(w.sides);
        ws.push_back({w, static_cast<int>(k)});
      }
      std::sort(ws.begin(), ws.end(), [](auto& a, auto& b) {
        return std::tie(a.first.closed, a.first.sides) < std::tie(b.first.closed, b.first.sides);
      });
      index_map[f].resize(ws.size());
      for (size_t k = 0; k < ws.size(); ++k) {
        index_map[f][ws[k].second] = static_cast<int>(k);
        F.walks[g].push_back(ws[k].first);
      }
    }
    for (int v : D_.bridge) F.bridge.push_back(L.vnew[v]);
    std::sort(F.bridge.begin(), F.bridge.end());
    for (auto x : D_.flags) {
      CrossFlag y{L.vnew[x.vertex], rotate_family(x.over_family, r), index_map[x.over_family][x.over_index],
                  rotate_family(x.under_family, r), index_map[x.under_family][x.under_index]};
      F.flags.push_back(y);
    }
    std::sort(F.flags.begin(), F.flags.end(), [](const CrossFlag& a, const CrossFlag& b) {
      return std::tie(a.vertex, a.over_family, a.over_index, a.under_family, a.under_index) <
             std::tie(b.vertex, b.over_family, b.over_index, b.under_family, b.under_index);
    });
    return F;
  }

  Diagram apply(const Labeling& L, int r) const {
    auto side = [&](int s) { return 2 * L.enew[s >> 1] + ((s & 1) ^ L.eflip[s >> 1]); };
    Diagram out;
    out.name = D_.name;
    out.meta = D_.meta;
    out.cx.num_vertices = D_.cx.num_vertices;
    out.cx.edges.resize(D_.cx.edges.size());
    for (size_t e = 0; e < D_.cx.edges.size(); ++e) {
      auto [u, v] = D_.cx.edges[e];
      out.cx.edges[L.enew[e]] =
          L.eflip[e] ? std::array<int, 2>{L.vnew[v], L.vnew[u]} : std::array<int, 2>{L.vnew[u], L.vnew[v]};
    }
    for (int f : L.forder) {
      const auto& sides = D_.cx.faces[f];
      std::vector<int> ns;
      for (size_t j = 0; j < sides.size(); ++j) ns.push_back(side(sides[(L.fstart[f] + j) % sides.size()]));
      out.add_face(rotate_tag(D_.face_tag[f], r), ns);
    }
    auto F = families(L, r);
    out.fam = F.walks;
    out.bridge = F.bridge;
    out.flags = F.flags;
    return out;
  }

  const Diagram& D_;
  std::vector<std::vector<std::pair<int, int>>> inc_;
};

}  // namespace

Diagram canonical_relabel(const Diagram& D) { return Canonizer(D).best(); }

std::string canonical_encoding(const Diagram& D) {
  Diagram C = canonical_relabel(D);
  C.name.clear();
  C.meta.clear();
  json doc = json::parse(serialize(as_file(C, "triheeg")));
  doc.erase("kind");
  doc.erase("name");
  doc.erase("meta");
  return doc.dump();
}

}  // namespace trisect
