#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "trisect/cli.hpp"
#include "trisect/corpus.hpp"
#include "trisect/enumerate.hpp"
#include "trisect/format.hpp"
#include "trisect/invariants.hpp"
#include "trisect/render.hpp"

using namespace trisect;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = fs::path(TRISECT_SOURCE_DIR) / "corpus";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DiagramFile file_of(const corpus::Entry& e) {
  return e.kind == "link" ? DiagramFile{"link", {}, e.link} : as_file(e.diagram, e.kind);
}

// The same diagram under random vertex, edge and face numbering, with every
// face and closed walk started at a random side. Crossing flags are not
// remapped, so shadow diagrams are left out.
Diagram scramble(const Diagram& D, std::mt19937& rng) {
  const int nv = D.cx.num_vertices, ne = static_cast<int>(D.cx.edges.size()), nf = static_cast<int>(D.cx.faces.size());
  std::vector<int> pv(nv), pe(ne), pf(nf);
  std::iota(pv.begin(), pv.end(), 0);
  std::iota(pe.begin(), pe.end(), 0);
  std::iota(pf.begin(), pf.end(), 0);
  std::shuffle(pv.begin(), pv.end(), rng);
  std::shuffle(pe.begin(), pe.end(), rng);
  std::shuffle(pf.begin(), pf.end(), rng);
  auto side = [&](int s) { return 2 * pe[s >> 1] + (s & 1); };
  auto rotate = [&](std::vector<int> v) {
    if (!v.empty()) std::rotate(v.begin(), v.begin() + rng() % v.size(), v.end());
    return v;
  };
  Diagram R = D;
  for (int e = 0; e < ne; ++e) R.cx.edges[pe[e]] = {pv[D.cx.edges[e][0]], pv[D.cx.edges[e][1]]};
  for (int f = 0; f < nf; ++f) {
    std::vector<int> s;
    for (int x : D.cx.faces[f]) s.push_back(side(x));
    R.cx.faces[pf[f]] = rotate(s);
    R.face_tag[pf[f]] = D.face_tag[f];
  }
  for (auto& fam : R.fam) {
    for (auto& w : fam) {
      for (int& x : w.sides) x = side(x);
      if (w.closed) w.sides = rotate(w.sides);
    }
    std::shuffle(fam.begin(), fam.end(), rng);
  }
  for (int& v : R.bridge) v = pv[v];
  return R;
}

// Sector i becomes sector i + 1, with the families that go along.
Diagram rotate_sectors(const Diagram& D) {
  Diagram R = D;
  for (auto& t : R.face_tag)
    if (t != kCentral) t = cyc(t + 1);
  for (int f = 0; f < kFamilies; ++f) R.fam[fam(fam_kind(f), fam_index(f) + 1)] = D.fam[f];
  return R;
}

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& name) { return (kCorpus / name).string(); }

}  // namespace

TEST_CASE("corpus files on disk are the canonical serialization of their generators") {
  auto all = corpus::all();
  REQUIRE(all.size() == 18);
  for (auto& e : all) {
    INFO(e.file);
    auto path = kCorpus / e.file;
    REQUIRE(fs::exists(path));
    CHECK(slurp(path) == serialize(file_of(e)));
    auto f = read_diagram_file(path.string());
    CHECK(f.kind == e.kind);
    auto r = validate_file(f);
    INFO(r.first_failure());
    CHECK(r.ok);
    // every file carries expectations, and all of them were compared
    int expected = 0;
    for (auto& [k, v] : (e.kind == "link" ? e.link.meta : e.diagram.meta)) expected += k.rfind("expect.", 0) == 0;
    CHECK(expected > 0);
    int compared = 0;
    for (auto& m : r.info) compared += m.find("as recorded") != std::string::npos;
    CHECK(compared == expected);
  }
}

TEST_CASE("parse and serialize round trip") {
  for (auto& e : corpus::all()) {
    INFO(e.file);
    auto text = serialize(file_of(e));
    CHECK(text.back() == '\n');
    CHECK(text.find('\n') == text.size() - 1);
    auto back = parse_diagram(text);
    CHECK(serialize(back) == text);
    if (e.kind == "link") {
      CHECK(back.link == e.link);
    } else {
      CHECK(back.diagram.cx.edges == e.diagram.cx.edges);
      CHECK(back.diagram.cx.faces == e.diagram.cx.faces);
      CHECK(back.diagram.fam == e.diagram.fam);
      CHECK(back.diagram.meta == e.diagram.meta);
    }
  }
  // pretty-printed input parses to the same canonical text
  auto f = read_diagram_file(corpus_file("trivial_b4.ptd"));
  auto pretty = nlohmann::json::parse(serialize(f)).dump(4);
  CHECK(serialize(parse_diagram(pretty)) == serialize(f));
}

TEST_CASE("canonical form is idempotent and ignores labels and sector rotation") {
  std::mt19937 rng(11);
  for (auto& e : corpus::all()) {
    if (e.kind == "link" || e.kind == "shadow") continue;
    INFO(e.file);
    const Diagram C = canonical_relabel(e.diagram);
    CHECK(serialize(as_file(canonical_relabel(C), e.kind)) == serialize(as_file(C, e.kind)));
    const std::string code = canonical_encoding(e.diagram);
    CHECK(canonical_encoding(C) == code);
    for (int k = 0; k < 3; ++k) CHECK(canonical_encoding(scramble(e.diagram, rng)) == code);
    CHECK(canonical_encoding(rotate_sectors(e.diagram)) == code);
    // the relabeled diagram is the same diagram up to a rotation of the sectors
    auto want = compute_invariants(as_file(C, e.kind));
    bool found = false;
    Diagram R = e.diagram;
    for (int r = 0; r < 3; ++r, R = rotate_sectors(R)) found = found || compute_invariants(as_file(R, e.kind)) == want;
    CHECK(found);
  }
  // different diagrams get different codes
  std::set<std::string> codes;
  for (auto& e : corpus::all())
    if (e.kind == "triheeg") codes.insert(canonical_encoding(e.diagram));
  CHECK(codes.size() == 4);
}

TEST_CASE("parse errors carry their location") {
  SUBCASE("syntax") {
    std::string text = "{\n  \"format_version\": 1,\n  \"kind\": \"link\",,\n}";
    try {
      parse_diagram(text);
      FAIL("accepted broken JSON");
    } catch (const TopologyError& e) {
      CHECK(e.kind() == "SyntaxError");
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("dangling crossing reference") {
    std::string text =
        "{\n"
        "  \"format_version\": 1,\n"
        "  \"kind\": \"link\",\n"
        "  \"components\": [[1, -1], [2, -3]],\n"
        "  \"signs\": [1, 1]\n"
        "}\n";
    try {
      parse_diagram(text);
      FAIL("accepted a missing crossing");
    } catch (const TopologyError& e) {
      CHECK(e.kind() == "DanglingReference");
      std::string what = e.what();
      CHECK(what.find("/components/1/1") != std::string::npos);
      CHECK(what.find("line 4") != std::string::npos);
    }
  }
  SUBCASE("dangling edge in a face") {
    auto j = nlohmann::json::parse(slurp(kCorpus / "trivial_s3.thd"));
    j["faces"][2]["sides"][1] = 999;
    try {
      parse_diagram(j.dump(1));
      FAIL("accepted a missing edge");
    } catch (const TopologyError& e) {
      CHECK(e.kind() == "DanglingReference");
      CHECK(std::string(e.what()).find("/faces/2/sides/1") != std::string::npos);
    }
  }
  SUBCASE("version") {
    auto j = nlohmann::json::parse(slurp(kCorpus / "trivial_s3.thd"));
    j["format_version"] = 2;
    CHECK_THROWS_WITH_AS(parse_diagram(j.dump()), doctest::Contains("VersionMismatch"), TopologyError);
    j.erase("format_version");
    CHECK_THROWS_WITH_AS(parse_diagram(j.dump()), doctest::Contains("VersionMismatch"), TopologyError);
  }
  SUBCASE("unknown keys and kinds") {
    auto j = nlohmann::json::parse(slurp(kCorpus / "trivial_s3.thd"));
    j["colour"] = "red";
    CHECK_THROWS_WITH_AS(parse_diagram(j.dump()), doctest::Contains("unknown key"), TopologyError);
    j.erase("colour");
    j["kind"] = "census";
    CHECK_THROWS_WITH_AS(parse_diagram(j.dump()), doctest::Contains("SyntaxError"), TopologyError);
  }
  SUBCASE("files") {
    auto tmp = fs::temp_directory_path() / "trisect_kind_mismatch.thd";
    std::ofstream(tmp) << slurp(kCorpus / "trivial_b4.ptd");
    CHECK_THROWS_WITH_AS(read_diagram_file(tmp.string()), doctest::Contains("KindMismatch"), TopologyError);
    fs::remove(tmp);
    CHECK_THROWS_WITH_AS(read_diagram_file("/nonexistent/x.thd"), doctest::Contains("IOError"), TopologyError);
    CHECK(kind_for_path("a/b.shd") == "shadow");
    CHECK(kind_for_path("a/b.txt").empty());
  }
}

TEST_CASE("enumeration at complexity 0 finds only the trivial diagram") {
  EnumerationOptions o;
  o.max_complexity = 0;
  auto E = enumerate_triheeg(o);
  REQUIRE(E.entries.size() == 1);
  CHECK(E.entries[0].signature == "Z;0;0;Z");
  CHECK(E.entries[0].complexity == 0);
  CHECK_FALSE(E.budget_exceeded);
  CHECK(E.entries[0].indices == indices_3(corpus::trivial_s3()));
}

TEST_CASE("enumeration up to complexity 2 has cyclic first homology") {
  EnumerationOptions o;
  o.max_complexity = 2;
  auto E = enumerate_triheeg(o);
  CHECK_FALSE(E.budget_exceeded);
  std::set<std::string> h1;
  for (auto& e : E.entries) {
    CHECK(e.complexity <= 2);
    CHECK(e.homology[1].cyclic());
    CHECK(e.homology[1].rank < 2);
    CHECK(e.provenance == Provenance::Enumerated);
    h1.insert(e.homology[1].str());
    CHECK(validate_triheeg(e.diagram).ok);
    CHECK(canonical_encoding(e.diagram) == e.encoding);
  }
  // S3 and S1 x S2 both appear
  CHECK(h1.count("0"));
  CHECK(h1.count("Z"));
  std::set<std::string> codes;
  for (auto& e : E.entries) codes.insert(e.encoding);
  CHECK(codes.size() == E.entries.size());
  CHECK(codes.count(canonical_encoding(corpus::s1xs2())) <= 1);
}

TEST_CASE("enumeration does not depend on seed or thread count") {
  auto codes = [](unsigned seed, int threads) {
    EnumerationOptions o;
    o.max_complexity = 2;
    o.seed = seed;
    o.threads = threads;
    std::vector<std::string> out;
    for (auto& e : enumerate_triheeg(o).entries) out.push_back(e.encoding + e.signature);
    return out;
  };
  auto base = codes(0, 1);
  CHECK(codes(5, 1) == base);
  CHECK(codes(123, 3) == base);
  EnumerationOptions one;
  one.max_complexity = 1;
  one.seed = 9;
  CHECK(enumerate_triheeg(one).entries.size() == 1);
}

TEST_CASE("enumeration budget and bounds") {
  EnumerationOptions o;
  o.max_complexity = 2;
  o.budget = 5;
  auto E = enumerate_triheeg(o);
  CHECK(E.budget_exceeded);
  CHECK(E.examined == 5);
  for (auto bad : {-1, 5}) {
    EnumerationOptions b;
    b.max_complexity = bad;
    CHECK_THROWS_WITH_AS(enumerate_triheeg(b), doctest::Contains("BadBounds"), TopologyError);
  }
  EnumerationOptions b;
  b.max_b = 0;
  CHECK_THROWS_WITH_AS(enumerate_triheeg(b), doctest::Contains("BadBounds"), TopologyError);
}

TEST_CASE("unfolded surfaces are disks") {
  for (auto& e : corpus::all()) {
    if (e.kind == "link") continue;
    for (int t : e.diagram.tags()) {
      INFO(e.file << " surface " << t);
      auto U = unfold(e.diagram, t);
      const auto& Q = U.disk;
      CHECK(Q.cx.num_vertices - static_cast<int>(Q.cx.edges.size()) + static_cast<int>(Q.cx.faces.size()) == 1);
      CHECK(U.faces.size() == e.diagram.faces_of(t).size());
      for (int c : U.cut_edges) CHECK(U.copies.at(c).size() == 2);
      CHECK(U.at.size() == static_cast<size_t>(Q.cx.num_vertices));
    }
  }
}

TEST_CASE("svg has one panel per surface") {
  auto count = [](const std::string& s, const std::string& what) {
    int n = 0;
    for (size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
    return n;
  };
  auto svg = render_svg(corpus::t3());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<g id=\"surface-") == 3);
  auto psvg = render_svg(corpus::two_s2xd2());
  CHECK(count(psvg, "<g id=\"surface-") == 4);
  CHECK(psvg.find("sigma_C") != std::string::npos);
  // bridge points are drawn
  CHECK(count(render_svg(corpus::lht_disk()), "r=\"3.5\"") >= 10);
}

TEST_CASE("command line") {
  SUBCASE("validate") {
    auto r = cli({"validate", corpus_file("t3.thd"), corpus_file("cp1.shd")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("t3.thd: ok") != std::string::npos);
    auto bad = fs::temp_directory_path() / "trisect_bad.lnk";
    std::ofstream(bad) << "{\"format_version\":1,\"kind\":\"link\",\"components\":[[1]],\"signs\":[1]}";
    r = cli({"validate", bad.string()});
    CHECK(r.code == kExitInvalid);
    CHECK(r.out.find("FAILED") != std::string::npos);
    fs::remove(bad);
    CHECK(cli({"validate", "/nonexistent.thd"}).code == kExitUsage);
  }
  SUBCASE("invariants") {
    auto r = cli({"invariants", corpus_file("s1xb3.ptd")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("\nc=1\n") != std::string::npos);
    CHECK(r.out.find("\nc_pair=3\n") != std::string::npos);
    r = cli({"invariants", "--format", "json", corpus_file("t3.thd")});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["invariants"]["homology"] == "Z;Z^3;Z^3;Z");
  }
  SUBCASE("bracket and boundary link") {
    auto r = cli({"bracket", corpus_file("trefoil_surface.shd")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("jones: t^-1 + t^-3 - t^-4") != std::string::npos);
    CHECK(r.out.find("left-handed trefoil") != std::string::npos);
    r = cli({"boundary-link", "--format", "json", corpus_file("lht_disk.shd")});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["crossings"] == 3);
    CHECK(j["signs"] == nlohmann::json::array({-1, -1, -1}));
    CHECK(cli({"boundary-link", corpus_file("lht_cp1_x1.lnk")}).code == kExitUsage);
    CHECK(cli({"bracket", corpus_file("lht_cp1_x2.lnk")}).code == kExitOk);
  }
  SUBCASE("homclass") {
    auto r = cli({"homclass", corpus_file("lht_disk.shd"), corpus_file("lht_cp1_x1.lnk"), corpus_file("lht_cp1_x2.lnk"),
                  corpus_file("lht_cp1_x3.lnk")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("pairing=-2") != std::string::npos);
    CHECK(r.out.find("[K] = -2 H") != std::string::npos);
  }
  SUBCASE("moves") {
    auto dir = fs::temp_directory_path();
    auto torus = (dir / "trisect_torus.ptd").string(), band = (dir / "trisect_band.ptd").string();
    auto r = cli({"move", "--type", "torus-I", "--move-site", "j=2", corpus_file("trivial_b4.ptd"), "-o", torus});
    CHECK(r.code == kExitOk);
    CHECK(r.err.find("  c=1\n") != std::string::npos);
    r = cli({"move", "--type", "band", "--move-site", "i=2", "--arc", "0", torus, "-o", band});
    CHECK(r.code == kExitOk);
    auto inv = compute_invariants(read_diagram_file(band));
    CHECK(std::find(inv.begin(), inv.end(), std::pair<std::string, std::string>{"c", "2"}) != inv.end());
    CHECK(cli({"validate", band}).code == kExitOk);
    // every sector of the trivial diagram is a disk, so there is no arc to band along
    r = cli({"move", "--type", "band", "--arc", "0", corpus_file("trivial_b4.ptd")});
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("InvalidSite") != std::string::npos);
    // stdout output is a parseable file
    r = cli({"move", "--type", "heegaard", corpus_file("trivial_s3.thd")});
    CHECK(r.code == kExitOk);
    CHECK(parse_diagram(r.out).kind == "triheeg");
    CHECK(cli({"move", "--type", "torus-I", corpus_file("t3.thd")}).code == kExitUsage);
    CHECK(cli({"move", "--type", "twist", corpus_file("t3.thd")}).code == kExitUsage);
    CHECK(cli({"move", "--type", "heegaard", "--move-site", "i", corpus_file("t3.thd")}).code == kExitUsage);
    fs::remove(torus);
    fs::remove(band);
  }
  SUBCASE("enumerate and render") {
    auto r = cli({"enumerate", "--max-complexity", "0", "--format", "json"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["entries"].size() == 1);
    CHECK(cli({"enumerate", "--budget", "3"}).code == kExitBudget);
    CHECK(cli({"enumerate", "--max-complexity", "9"}).code == kExitUsage);
    r = cli({"render", corpus_file("moebius.shd")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("<svg", 0) == 0);
  }
  SUBCASE("usage") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
  }
}
