#include "trisect/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trisect/enumerate.hpp"
#include "trisect/format.hpp"
#include "trisect/invariants.hpp"
#include "trisect/ptri.hpp"
#include "trisect/render.hpp"
#include "trisect/shadow.hpp"
#include "trisect/triheeg.hpp"

namespace trisect {

namespace {

using json = nlohmann::json;

// Thrown for argument problems found after CLI11 has parsed.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_report(const CheckReport& r, const std::string& label, std::ostream& os) {
  os << label << ": " << (r.ok ? "ok" : "FAILED") << "\n";
  for (auto& m : r.failures) os << "  failure: " << m << "\n";
  for (auto& m : r.warnings) os << "  warning: " << m << "\n";
  for (auto& m : r.info) os << "  info: " << m << "\n";
}

json invariants_json(const Invariants& inv) {
  json j = json::object();
  for (auto& [k, v] : inv) j[k] = v;
  return j;
}

// "i=2,face=7" -> {i: 2, face: 7}
std::map<std::string, std::string> parse_site(const std::vector<std::string>& items) {
  std::map<std::string, std::string> site;
  for (auto& item : items) {
    std::stringstream ss(item);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      if (kv.empty()) continue;
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("move site entry \"" + kv + "\" is not key=value");
      site[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
  }
  return site;
}

int site_int(const std::map<std::string, std::string>& site, const std::string& key, int fallback) {
  auto it = site.find(key);
  if (it == site.end()) return fallback;
  try {
    size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw UsageError("move site " + key + "=" + it->second + " is not an integer");
  }
}

Walk pick_arc(const Diagram& D, int i, int id, unsigned seed) {
  if (id < 0) throw UsageError("arc ids start at 0");
  auto arcs = neat_arcs(D, i, id + 1, seed);
  if (static_cast<int>(arcs.size()) <= id)
    throw TopologyError("InvalidSite", "sigma_" + std::to_string(i) + " offers " + std::to_string(arcs.size()) +
                                           " neat non-separating arcs, no arc " + std::to_string(id));
  return arcs[id];
}

int family_arg(const std::map<std::string, std::string>& site) {
  auto it = site.find("family");
  std::string name = it == site.end() ? "delta_1" : it->second;
  int f = family_from_name(name);
  if (f < 0 || (fam_kind(f) != kAlpha && fam_kind(f) != kDelta)) throw UsageError("no alpha or delta family \"" + name + "\"");
  return f;
}

Diagram apply_move(const DiagramFile& in, const std::string& type, const std::map<std::string, std::string>& site, int arc_id,
                   unsigned seed) {
  static const std::map<std::string, std::vector<std::string>> kinds{
      {"stabilize", {"triheeg"}}, {"heegaard", {"triheeg"}},      {"handleslide", {"triheeg", "ptri"}},
      {"torus-I", {"ptri"}},      {"torus-II", {"ptri"}},          {"band", {"ptri"}},
      {"band-shift", {"ptri"}}};
  auto ok = kinds.at(type);
  if (std::find(ok.begin(), ok.end(), in.kind) == ok.end())
    throw UsageError("move " + type + " does not apply to a " + in.kind + " diagram");
  const int i = site_int(site, "i", 1);
  const int arc = site_int(site, "arc", arc_id);
  if (type == "stabilize") {
    TripleHeegaardDiagram D{in.diagram};
    return stabilize_3(D, i, pick_arc(D, i, arc, seed));
  }
  if (type == "heegaard") {
    TripleHeegaardDiagram D{in.diagram};
    auto faces = D.faces_of(cyc(i));
    return heegaard_stabilize_3(D, i, site_int(site, "face", faces.empty() ? -1 : faces.front()));
  }
  if (type == "handleslide") {
    const int f = family_arg(site), slider = site_int(site, "slider", 0), over = site_int(site, "over", 1);
    auto guide = find_guide(in.diagram, f, slider, over);
    if (!guide) throw TopologyError("InvalidSite", "no guide from curve " + std::to_string(slider) + " to " + std::to_string(over));
    if (in.kind == "ptri") return handleslide_4(PseudoTrisectionDiagram{in.diagram}, f, slider, over, *guide);
    return handleslide(in.diagram, f, slider, over, *guide);
  }
  PseudoTrisectionDiagram D{in.diagram};
  if (type == "torus-I" || type == "torus-II")
    return torus_stabilize(D, type == "torus-I" ? TorusType::I : TorusType::II, site_int(site, "j", i), site_int(site, "face", -1));
  auto S = band_stabilize_at(D, i, pick_arc(D, i, arc, seed));
  if (type == "band") return S.D;
  return boundary_stab_shift(S.D, S.site);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw TopologyError("IOError", "cannot write " + path);
  f << text;
}

struct Options {
  std::vector<std::string> files;
  std::string file, output, format = "text", type;
  std::vector<std::string> site, lifts;
  int arc = 0, generator_square = 1;
  EnumerationOptions en;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Validate, transform and measure trisection diagrams.", "trisect"};
  app.require_subcommand(1);
  Options o;
  o.en.max_curve_length = 4;

  auto* validate = app.add_subcommand("validate", "run the kind's validator and the file's recorded expectations");
  validate->add_option("files", o.files, "diagram files")->required()->check(CLI::ExistingFile);

  auto* invariants = app.add_subcommand("invariants", "print every index and invariant of a diagram");
  invariants->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  invariants->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* move = app.add_subcommand("move", "apply a move and write the resulting diagram");
  move->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  move->add_option("--type", o.type)
      ->required()
      ->check(CLI::IsMember({"stabilize", "heegaard", "handleslide", "torus-I", "torus-II", "band", "band-shift"}));
  move->add_option("--move-site", o.site, "key=value list: i, j, face, arc, family, slider, over")->allow_extra_args(false);
  move->add_option("--arc", o.arc, "index into the neat arcs of sigma_i");
  move->add_option("--seed", o.en.seed, "seed of the arc search");
  move->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* blink = app.add_subcommand("boundary-link", "extract the boundary link of a shadow diagram");
  blink->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  blink->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket and Jones polynomial of a link or boundary link");
  bracket->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  bracket->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* homclass = app.add_subcommand("homclass", "intersection pairing of a surface with a dual class from lifted sector links");
  homclass->add_option("surface", o.file, "shadow diagram of the surface K")->required()->check(CLI::ExistingFile);
  homclass->add_option("lifts", o.lifts, "one lifted link per sector")->required()->check(CLI::ExistingFile);
  homclass->add_option("--generator-square", o.generator_square, "self-intersection of the dual class")
      ->check(CLI::IsMember({-1, 1}));
  homclass->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "catalog triple Heegaard diagrams of low complexity");
  enumerate->add_option("--max-complexity", o.en.max_complexity)->check(CLI::Range(0, 4));
  enumerate->add_option("--max-b", o.en.max_b)->check(CLI::PositiveNumber);
  enumerate->add_option("--max-length", o.en.max_curve_length, "longest candidate curve in edges")->check(CLI::Range(3, 8));
  enumerate->add_option("--budget", o.en.budget, "curve-family combinations to examine")->check(CLI::PositiveNumber);
  enumerate->add_option("--seed", o.en.seed, "shard order; does not change the catalog");
  enumerate->add_option("--threads", o.en.threads)->check(CLI::NonNegativeNumber);
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* render = app.add_subcommand("render", "draw the surfaces and families as SVG");
  render->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  render->add_option("--format", o.format)->check(CLI::IsMember({"svg"}));
  render->add_option("-o,--output", o.output, "output file (default stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "trisect: " << e.what() << "\n";
    auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << "run with " << (sub == &app ? "" : sub->get_name() + " ") << "--help for usage\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      int code = kExitOk;
      for (auto& path : o.files) {
        CheckReport r;
        try {
          r = validate_file(read_diagram_file(path));
        } catch (const TopologyError& e) {
          if (e.kind() == "IOError") throw;
          r.fail(e.what());
        }
        print_report(r, path, out);
        if (!r.ok) code = kExitInvalid;
      }
      return code;
    }

    if (invariants->parsed()) {
      auto f = read_diagram_file(o.file);
      auto inv = compute_invariants(f);
      if (o.format == "json") {
        json j{{"file", o.file}, {"kind", f.kind}, {"invariants", invariants_json(inv)}};
        out << j.dump(2) << "\n";
      } else {
        out << o.file << " (" << f.kind << ")\n";
        for (auto& [k, v] : inv) out << k << "=" << v << "\n";
      }
      return kExitOk;
    }

    if (move->parsed()) {
      auto in = read_diagram_file(o.file);
      auto site = parse_site(o.site);
      Diagram D = apply_move(in, o.type, site, o.arc, o.en.seed);
      D.meta.clear();
      D.meta["derived"] = o.type + " move from " + (in.diagram.name.empty() ? o.file : in.diagram.name);
      DiagramFile res = as_file(D, in.kind);
      CheckReport r = validate_file(res);
      print_report(r, "result", err);
      for (auto& [k, v] : compute_invariants(res)) err << "  " << k << "=" << v << "\n";
      write_text(o.output, serialize(res), out);
      return r.ok ? kExitOk : kExitInvalid;
    }

    if (blink->parsed() || bracket->parsed()) {
      auto f = read_diagram_file(o.file);
      LinkDiagram L;
      if (f.kind == "link") {
        if (blink->parsed()) throw UsageError("boundary-link needs a shadow diagram");
        check_link(f.link);
        L = f.link;
      } else if (f.kind == "shadow") {
        L = boundary_link(PseudoShadowDiagram{f.diagram});
      } else {
        throw UsageError(o.file + " is a " + f.kind + " diagram; expected a shadow diagram or a link");
      }
      json j{{"file", o.file}, {"components", L.components.size()}, {"crossings", L.num_crossings()}};
      if (blink->parsed()) {
        j["gauss_code"] = gauss_code(L);
        j["writhe"] = writhe(L);
        j["signs"] = L.signs;
      } else {
        j["bracket"] = L.components.empty() ? std::string("n/a (empty link)") : kauffman_bracket(L).str("A");
      }
      j["jones"] = L.components.empty() ? std::string("n/a (empty link)") : jones_string(jones(L));
      j["identified"] = identify_link(L);
      if (o.format == "json") {
        out << j.dump(2) << "\n";
      } else {
        for (auto key : {"components", "crossings", "writhe", "gauss_code", "bracket", "jones", "identified"})
          if (j.contains(key)) out << key << ": " << (j[key].is_string() ? j[key].get<std::string>() : j[key].dump()) << "\n";
      }
      return kExitOk;
    }

    if (homclass->parsed()) {
      auto kf = read_diagram_file(o.file);
      if (kf.kind != "shadow") throw UsageError(o.file + " is not a shadow diagram");
      std::vector<LinkDiagram> lifts;
      for (auto& p : o.lifts) {
        auto lf = read_diagram_file(p);
        if (lf.kind != "link") throw UsageError(p + " is not a link");
        lifts.push_back(lf.link);
      }
      PseudoShadowDiagram K{kf.diagram};
      auto per = sector_pairings(K, lifts);
      int total = 0;
      for (int v : per) total += v;
      const int coeff = total * o.generator_square;
      if (o.format == "json") {
        out << json{{"sectors", per}, {"total", total}, {"class", coeff}}.dump(2) << "\n";
      } else {
        for (size_t s = 0; s < per.size(); ++s) out << "sector " << s + 1 << ": lk=" << per[s] << "\n";
        out << "pairing=" << total << "\n";
        out << "[K] = " << coeff << " H\n";
      }
      return kExitOk;
    }

    if (enumerate->parsed()) {
      auto E = enumerate_triheeg(o.en);
      if (o.format == "json") {
        json entries = json::array();
        for (auto& e : E.entries)
          entries.push_back({{"complexity", e.complexity},
                             {"y", e.indices.y},
                             {"p", e.indices.p},
                             {"b", e.indices.b},
                             {"homology", e.signature},
                             {"provenance", provenance_name(e.provenance)},
                             {"encoding", e.encoding}});
        out << json{{"entries", entries}, {"examined", E.examined}, {"budget_exceeded", E.budget_exceeded}}.dump(2) << "\n";
      } else {
        for (auto& e : E.entries) {
          auto& I = e.indices;
          out << "c=" << e.complexity << " y=" << I.y[0] << "," << I.y[1] << "," << I.y[2] << " p=" << I.p[0] << ","
              << I.p[1] << "," << I.p[2] << " b=" << I.b << " H=" << e.signature << "\n";
        }
        out << E.entries.size() << " diagrams, " << E.examined << " combinations examined\n";
      }
      if (E.budget_exceeded) {
        err << "trisect: budget of " << o.en.budget << " combinations exhausted; the catalog is partial\n";
        return kExitBudget;
      }
      return kExitOk;
    }

    if (render->parsed()) {
      auto f = read_diagram_file(o.file);
      if (f.kind == "link") throw UsageError("render draws surface diagrams, not links");
      write_text(o.output, render_svg(f.diagram), out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "trisect: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TopologyError& e) {
    err << "trisect: " << e.what() << "\n";
    return e.kind() == "IOError" || e.kind() == "BadBounds" ? kExitUsage : kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace trisect
