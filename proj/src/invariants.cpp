#include "trisect/invariants.hpp"

#include <algorithm>
#include <optional>

#include "trisect/ptri.hpp"
#include "trisect/shadow.hpp"
#include "trisect/triheeg.hpp"

namespace trisect {

namespace {

std::string triple(const std::array<int, 3>& a) {
  return std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]);
}

std::string groups(const std::vector<AbelianGroup>& h) {
  std::string s;
  for (size_t n = 0; n < h.size(); ++n) s += (n ? ";" : "") + h[n].str();
  return s;
}

// Runs `f` and turns a TopologyError into an "n/a" value.
template <class F>
std::string guarded(F&& f) {
  try {
    return f();
  } catch (const TopologyError& e) {
    return "n/a (" + e.kind() + ")";
  }
}

}  // namespace

std::string identify_link(const LinkDiagram& L) {
  const size_t n = L.components.size();
  if (n == 0) return "empty";
  Laurent v = jones(L);
  LinkDiagram unlink;
  unlink.components.assign(n, {});
  if (v == jones(unlink)) return n == 1 ? "unknot" : "unlink of " + std::to_string(n);
  std::vector<std::pair<std::string, LinkDiagram>> refs{{"positive Hopf link", hopf_link(1)},
                                                        {"negative Hopf link", hopf_link(-1)},
                                                        {"left-handed trefoil", trefoil_diagram(-1)},
                                                        {"right-handed trefoil", trefoil_diagram(1)},
                                                        {"figure eight", figure_eight_diagram()}};
  for (auto& [name, R] : refs)
    if (R.components.size() == n && jones(R) == v) return name;
  return "jones " + jones_string(v);
}

Invariants compute_invariants(const DiagramFile& f) {
  Invariants out;
  auto put = [&](const std::string& k, const std::string& v) { out.push_back({k, v}); };
  if (f.kind == "triheeg") {
    TripleHeegaardDiagram D{f.diagram};
    auto I = indices_3(D);
    put("y", triple(I.y));
    put("p", triple(I.p));
    put("b", std::to_string(I.b));
    put("c", guarded([&] { return std::to_string(complexity_3(D)); }));
    put("homology", guarded([&] { return groups(realize_homology_3(D)); }));
  } else if (f.kind == "ptri") {
    PseudoTrisectionDiagram D{f.diagram};
    auto I = indices_4(D);
    put("g", std::to_string(I.g));
    put("b", std::to_string(I.b));
    put("k", triple(I.k));
    put("y", triple(I.y));
    put("p", triple(I.p));
    put("h", triple(I.h));
    put("chi", std::to_string(I.chi));
    put("c", std::to_string(I.c));
    put("c_boundary", std::to_string(I.c_boundary));
    put("c_pair", std::to_string(I.c_pair));
  } else if (f.kind == "shadow") {
    PseudoShadowDiagram D{f.diagram};
    std::array<int, 3> F{};
    for (int i = 1; i <= 3; ++i) F[i - 1] = sector_link_components(D, i);
    put("F", triple(F));
    put("bridge", std::to_string(D.bridge.size()));
    put("chi", guarded([&] { return std::to_string(surface_euler_characteristic(D)); }));
    put("orientable", orientability(D).orientable ? "true" : "false");
    std::optional<LinkDiagram> B;
    std::string missing;
    try {
      B = boundary_link(D);
    } catch (const TopologyError& e) {
      missing = "n/a (" + e.kind() + ")";
    }
    put("boundary_link", B ? identify_link(*B) : missing);
    put("crossings", B ? std::to_string(B->num_crossings()) : missing);
    put("jones", B ? guarded([&] { return jones_string(jones(*B)); }) : missing);
  } else if (f.kind == "link") {
    const LinkDiagram& L = f.link;
    put("components", std::to_string(L.components.size()));
    put("crossings", std::to_string(L.num_crossings()));
    put("writhe", std::to_string(writhe(L)));
    put("jones", guarded([&] { return jones_string(jones(L)); }));
    if (!L.partition.empty()) {
      int lk = 0;
      for (size_t a = 0; a < L.components.size(); ++a)
        for (size_t b = 0; b < L.components.size(); ++b)
          if (L.partition[a] == "K" && L.partition[b] == "E") lk += linking_number(L, static_cast<int>(a), static_cast<int>(b));
      put("lk", std::to_string(lk));
    }
  } else {
    throw TopologyError("UnknownKind", "no diagram kind \"" + f.kind + "\"");
  }
  return out;
}

CheckReport validate_file(const DiagramFile& f) {
  CheckReport rep;
  const auto& meta = f.kind == "link" ? f.link.meta : f.diagram.meta;
  try {
    if (f.kind == "triheeg") {
      rep = validate_triheeg(TripleHeegaardDiagram{f.diagram});
    } else if (f.kind == "ptri") {
      rep = validate_ptri(PseudoTrisectionDiagram{f.diagram});
    } else if (f.kind == "shadow") {
      rep = validate_shadow(PseudoShadowDiagram{f.diagram});
    } else {
      check_link(f.link);
    }
  } catch (const TopologyError& e) {
    rep.fail(e.what());
  }
  if (!rep.ok) return rep;
  bool any = false;
  for (auto& [k, v] : meta) any = any || k.rfind("expect.", 0) == 0;
  if (!any) return rep;
  Invariants inv;
  try {
    inv = compute_invariants(f);
  } catch (const TopologyError& e) {
    rep.fail(std::string("invariants: ") + e.what());
    return rep;
  }
  for (auto& [k, want] : meta) {
    if (k.rfind("expect.", 0) != 0) continue;
    std::string key = k.substr(7);
    auto it = std::find_if(inv.begin(), inv.end(), [&](auto& p) { return p.first == key; });
    if (it == inv.end())
      rep.fail("no invariant \"" + key + "\" to compare with " + k);
    else if (it->second != want)
      rep.fail(key + " is " + it->second + ", recorded " + want);
    else
      rep.info.push_back(key + " = " + want + " as recorded");
  }
  return rep;
}

}  // namespace trisect
