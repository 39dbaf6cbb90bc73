// Writes every corpus diagram in canonical form: make_corpus [outdir]
#include <filesystem>
#include <iostream>

#include "trisect/corpus.hpp"
#include "trisect/format.hpp"
#include "trisect/invariants.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  using namespace trisect;
  fs::path dir = argc > 1 ? argv[1] : "corpus";
  fs::create_directories(dir);
  int bad = 0;
  for (auto& e : corpus::all()) {
    DiagramFile f = e.kind == "link" ? DiagramFile{"link", {}, e.link} : as_file(e.diagram, e.kind);
    auto r = validate_file(f);
    if (!r.ok) {
      std::cerr << e.file << ": " << r.first_failure() << "\n";
      ++bad;
    }
    write_diagram_file((dir / e.file).string(), f);
    std::cout << (dir / e.file).string() << "\n";
  }
  return bad ? 1 : 0;
}
