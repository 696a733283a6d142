// Writes the fixture corpus, or with --verify compares it byte-for-byte
// against an existing directory.
#include "support/corpus.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  if (argc != 3 || (std::string(argv[1]) != "--write" && std::string(argv[1]) != "--verify")) {
    std::cerr << "usage: gen_corpus --write|--verify DIR\n";
    return 2;
  }
  const bool write = std::string(argv[1]) == "--write";
  const std::filesystem::path dir = argv[2];
  int stale = 0;
  for (const auto& f : valg::testing::corpus()) {
    const auto path = dir / (f.name + ".json");
    const std::string text = valg::emit_fixture(f);
    if (write) {
      std::ofstream(path, std::ios::binary) << text;
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    std::stringstream have;
    have << in.rdbuf();
    if (have.str() != text) {
      std::cerr << "stale: " << path.string() << "\n";
      ++stale;
    }
  }
  return stale == 0 ? 0 : 1;
}
