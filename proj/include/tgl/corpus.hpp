#pragma once

#include <string>
#include <vector>

#include "tgl/matroid.hpp"

namespace tgl {

struct CorpusEntry {
  std::string name;
  Matroid matroid;
};

// Fixed desk-scale family used by the identity checks, the verification
// experiments, and the test suite: every nontrivial uniform matroid on up to
// six elements, the cycle matroids of all connected graphs on up to five
// vertices, K4 under its own name, a disconnected direct sum, a single loop,
// and a single coloop.
const std::vector<CorpusEntry>& builtin_corpus();

}  // namespace tgl
