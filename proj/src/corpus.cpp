#include "tgl/corpus.hpp"

#include "tgl/graphs.hpp"

namespace tgl {

namespace {

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  for (int m = 2; m <= 6; ++m)
    for (int r = 1; r < m; ++r)
      c.push_back({"uniform_" + std::to_string(r) + "_" + std::to_string(m),
                   Matroid::uniform(r, m)});
  for (int n = 1; n <= 5; ++n) {
    auto reps = enumerate_connected(n);
    for (std::size_t i = 0; i < reps.size(); ++i)
      c.push_back({"graph_n" + std::to_string(n) + "_" + std::to_string(i),
                   cycle_matroid(reps[i])});
  }
  SimpleGraph triangle = make_simple_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  SimpleGraph k4 = make_simple_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  c.push_back({"k4", cycle_matroid(k4)});
  c.push_back({"c3_plus_c3",
               Matroid::direct_sum(cycle_matroid(triangle), cycle_matroid(triangle))});
  c.push_back({"loop", Matroid::graphic(1, {{0, 0}})});
  c.push_back({"coloop", Matroid::uniform(1, 1)});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

}  // namespace tgl
