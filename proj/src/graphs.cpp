#include "tgl/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace tgl {

namespace {

constexpr int kMaxOrder = 10;      // semantic limit for SimpleGraph
constexpr int kMaxMaskOrder = 8;   // C(8,2)=28 pair bits still fit a Mask

int checked_pair_count(int n) {
  if (n < 0 || n > kMaxMaskOrder) throw std::domain_error("order too large for edge masks");
  return n * (n - 1) / 2;
}

}  // namespace

SimpleGraph make_simple_graph(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 0 || vertex_count > kMaxOrder)
    throw std::domain_error("graph order outside [0, 10]");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::domain_error("edge endpoint outside vertex range");
    if (u == v) throw std::domain_error("self-loops not allowed in simple graphs");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::domain_error("repeated edge in simple graph");
  return {vertex_count, std::move(edges)};
}

int pair_bit(int i, int j) {
  if (i < 0 || i >= j) throw std::domain_error("pair_bit requires 0 <= i < j");
  return j * (j - 1) / 2 + i;
}

Mask graph_to_mask(const SimpleGraph& g) {
  checked_pair_count(g.vertex_count);
  Mask m = 0;
  for (auto [u, v] : g.edges) m |= Mask{1} << pair_bit(u, v);
  return m;
}

SimpleGraph mask_to_graph(int n, Mask edge_bits) {
  int k = checked_pair_count(n);
  if (edge_bits & ~all_elements(k)) throw std::domain_error("edge bits outside pair range");
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (edge_bits & (Mask{1} << pair_bit(i, j))) edges.emplace_back(i, j);
  return make_simple_graph(n, std::move(edges));
}

SimpleGraph parse_graph6(const std::string& line) {
  if (line.empty()) throw std::runtime_error("graph6: empty line");
  for (char c : line)
    if (c < 63 || c > 126) throw std::runtime_error("graph6: byte outside printable range");
  int n = line[0] - 63;
  if (n == 63) throw std::runtime_error("graph6: multi-byte order encoding not supported");
  int bits = n * (n - 1) / 2;
  size_t body = (bits + 5) / 6;
  if (line.size() != 1 + body)
    throw std::runtime_error("graph6: encoded length does not match order");
  if (n > kMaxOrder) throw std::domain_error("graph order above supported limit of 10");
  std::vector<std::pair<int, int>> edges;
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t) {
      int byte = line[1 + t / 6] - 63;
      if ((byte >> (5 - t % 6)) & 1) edges.emplace_back(i, j);
    }
  return make_simple_graph(n, std::move(edges));
}

std::string emit_graph6(const SimpleGraph& g) {
  int n = g.vertex_count;
  if (n > 62) throw std::domain_error("graph6: order above 62");
  int bits = n * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, char(63));
  out[0] = char(63 + n);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = true;
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (adj[i][j]) out[1 + t / 6] += char(1 << (5 - t % 6));
  return out;
}

std::vector<SimpleGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
  std::vector<SimpleGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> adjacency(const SimpleGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

struct ArticulationScan {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> disc, low;
  int timer = 0;
  bool found_articulation = false;

  explicit ArticulationScan(const std::vector<std::vector<int>>& a)
      : adj(a), disc(a.size(), -1), low(a.size(), -1) {}

  void dfs(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int w : adj[u]) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[u] = std::min(low[u], disc[w]);
        continue;
      }
      ++children;
      dfs(w, u);
      low[u] = std::min(low[u], low[w]);
      if (parent >= 0 && low[w] >= disc[u]) found_articulation = true;
    }
    if (parent < 0 && children > 1) found_articulation = true;
  }
};

}  // namespace

bool is_connected_graph(const SimpleGraph& g) {
  int n = g.vertex_count;
  if (n <= 1) return true;
  auto adj = adjacency(g);
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

bool is_biconnected(const SimpleGraph& g) {
  if (g.vertex_count < 3) return false;
  if (!is_connected_graph(g)) return false;
  auto adj = adjacency(g);
  ArticulationScan scan(adj);
  scan.dfs(0, -1);
  return !scan.found_articulation;
}

namespace {

// Array-only re-implementations on packed edge masks, for the inner
// enumeration loop.

void mask_adjacency(int n, Mask m, int adj[kMaxMaskOrder]) {
  for (int v = 0; v < n; ++v) adj[v] = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (m & (Mask{1} << pair_bit(i, j))) {
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
      }
}

bool mask_connected(int n, const int adj[kMaxMaskOrder]) {
  int seen = 1, frontier = 1;
  while (frontier) {
    int next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier & (1 << v)) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1 << n) - 1;
}

struct MaskArticulation {
  const int* adj;
  int disc[kMaxMaskOrder], low[kMaxMaskOrder];
  int timer = 0;
  bool articulation = false;

  void dfs(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int w = 0; w < kMaxMaskOrder; ++w) {
      if (!(adj[u] & (1 << w)) || w == parent) continue;
      if (disc[w] >= 0) {
        low[u] = std::min(low[u], disc[w]);
        continue;
      }
      ++children;
      dfs(w, u);
      low[u] = std::min(low[u], low[w]);
      if (parent >= 0 && low[w] >= disc[u]) articulation = true;
    }
    if (parent < 0 && children > 1) articulation = true;
  }
};

bool mask_biconnected(int n, Mask m) {
  if (n < 3) return false;
  int adj[kMaxMaskOrder];
  mask_adjacency(n, m, adj);
  if (!mask_connected(n, adj)) return false;
  MaskArticulation scan{adj, {}, {}, 0, false};
  for (int v = 0; v < n; ++v) scan.disc[v] = -1;
  scan.dfs(0, -1);
  return !scan.articulation;
}

bool mask_is_connected_graph(int n, Mask m) {
  if (n <= 1) return true;
  int adj[kMaxMaskOrder];
  mask_adjacency(n, m, adj);
  return mask_connected(n, adj);
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Mask permute_mask(int n, Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (m & (Mask{1} << pair_bit(i, j))) {
        int a = perm[i], b = perm[j];
        if (a > b) std::swap(a, b);
        out |= Mask{1} << pair_bit(a, b);
      }
  return out;
}

// First unseen mask in scan order is the orbit extremum; marking its whole
// orbit makes every isomorphism class surface exactly once.
std::vector<SimpleGraph> enumerate_by_orbits(int n, bool descending,
                                             bool (*keep)(int, Mask)) {
  int k = checked_pair_count(n);
  Mask total = all_elements(k);
  auto perms = all_permutations(n);
  std::vector<bool> seen(size_t{1} << k, false);
  std::vector<Mask> reps;
  for (Mask step = 0; step <= total; ++step) {
    Mask m = descending ? total - step : step;
    if (seen[m]) continue;
    if (!keep(n, m)) continue;
    reps.push_back(m);
    for (const auto& p : perms) seen[permute_mask(n, m, p)] = true;
    if (step == total) break;
  }
  std::sort(reps.begin(), reps.end(),
            [](Mask a, Mask b) { return std::pair(popcount(a), a) < std::pair(popcount(b), b); });
  std::vector<SimpleGraph> out;
  out.reserve(reps.size());
  for (Mask m : reps) out.push_back(mask_to_graph(n, m));
  return out;
}

}  // namespace

Mask canonical_mask(const SimpleGraph& g, bool use_maximum) {
  int n = g.vertex_count;
  checked_pair_count(n);
  Mask base = graph_to_mask(g);
  auto perms = all_permutations(n);
  Mask best = permute_mask(n, base, perms[0]);
  for (const auto& p : perms) {
    Mask m = permute_mask(n, base, p);
    if (use_maximum ? m > best : m < best) best = m;
  }
  return best;
}

std::vector<SimpleGraph> enumerate_biconnected(int n, bool use_maximum) {
  if (n < 3 || n > 7) throw std::domain_error("biconnected enumeration supports orders 3..7");
  return enumerate_by_orbits(n, use_maximum, mask_biconnected);
}

std::vector<SimpleGraph> enumerate_connected(int n) {
  if (n < 1 || n > 6) throw std::domain_error("connected enumeration supports orders 1..6");
  return enumerate_by_orbits(n, false, mask_is_connected_graph);
}

Matroid cycle_matroid(const SimpleGraph& g) {
  return Matroid::graphic(g.vertex_count, g.edges);
}

}  // namespace tgl
