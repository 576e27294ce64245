#include "tgl/matroid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tgl {

namespace {

struct GraphicRepr {
  int vertices;
  std::vector<std::pair<int, int>> edges;
};
struct UniformRepr {
  int r, m;
};
struct LinearRepr {
  std::vector<std::vector<Int>> rows;  // rows x columns, columns = elements
};
struct BasesRepr {
  int m;
  std::vector<Mask> bases;
};
struct MinorRepr {
  std::shared_ptr<const Matroid::Data> base;
  Mask del = 0, con = 0;
  std::vector<int> lift;  // minor element -> base element
  int rank_con = 0;       // r_base(con), fixed at construction
};
struct SumRepr {
  std::shared_ptr<const Matroid::Data> left, right;
};

}  // namespace

struct Matroid::Data {
  int n = 0;
  std::variant<GraphicRepr, UniformRepr, LinearRepr, BasesRepr, MinorRepr, SumRepr> repr;
};

namespace {

int rank_impl(const Matroid::Data& d, Mask a);

void check_subset(const Matroid::Data& d, Mask a) {
  if (a & ~all_elements(d.n)) throw std::domain_error("subset outside ground set");
}

int graphic_rank(const GraphicRepr& g, Mask a, std::vector<int>& parent) {
  parent.assign(g.vertices, -1);
  auto find = [&](int v) {
    while (parent[v] >= 0) {
      if (parent[parent[v]] >= 0) parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int merges = 0;
  for (Mask m = a; m;) {
    int e = lowest_bit(m);
    m &= m - 1;
    int u = find(g.edges[e].first), v = find(g.edges[e].second);
    if (u != v) {
      parent[u] = v;
      ++merges;
    }
  }
  return merges;  // vertices - components
}

int linear_rank(const LinearRepr& l, Mask a) {
  std::vector<std::vector<Int>> sub(l.rows.size());
  for (size_t i = 0; i < l.rows.size(); ++i)
    for (Mask m = a; m;) {
      int e = lowest_bit(m);
      m &= m - 1;
      sub[i].push_back(l.rows[i][e]);
    }
  if (sub.empty() || sub[0].empty()) return 0;
  return matrix_rank(std::move(sub));
}

Mask lift_mask(const std::vector<int>& lift, Mask a) {
  Mask out = 0;
  for (Mask m = a; m;) {
    int e = lowest_bit(m);
    m &= m - 1;
    out |= Mask{1} << lift[e];
  }
  return out;
}

int rank_impl(const Matroid::Data& d, Mask a) {
  check_subset(d, a);
  return std::visit(
      [&](const auto& r) -> int {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, GraphicRepr>) {
          std::vector<int> parent;
          return graphic_rank(r, a, parent);
        } else if constexpr (std::is_same_v<T, UniformRepr>) {
          return std::min(popcount(a), r.r);
        } else if constexpr (std::is_same_v<T, LinearRepr>) {
          return linear_rank(r, a);
        } else if constexpr (std::is_same_v<T, BasesRepr>) {
          int best = 0;
          for (Mask b : r.bases) best = std::max(best, popcount(a & b));
          return best;
        } else if constexpr (std::is_same_v<T, MinorRepr>) {
          return rank_impl(*r.base, lift_mask(r.lift, a) | r.con) - r.rank_con;
        } else {
          static_assert(std::is_same_v<T, SumRepr>);
          int ln = r.left->n;
          return rank_impl(*r.left, a & all_elements(ln)) + rank_impl(*r.right, a >> ln);
        }
      },
      d.repr);
}

std::string key_impl(const Matroid::Data& d) {
  std::ostringstream os;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, GraphicRepr>) {
          os << "graphic:" << r.vertices << ';';
          for (size_t i = 0; i < r.edges.size(); ++i)
            os << (i ? "," : "") << r.edges[i].first << '-' << r.edges[i].second;
        } else if constexpr (std::is_same_v<T, UniformRepr>) {
          os << "uniform:" << r.r << ',' << r.m;
        } else if constexpr (std::is_same_v<T, LinearRepr>) {
          os << "linear:[";
          for (size_t i = 0; i < r.rows.size(); ++i) {
            os << (i ? ",[" : "[");
            for (size_t j = 0; j < r.rows[i].size(); ++j)
              os << (j ? "," : "") << r.rows[i][j].get_str();
            os << ']';
          }
          os << ']';
        } else if constexpr (std::is_same_v<T, BasesRepr>) {
          os << "bases:" << r.m << ';';
          for (size_t i = 0; i < r.bases.size(); ++i) os << (i ? "," : "") << r.bases[i];
        } else if constexpr (std::is_same_v<T, MinorRepr>) {
          os << "minor(" << key_impl(*r.base) << ";del=" << r.del << ";con=" << r.con << ')';
        } else {
          static_assert(std::is_same_v<T, SumRepr>);
          os << "sum(" << key_impl(*r.left) << ',' << key_impl(*r.right) << ')';
        }
      },
      d.repr);
  return os.str();
}

}  // namespace

Matroid Matroid::graphic(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 0) throw std::domain_error("negative vertex count");
  if (edges.size() > kMaxGroundSize) throw std::domain_error("ground set exceeds 24 elements");
  for (auto [u, v] : edges)
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::domain_error("edge endpoint outside vertex range");
  auto d = std::make_shared<Data>();
  d->n = static_cast<int>(edges.size());
  d->repr = GraphicRepr{vertex_count, std::move(edges)};
  return Matroid(std::move(d));
}

Matroid Matroid::uniform(int rank, int size) {
  if (size < 0 || size > static_cast<int>(kMaxGroundSize))
    throw std::domain_error("ground set exceeds 24 elements");
  if (rank < 0 || rank > size) throw std::domain_error("uniform rank outside [0, size]");
  auto d = std::make_shared<Data>();
  d->n = size;
  d->repr = UniformRepr{rank, size};
  return Matroid(std::move(d));
}

Matroid Matroid::linear(std::vector<std::vector<Int>> matrix) {
  size_t cols = matrix.empty() ? 0 : matrix[0].size();
  for (const auto& row : matrix)
    if (row.size() != cols) throw std::domain_error("ragged matrix");
  if (cols > kMaxGroundSize) throw std::domain_error("ground set exceeds 24 elements");
  auto d = std::make_shared<Data>();
  d->n = static_cast<int>(cols);
  d->repr = LinearRepr{std::move(matrix)};
  return Matroid(std::move(d));
}

Matroid Matroid::explicit_bases(int size, std::vector<Mask> bases) {
  if (size < 0 || size > static_cast<int>(kMaxGroundSize))
    throw std::domain_error("ground set exceeds 24 elements");
  if (bases.empty()) throw std::domain_error("at least one basis required");
  Mask full = all_elements(size);
  int card = popcount(bases[0]);
  for (Mask b : bases) {
    if (b & ~full) throw std::domain_error("basis outside ground set");
    if (popcount(b) != card) throw std::domain_error("bases must have equal cardinality");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  auto d = std::make_shared<Data>();
  d->n = size;
  d->repr = BasesRepr{size, std::move(bases)};
  return Matroid(std::move(d));
}

Matroid Matroid::direct_sum(const Matroid& a, const Matroid& b) {
  if (a.ground_size() + b.ground_size() > static_cast<int>(kMaxGroundSize))
    throw std::domain_error("ground set exceeds 24 elements");
  auto d = std::make_shared<Data>();
  d->n = a.ground_size() + b.ground_size();
  d->repr = SumRepr{a.data_, b.data_};
  return Matroid(std::move(d));
}

Matroid Matroid::minor(Mask del, Mask con) const {
  Mask full = all_elements(ground_size());
  if ((del | con) & ~full) throw std::domain_error("subset outside ground set");
  if (del & con) throw std::domain_error("delete and contract sets overlap");

  std::shared_ptr<const Data> base = data_;
  Mask base_del = 0, base_con = 0;
  std::vector<int> outer_lift;
  if (const auto* m = std::get_if<MinorRepr>(&data_->repr)) {
    base = m->base;
    base_del = m->del | lift_mask(m->lift, del);
    base_con = m->con | lift_mask(m->lift, con);
    outer_lift = m->lift;
  } else {
    base_del = del;
    base_con = con;
    outer_lift.resize(ground_size());
    for (int e = 0; e < ground_size(); ++e) outer_lift[e] = e;
  }

  std::vector<int> lift;
  for (int e = 0; e < ground_size(); ++e) {
    Mask bit = Mask{1} << e;
    if (!((del | con) & bit)) lift.push_back(outer_lift[e]);
  }

  auto d = std::make_shared<Data>();
  d->n = static_cast<int>(lift.size());
  int rank_con = rank_impl(*base, base_con);
  d->repr = MinorRepr{std::move(base), base_del, base_con, std::move(lift), rank_con};
  return Matroid(std::move(d));
}

Matroid Matroid::restriction(Mask keep) const {
  Mask full = all_elements(ground_size());
  if (keep & ~full) throw std::domain_error("subset outside ground set");
  return minor(full & ~keep, 0);
}

int Matroid::ground_size() const { return data_->n; }

int Matroid::rank(Mask a) const { return rank_impl(*data_, a); }

ElementStatus Matroid::element_status(int e) const {
  if (e < 0 || e >= ground_size()) throw std::domain_error("element outside ground set");
  Mask bit = Mask{1} << e;
  if (rank(bit) == 0) return ElementStatus::Loop;
  Mask full = all_elements(ground_size());
  if (rank(full & ~bit) == rank(full) - 1) return ElementStatus::Coloop;
  return ElementStatus::Regular;
}

bool Matroid::is_loopless() const {
  for (int e = 0; e < ground_size(); ++e)
    if (rank(Mask{1} << e) == 0) return false;
  return true;
}

bool Matroid::is_connected() const {
  int n = ground_size();
  if (n == 0) throw std::domain_error("connectivity undefined for empty ground set");
  int r = rank(all_elements(n));
  if (r == 0) return false;
  if (n == 1) return true;
  std::vector<std::uint8_t> corank = corank_table();
  Mask full = all_elements(n);
  for (Mask a = 1; a < full; a += 2)  // each complement pair once, via element 0
    if ((r - corank[a]) + (r - corank[full & ~a]) == r) return false;
  return true;
}

std::vector<Mask> Matroid::circuits() const {
  int n = ground_size();
  std::vector<std::uint8_t> corank = corank_table();
  int r = rank(all_elements(n));
  auto rk = [&](Mask a) { return r - corank[a]; };
  std::vector<Mask> out;
  for (Mask a = 1; a < (Mask{1} << n); ++a) {
    int size = popcount(a);
    if (rk(a) >= size) continue;  // independent
    bool minimal = true;
    for (Mask m = a; m && minimal;) {
      int e = lowest_bit(m);
      m &= m - 1;
      if (rk(a & ~(Mask{1} << e)) < size - 1) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end(),
            [](Mask a, Mask b) { return std::pair(popcount(a), a) < std::pair(popcount(b), b); });
  return out;
}

std::vector<std::uint8_t> Matroid::corank_table() const {
  int n = ground_size();
  size_t total = size_t{1} << n;
  std::vector<std::uint8_t> tab(total);
  int full_rank = rank(all_elements(n));
  if (const auto* g = std::get_if<GraphicRepr>(&data_->repr)) {
    std::vector<int> parent;
    for (size_t a = 0; a < total; ++a)
      tab[a] = static_cast<std::uint8_t>(full_rank - graphic_rank(*g, static_cast<Mask>(a), parent));
  } else {
    for (size_t a = 0; a < total; ++a)
      tab[a] = static_cast<std::uint8_t>(full_rank - rank(static_cast<Mask>(a)));
  }
  return tab;
}

std::string Matroid::canonical_key() const { return key_impl(*data_); }

std::optional<std::pair<Matroid, Matroid>> Matroid::sum_parts() const {
  if (const auto* s = std::get_if<SumRepr>(&data_->repr))
    return std::pair{Matroid(s->left), Matroid(s->right)};
  return std::nullopt;
}

}  // namespace tgl
