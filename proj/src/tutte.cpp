#include "tgl/tutte.hpp"

#include <stdexcept>
#include <unordered_map>

namespace tgl {

namespace {

struct SubProfile {
  int rank = 0;
  std::vector<std::uint8_t> expo;
};

// Recursive deletion-contraction over (deleted, contracted) masks of the
// original ground set. Subset bit i of a subresult refers to the i-th lowest
// live element; the pivot is always the lowest, so bit 0 is the pivot's.
class DcEngine {
 public:
  explicit DcEngine(const Matroid& m) : m_(m), full_(all_elements(m.ground_size())) {}

  SubProfile run() { return compute(0, 0); }

 private:
  const Matroid& m_;
  Mask full_;
  std::unordered_map<std::uint64_t, SubProfile> memo_;

  SubProfile compute(Mask del, Mask con) {
    Mask live = full_ & ~(del | con);
    if (live == 0) return {0, {0}};
    int live_count = popcount(live);
    std::uint64_t key = (std::uint64_t{del} << 32) | con;
    bool cache = live_count <= 16;
    if (cache) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }

    Mask bit = Mask{1} << lowest_bit(live);
    int rank_con = m_.rank(con);
    bool loop = m_.rank(con | bit) == rank_con;
    bool coloop = !loop && m_.rank((live & ~bit) | con) == m_.rank(live | con) - 1;

    SubProfile out;
    size_t half = size_t{1} << (live_count - 1);
    out.expo.resize(half << 1);
    if (loop) {
      SubProfile child = compute(del | bit, con);
      out.rank = child.rank;
      for (size_t a = 0; a < half; ++a)
        out.expo[a << 1] = out.expo[(a << 1) | 1] = child.expo[a];
    } else if (coloop) {
      SubProfile child = compute(del, con | bit);
      out.rank = child.rank + 1;
      for (size_t a = 0; a < half; ++a) {
        out.expo[a << 1] = static_cast<std::uint8_t>(child.expo[a] + 1);
        out.expo[(a << 1) | 1] = child.expo[a];
      }
    } else {
      SubProfile deleted = compute(del | bit, con);
      SubProfile contracted = compute(del, con | bit);
      out.rank = deleted.rank;
      for (size_t a = 0; a < half; ++a) {
        out.expo[a << 1] = deleted.expo[a];
        out.expo[(a << 1) | 1] = contracted.expo[a];
      }
    }
    if (cache) memo_.emplace(key, out);
    return out;
  }
};

RankProfile state_sum_profile(const Matroid& m) {
  int n = m.ground_size();
  return {n, m.rank(), m.corank_table()};
}

}  // namespace

ZHat zhat(const Matroid& m, ZhatStrategy strategy) {
  if (m.ground_size() > static_cast<int>(kMaxGroundSize))
    throw std::domain_error("ground set exceeds 24 elements");
  RankProfile profile;
  if (strategy == ZhatStrategy::StateSum) {
    profile = state_sum_profile(m);
  } else {
    SubProfile sub = DcEngine(m).run();
    profile = RankProfile(m.ground_size(), sub.rank, std::move(sub.expo));
  }
  if (m.ground_size() <= 16) profile.validate();
  return {std::move(profile), m.canonical_key()};
}

BiPolyZ tutte_bivariate(const Matroid& m) {
  int n = m.ground_size();
  int r = m.rank();
  std::vector<std::uint8_t> corank = m.corank_table();
  std::vector<std::vector<Int>> count(r + 1, std::vector<Int>(n + 1, 0));
  for (size_t a = 0; a < corank.size(); ++a) {
    int k = corank[a];
    int nullity = popcount(static_cast<Mask>(a)) - (r - k);
    count[k][nullity] += 1;
  }
  std::vector<UniPolyZ> ypow(n + 1);
  ypow[0] = UniPolyZ::constant(1);
  UniPolyZ ym1({-1, 1});
  for (int j = 1; j <= n; ++j) ypow[j] = ypow[j - 1] * ym1;
  std::vector<std::vector<Int>> binom(r + 1, std::vector<Int>(r + 1, 0));
  for (int i = 0; i <= r; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  std::vector<UniPolyZ> rows(r + 1);
  for (int k = 0; k <= r; ++k)
    for (int j = 0; j <= n; ++j) {
      if (count[k][j] == 0) continue;
      UniPolyZ part = ypow[j] * UniPolyZ::constant(count[k][j]);
      for (int dx = 0; dx <= k; ++dx) {
        Int c = binom[k][dx];
        if ((k - dx) & 1) c = -c;
        rows[dx] = rows[dx] + part * UniPolyZ::constant(c);
      }
    }
  return BiPolyZ(std::move(rows));
}

ZHat circuit_closed_form(int m) {
  if (m < 2) throw std::domain_error("circuit closed form needs at least 2 elements");
  if (m > static_cast<int>(kMaxGroundSize)) throw std::domain_error("ground set exceeds 24 elements");
  int n = m - 1;
  MultiPolyZ poly = MultiPolyZ::q_power(n);
  for (int i = 1; i <= n - 1; ++i)
    poly = poly + elementary_symmetric_poly(i, m) * MultiPolyZ::q_power(n - i);
  poly = poly + elementary_symmetric_poly(n, m) + elementary_symmetric_poly(n + 1, m);
  return {RankProfile::from_multipoly(poly, m), "circuit:" + std::to_string(m)};
}

std::vector<MultiPolyZ> coefficients_in_q(const ZHat& z) {
  if (!z.profile.loopless())
    throw std::domain_error("coefficient slices need a loopless matroid (monic polynomial)");
  int rank = z.profile.rank;
  std::vector<MultiPolyZ> a(rank);
  for (size_t s = 0; s < z.profile.exponent.size(); ++s) {
    int e = z.profile.exponent[s];
    if (e < rank) a[e] = a[e] + MultiPolyZ::term(1, 0, static_cast<Mask>(s));
  }
  return a;
}

MultiPolyZ lift_variables(const MultiPolyZ& p, const std::vector<int>& lift) {
  MultiPolyZ out;
  for (const auto& [k, c] : p.terms()) {
    Mask m = 0;
    for (Mask rest = k.second; rest;) {
      int e = lowest_bit(rest);
      rest &= rest - 1;
      if (e >= static_cast<int>(lift.size())) throw std::domain_error("lift table too short");
      m |= Mask{1} << lift[e];
    }
    out = out + MultiPolyZ::term(c, k.first, m);
  }
  return out;
}

bool IdentityReport::all_pass() const {
  auto ok = [](const std::optional<bool>& b) { return !b || *b; };
  return strategies_agree && q_one_product && bivariate_substitution &&
         ok(deletion_contraction) && ok(loop_coloop) && ok(direct_sum_product) &&
         ok(circuit_forms);
}

IdentityReport check_identities(const Matroid& m) {
  int n = m.ground_size();
  if (n > 16) throw std::domain_error("symbolic identity checks support up to 16 elements");

  IdentityReport rep;
  rep.input = m.canonical_key();

  ZHat zs = zhat(m, ZhatStrategy::StateSum);
  ZHat zd = zhat(m, ZhatStrategy::DeletionContraction);
  rep.strategies_agree = zs.profile == zd.profile;

  MultiPolyZ p = zs.profile.to_multipoly();

  auto lift_for = [&](int e) {
    std::vector<int> lift;
    for (int i = 0; i < n; ++i)
      if (i != e) lift.push_back(i);
    return lift;
  };
  auto minor_poly = [&](const Matroid& sub, int e) {
    return lift_variables(zhat(sub, ZhatStrategy::StateSum).profile.to_multipoly(), lift_for(e));
  };

  bool lemma2_seen = false, lemma2_ok = true;
  bool lc_seen = false, lc_ok = true;
  for (int e = 0; e < n; ++e) {
    Mask bit = Mask{1} << e;
    switch (m.element_status(e)) {
      case ElementStatus::Regular: {
        lemma2_seen = true;
        MultiPolyZ rhs = minor_poly(m.minor(bit, 0), e) +
                         MultiPolyZ::v(e) * minor_poly(m.minor(0, bit), e);
        lemma2_ok = lemma2_ok && p == rhs;
        break;
      }
      case ElementStatus::Loop: {
        lc_seen = true;
        MultiPolyZ rhs =
            (MultiPolyZ::constant(1) + MultiPolyZ::v(e)) * minor_poly(m.minor(bit, 0), e);
        lc_ok = lc_ok && p == rhs;
        break;
      }
      case ElementStatus::Coloop: {
        lc_seen = true;
        MultiPolyZ rhs =
            (MultiPolyZ::q_power(1) + MultiPolyZ::v(e)) * minor_poly(m.minor(0, bit), e);
        lc_ok = lc_ok && p == rhs;
        break;
      }
    }
  }
  if (lemma2_seen) rep.deletion_contraction = lemma2_ok;
  if (lc_seen) rep.loop_coloop = lc_ok;

  rep.q_one_product = p.substitute_q_one() == product_of_one_plus_v(all_elements(n));

  BiPolyZ ym1 = BiPolyZ::var_y() - BiPolyZ::constant(1);
  rep.bivariate_substitution =
      ym1.pow(zs.profile.rank) * tutte_bivariate(m) == zs.profile.substitute_bivariate();

  if (auto parts = m.sum_parts()) {
    MultiPolyZ left = zhat(parts->first, ZhatStrategy::StateSum).profile.to_multipoly();
    MultiPolyZ right = zhat(parts->second, ZhatStrategy::StateSum).profile.to_multipoly();
    rep.direct_sum_product = p == left * right.shift_vars(parts->first.ground_size());
  }

  bool circuit_seen = false, circuit_ok = true;
  for (Mask c : m.circuits()) {
    if (popcount(c) < 2) continue;  // a loop's one-element circuit is covered above
    circuit_seen = true;
    ZHat restricted = zhat(m.restriction(c), ZhatStrategy::StateSum);
    circuit_ok = circuit_ok && restricted.profile == circuit_closed_form(popcount(c)).profile;
  }
  if (circuit_seen) rep.circuit_forms = circuit_ok;

  return rep;
}

}  // namespace tgl
