#include "tgl/galois.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

namespace tgl {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t next_prime_after(std::uint64_t p) {
  std::uint64_t q = (p < 2) ? 2 : (p == 2 ? 3 : p + 2);
  while (!is_prime(q)) q += 2;
  return q;
}

bool pattern_is_n_cycle(const std::vector<int>& parts, int n) {
  return parts.size() == 1 && parts[0] == n;
}

bool pattern_powers_to_transposition(const std::vector<int>& parts) {
  int twos = 0;
  for (int d : parts) {
    if (d == 2) ++twos;
    else if (d % 2 == 0) return false;
  }
  return twos == 1;
}

std::optional<int> pattern_prime_cycle_length(const std::vector<int>& parts, int n) {
  for (int d : parts)
    if (d < n && 2 * d > n && is_prime(static_cast<std::uint64_t>(d))) return d;
  return std::nullopt;
}

struct WitnessCollector {
  SnCertificate cert;

  explicit WitnessCollector(int n) { cert.degree = n; }

  void offer(std::uint64_t field_order, const std::vector<int>& parts) {
    int n = cert.degree;
    if (!cert.transitive && pattern_is_n_cycle(parts, n))
      cert.transitive = DegreePattern{field_order, parts};
    if (n >= 3 && !cert.transposition && pattern_powers_to_transposition(parts))
      cert.transposition = DegreePattern{field_order, parts};
    if (n >= 4 && !cert.prime_cycle) {
      if (auto l = pattern_prime_cycle_length(parts, n)) {
        cert.prime_cycle = DegreePattern{field_order, parts};
        cert.prime_cycle_length = *l;
      }
    }
  }
};

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  if (x % 3 == 0) return x == 3;
  for (std::uint64_t d = 5; d * d <= x; d += 6) {
    if (x % d == 0 || x % (d + 2) == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Degree patterns over F_p
// ---------------------------------------------------------------------------

std::optional<DegreePattern> degree_pattern_mod_p(const UniPolyZ& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::domain_error("degree_pattern_mod_p: modulus must be prime");
  if (f.degree() < 1) throw std::domain_error("degree_pattern_mod_p: degree must be at least 1");
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(p)))
    return std::nullopt;
  UniPolyFp fb = UniPolyFp::from_integer_poly(f, p);
  if (!fb.squarefree()) return std::nullopt;

  UniPolyFp g = fb.make_monic();
  UniPolyFp x = UniPolyFp::variable(p);
  UniPolyFp h = x;
  std::vector<int> parts;
  int d = 1;
  while (g.degree() >= 2 * d) {
    h = h.pow_mod(p, g);
    UniPolyFp gd = gcd(h - x, g);
    if (gd.degree() > 0) {
      for (int i = 0; i < gd.degree() / d; ++i) parts.push_back(d);
      g = g.divide_exact(gd);
      if (g.degree() >= 1) h = h.mod(g);
    }
    ++d;
  }
  if (g.degree() > 0) parts.push_back(g.degree());
  std::sort(parts.begin(), parts.end());
  return DegreePattern{p, std::move(parts)};
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

bool SnCertificate::complete() const {
  if (degree <= 1) return true;
  if (!transitive) return false;
  if (degree >= 3 && !transposition) return false;
  if (degree >= 4 && !prime_cycle) return false;
  return true;
}

void SnCertificate::validate_shapes() const {
  auto base_checks = [&](const DegreePattern& w) {
    if (w.field_order < 2) throw std::logic_error("certificate witness has no field");
    int sum = 0;
    int prev = 1;
    for (int d : w.parts) {
      if (d < prev) throw std::logic_error("certificate pattern not sorted");
      prev = d;
      sum += d;
    }
    if (sum != degree) throw std::logic_error("certificate pattern has wrong total degree");
  };
  if (transitive) {
    base_checks(*transitive);
    if (!pattern_is_n_cycle(transitive->parts, degree))
      throw std::logic_error("transitivity witness is not a full cycle");
  }
  if (transposition) {
    base_checks(*transposition);
    if (!pattern_powers_to_transposition(transposition->parts))
      throw std::logic_error("transposition witness has the wrong shape");
  }
  if (prime_cycle) {
    base_checks(*prime_cycle);
    int l = prime_cycle_length;
    if (!is_prime(static_cast<std::uint64_t>(l)) || l >= degree || 2 * l <= degree)
      throw std::logic_error("prime-cycle length out of range");
    if (std::find(prime_cycle->parts.begin(), prime_cycle->parts.end(), l) ==
        prime_cycle->parts.end())
      throw std::logic_error("prime-cycle length missing from its pattern");
  }
}

CertifyOutcome certify_sn(const UniPolyZ& f, std::uint64_t prime_bound) {
  if (f.degree() < 1) throw std::domain_error("certify_sn: degree must be at least 1");
  if (!squarefree_z(f)) throw std::domain_error("certify_sn: polynomial is not squarefree");
  int n = f.degree();
  CertifyOutcome out;
  out.prime_bound = prime_bound;
  WitnessCollector col(n);
  if (n > 1) {
    for (std::uint64_t p = 2; p <= prime_bound; p = next_prime_after(p)) {
      auto pat = degree_pattern_mod_p(f, p);
      if (!pat) continue;
      col.offer(p, pat->parts);
      if (col.cert.complete()) break;
    }
  }
  out.certificate = col.cert;
  out.sn = col.cert.complete();
  if (out.sn) out.certificate.validate_shapes();
  return out;
}

// ---------------------------------------------------------------------------
// F_{p^k}
// ---------------------------------------------------------------------------

namespace {

bool rabin_irreducible(const UniPolyFp& g, std::uint64_t p, int k) {
  UniPolyFp x = UniPolyFp::variable(p);
  std::vector<UniPolyFp> frob;  // frob[j-1] = x^{p^j} mod g
  frob.reserve(k);
  UniPolyFp h = x;
  for (int j = 1; j <= k; ++j) {
    h = h.pow_mod(p, g);
    frob.push_back(h);
  }
  if (!(frob[k - 1] == x)) return false;
  for (int l = 2; l <= k; ++l) {
    if (k % l != 0 || !is_prime(static_cast<std::uint64_t>(l))) continue;
    UniPolyFp d = gcd(frob[k / l - 1] - x, g);
    if (d.degree() != 0) return false;
  }
  return true;
}

}  // namespace

FqCtx FqCtx::make(std::uint64_t p, int k) {
  if (!is_prime(p)) throw std::domain_error("FqCtx: characteristic must be prime");
  if (k < 1 || k > 16) throw std::domain_error("FqCtx: extension degree out of range");
  FqCtx f;
  f.p = p;
  f.k = k;
  f.order = 1;
  for (int i = 0; i < k; ++i) {
    if (f.order > (std::uint64_t{1} << 40) / p)
      throw std::domain_error("FqCtx: field order too large");
    f.order *= p;
  }
  if (k == 1) {
    f.modulus = {0, 1};
    return f;
  }
  std::vector<std::uint64_t> low(k, 0);
  for (;;) {
    std::vector<std::uint64_t> coeffs = low;
    coeffs.push_back(1);
    UniPolyFp g(p, coeffs);
    if (rabin_irreducible(g, p, k)) {
      f.modulus = std::move(coeffs);
      return f;
    }
    int i = 0;
    while (i < k && ++low[i] == p) low[i++] = 0;
    if (i == k) throw std::logic_error("FqCtx: no irreducible modulus found");
  }
}

FqCtx::Elem FqCtx::one() const {
  Elem e(k, 0);
  e[0] = 1 % p;
  return e;
}

FqCtx::Elem FqCtx::from_uint(std::uint64_t v) const {
  Elem e(k, 0);
  e[0] = v % p;
  return e;
}

bool FqCtx::is_zero(const Elem& a) const {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

FqCtx::Elem FqCtx::add(const Elem& a, const Elem& b) const {
  Elem r(k);
  for (int i = 0; i < k; ++i) {
    std::uint64_t s = a[i] + b[i];
    r[i] = s >= p ? s - p : s;
  }
  return r;
}

FqCtx::Elem FqCtx::sub(const Elem& a, const Elem& b) const {
  Elem r(k);
  for (int i = 0; i < k; ++i) r[i] = submod(a[i], b[i], p);
  return r;
}

FqCtx::Elem FqCtx::mul(const Elem& a, const Elem& b) const {
  if (k == 1) return {mulmod(a[0], b[0], p)};
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < k; ++j)
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  for (int i = 2 * k - 2; i >= k; --i) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < k; ++j)
      prod[i - k + j] = submod(prod[i - k + j], mulmod(c, modulus[j], p), p);
  }
  prod.resize(k);
  return prod;
}

FqCtx::Elem FqCtx::scalar(const Elem& a, std::uint64_t s) const {
  Elem r(k);
  s %= p;
  for (int i = 0; i < k; ++i) r[i] = mulmod(a[i], s, p);
  return r;
}

FqCtx::Elem FqCtx::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("FqCtx: inverse of zero");
  UniPolyFp r0(p, modulus);
  UniPolyFp r1(p, a);
  UniPolyFp s0(p), s1 = UniPolyFp::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, rem] = r0.divmod(r1);
    r0 = r1;
    r1 = rem;
    UniPolyFp s2 = s0 - q * s1;
    s0 = s1;
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant: the modulus is irreducible and deg a < k.
  std::uint64_t c = r0.coeff(0);
  UniPolyFp s = (s0 * UniPolyFp::constant(p, invmod(c, p))).mod(UniPolyFp(p, modulus));
  Elem e(k, 0);
  for (int i = 0; i <= s.degree(); ++i) e[i] = s.coeff(i);
  return e;
}

// ---------------------------------------------------------------------------
// Polynomials over F_q
// ---------------------------------------------------------------------------

FqPoly::FqPoly(const FqCtx& f, std::vector<FqCtx::Elem> coeffs) : ctx(&f), c(std::move(coeffs)) {
  trim();
}

void FqPoly::trim() {
  while (!c.empty() && ctx->is_zero(c.back())) c.pop_back();
}

FqPoly fq_x(const FqCtx& f) { return FqPoly(f, {f.zero(), f.one()}); }

FqPoly fq_add(const FqPoly& a, const FqPoly& b) {
  const FqCtx& F = *a.ctx;
  std::vector<FqCtx::Elem> r(std::max(a.c.size(), b.c.size()), F.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = F.add(r[i], b.c[i]);
  return FqPoly(F, std::move(r));
}

FqPoly fq_sub(const FqPoly& a, const FqPoly& b) {
  const FqCtx& F = *a.ctx;
  std::vector<FqCtx::Elem> r(std::max(a.c.size(), b.c.size()), F.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = F.sub(r[i], b.c[i]);
  return FqPoly(F, std::move(r));
}

FqPoly fq_mul(const FqPoly& a, const FqPoly& b) {
  const FqCtx& F = *a.ctx;
  if (a.is_zero() || b.is_zero()) return FqPoly(F, {});
  std::vector<FqCtx::Elem> r(a.c.size() + b.c.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
  }
  return FqPoly(F, std::move(r));
}

namespace {

// Shared long-division core; returns {quotient, remainder}.
std::pair<FqPoly, FqPoly> fq_divmod(const FqPoly& a, const FqPoly& d) {
  const FqCtx& F = *d.ctx;
  if (d.is_zero()) throw std::domain_error("fq: division by zero polynomial");
  if (a.is_zero() || a.degree() < d.degree()) return {FqPoly(F, {}), a};
  FqCtx::Elem inv_lead = F.inv(d.c.back());
  std::vector<FqCtx::Elem> quot(a.degree() - d.degree() + 1, F.zero());
  FqPoly rem = a;
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    FqCtx::Elem qc = F.mul(rem.c.back(), inv_lead);
    int shift = rem.degree() - d.degree();
    quot[shift] = qc;
    for (int j = 0; j <= d.degree(); ++j)
      rem.c[shift + j] = F.sub(rem.c[shift + j], F.mul(qc, d.c[j]));
    rem.trim();
  }
  return {FqPoly(F, std::move(quot)), std::move(rem)};
}

}  // namespace

FqPoly fq_mod(const FqPoly& a, const FqPoly& d) { return fq_divmod(a, d).second; }

FqPoly fq_divide_exact(const FqPoly& a, const FqPoly& d) {
  auto [q, r] = fq_divmod(a, d);
  if (!r.is_zero()) throw std::domain_error("fq: inexact polynomial division");
  return q;
}

FqPoly fq_make_monic(const FqPoly& a) {
  if (a.is_zero()) return a;
  const FqCtx& F = *a.ctx;
  FqCtx::Elem inv_lead = F.inv(a.c.back());
  std::vector<FqCtx::Elem> r = a.c;
  for (auto& e : r) e = F.mul(e, inv_lead);
  return FqPoly(F, std::move(r));
}

FqPoly fq_derivative(const FqPoly& a) {
  const FqCtx& F = *a.ctx;
  if (a.c.size() <= 1) return FqPoly(F, {});
  std::vector<FqCtx::Elem> r(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i)
    r[i - 1] = F.scalar(a.c[i], static_cast<std::uint64_t>(i % F.p));
  return FqPoly(F, std::move(r));
}

FqPoly fq_gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = fq_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fq_make_monic(a);
}

FqPoly fq_pow_mod(const FqPoly& base, std::uint64_t e, const FqPoly& m) {
  if (m.degree() < 1) throw std::domain_error("fq: modulus must have positive degree");
  const FqCtx& F = *base.ctx;
  FqPoly r(F, {F.one()});
  FqPoly b = fq_mod(base, m);
  while (e != 0) {
    if (e & 1) r = fq_mod(fq_mul(r, b), m);
    e >>= 1;
    if (e != 0) b = fq_mod(fq_mul(b, b), m);
  }
  return r;
}

bool fq_squarefree(const FqPoly& a) {
  if (a.is_zero()) throw std::domain_error("fq: squarefree test on zero polynomial");
  return fq_gcd(a, fq_derivative(a)).degree() == 0;
}

std::vector<int> fq_degree_pattern(const FqPoly& f) {
  if (f.degree() < 1) throw std::domain_error("fq: degree pattern needs positive degree");
  const FqCtx& F = *f.ctx;
  FqPoly g = fq_make_monic(f);
  FqPoly x = fq_x(F);
  FqPoly h = fq_mod(x, g);
  std::vector<int> parts;
  int d = 1;
  while (g.degree() >= 2 * d) {
    h = fq_pow_mod(h, F.order, g);
    FqPoly gd = fq_gcd(fq_sub(h, x), g);
    if (gd.degree() > 0) {
      for (int i = 0; i < gd.degree() / d; ++i) parts.push_back(d);
      g = fq_divide_exact(g, gd);
      if (g.degree() >= 1) h = fq_mod(h, g);
    }
    ++d;
  }
  if (g.degree() > 0) parts.push_back(g.degree());
  std::sort(parts.begin(), parts.end());
  return parts;
}

// ---------------------------------------------------------------------------
// Specialization
// ---------------------------------------------------------------------------

std::optional<Specialization> specialize_for_verification(const ZHat& z, std::uint64_t seed) {
  const RankProfile& pr = z.profile;
  if (!pr.loopless()) throw std::domain_error("specialization requires a loopless input");
  int m = pr.ground_size;
  if (m == 0) return Specialization{{}, pr.specialize({})};
  Rng rng(derive_stream_seed(seed, z.source_key + "|main"));
  long hi = 10L * m;
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<long> vals;
    std::unordered_set<long> used;
    while (static_cast<int>(vals.size()) < m) {
      long v = rng.next_in(1, hi);
      if (used.insert(v).second) vals.push_back(v);
    }
    UniPolyZ f = pr.specialize(vals);
    if (squarefree_z(f)) return Specialization{std::move(vals), std::move(f)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verification experiments
// ---------------------------------------------------------------------------

namespace {

// Shared preamble: key, sizes, and the connectivity gate. Returns false when
// the report is already final (status set).
bool connected_preamble(const Matroid& m, VerificationReport& r) {
  r.input = m.canonical_key();
  r.n = m.ground_size();
  if (m.ground_size() == 0) {
    r.rank = 0;
    r.status = "NotConnected";
    return false;
  }
  r.rank = m.rank();
  if (r.rank == 0 || !m.is_connected()) {
    r.status = "NotConnected";
    return false;
  }
  return true;
}

void fill_from_outcome(VerificationReport& r, const CertifyOutcome& oc) {
  if (oc.sn) {
    r.status = "Sn";
    r.certificate = oc.certificate;
    if (oc.certificate.transitive)
      r.irreducible_witness_prime = oc.certificate.transitive->field_order;
  } else {
    r.status = "Inconclusive";
    r.inconclusive_bound = oc.prime_bound;
  }
}

}  // namespace

VerificationReport verify_theorem_main(const Matroid& m, std::uint64_t seed,
                                       std::uint64_t prime_bound) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  if (!connected_preamble(m, r)) {
    r.wall_ms = elapsed_ms(t0);
    return r;
  }
  ZHat z = zhat(m, ZhatStrategy::StateSum);
  auto sp = specialize_for_verification(z, seed);
  if (!sp) {
    r.status = "Degenerate";
    r.wall_ms = elapsed_ms(t0);
    return r;
  }
  r.assignment = sp->assignment;
  fill_from_outcome(r, certify_sn(sp->f, prime_bound));
  r.wall_ms = elapsed_ms(t0);
  return r;
}

VerificationReport verify_theorem_mod_p(const Matroid& m, std::uint64_t p, std::uint64_t seed,
                                        int max_samples) {
  auto t0 = std::chrono::steady_clock::now();
  if (!is_prime(p)) throw std::domain_error("verify_theorem_mod_p: characteristic must be prime");
  if (max_samples < 1) throw std::domain_error("verify_theorem_mod_p: max_samples must be positive");
  if (!m.is_loopless())
    throw std::domain_error("verify_theorem_mod_p: matroid must be loopless");
  VerificationReport r;
  r.characteristic = p;
  if (!connected_preamble(m, r)) {
    r.wall_ms = elapsed_ms(t0);
    return r;
  }
  const RankProfile pr = zhat(m, ZhatStrategy::StateSum).profile;
  int n = pr.rank;
  int ground = pr.ground_size;
  Rng rng(derive_stream_seed(seed, r.input + "|modp:" + std::to_string(p)));
  WitnessCollector col(n);

  std::array<std::optional<FqCtx>, 9> ctx_cache;
  int used = 0;
  if (!col.cert.complete()) {
    for (int s = 0; s < max_samples; ++s) {
      // Field-degree schedule: k cycles through 1..8, sixteen samples per
      // step, so small fields get a fair chance before escalation and every
      // degree recurs if the early rounds miss a witness shape.
      int k = 1 + (s / 16) % 8;
      if (!ctx_cache[k]) ctx_cache[k] = FqCtx::make(p, k);
      const FqCtx& F = *ctx_cache[k];

      bool distinct = F.order >= static_cast<std::uint64_t>(ground);
      std::vector<FqCtx::Elem> vals;
      vals.reserve(ground);
      while (static_cast<int>(vals.size()) < ground) {
        FqCtx::Elem e(F.k);
        for (int j = 0; j < F.k; ++j)
          e[j] = static_cast<std::uint64_t>(rng.next_in(0, static_cast<long>(p) - 1));
        if (distinct && std::find(vals.begin(), vals.end(), e) != vals.end()) continue;
        vals.push_back(std::move(e));
      }
      ++used;

      // Coefficients of the specialized polynomial in q, computed by walking
      // the subset tree with a running product (zero products prune).
      std::vector<FqCtx::Elem> coeff(n + 1, F.zero());
      auto walk = [&](auto&& self, int e, Mask mask, const FqCtx::Elem& prod) -> void {
        if (e == ground) {
          int d = pr.exponent[mask];
          coeff[d] = F.add(coeff[d], prod);
          return;
        }
        self(self, e + 1, mask, prod);
        FqCtx::Elem nxt = F.mul(prod, vals[e]);
        if (!F.is_zero(nxt)) self(self, e + 1, mask | (Mask{1} << e), nxt);
      };
      walk(walk, 0, 0, F.one());

      FqPoly f(F, std::move(coeff));
      if (!fq_squarefree(f)) continue;
      col.offer(F.order, fq_degree_pattern(f));
      if (col.cert.complete()) break;
    }
  }
  r.samples_used = used;
  if (col.cert.complete()) {
    r.status = "Sn";
    col.cert.validate_shapes();
    r.certificate = col.cert;
    if (col.cert.transitive) r.irreducible_witness_prime = col.cert.transitive->field_order;
  } else {
    r.status = "Inconclusive";
    r.inconclusive_bound = static_cast<std::uint64_t>(max_samples);
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

VerificationReport verify_conjecture_bivariate(const Matroid& m, long y0, std::uint64_t seed,
                                               std::uint64_t prime_bound) {
  auto t0 = std::chrono::steady_clock::now();
  (void)seed;  // reserved: the y-bump scan is deterministic
  if (y0 == 1) throw std::domain_error("verify_conjecture_bivariate: y0 = 1 collapses x");
  VerificationReport r;
  if (!connected_preamble(m, r)) {
    r.wall_ms = elapsed_ms(t0);
    return r;
  }
  BiPolyZ t = tutte_bivariate(m);
  std::optional<UniPolyZ> f;
  long y = y0;
  for (int bump = 0; bump < 32; ++bump, ++y) {
    if (y == 1) continue;
    UniPolyZ cand = t.eval_y(Int(y));
    if (squarefree_z(cand)) {
      f = std::move(cand);
      r.y0_used = y;
      break;
    }
  }
  if (!f) {
    r.status = "Degenerate";
    r.wall_ms = elapsed_ms(t0);
    return r;
  }
  fill_from_outcome(r, certify_sn(*f, prime_bound));
  r.wall_ms = elapsed_ms(t0);
  return r;
}

JacobianReport jacobian_independence_check(const Matroid& m, int num_points, std::uint64_t seed) {
  if (num_points < 1) throw std::domain_error("jacobian check: need at least one point");
  JacobianReport r;
  r.input = m.canonical_key();
  if (m.ground_size() == 0) {
    r.rank = 0;
    r.status = "NotConnected";
    return r;
  }
  r.rank = m.rank();
  if (r.rank == 0 || !m.is_connected()) {
    r.status = "NotConnected";
    return r;
  }
  ZHat z = zhat(m, ZhatStrategy::StateSum);
  std::vector<MultiPolyZ> a = coefficients_in_q(z);
  int ground = m.ground_size();
  std::vector<std::vector<MultiPolyZ>> jac(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    jac[i].reserve(ground);
    for (int e = 0; e < ground; ++e) jac[i].push_back(a[i].derivative_v(e));
  }
  Rng rng(derive_stream_seed(seed, r.input + "|jac"));
  bool independent = false;
  for (int pt = 0; pt < num_points; ++pt) {
    std::vector<long> point(ground);
    for (auto& v : point) v = rng.next_in(1, 10L * ground);
    std::vector<std::vector<Int>> mat(a.size(), std::vector<Int>(ground));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (int e = 0; e < ground; ++e) mat[i][e] = jac[i][e].eval_v(point).coeff(0);
    int rk = matrix_rank(std::move(mat));
    r.points.push_back(std::move(point));
    r.ranks.push_back(rk);
    if (rk == r.rank) independent = true;
  }
  r.status = independent ? "Independent" : "Inconclusive";
  return r;
}

}  // namespace tgl
