#include "tgl/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgl {

// ---------------------------------------------------------------------------
// UniPolyZ
// ---------------------------------------------------------------------------

void UniPolyZ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPolyZ UniPolyZ::constant(Int v) {
  UniPolyZ p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

UniPolyZ UniPolyZ::monomial(Int coeff, int degree) {
  if (degree < 0) throw std::domain_error("negative monomial degree");
  UniPolyZ p;
  if (coeff != 0) {
    p.c_.assign(degree + 1, 0);
    p.c_.back() = std::move(coeff);
  }
  return p;
}

const Int& UniPolyZ::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Int UniPolyZ::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
  return c_[d];
}

UniPolyZ UniPolyZ::operator+(const UniPolyZ& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPolyZ(std::move(r));
}

UniPolyZ UniPolyZ::operator-(const UniPolyZ& o) const { return *this + (-o); }

UniPolyZ UniPolyZ::operator-() const {
  std::vector<Int> r = c_;
  for (auto& x : r) x = -x;
  return UniPolyZ(std::move(r));
}

UniPolyZ UniPolyZ::operator*(const UniPolyZ& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPolyZ(std::move(r));
}

UniPolyZ UniPolyZ::divide_exact(const UniPolyZ& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < d.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<Int> quot(degree() - d.degree() + 1, 0);
  UniPolyZ rem = *this;
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    if (!mpz_divisible_p(rem.leading().get_mpz_t(), d.leading().get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    Int qc = rem.leading() / d.leading();
    int k = rem.degree() - d.degree();
    quot[k] = qc;
    rem = rem - monomial(std::move(qc), k) * d;
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return UniPolyZ(std::move(quot));
}

UniPolyZ UniPolyZ::pow(int e) const {
  if (e < 0) throw std::domain_error("negative exponent");
  UniPolyZ r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

UniPolyZ UniPolyZ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UniPolyZ(std::move(r));
}

Int UniPolyZ::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int UniPolyZ::content() const {
  Int g = 0;
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

UniPolyZ UniPolyZ::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  std::vector<Int> r = c_;
  for (auto& x : r) x /= g;
  return UniPolyZ(std::move(r));
}

namespace {

// Remainder of a by b up to a power of b's leading coefficient; the
// normalization is irrelevant because callers take the primitive part.
UniPolyZ pseudo_rem(UniPolyZ a, const UniPolyZ& b) {
  const Int& lb = b.leading();
  int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    int k = a.degree() - db;
    a = a * UniPolyZ::constant(lb) - b * UniPolyZ::monomial(a.leading(), k);
  }
  return a;
}

}  // namespace

bool squarefree_z(const UniPolyZ& f) {
  if (f.is_zero()) throw std::domain_error("squarefree test on zero polynomial");
  if (f.degree() == 0) return true;
  UniPolyZ a = f.primitive_part();
  UniPolyZ b = f.derivative().primitive_part();
  while (!b.is_zero()) {
    UniPolyZ r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? UniPolyZ{} : r.primitive_part();
  }
  return a.degree() == 0;
}

// ---------------------------------------------------------------------------
// UniPolyFp
// ---------------------------------------------------------------------------

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  return powmod(a, p - 2, p);
}

}  // namespace

void UniPolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void UniPolyFp::check_same_field(const UniPolyFp& o) const {
  if (p_ != o.p_) throw std::domain_error("mixed moduli");
}

UniPolyFp::UniPolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p) {
  if (p < 2) throw std::domain_error("modulus must be at least 2");
  c_ = std::move(coeffs);
  for (auto& x : c_) x %= p_;
  trim();
}

UniPolyFp UniPolyFp::from_integer_poly(const UniPolyZ& f, std::uint64_t p) {
  std::vector<std::uint64_t> c(f.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) {
    Int r = f.coeffs()[i] % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    c[i] = r.get_ui();
  }
  return {p, std::move(c)};
}

std::uint64_t UniPolyFp::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
  return c_[d];
}

std::uint64_t UniPolyFp::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

UniPolyFp UniPolyFp::operator+(const UniPolyFp& o) const {
  check_same_field(o);
  std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + o.c_[i]) % p_;
  return {p_, std::move(r)};
}

UniPolyFp UniPolyFp::operator-(const UniPolyFp& o) const {
  check_same_field(o);
  std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + p_ - o.c_[i]) % p_;
  return {p_, std::move(r)};
}

UniPolyFp UniPolyFp::operator*(const UniPolyFp& o) const {
  check_same_field(o);
  if (c_.empty() || o.c_.empty()) return UniPolyFp(p_);
  std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
  return {p_, std::move(r)};
}

UniPolyFp UniPolyFp::mod(const UniPolyFp& d) const {
  check_same_field(d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  UniPolyFp rem = *this;
  std::uint64_t inv_lead = invmod(d.leading(), p_);
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    std::uint64_t qc = mulmod(rem.leading(), inv_lead, p_);
    int k = rem.degree() - d.degree();
    std::vector<std::uint64_t> t(k + 1, 0);
    t.back() = qc;
    rem = rem - UniPolyFp(p_, std::move(t)) * d;
  }
  return rem;
}

std::pair<UniPolyFp, UniPolyFp> UniPolyFp::divmod(const UniPolyFp& d) const {
  check_same_field(d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero() || degree() < d.degree()) return {UniPolyFp(p_), *this};
  std::vector<std::uint64_t> quot(degree() - d.degree() + 1, 0);
  UniPolyFp rem = *this;
  std::uint64_t inv_lead = invmod(d.leading(), p_);
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    std::uint64_t qc = mulmod(rem.leading(), inv_lead, p_);
    int k = rem.degree() - d.degree();
    quot[k] = qc;
    std::vector<std::uint64_t> t(k + 1, 0);
    t.back() = qc;
    rem = rem - UniPolyFp(p_, std::move(t)) * d;
  }
  return {UniPolyFp(p_, std::move(quot)), std::move(rem)};
}

UniPolyFp UniPolyFp::divide_exact(const UniPolyFp& d) const {
  auto [quot, rem] = divmod(d);
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return quot;
}

UniPolyFp UniPolyFp::make_monic() const {
  if (is_zero()) return *this;
  std::uint64_t inv_lead = invmod(leading(), p_);
  std::vector<std::uint64_t> r = c_;
  for (auto& x : r) x = mulmod(x, inv_lead, p_);
  return {p_, std::move(r)};
}

UniPolyFp UniPolyFp::derivative() const {
  if (c_.size() <= 1) return UniPolyFp(p_);
  std::vector<std::uint64_t> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod(c_[i], i % p_, p_);
  return {p_, std::move(r)};
}

std::uint64_t UniPolyFp::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= p_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
  return acc;
}

UniPolyFp UniPolyFp::pow_mod(std::uint64_t e, const UniPolyFp& m) const {
  check_same_field(m);
  if (m.degree() < 1) throw std::domain_error("modulus polynomial must have positive degree");
  UniPolyFp base = mod(m);
  UniPolyFp r = constant(p_, 1);
  while (e) {
    if (e & 1) r = (r * base).mod(m);
    base = (base * base).mod(m);
    e >>= 1;
  }
  return r;
}

bool UniPolyFp::squarefree() const {
  if (is_zero()) throw std::domain_error("squarefree test on zero polynomial");
  if (degree() == 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

UniPolyFp gcd(UniPolyFp a, UniPolyFp b) {
  while (!b.is_zero()) {
    UniPolyFp r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.make_monic();
}

// ---------------------------------------------------------------------------
// BiPolyZ
// ---------------------------------------------------------------------------

void BiPolyZ::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BiPolyZ BiPolyZ::constant(Int v) {
  BiPolyZ p;
  if (v != 0) p.rows_.push_back(UniPolyZ::constant(std::move(v)));
  return p;
}

BiPolyZ BiPolyZ::var_x() {
  BiPolyZ p;
  p.rows_ = {UniPolyZ{}, UniPolyZ::constant(1)};
  return p;
}

BiPolyZ BiPolyZ::var_y() {
  BiPolyZ p;
  p.rows_ = {UniPolyZ::variable()};
  return p;
}

int BiPolyZ::degree_y() const {
  int d = -1;
  for (const auto& row : rows_) d = std::max(d, row.degree());
  return d;
}

Int BiPolyZ::coeff(int dx, int dy) const {
  if (dx < 0 || dx >= static_cast<int>(rows_.size())) return 0;
  return rows_[dx].coeff(dy);
}

BiPolyZ BiPolyZ::operator+(const BiPolyZ& o) const {
  std::vector<UniPolyZ> r(std::max(rows_.size(), o.rows_.size()));
  for (size_t i = 0; i < rows_.size(); ++i) r[i] = rows_[i];
  for (size_t i = 0; i < o.rows_.size(); ++i) r[i] = r[i] + o.rows_[i];
  return BiPolyZ(std::move(r));
}

BiPolyZ BiPolyZ::operator-(const BiPolyZ& o) const {
  std::vector<UniPolyZ> r(std::max(rows_.size(), o.rows_.size()));
  for (size_t i = 0; i < rows_.size(); ++i) r[i] = rows_[i];
  for (size_t i = 0; i < o.rows_.size(); ++i) r[i] = r[i] - o.rows_[i];
  return BiPolyZ(std::move(r));
}

BiPolyZ BiPolyZ::operator*(const BiPolyZ& o) const {
  if (rows_.empty() || o.rows_.empty()) return {};
  std::vector<UniPolyZ> r(rows_.size() + o.rows_.size() - 1);
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < o.rows_.size(); ++j) r[i + j] = r[i + j] + rows_[i] * o.rows_[j];
  return BiPolyZ(std::move(r));
}

BiPolyZ BiPolyZ::divide_exact(const BiPolyZ& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  if (degree_x() < d.degree_x()) throw std::domain_error("inexact polynomial division");
  std::vector<UniPolyZ> quot(degree_x() - d.degree_x() + 1);
  BiPolyZ rem = *this;
  while (!rem.is_zero() && rem.degree_x() >= d.degree_x()) {
    UniPolyZ qc = rem.rows_.back().divide_exact(d.rows_.back());
    int k = rem.degree_x() - d.degree_x();
    BiPolyZ t;
    t.rows_.assign(k + 1, UniPolyZ{});
    t.rows_.back() = qc;
    quot[k] = std::move(qc);
    rem = rem - t * d;
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return BiPolyZ(std::move(quot));
}

BiPolyZ BiPolyZ::pow(int e) const {
  if (e < 0) throw std::domain_error("negative exponent");
  BiPolyZ r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

UniPolyZ BiPolyZ::eval_y(const Int& y0) const {
  std::vector<Int> c(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i].eval(y0);
  return UniPolyZ(std::move(c));
}

UniPolyZ BiPolyZ::eval_x(const Int& x0) const {
  UniPolyZ acc;
  Int xp = 1;
  for (const auto& row : rows_) {
    acc = acc + row * UniPolyZ::constant(xp);
    xp *= x0;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// MultiPolyZ
// ---------------------------------------------------------------------------

void MultiPolyZ::add_term(int q_degree, Mask vars, const Int& coeff) {
  if (coeff == 0) return;
  Key k{static_cast<std::uint32_t>(q_degree), vars};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPolyZ MultiPolyZ::constant(Int v) { return term(std::move(v), 0, 0); }
MultiPolyZ MultiPolyZ::q_power(int d) { return term(1, d, 0); }

MultiPolyZ MultiPolyZ::v(int e) {
  if (e < 0 || e >= kMaxGroundSize) throw std::domain_error("variable index out of range");
  return term(1, 0, Mask{1} << e);
}

MultiPolyZ MultiPolyZ::term(Int coeff, int q_degree, Mask vars) {
  if (q_degree < 0) throw std::domain_error("negative q degree");
  MultiPolyZ p;
  if (coeff != 0) p.terms_.emplace(Key{static_cast<std::uint32_t>(q_degree), vars}, std::move(coeff));
  return p;
}

int MultiPolyZ::degree_q() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.first));
  return d;
}

Mask MultiPolyZ::vars_used() const {
  Mask m = 0;
  for (const auto& [k, c] : terms_) m |= k.second;
  return m;
}

MultiPolyZ MultiPolyZ::operator+(const MultiPolyZ& o) const {
  MultiPolyZ r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

MultiPolyZ MultiPolyZ::operator-(const MultiPolyZ& o) const {
  MultiPolyZ r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

MultiPolyZ MultiPolyZ::operator*(const MultiPolyZ& o) const {
  MultiPolyZ r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      if (k1.second & k2.second)
        throw std::domain_error("product leaves the multilinear representation");
      r.add_term(k1.first + k2.first, k1.second | k2.second, c1 * c2);
    }
  return r;
}

MultiPolyZ MultiPolyZ::divide_exact(const MultiPolyZ& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  // Terms are kept in (q-degree, variable-set) lexicographic order, which is
  // multiplicative on the admissible (variable-disjoint) products, so plain
  // leading-term division is exact whenever an exact quotient exists.
  const auto& [dk, dc] = *d.terms_.rbegin();
  MultiPolyZ rem = *this;
  MultiPolyZ quot;
  while (!rem.is_zero()) {
    const auto& [rk, rc] = *rem.terms_.rbegin();
    if (rk.first < dk.first || (rk.second & dk.second) != dk.second ||
        !mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    MultiPolyZ t = term(rc / dc, rk.first - dk.first, rk.second & ~dk.second);
    quot = quot + t;
    rem = rem - t * d;
  }
  return quot;
}

MultiPolyZ MultiPolyZ::derivative_q() const {
  MultiPolyZ r;
  for (const auto& [k, c] : terms_)
    if (k.first >= 1) r.add_term(k.first - 1, k.second, c * k.first);
  return r;
}

MultiPolyZ MultiPolyZ::derivative_v(int e) const {
  Mask bit = Mask{1} << e;
  MultiPolyZ r;
  for (const auto& [k, c] : terms_)
    if (k.second & bit) r.add_term(k.first, k.second & ~bit, c);
  return r;
}

MultiPolyZ MultiPolyZ::assign_v(int e, const Int& value) const {
  Mask bit = Mask{1} << e;
  MultiPolyZ r;
  for (const auto& [k, c] : terms_) {
    if (k.second & bit)
      r.add_term(k.first, k.second & ~bit, c * value);
    else
      r.add_term(k.first, k.second, c);
  }
  return r;
}

MultiPolyZ MultiPolyZ::substitute_q_one() const {
  MultiPolyZ r;
  for (const auto& [k, c] : terms_) r.add_term(0, k.second, c);
  return r;
}

UniPolyZ MultiPolyZ::eval_v(std::span<const long> values) const {
  std::vector<Int> coeffs(degree_q() + 1, 0);
  for (const auto& [k, c] : terms_) {
    Int prod = c;
    for (Mask m = k.second; m;) {
      int e = lowest_bit(m);
      m &= m - 1;
      if (e >= static_cast<int>(values.size()))
        throw std::domain_error("missing value for a variable");
      prod *= values[e];
    }
    coeffs[k.first] += prod;
  }
  return UniPolyZ(std::move(coeffs));
}

UniPolyZ MultiPolyZ::to_unipoly_q() const {
  std::vector<Int> coeffs(degree_q() + 1, 0);
  for (const auto& [k, c] : terms_) {
    if (k.second) throw std::domain_error("polynomial still contains edge variables");
    coeffs[k.first] = c;
  }
  return UniPolyZ(std::move(coeffs));
}

MultiPolyZ MultiPolyZ::coeff_of_q(int d) const {
  MultiPolyZ r;
  for (const auto& [k, c] : terms_)
    if (static_cast<int>(k.first) == d) r.add_term(0, k.second, c);
  return r;
}

MultiPolyZ MultiPolyZ::shift_vars(int shift) const {
  MultiPolyZ r;
  for (const auto& [k, c] : terms_) {
    Mask m = k.second;
    if (m && (lowest_bit(m) + shift < 0 ||
              std::bit_width(m) + shift > kMaxGroundSize))
      throw std::domain_error("variable shift out of range");
    r.add_term(k.first, shift >= 0 ? m << shift : m >> -shift, c);
  }
  return r;
}

MultiPolyZ product_of_one_plus_v(Mask vars) {
  MultiPolyZ p;
  Mask sub = vars;
  for (;;) {
    p.add_term(0, sub, 1);
    if (sub == 0) break;
    sub = (sub - 1) & vars;
  }
  return p;
}

// ---------------------------------------------------------------------------
// RankProfile
// ---------------------------------------------------------------------------

RankProfile::RankProfile(int n, int r, std::vector<std::uint8_t> expo)
    : ground_size(n), rank(r), exponent(std::move(expo)) {
  if (n < 0 || n > kMaxGroundSize) throw std::domain_error("ground set size out of range");
  if (exponent.size() != (size_t{1} << n)) throw std::domain_error("exponent table size mismatch");
}

bool RankProfile::loopless() const {
  for (int e = 0; e < ground_size; ++e)
    if (exponent[Mask{1} << e] == rank) return false;
  return true;
}

MultiPolyZ RankProfile::to_multipoly() const {
  MultiPolyZ p;
  for (Mask a = 0; a < exponent.size(); ++a) p = p + MultiPolyZ::term(1, exponent[a], a);
  return p;
}

RankProfile RankProfile::from_multipoly(const MultiPolyZ& p, int ground_size) {
  if (ground_size < 0 || ground_size > kMaxGroundSize)
    throw std::domain_error("ground set size out of range");
  size_t want = size_t{1} << ground_size;
  if (p.terms().size() != want)
    throw std::domain_error("polynomial is not a subset expansion");
  std::vector<std::uint8_t> expo(want, 0);
  std::vector<bool> seen(want, false);
  for (const auto& [k, c] : p.terms()) {
    if (c != 1 || k.second >= want || seen[k.second] || k.first > 255)
      throw std::domain_error("polynomial is not a subset expansion");
    seen[k.second] = true;
    expo[k.second] = static_cast<std::uint8_t>(k.first);
  }
  int rank = expo[0];
  return {ground_size, rank, std::move(expo)};
}

UniPolyZ RankProfile::specialize(std::span<const long> values) const {
  if (static_cast<int>(values.size()) != ground_size)
    throw std::domain_error("wrong number of edge values");
  std::vector<Int> coeffs(rank + 1, 0);
  // Depth-first over subsets so the running product is shared along prefixes.
  struct Frame {
    int e;
    Mask mask;
    Int prod;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, 1});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.e == ground_size) {
      coeffs[exponent[f.mask]] += f.prod;
      continue;
    }
    stack.push_back({f.e + 1, f.mask | (Mask{1} << f.e), f.prod * values[f.e]});
    stack.push_back({f.e + 1, f.mask, std::move(f.prod)});
  }
  return UniPolyZ(std::move(coeffs));
}

BiPolyZ RankProfile::substitute_bivariate() const {
  // Each subset A contributes (x-1)^{expo(A)} (y-1)^{expo(A)+|A|}.
  int max_y = rank + ground_size;
  std::vector<std::vector<Int>> count(rank + 1, std::vector<Int>(max_y + 1, 0));
  for (size_t a = 0; a < exponent.size(); ++a) {
    int k = exponent[a];
    count[k][k + popcount(static_cast<Mask>(a))] += 1;
  }
  std::vector<UniPolyZ> ypow(max_y + 1);
  ypow[0] = UniPolyZ::constant(1);
  UniPolyZ ym1({-1, 1});
  for (int j = 1; j <= max_y; ++j) ypow[j] = ypow[j - 1] * ym1;
  // Pascal triangle for the x-side expansion of (x-1)^k.
  std::vector<std::vector<Int>> binom(rank + 1, std::vector<Int>(rank + 1, 0));
  for (int i = 0; i <= rank; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  std::vector<UniPolyZ> rows(rank + 1);
  for (int k = 0; k <= rank; ++k)
    for (int j = 0; j <= max_y; ++j) {
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

void RankProfile::validate() const {
  if (rank < 0 || rank > ground_size) throw std::logic_error("rank out of range");
  if (exponent[0] != rank) throw std::logic_error("empty set must have full exponent");
  Mask full = all_elements(ground_size);
  if (exponent[full] != 0) throw std::logic_error("full set must have exponent zero");
  for (size_t a = 0; a < exponent.size(); ++a) {
    if (exponent[a] > rank) throw std::logic_error("exponent above rank");
    for (int e = 0; e < ground_size; ++e) {
      Mask bit = Mask{1} << e;
      if (a & bit) continue;
      int with = exponent[a | bit];
      int without = exponent[a];
      if (with != without && with != without - 1)
        throw std::logic_error("adding one element must change rank by 0 or 1");
    }
  }
}

// ---------------------------------------------------------------------------
// Symmetric functions and integer linear algebra
// ---------------------------------------------------------------------------

Int elementary_symmetric(int k, std::span<const Int> values) {
  int m = static_cast<int>(values.size());
  if (k < 0 || k > m) return 0;
  std::vector<Int> e(k + 1, 0);
  e[0] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = std::min(k, i + 1); j >= 1; --j) e[j] += e[j - 1] * values[i];
  return e[k];
}

MultiPolyZ elementary_symmetric_poly(int k, int m) {
  if (m < 0 || m > kMaxGroundSize) throw std::domain_error("arity out of range");
  if (k < 0 || k > m) return {};
  std::vector<MultiPolyZ> e(k + 1);
  e[0] = MultiPolyZ::constant(1);
  for (int i = 0; i < m; ++i)
    for (int j = std::min(k, i + 1); j >= 1; --j)
      e[j] = e[j] + e[j - 1] * MultiPolyZ::v(i);
  return e[k];
}

int matrix_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::domain_error("ragged matrix");
  size_t r = 0;
  Int prev = 1;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        Int num = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("fraction-free elimination lost exactness");
        m[i][j] = num / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace tgl
