#pragma once

// Exact polynomial arithmetic over Z and F_p:
//   UniPolyZ     dense univariate, arbitrary-precision integer coefficients
//   UniPolyFp    dense univariate over a prime field
//   BiPolyZ      dense bivariate over Z (stored as x-coefficients in Z[y])
//   MultiPolyZ   sparse multivariate, multilinear in each v_e, one extra
//                variable q of unbounded degree
//   RankProfile  the subset -> exponent table that *is* the multivariate
//                Tutte polynomial of a matroid (every v-monomial has
//                coefficient one)

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tgl/base.hpp"

namespace tgl {

// ---------------------------------------------------------------------------
// UniPolyZ
// ---------------------------------------------------------------------------

class UniPolyZ {
 public:
  UniPolyZ() = default;  // the zero polynomial
  explicit UniPolyZ(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPolyZ constant(Int v);
  static UniPolyZ monomial(Int coeff, int degree);
  static UniPolyZ variable() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Int& leading() const;
  Int coeff(int d) const;
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  UniPolyZ operator+(const UniPolyZ& o) const;
  UniPolyZ operator-(const UniPolyZ& o) const;
  UniPolyZ operator*(const UniPolyZ& o) const;
  UniPolyZ operator-() const;
  UniPolyZ divide_exact(const UniPolyZ& d) const;  // throws if not exact
  UniPolyZ pow(int e) const;

  UniPolyZ derivative() const;
  Int eval(const Int& x) const;
  Int content() const;           // gcd of coefficients, 0 for the zero poly
  UniPolyZ primitive_part() const;

  bool operator==(const UniPolyZ&) const = default;

 private:
  std::vector<Int> c_;  // c_[d] is the coefficient of x^d; trailing entry nonzero
  void trim();
};

// Squarefree test over Z via the primitive pseudo-remainder sequence:
// squarefree iff gcd(f, f') is constant. Throws on the zero polynomial.
bool squarefree_z(const UniPolyZ& f);

// ---------------------------------------------------------------------------
// UniPolyFp
// ---------------------------------------------------------------------------

class UniPolyFp {
 public:
  explicit UniPolyFp(std::uint64_t p) : p_(p) {}
  UniPolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static UniPolyFp from_integer_poly(const UniPolyZ& f, std::uint64_t p);
  static UniPolyFp variable(std::uint64_t p) { return {p, {0, 1}}; }
  static UniPolyFp constant(std::uint64_t p, std::uint64_t v) { return {p, {v}}; }

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t coeff(int d) const;
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t leading() const;

  UniPolyFp operator+(const UniPolyFp& o) const;
  UniPolyFp operator-(const UniPolyFp& o) const;
  UniPolyFp operator*(const UniPolyFp& o) const;
  UniPolyFp divide_exact(const UniPolyFp& d) const;  // throws if remainder != 0
  std::pair<UniPolyFp, UniPolyFp> divmod(const UniPolyFp& d) const;
  UniPolyFp mod(const UniPolyFp& d) const;
  UniPolyFp make_monic() const;
  UniPolyFp derivative() const;
  std::uint64_t eval(std::uint64_t x) const;

  // h^e mod m, square-and-multiply.
  UniPolyFp pow_mod(std::uint64_t e, const UniPolyFp& m) const;

  bool squarefree() const;  // gcd(f, f') == 1

  bool operator==(const UniPolyFp&) const = default;

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
  void trim();
  void check_same_field(const UniPolyFp& o) const;
};

UniPolyFp gcd(UniPolyFp a, UniPolyFp b);  // monic gcd

// ---------------------------------------------------------------------------
// BiPolyZ — polynomials in x and y, stored as x-degree-indexed rows in Z[y]
// ---------------------------------------------------------------------------

class BiPolyZ {
 public:
  BiPolyZ() = default;  // zero
  explicit BiPolyZ(std::vector<UniPolyZ> x_rows) : rows_(std::move(x_rows)) { trim(); }

  static BiPolyZ constant(Int v);
  static BiPolyZ var_x();
  static BiPolyZ var_y();

  bool is_zero() const { return rows_.empty(); }
  int degree_x() const { return static_cast<int>(rows_.size()) - 1; }
  int degree_y() const;
  Int coeff(int dx, int dy) const;
  const std::vector<UniPolyZ>& x_rows() const { return rows_; }

  BiPolyZ operator+(const BiPolyZ& o) const;
  BiPolyZ operator-(const BiPolyZ& o) const;
  BiPolyZ operator*(const BiPolyZ& o) const;
  BiPolyZ divide_exact(const BiPolyZ& d) const;
  BiPolyZ pow(int e) const;

  UniPolyZ eval_y(const Int& y0) const;  // polynomial in x
  UniPolyZ eval_x(const Int& x0) const;  // polynomial in y

  bool operator==(const BiPolyZ&) const = default;

 private:
  std::vector<UniPolyZ> rows_;  // rows_[i] = coefficient of x^i, a poly in y
  void trim();
};

// ---------------------------------------------------------------------------
// MultiPolyZ — sparse Z[q, v_0..v_{n-1}], multilinear in every v_e
// ---------------------------------------------------------------------------

class MultiPolyZ {
 public:
  // (q-degree, subset of v-variables) -> coefficient; no zero values stored.
  using Key = std::pair<std::uint32_t, Mask>;

  MultiPolyZ() = default;

  static MultiPolyZ constant(Int v);
  static MultiPolyZ q_power(int d);
  static MultiPolyZ v(int e);
  static MultiPolyZ term(Int coeff, int q_degree, Mask vars);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Int>& terms() const { return terms_; }
  int degree_q() const;
  Mask vars_used() const;

  MultiPolyZ operator+(const MultiPolyZ& o) const;
  MultiPolyZ operator-(const MultiPolyZ& o) const;
  // Throws std::domain_error if any term product would leave the multilinear
  // representation (shared v-variable between the factors' monomials).
  MultiPolyZ operator*(const MultiPolyZ& o) const;
  // Exact division; the divisor's leading q-coefficient must be a constant.
  MultiPolyZ divide_exact(const MultiPolyZ& d) const;

  MultiPolyZ derivative_q() const;
  MultiPolyZ derivative_v(int e) const;

  // Substitutions.
  MultiPolyZ assign_v(int e, const Int& value) const;     // partial, stays multivariate
  MultiPolyZ substitute_q_one() const;                    // q <- 1
  UniPolyZ eval_v(std::span<const long> values) const;    // all v assigned -> poly in q
  UniPolyZ to_unipoly_q() const;  // throws std::domain_error if v-variables remain

  // v-variables of the terms with the given q-degree, as a v-only MultiPolyZ.
  MultiPolyZ coeff_of_q(int d) const;

  // Relabel every v_e to v_{e+shift} (for direct sums).
  MultiPolyZ shift_vars(int shift) const;

  bool operator==(const MultiPolyZ&) const = default;

 private:
  std::map<Key, Int> terms_;
  void add_term(int q_degree, Mask vars, const Int& coeff);
  friend MultiPolyZ product_of_one_plus_v(Mask vars);
};

// prod_{e in vars} (1 + v_e), expanded.
MultiPolyZ product_of_one_plus_v(Mask vars);

// ---------------------------------------------------------------------------
// RankProfile — the lossless encoding of the multivariate Tutte polynomial
// ---------------------------------------------------------------------------

// exponent(A) = r(M) - r_M(A); the coefficient of prod_{e in A} v_e is
// exactly q^{exponent(A)}.
struct RankProfile {
  int ground_size = 0;
  int rank = 0;
  std::vector<std::uint8_t> exponent;  // indexed by subset bitmask, size 2^ground_size

  RankProfile() : exponent(1, 0) {}
  RankProfile(int n, int r, std::vector<std::uint8_t> expo);

  bool loopless() const;  // no singleton with exponent == rank

  MultiPolyZ to_multipoly() const;
  static RankProfile from_multipoly(const MultiPolyZ& p, int ground_size);

  // Full integer assignment of the v-variables; result is a polynomial in q.
  UniPolyZ specialize(std::span<const long> values) const;

  // q <- (x-1)(y-1), v_e <- y-1; equals (y-1)^{rank} * T_M(x, y).
  BiPolyZ substitute_bivariate() const;

  // Structural sanity: exponent(0) == rank, values in [0, rank], monotone
  // non-increasing along subset inclusion, drops by at most 1 per element.
  void validate() const;

  bool operator==(const RankProfile&) const = default;
};

// ---------------------------------------------------------------------------
// Elementary symmetric polynomials and exact linear algebra
// ---------------------------------------------------------------------------

Int elementary_symmetric(int k, std::span<const Int> values);
// sigma_k(v_0, ..., v_{m-1}) as a MultiPolyZ (q-degree 0 everywhere).
MultiPolyZ elementary_symmetric_poly(int k, int m);

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
int matrix_rank(std::vector<std::vector<Int>> m);

}  // namespace tgl
