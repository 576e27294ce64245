#pragma once

// Frobenius cycle-type sampling and one-sided symmetric-group certificates.
//
// The soundness chain, documented once here and relied on throughout:
//   - for a monic integer polynomial and a prime p not dividing its
//     discriminant-relevant data (leading coefficient, squarefree part), the
//     multiset of irreducible-factor degrees mod p is the cycle type of an
//     element of the Galois group; more generally a specialization's Galois
//     group embeds into the generic group whenever the specialized polynomial
//     is separable and the coefficient ring is integrally closed;
//   - a pattern {n} exhibits an n-cycle, hence transitivity;
//   - a prime cycle of length l with n/2 < l < n inside a transitive group
//     rules out nontrivial blocks, hence primitivity;
//   - a primitive group containing a transposition is the full symmetric
//     group (Jordan); a pattern with exactly one part 2 and all other parts
//     odd powers to a transposition.
// Certificates are one-sided: Sn is proven, Inconclusive proves nothing.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgl/base.hpp"
#include "tgl/matroid.hpp"
#include "tgl/poly.hpp"
#include "tgl/tutte.hpp"

namespace tgl {

bool is_prime(std::uint64_t x);

// ---------------------------------------------------------------------------
// Degree patterns (Frobenius cycle types)
// ---------------------------------------------------------------------------

struct DegreePattern {
  std::uint64_t field_order = 0;  // p, or p^k for extension-field samples
  std::vector<int> parts;         // ascending; sums to the degree

  bool operator==(const DegreePattern&) const = default;
};

// nullopt means Rejected: p divides the leading coefficient, or f mod p is
// not squarefree. Otherwise the multiset of irreducible-factor degrees of
// f mod p, found by distinct-degree factorization.
std::optional<DegreePattern> degree_pattern_mod_p(const UniPolyZ& f, std::uint64_t p);

// ---------------------------------------------------------------------------
// Sn certificates
// ---------------------------------------------------------------------------

struct SnCertificate {
  int degree = 0;
  std::optional<DegreePattern> transitive;    // single part n
  std::optional<DegreePattern> transposition; // exactly one part 2, rest odd; needed for n >= 3
  std::optional<DegreePattern> prime_cycle;   // a prime part l, n/2 < l < n; needed for n >= 4
  int prime_cycle_length = 0;

  bool complete() const;
  void validate_shapes() const;  // throws std::logic_error on malformed witnesses
};

struct CertifyOutcome {
  bool sn = false;
  SnCertificate certificate;       // partial when not sn
  std::uint64_t prime_bound = 0;
};

// Scans primes 2, 3, 5, ... up to prime_bound collecting witness patterns.
// Requires f squarefree over Z (throws std::domain_error otherwise) of
// degree >= 1. Degree 1 is trivially Sn with no witnesses.
CertifyOutcome certify_sn(const UniPolyZ& f, std::uint64_t prime_bound);

// ---------------------------------------------------------------------------
// Specialization and the verification experiments
// ---------------------------------------------------------------------------

struct Specialization {
  std::vector<long> assignment;
  UniPolyZ f;
};

// Draws distinct edge values in [1, 10|E|] from the stream derived from
// (seed, source key); retries while the specialized polynomial is not
// squarefree, at most 32 attempts (nullopt after that).
std::optional<Specialization> specialize_for_verification(const ZHat& z, std::uint64_t seed);

struct VerificationReport {
  std::string input;  // matroid key or graph6 line
  int n = 0;          // input size: vertices for graphs, elements for matroids
  int rank = 0;       // degree of the certified polynomial
  std::optional<std::vector<long>> assignment;
  std::optional<long> y0_used;
  std::optional<std::uint64_t> characteristic;
  std::optional<int> samples_used;
  std::optional<std::uint64_t> irreducible_witness_prime;
  std::optional<std::uint64_t> inconclusive_bound;
  std::optional<SnCertificate> certificate;
  std::string status;  // "Sn" | "Inconclusive" | "NotConnected" | "Degenerate"
  double wall_ms = 0;  // in-memory diagnostic only, never serialized
};

// Specialize-and-certify over the rationals. Sn is sound for the generic
// group: the specialized group embeds into it and both sit inside S_rank.
VerificationReport verify_theorem_main(const Matroid& m, std::uint64_t seed,
                                       std::uint64_t prime_bound);

// Pools Frobenius cycle types over many specializations with values drawn
// from F_{p^k} on an escalating degree schedule (each sample's cyclic group
// embeds into the generic group independently). Requires loopless input.
VerificationReport verify_theorem_mod_p(const Matroid& m, std::uint64_t p,
                                        std::uint64_t seed, int max_samples);

// Specializes the bivariate Tutte polynomial at y = y0 (bumping y while the
// result is not squarefree, at most 32 bumps) and certifies S_rank.
VerificationReport verify_conjecture_bivariate(const Matroid& m, long y0,
                                               std::uint64_t seed,
                                               std::uint64_t prime_bound);

struct JacobianReport {
  std::string input;
  int rank = 0;
  std::vector<std::vector<long>> points;
  std::vector<int> ranks;
  std::string status;  // "Independent" | "Inconclusive" | "NotConnected"
};

// Rank of the matrix of partials of the q-coefficients with respect to the
// edge variables, at pseudorandom integer points; full rank at one point
// already proves algebraic independence in characteristic zero.
JacobianReport jacobian_independence_check(const Matroid& m, int num_points,
                                           std::uint64_t seed);

// ---------------------------------------------------------------------------
// F_{p^k} arithmetic (used by the positive-characteristic experiment)
// ---------------------------------------------------------------------------

struct FqCtx {
  std::uint64_t p = 2;
  int k = 1;
  std::uint64_t order = 2;             // p^k
  std::vector<std::uint64_t> modulus;  // monic irreducible of degree k over F_p

  using Elem = std::vector<std::uint64_t>;  // exactly k coefficients

  // Deterministic: the modulus is the first irreducible in the constant-first
  // enumeration of monic degree-k polynomials.
  static FqCtx make(std::uint64_t p, int k);

  Elem zero() const { return Elem(k, 0); }
  Elem one() const;
  Elem from_uint(std::uint64_t v) const;
  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem scalar(const Elem& a, std::uint64_t s) const;  // multiply by an F_p scalar
};

struct FqPoly {
  const FqCtx* ctx = nullptr;
  std::vector<FqCtx::Elem> c;  // c[d] is the coefficient of x^d, trimmed

  FqPoly() = default;
  FqPoly(const FqCtx& f, std::vector<FqCtx::Elem> coeffs);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim();
};

FqPoly fq_x(const FqCtx& f);
FqPoly fq_add(const FqPoly& a, const FqPoly& b);
FqPoly fq_sub(const FqPoly& a, const FqPoly& b);
FqPoly fq_mul(const FqPoly& a, const FqPoly& b);
FqPoly fq_mod(const FqPoly& a, const FqPoly& d);
FqPoly fq_divide_exact(const FqPoly& a, const FqPoly& d);
FqPoly fq_make_monic(const FqPoly& a);
FqPoly fq_derivative(const FqPoly& a);
FqPoly fq_gcd(FqPoly a, FqPoly b);
FqPoly fq_pow_mod(const FqPoly& base, std::uint64_t e, const FqPoly& m);
bool fq_squarefree(const FqPoly& a);

// Distinct-degree factorization pattern of a monic squarefree polynomial.
std::vector<int> fq_degree_pattern(const FqPoly& f);

}  // namespace tgl
