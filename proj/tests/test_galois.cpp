#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "tgl/galois.hpp"
#include "tgl/graphs.hpp"

using namespace tgl;

namespace {

UniPolyZ zp(std::vector<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return UniPolyZ(std::move(v));
}

Matroid triangle_matroid() {
  return cycle_matroid(make_simple_graph(3, {{0, 1}, {1, 2}, {0, 2}}));
}

// Brute-force factor-degree multiset by trial division with an irreducibility
// sieve; the asymptotically sensible implementation must agree with this.
std::vector<UniPolyFp> monic_of_degree(std::uint64_t p, int d) {
  std::vector<UniPolyFp> out;
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::vector<std::uint64_t> c(d + 1, 0);
    std::uint64_t v = t;
    for (int i = 0; i < d; ++i) {
      c[i] = v % p;
      v /= p;
    }
    c[d] = 1;
    out.emplace_back(p, std::move(c));
  }
  return out;
}

std::vector<std::vector<UniPolyFp>> irreducibles_up_to(std::uint64_t p, int dmax) {
  std::vector<std::vector<UniPolyFp>> irr(dmax + 1);
  for (int d = 1; d <= dmax; ++d) {
    for (const UniPolyFp& f : monic_of_degree(p, d)) {
      bool reducible = false;
      for (int e = 1; !reducible && 2 * e <= d; ++e)
        for (const UniPolyFp& g : irr[e])
          if (f.divmod(g).second.is_zero()) {
            reducible = true;
            break;
          }
      if (!reducible) irr[d].push_back(f);
    }
  }
  return irr;
}

std::vector<int> pattern_by_trial_division(UniPolyFp f,
                                           const std::vector<std::vector<UniPolyFp>>& irr) {
  std::vector<int> parts;
  f = f.make_monic();
  for (int d = 1; d < static_cast<int>(irr.size()) && f.degree() > 0; ++d) {
    for (const UniPolyFp& g : irr[d]) {
      while (f.degree() >= d && f.divmod(g).second.is_zero()) {
        parts.push_back(d);
        f = f.divide_exact(g);
      }
    }
  }
  if (f.degree() > 0) parts.push_back(f.degree());
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace

TEST_CASE("primality helper") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(9));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime(7919));
}

TEST_CASE("degree pattern anchors") {
  auto split = degree_pattern_mod_p(zp({1, 0, 1}), 5);
  REQUIRE(split.has_value());
  CHECK(split->parts == std::vector<int>{1, 1});
  CHECK(split->field_order == 5);

  auto inert = degree_pattern_mod_p(zp({1, 0, 1}), 3);
  REQUIRE(inert.has_value());
  CHECK(inert->parts == std::vector<int>{2});

  CHECK_FALSE(degree_pattern_mod_p(zp({0, 0, 1}), 3).has_value());   // x^2
  CHECK_FALSE(degree_pattern_mod_p(zp({1, 2, 1}), 2).has_value());   // (x+1)^2 mod 2
  CHECK_FALSE(degree_pattern_mod_p(zp({1, 1, 6}), 3).has_value());   // leading coeff drops
  CHECK_THROWS_AS(degree_pattern_mod_p(zp({1, 0, 1}), 4), std::domain_error);
  CHECK_THROWS_AS(degree_pattern_mod_p(zp({5}), 3), std::domain_error);
}

TEST_CASE("distinct degree factorization agrees with trial division") {
  for (std::uint64_t p : {2ull, 3ull}) {
    auto irr = irreducibles_up_to(p, 4);
    for (int d = 1; d <= 4; ++d) {
      for (const UniPolyFp& f : monic_of_degree(p, d)) {
        std::vector<Int> zc;
        for (int i = 0; i <= f.degree(); ++i) zc.emplace_back(static_cast<long>(f.coeff(i)));
        UniPolyZ fz(zc);
        auto got = degree_pattern_mod_p(fz, p);
        if (!f.squarefree()) {
          CHECK_FALSE(got.has_value());
          continue;
        }
        REQUIRE(got.has_value());
        CHECK(got->parts == pattern_by_trial_division(f, irr));
      }
    }
  }
}

TEST_CASE("certificate requirements scale with the degree") {
  // quadratic: transitivity alone
  auto q2 = certify_sn(zp({17, 6, 1}), 100);
  CHECK(q2.sn);
  REQUIRE(q2.certificate.transitive.has_value());
  CHECK(q2.certificate.transitive->field_order == 5);
  CHECK_FALSE(q2.certificate.transposition.has_value());

  // cubic with cyclic group: transposition pattern never appears
  auto cyc = certify_sn(zp({-1, -3, 0, 1}), 10000);
  CHECK_FALSE(cyc.sn);
  CHECK(cyc.certificate.transitive.has_value());
  CHECK_FALSE(cyc.certificate.transposition.has_value());

  // cubic with full group
  auto s3 = certify_sn(zp({-1, -1, 0, 1}), 100);
  CHECK(s3.sn);
  CHECK(s3.certificate.transposition.has_value());

  // quartic needs the middle prime cycle too
  auto s4 = certify_sn(zp({-1, -1, 0, 0, 1}), 1000);
  CHECK(s4.sn);
  REQUIRE(s4.certificate.prime_cycle.has_value());
  CHECK(s4.certificate.prime_cycle_length == 3);

  // linear: trivially the full group, no witnesses to find
  auto lin = certify_sn(zp({7, 1}), 2);
  CHECK(lin.sn);
  CHECK_FALSE(lin.certificate.transitive.has_value());

  CHECK_THROWS_AS(certify_sn(zp({1, 2, 1}), 100), std::domain_error);
  CHECK_THROWS_AS(certify_sn(zp({3}), 100), std::domain_error);
}

TEST_CASE("certificates are shape-checked") {
  SnCertificate bad;
  bad.degree = 3;
  bad.transitive = DegreePattern{5, {1, 2}};  // not a 3-cycle
  CHECK_THROWS_AS(bad.validate_shapes(), std::logic_error);

  SnCertificate bad2;
  bad2.degree = 4;
  bad2.prime_cycle = DegreePattern{7, {1, 3}};
  bad2.prime_cycle_length = 2;  // 2 is prime but not in (n/2, n)
  CHECK_THROWS_AS(bad2.validate_shapes(), std::logic_error);

  SnCertificate ok;
  ok.degree = 4;
  ok.transitive = DegreePattern{5, {4}};
  ok.transposition = DegreePattern{7, {1, 1, 2}};
  ok.prime_cycle = DegreePattern{11, {1, 3}};
  ok.prime_cycle_length = 3;
  CHECK_NOTHROW(ok.validate_shapes());
  CHECK(ok.complete());
}

TEST_CASE("soundness spot check: certified cubics have non-square discriminants") {
  Rng rng(2024);
  int certified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    long a = rng.next_in(-8, 8), b = rng.next_in(-8, 8), c = rng.next_in(-8, 8);
    UniPolyZ f = zp({c, b, a, 1});
    if (!squarefree_z(f)) continue;
    auto oc = certify_sn(f, 500);
    if (!oc.sn) continue;
    ++certified;
    // disc(x^3+ax^2+bx+c) must not be a perfect square when the group is S3
    Int disc = Int(18) * a * b * c - Int(4) * a * a * a * c + Int(a) * a * b * b -
               Int(4) * b * b * b - Int(27) * c * c;
    CHECK(disc != 0);
    if (disc > 0) {
      Int root = sqrt(disc);
      CHECK(root * root != disc);
    }
  }
  CHECK(certified > 100);  // the bound shouldn't be so tight that nothing certifies
}

TEST_CASE("extension field arithmetic") {
  FqCtx f4 = FqCtx::make(2, 2);
  CHECK(f4.order == 4);
  CHECK(f4.modulus == std::vector<std::uint64_t>{1, 1, 1});
  FqCtx::Elem x{0, 1};
  CHECK(f4.mul(x, x) == FqCtx::Elem{1, 1});
  CHECK(f4.inv(x) == FqCtx::Elem{1, 1});
  CHECK(f4.add(x, x) == f4.zero());

  FqCtx f9 = FqCtx::make(3, 2);
  CHECK(f9.order == 9);
  // every nonzero element times its inverse is one
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 3; ++b) {
      FqCtx::Elem e{a, b};
      if (f9.is_zero(e)) continue;
      CHECK(f9.mul(e, f9.inv(e)) == f9.one());
    }

  CHECK_THROWS_AS(FqCtx::make(4, 2), std::domain_error);
  CHECK_THROWS_AS(f4.inv(f4.zero()), std::domain_error);
}

TEST_CASE("extension field polynomials match the prime field at degree one") {
  for (std::uint64_t p : {2ull, 5ull}) {
    FqCtx f = FqCtx::make(p, 1);
    Rng rng(p * 31);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Int> zc;
      for (int i = 0; i < 3; ++i) zc.emplace_back(rng.next_in(0, static_cast<long>(p) - 1));
      zc.emplace_back(1);
      UniPolyZ fz(zc);
      auto ref = degree_pattern_mod_p(fz, p);
      std::vector<FqCtx::Elem> coeffs;
      for (int i = 0; i <= 3; ++i)
        coeffs.push_back(f.from_uint(mpz_class(fz.coeff(i)).get_ui()));
      FqPoly fq(f, coeffs);
      if (!ref) {
        CHECK_FALSE(fq_squarefree(fq));
      } else {
        REQUIRE(fq_squarefree(fq));
        CHECK(fq_degree_pattern(fq) == ref->parts);
      }
    }
  }
}

TEST_CASE("an irreducible quadratic exists over every sampled field") {
  // x^2 + x + 1 over F_2; over F_4 it splits, so pick the context's own count:
  // the number of monic irreducible quadratics over F_q is q(q-1)/2 > 0
  for (int k = 1; k <= 4; ++k) {
    FqCtx f = FqCtx::make(2, k);
    FqPoly x = fq_x(f);
    // brute scan for one irreducible quadratic: no roots in F_{2^k}
    bool found = false;
    std::uint64_t q = f.order;
    for (std::uint64_t c0 = 0; c0 < q && !found; ++c0)
      for (std::uint64_t c1 = 0; c1 < q && !found; ++c1) {
        // decode c as field elements via repeated division
        auto dec = [&](std::uint64_t v) {
          FqCtx::Elem e(f.k, 0);
          for (int i = 0; i < f.k; ++i) {
            e[i] = v % f.p;
            v /= f.p;
          }
          return e;
        };
        FqPoly cand(f, {dec(c0), dec(c1), f.one()});
        if (fq_squarefree(cand) && fq_degree_pattern(cand) == std::vector<int>{2}) found = true;
      }
    CHECK(found);
  }
}

TEST_CASE("specialization draws distinct values and a squarefree polynomial") {
  ZHat z = zhat(triangle_matroid(), ZhatStrategy::StateSum);
  auto sp = specialize_for_verification(z, 0);
  REQUIRE(sp.has_value());
  CHECK(sp->assignment.size() == 3);
  std::vector<long> sorted = sp->assignment;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  for (long v : sp->assignment) {
    CHECK(v >= 1);
    CHECK(v <= 30);
  }
  CHECK(squarefree_z(sp->f));
  CHECK(sp->f.degree() == 2);
  CHECK(sp->f.is_monic());

  auto again = specialize_for_verification(z, 0);
  CHECK(again->assignment == sp->assignment);
  auto other = specialize_for_verification(z, 1);
  CHECK(other.has_value());  // different seed still succeeds
}

TEST_CASE("main verification statuses") {
  auto sn = verify_theorem_main(triangle_matroid(), 0, 10000);
  CHECK(sn.status == "Sn");
  CHECK(sn.rank == 2);
  CHECK(sn.n == 3);
  CHECK(sn.irreducible_witness_prime.has_value());
  REQUIRE(sn.certificate.has_value());
  CHECK_NOTHROW(sn.certificate->validate_shapes());

  CHECK(verify_theorem_main(Matroid::uniform(2, 2), 0, 100).status == "NotConnected");
  CHECK(verify_theorem_main(Matroid::graphic(1, {{0, 0}}), 0, 100).status == "NotConnected");
  CHECK(verify_theorem_main(Matroid::graphic(0, {}), 0, 100).status == "NotConnected");

  auto coloop = verify_theorem_main(Matroid::uniform(1, 1), 0, 100);
  CHECK(coloop.status == "Sn");
  CHECK(coloop.rank == 1);
  CHECK_FALSE(coloop.irreducible_witness_prime.has_value());

  // tiny prime bound cannot certify a quadratic
  auto weak = verify_theorem_main(triangle_matroid(), 0, 2);
  CHECK(weak.status == "Inconclusive");
  CHECK(weak.inconclusive_bound == 2);
}

TEST_CASE("positive characteristic verification across small primes") {
  Matroid c3 = triangle_matroid();
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    CAPTURE(p);
    auto rep = verify_theorem_mod_p(c3, p, 0, 512);
    CHECK(rep.status == "Sn");
    CHECK(rep.characteristic == p);
    CHECK(rep.samples_used.has_value());
    REQUIRE(rep.certificate.has_value());
    CHECK_NOTHROW(rep.certificate->validate_shapes());
  }
  // the characteristic-2 witness needs a proper extension field
  auto r2 = verify_theorem_mod_p(c3, 2, 0, 512);
  CHECK(*r2.irreducible_witness_prime > 2);

  CHECK_THROWS_AS(verify_theorem_mod_p(c3, 4, 0, 16), std::domain_error);
  CHECK_THROWS_AS(verify_theorem_mod_p(Matroid::graphic(1, {{0, 0}}), 2, 0, 16),
                  std::domain_error);
  CHECK(verify_theorem_mod_p(Matroid::uniform(2, 2), 2, 0, 16).status == "NotConnected");
}

TEST_CASE("bivariate specialization verification") {
  Matroid c3 = triangle_matroid();
  auto rep = verify_conjecture_bivariate(c3, 2, 0, 10000);
  CHECK(rep.status == "Sn");
  CHECK(rep.y0_used == 2);
  CHECK(rep.rank == 2);

  auto neg = verify_conjecture_bivariate(c3, -7, 0, 10000);
  CHECK(neg.status == "Sn");
  CHECK(neg.y0_used == -7);

  CHECK_THROWS_AS(verify_conjecture_bivariate(c3, 1, 0, 100), std::domain_error);
  CHECK(verify_conjecture_bivariate(Matroid::uniform(2, 2), 2, 0, 100).status ==
        "NotConnected");
}

TEST_CASE("jacobian independence") {
  auto rep = jacobian_independence_check(triangle_matroid(), 5, 0);
  CHECK(rep.status == "Independent");
  CHECK(rep.rank == 2);
  CHECK(rep.points.size() == 5);
  CHECK(rep.ranks.size() == 5);
  for (int r : rep.ranks) CHECK(r == 2);

  auto u13 = jacobian_independence_check(Matroid::uniform(1, 3), 3, 0);
  CHECK(u13.status == "Independent");
  for (int r : u13.ranks) CHECK(r == 1);

  CHECK(jacobian_independence_check(Matroid::uniform(2, 2), 2, 0).status == "NotConnected");
  CHECK_THROWS_AS(jacobian_independence_check(triangle_matroid(), 0, 0), std::domain_error);
}

TEST_CASE("reports are deterministic") {
  Matroid c3 = triangle_matroid();
  auto a = verify_theorem_main(c3, 0, 10000);
  auto b = verify_theorem_main(c3, 0, 10000);
  CHECK(a.assignment == b.assignment);
  CHECK(a.status == b.status);
  CHECK(a.irreducible_witness_prime == b.irreducible_witness_prime);

  auto p1 = verify_theorem_mod_p(c3, 3, 7, 512);
  auto p2 = verify_theorem_mod_p(c3, 3, 7, 512);
  CHECK(p1.samples_used == p2.samples_used);

  auto j1 = jacobian_independence_check(c3, 3, 5);
  auto j2 = jacobian_independence_check(c3, 3, 5);
  CHECK(j1.points == j2.points);
}
