#pragma once

// The multivariate Tutte polynomial (as a RankProfile), the bivariate Tutte
// polynomial, the closed form for circuits, and the symbolic identity suite.

#include <optional>
#include <string>
#include <vector>

#include "tgl/matroid.hpp"
#include "tgl/poly.hpp"

namespace tgl {

enum class ZhatStrategy { StateSum, DeletionContraction };

struct ZHat {
  RankProfile profile;
  std::string source_key;

  bool operator==(const ZHat&) const = default;
};

// Both strategies return the same value; the recursion picks the lowest-index
// live element, splits by loop/coloop/regular status, and memoizes subresults
// on the (deleted, contracted) mask pair.
ZHat zhat(const Matroid& m, ZhatStrategy strategy);

// Corank-nullity state sum over all edge subsets.
BiPolyZ tutte_bivariate(const Matroid& m);

// q^n + sigma_1 q^{n-1} + ... + sigma_{n-1} q + (sigma_n + sigma_{n+1}) on m
// variables, n = m-1; equals zhat of the m-element circuit.
ZHat circuit_closed_form(int m);

// The q-degree slices a_0 .. a_{rank-1} (the polynomial is monic of degree
// rank, so the top slice is omitted). Requires a loopless source.
std::vector<MultiPolyZ> coefficients_in_q(const ZHat& z);

// Rewrite a minor's polynomial in the labels of the parent ground set.
MultiPolyZ lift_variables(const MultiPolyZ& p, const std::vector<int>& lift);

struct IdentityReport {
  std::string input;
  bool strategies_agree = false;
  std::optional<bool> deletion_contraction;  // absent: no regular element
  std::optional<bool> loop_coloop;           // absent: no loop or coloop
  bool q_one_product = false;
  bool bivariate_substitution = false;
  std::optional<bool> direct_sum_product;    // absent: not built by direct_sum
  std::optional<bool> circuit_forms;         // absent: no circuit of size >= 2
  bool all_pass() const;
};

// Symbolic verification of every stated identity; ground sets up to 16.
IdentityReport check_identities(const Matroid& m);

}  // namespace tgl
