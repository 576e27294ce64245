#pragma once

// Matroids with exact rank oracles. Five representations share one interface:
// graphic (edge sets of a multigraph), uniform, linear over the rationals
// (integer matrices, columns = elements), explicit basis lists, and minors of
// any of these. Direct sums compose two matroids on a relabeled ground set.
// Ground sets are dense [0, n) with n <= 24 so subsets are single-word masks.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tgl/base.hpp"
#include "tgl/poly.hpp"

namespace tgl {

enum class ElementStatus { Loop, Coloop, Regular };

class Matroid {
 public:
  // Vertex pairs may repeat and may be self-loops; a self-loop is a matroid loop.
  static Matroid graphic(int vertex_count, std::vector<std::pair<int, int>> edges);
  static Matroid uniform(int rank, int size);
  static Matroid linear(std::vector<std::vector<Int>> matrix);  // columns = elements
  static Matroid explicit_bases(int size, std::vector<Mask> bases);
  static Matroid direct_sum(const Matroid& a, const Matroid& b);

  // Minor view on the dense ground set E \ (del ∪ con); nested minors flatten
  // onto the original base matroid.
  Matroid minor(Mask del, Mask con) const;
  Matroid restriction(Mask keep) const;  // minor(E \ keep, ∅)

  int ground_size() const;
  int rank(Mask a) const;
  int rank() const { return rank(all_elements(ground_size())); }

  ElementStatus element_status(int e) const;
  bool is_loopless() const;

  // No proper nonempty A with r(A) + r(E\A) = r(E), and positive rank.
  // Rank-0 and single-loop matroids are not connected.
  bool is_connected() const;

  // Minimal dependent sets, sorted by (size, mask value).
  std::vector<Mask> circuits() const;

  // r(E) - r(A) for every subset, indexed by mask.
  std::vector<std::uint8_t> corank_table() const;

  // Stable text form; equal keys imply equal matroids (not conversely).
  std::string canonical_key() const;

  // The two summands when this matroid was built by direct_sum.
  std::optional<std::pair<Matroid, Matroid>> sum_parts() const;

  struct Data;  // opaque

 private:
  std::shared_ptr<const Data> data_;
  explicit Matroid(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
};

}  // namespace tgl
