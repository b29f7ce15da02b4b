#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sgt/graph.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// Net signed traversal count per edge of a closed walk; an element of
/// H1(G, Z) viewed inside Z^E. Stored orientation u -> v counts +1.
class CycleVector {
 public:
  CycleVector() = default;
  explicit CycleVector(std::size_t edge_count) : coeffs_(edge_count, 0) {}
  explicit CycleVector(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const { return coeffs_.size(); }
  std::int64_t operator[](EdgeId e) const { return coeffs_[e]; }
  std::int64_t& operator[](EdgeId e) { return coeffs_[e]; }
  std::span<const std::int64_t> coefficients() const { return coeffs_; }
  bool is_zero() const;

  CycleVector& operator+=(const CycleVector& other);
  CycleVector& operator*=(std::int64_t factor);
  friend CycleVector operator+(CycleVector a, const CycleVector& b) { return a += b; }
  friend CycleVector operator-(CycleVector a);
  friend bool operator==(const CycleVector&, const CycleVector&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Integer vector of a closed walk. Throws GraphError if the walk is not
/// closed or a step does not leave the current vertex.
CycleVector cycle_vector(const MetricGraph& g, const BasedLoop& loop);

/// At every vertex, signed incoming and outgoing traversals balance.
bool boundary_zero(const MetricGraph& g, const CycleVector& c);

/// Rank of a family of cycle vectors over Q with its echelon witness.
struct RankCertificate {
  std::vector<CycleVector> vectors;
  std::size_t rank = 0;
  std::vector<EdgeId> pivots;  // one pivot column per unit of rank, increasing
};

/// Fraction-free Gaussian elimination; pivots are the first nonzero column
/// in the remaining rows, taking the earliest row. Throws
/// std::invalid_argument on mismatched lengths.
RankCertificate rank(std::span<const CycleVector> vectors);

bool is_independent(std::span<const CycleVector> vectors);

/// Number of reduced words of length at most `radius` in the free group on
/// `generators` letters. Throws std::invalid_argument when generators == 0.
BigInt free_ball_size(unsigned generators, unsigned radius);

}  // namespace sgt
