#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ckp/rational.hpp"

namespace ckp {

using Vector = std::vector<Rational>;

// Incrementally maintains an echelon basis of {p_k - p_0}. Points are fed one
// at a time so callers can stream candidate vertices without materializing
// the difference matrix.
class AffineHullBuilder {
 public:
  explicit AffineHullBuilder(std::size_t dimension) : dimension_(dimension) {}

  void Add(std::span<const Rational> point);

  bool empty() const { return !origin_.has_value(); }
  // Dimension of the affine hull of the points added so far; -1 when empty.
  long dimension() const {
    return empty() ? -1 : static_cast<long>(basis_.size());
  }

 private:
  std::size_t dimension_;
  std::optional<Vector> origin_;
  // Rows in echelon form; pivots_[k] is the leading column of basis_[k], and
  // each row is scaled so that entry is 1.
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

// Dimension of the affine hull of `points` (rank of {p_k - p_0}).
// Throws kValidation on an empty sequence or mismatched lengths.
std::size_t AffineRank(std::span<const Vector> points);

}  // namespace ckp
