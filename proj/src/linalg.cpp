#include "ckp/linalg.hpp"

#include <string>

#include "ckp/error.hpp"

namespace ckp {

void AffineHullBuilder::Add(std::span<const Rational> point) {
  if (point.size() != dimension_) {
    Fail(ErrorKind::kValidation, "point has length " + std::to_string(point.size()) +
                                     ", expected " + std::to_string(dimension_));
  }
  if (!origin_) {
    origin_.emplace(point.begin(), point.end());
    return;
  }
  if (basis_.size() == dimension_) return;

  Vector row(dimension_);
  for (std::size_t c = 0; c < dimension_; ++c) row[c] = point[c] - (*origin_)[c];

  // Reduce against the existing rows in pivot order.
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (row[p].is_zero()) continue;
    const Rational factor = row[p];
    for (std::size_t c = p; c < dimension_; ++c) {
      if (!basis_[k][c].is_zero()) row[c] -= factor * basis_[k][c];
    }
  }

  std::size_t pivot = 0;
  while (pivot < dimension_ && row[pivot].is_zero()) ++pivot;
  if (pivot == dimension_) return;

  const Rational scale = row[pivot];
  for (std::size_t c = pivot; c < dimension_; ++c) {
    if (!row[c].is_zero()) row[c] /= scale;
  }
  // Rows stay sorted by pivot column; a row is zero left of its pivot, so the
  // reduction above clears every existing pivot column in a single pass.
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < pivot) ++at;
  basis_.insert(basis_.begin() + static_cast<long>(at), std::move(row));
  pivots_.insert(pivots_.begin() + static_cast<long>(at), pivot);
}

std::size_t AffineRank(std::span<const Vector> points) {
  if (points.empty()) Fail(ErrorKind::kValidation, "no points");
  AffineHullBuilder hull(points.front().size());
  for (const Vector& p : points) hull.Add(p);
  return static_cast<std::size_t>(hull.dimension());
}

}  // namespace ckp
