// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_LINALG_HPP
#define MSGAME_LINALG_HPP

#include <optional>
#include <vector>

#include "msgame/rational.hpp"

namespace msgame {

using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b);

// Hyperplane {x : normal . x = offset} with exact rational coefficients,
// normalized so the first nonzero normal entry equals +1.
struct Hyperplane {
  Vec normal;
  Rat offset;

  // Signed affine value normal . x - offset.
  Rat eval(const Vec& x) const;
};

// Normalizes in place; pre: normal has a nonzero entry.
Hyperplane make_hyperplane(Vec normal, Rat offset);

// x |-> diag_i * x_i + shift_i with nonzero diagonal entries.
struct AffineDiagonalMap {
  Vec diag;
  Vec shift;

  static AffineDiagonalMap identity(std::size_t n);
  std::size_t dim() const { return diag.size(); }
  bool is_identity() const;
  Vec apply(const Vec& x) const;
  Vec apply_inverse(const Vec& y) const;
  // Absolute value of the determinant.
  Rat jacobian() const;
  bool has_dyadic_diag() const;
};

// Affine hull of a nonempty point set in R^n.  If the points span an affine
// subspace of dimension <= n-1, returns a hyperplane containing all of them
// (deterministic choice: the null-space direction associated with the first
// free column of the exact row echelon form).  If they span R^n, returns
// nullopt: the caller decides whether that is an error.
std::optional<Hyperplane> affine_hull(const std::vector<Vec>& points);

// Same, but raises Error(kFullDimensional) when the set spans R^n.
Hyperplane affine_hull_or_throw(const std::vector<Vec>& points);

}  // namespace msgame

#endif  // MSGAME_LINALG_HPP
