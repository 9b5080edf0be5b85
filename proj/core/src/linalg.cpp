// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/linalg.hpp"

#include <cstddef>

#include "msgame/errors.hpp"

namespace msgame {

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kConfigError, "dot: dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat Hyperplane::eval(const Vec& x) const {
  return dot(normal, x) - offset;
}

Hyperplane make_hyperplane(Vec normal, Rat offset) {
  for (const Rat& c : normal) {
    if (c != 0) {
      Rat lead = c;
      for (Rat& v : normal) v /= lead;
      offset /= lead;
      return Hyperplane{std::move(normal), std::move(offset)};
    }
  }
  throw Error(ErrorKind::kConfigError, "hyperplane normal must be nonzero");
}

AffineDiagonalMap AffineDiagonalMap::identity(std::size_t n) {
  return AffineDiagonalMap{Vec(n, Rat(1)), Vec(n, Rat(0))};
}

bool AffineDiagonalMap::is_identity() const {
  for (const Rat& d : diag) {
    if (d != 1) return false;
  }
  for (const Rat& s : shift) {
    if (s != 0) return false;
  }
  return true;
}

Vec AffineDiagonalMap::apply(const Vec& x) const {
  if (x.size() != diag.size()) {
    throw Error(ErrorKind::kConfigError, "affine map: dimension mismatch");
  }
  Vec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = diag[i] * x[i] + shift[i];
  return y;
}

Vec AffineDiagonalMap::apply_inverse(const Vec& y) const {
  if (y.size() != diag.size()) {
    throw Error(ErrorKind::kConfigError, "affine map: dimension mismatch");
  }
  Vec x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = (y[i] - shift[i]) / diag[i];
  return x;
}

Rat AffineDiagonalMap::jacobian() const {
  Rat j(1);
  for (const Rat& d : diag) j *= abs(d);
  return j;
}

bool AffineDiagonalMap::has_dyadic_diag() const {
  for (const Rat& d : diag) {
    if (!is_dyadic(d)) return false;
  }
  return true;
}

std::optional<Hyperplane> affine_hull(const std::vector<Vec>& points) {
  if (points.empty()) {
    throw Error(ErrorKind::kConfigError, "affine_hull of empty point set");
  }
  const std::size_t n = points[0].size();
  if (n == 0) throw Error(ErrorKind::kConfigError, "affine_hull in dimension 0");
  for (const Vec& p : points) {
    if (p.size() != n) throw Error(ErrorKind::kConfigError, "affine_hull: mixed dimensions");
  }

  // Difference matrix relative to the first point, reduced to RREF with the
  // first usable row as pivot (deterministic; exact arithmetic needs no
  // pivoting heuristics).
  std::vector<Vec> m;
  m.reserve(points.size() - 1);
  for (std::size_t j = 1; j < points.size(); ++j) {
    Vec row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = points[j][i] - points[0][i];
    m.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < n && next_row < m.size(); ++col) {
    std::size_t sel = next_row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[next_row], m[sel]);
    Rat inv = m[next_row][col];
    for (std::size_t i = col; i < n; ++i) m[next_row][i] /= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == next_row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t i = col; i < n; ++i) m[r][i] -= f * m[next_row][i];
    }
    pivot_col.push_back(col);
    ++next_row;
  }

  const std::size_t rank = pivot_col.size();
  if (rank == n) return std::nullopt;

  // Null-space direction for the first free column.
  std::size_t free_col = 0;
  {
    std::size_t k = 0;
    while (k < pivot_col.size() && pivot_col[k] == free_col) {
      ++free_col;
      ++k;
    }
  }
  Vec normal(n, Rat(0));
  normal[free_col] = 1;
  for (std::size_t k = 0; k < rank; ++k) {
    normal[pivot_col[k]] = -m[k][free_col];
  }
  Rat offset = dot(normal, points[0]);
  return make_hyperplane(std::move(normal), std::move(offset));
}

Hyperplane affine_hull_or_throw(const std::vector<Vec>& points) {
  auto h = affine_hull(points);
  if (!h) {
    throw Error(ErrorKind::kFullDimensional,
                "point set spans the whole space; no separating hyperplane");
  }
  return *h;
}

}  // namespace msgame
