// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/boxes.hpp"

#include "msgame/errors.hpp"

namespace msgame {

AxisBox AxisBox::from_center(const Vec& center, const Vec& sides) {
  if (center.size() != sides.size()) {
    throw Error(ErrorKind::kConfigError, "box: center/sides dimension mismatch");
  }
  AxisBox b;
  b.lo.resize(center.size());
  b.hi.resize(center.size());
  for (std::size_t i = 0; i < center.size(); ++i) {
    Rat half = sides[i] / 2;
    if (half < 0) throw Error(ErrorKind::kConfigError, "box: negative side length");
    b.lo[i] = center[i] - half;
    b.hi[i] = center[i] + half;
  }
  return b;
}

Vec AxisBox::center() const {
  Vec c(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) c[i] = (lo[i] + hi[i]) / 2;
  return c;
}

Rat AxisBox::volume() const {
  Rat v(1);
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
  return v;
}

bool AxisBox::contains_point(const Vec& x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  }
  return true;
}

bool AxisBox::contains_box(const AxisBox& inner) const {
  if (inner.lo.size() != lo.size()) return false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (inner.lo[i] < lo[i] || inner.hi[i] > hi[i]) return false;
  }
  return true;
}

Vec AxisBox::clamp(const Vec& x) const {
  Vec y(x);
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (y[i] < lo[i]) y[i] = lo[i];
    if (y[i] > hi[i]) y[i] = hi[i];
  }
  return y;
}

Rat interval_dist(const Rat& lo, const Rat& hi, const Rat& v) {
  if (v < lo) return lo - v;
  if (v > hi) return v - hi;
  return Rat(0);
}

std::pair<bool, bool> schmidt_contains(const SupBall& outer, const SupBall& inner) {
  if (outer.center.size() != inner.center.size()) {
    throw Error(ErrorKind::kConfigError, "schmidt_contains: dimension mismatch");
  }
  Rat d(0);
  for (std::size_t i = 0; i < outer.center.size(); ++i) {
    Rat di = abs(inner.center[i] - outer.center[i]);
    if (di > d) d = di;
  }
  bool strong = d + inner.radius <= outer.radius;
  bool subset = true;
  for (std::size_t i = 0; i < outer.center.size() && subset; ++i) {
    if (inner.center[i] - inner.radius < outer.center[i] - outer.radius ||
        inner.center[i] + inner.radius > outer.center[i] + outer.radius) {
      subset = false;
    }
  }
  return {strong, subset};
}

MaxAbsResult max_abs_affine_over_box(const Hyperplane& h, const AxisBox& box) {
  if (h.normal.size() != box.dim()) {
    throw Error(ErrorKind::kConfigError, "max_abs_affine_over_box: dimension mismatch");
  }
  Vec aligned(box.dim()), opposed(box.dim());
  for (std::size_t i = 0; i < box.dim(); ++i) {
    if (h.normal[i] > 0) {
      aligned[i] = box.hi[i];
      opposed[i] = box.lo[i];
    } else if (h.normal[i] < 0) {
      aligned[i] = box.lo[i];
      opposed[i] = box.hi[i];
    } else {
      aligned[i] = box.lo[i];
      opposed[i] = box.lo[i];
    }
  }
  Rat vmax = h.eval(aligned);  // maximum of the affine form
  Rat vmin = h.eval(opposed);  // minimum
  Rat amax = abs(vmax), amin = abs(vmin);
  if (amax >= amin) return {amax, std::move(aligned)};
  return {amin, std::move(opposed)};
}

}  // namespace msgame
