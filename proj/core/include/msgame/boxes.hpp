// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_BOXES_HPP
#define MSGAME_BOXES_HPP

#include <utility>
#include <vector>

#include "msgame/linalg.hpp"
#include "msgame/rational.hpp"

namespace msgame {

// Closed axis-parallel box [lo_1, hi_1] x ... x [lo_n, hi_n].
struct AxisBox {
  Vec lo;
  Vec hi;

  static AxisBox from_center(const Vec& center, const Vec& sides);
  std::size_t dim() const { return lo.size(); }
  Vec center() const;
  Rat side(std::size_t i) const { return hi[i] - lo[i]; }
  Rat volume() const;
  bool contains_point(const Vec& x) const;
  bool contains_box(const AxisBox& inner) const;
  // Closest point of the box to x (coordinatewise clamp).
  Vec clamp(const Vec& x) const;
};

// Distance from value v to the closed interval [lo, hi]; zero inside.
Rat interval_dist(const Rat& lo, const Rat& hi, const Rat& v);

// Closed sup-norm ball.
struct SupBall {
  Vec center;
  Rat radius;
};

// First flag: the strong nesting inequality d(c2, c1) + r2 <= r1 in the sup
// metric.  Second flag: plain set containment of the closed balls.  The
// strong form implies containment; the converse can fail only at equality
// edges, which exact arithmetic resolves deterministically.
std::pair<bool, bool> schmidt_contains(const SupBall& outer, const SupBall& inner);

struct MaxAbsResult {
  Rat value;
  Vec argmax;
};

// Maximum of |h.eval(x)| over a closed box, attained at a corner.  Corner
// choice is deterministic: coordinates with zero normal take the low corner,
// and on ties between the two extremal corners the one aligned with the
// normal's signs wins.
MaxAbsResult max_abs_affine_over_box(const Hyperplane& h, const AxisBox& box);

}  // namespace msgame

#endif  // MSGAME_BOXES_HPP
