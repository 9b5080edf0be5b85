// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_DIMENSION_HPP
#define MSGAME_DIMENSION_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "msgame/game.hpp"
#include "msgame/weights.hpp"

namespace msgame {

// Volume model of the box family: volumes decay like 2^(-delta * t), balls
// of comparable diameter have comparable measure up to C, and diameters
// decay like 2^(-sigma * t).
struct MeasureModel {
  Rat delta;
  Rat sigma;
  Rat C;
};

// For the weighted family: delta = n + 1, sigma = 1 + min r_i, C = 1.
MeasureModel measure_model(const Weights& w);

// Perfect grid tiling of parent by its step-deepened translates: per axis
// 2^(e_i * step) children, 2^(sum e_i * step) total.  Children are ordered
// lexicographically, last axis fastest.  Raises OffLattice when the per-axis
// counts are not integral.
std::vector<GameBox> pack_children(const GameBox& parent, const Rat& step,
                                   const Profile& prof);

// Leveled family of boxes: levels[0] holds the responder's first box, and
// each level-(j+1) box answers one tiling child of its level-j parent.
struct TreeLevels {
  GameBox opening;
  std::vector<std::vector<GameBox>> levels;
};

// Materializes `depth + 1` levels by replaying the strategy along every
// chooser line: the opening is the centered box at t1, and each level-j box
// is answered for every pack_children option at step b.  The strategy is
// restarted for each line, so it must derive its state from start()/reply().
TreeLevels build_strategy_tree(Strategy& alice, const Session& session, int depth);

// Structural report: positive volumes (TL0), pairwise interior disjointness
// within levels (TL1), every box nested in a parent one level up (TL2),
// every box refined by a child one level down (TL3), and strictly
// decreasing diameters following the sigma-rate of the level clock (STL).
struct TreeCheck {
  bool tl0 = true;
  bool tl1 = true;
  bool tl2 = true;
  bool tl3 = true;
  bool stl = true;
  std::vector<Rat> diameters;  // max side per level
  // First offense per condition: (level, box index) or (level, pair).
  std::optional<std::pair<int, std::pair<std::size_t, std::size_t>>> tl1_witness;
  std::optional<std::pair<int, std::size_t>> tl2_witness;
  std::optional<std::pair<int, std::size_t>> tl3_witness;

  bool ok() const { return tl0 && tl1 && tl2 && tl3 && stl; }
};

TreeCheck check_treelike(const TreeLevels& tree, const MeasureModel& model);

// Fraction of the opening volume captured by the root box.
Rat delta_root(const TreeLevels& tree);

// Minimal child-volume fraction at level k: min over level-k boxes B of
// vol(level-(k+1) boxes inside B) / vol(B).  Requires level k+1.
Rat delta_k(const TreeLevels& tree, int k);

// Finite-depth dimension lower bound at the deepest level: d_mu plus the sum
// of log2 of all child densities (opening transition included) divided by
// |log2| of the deepest diameter.
double urbanski_estimate(const TreeLevels& tree, double d_mu);

// The same evaluation at depth k for a constant density delta on the clock
// (t1, a, b): d_mu + (k+1) log2(delta) / (sigma (t1 + k(a+b) + a)).
// Exact rational arithmetic when delta is a power of two.
double urbanski_extrapolated(const Rat& delta, const Rat& sigma, const Rat& a, const Rat& b,
                             const Rat& t1, double d_mu, long k);

// Limit bound d_mu + log2(c) / (sigma (a + b)); exact rational arithmetic
// when c is a power of two.  Pre: 0 < c <= 1.
double wd_bound(const Rat& a, const Rat& b, const Rat& c, const Rat& sigma, double d_mu);

// Doubling-measure constants: m is the unique integer with
// alpha/6 < 3^(-m) <= alpha/2; c_small = K^(-m); c = c_small / K^2.
struct FedererConstants {
  Rat K;
  long m = 0;
  Rat c_small;
  Rat c;
};

FedererConstants federer_constants(const Rat& K, const Rat& alpha);

}  // namespace msgame

#endif  // MSGAME_DIMENSION_HPP
