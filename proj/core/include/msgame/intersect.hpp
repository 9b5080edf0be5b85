// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_INTERSECT_HPP
#define MSGAME_INTERSECT_HPP

#include <memory>
#include <string>
#include <vector>

#include "msgame/bad.hpp"
#include "msgame/strategies.hpp"
#include "msgame/weights.hpp"

namespace msgame {

// A nonempty set of coordinate indices (0-based, strictly increasing).
struct SubsetSpec {
  std::vector<std::size_t> indices;
};

// Weight vector of the restricted game on the coordinates of I, together
// with the clock factor kappa relating the two games: 1 + s_i = kappa * (1 + r_i).
struct EmbeddedWeights {
  Weights s;
  Rat kappa;
};

// For |I| = k and S = sum of the selected weights:
//   s_i = (1 + (k+1) r_i - S) / (k + S),   kappa = (k+1) / (k + S).
// The full set gives back r with kappa = 1; a singleton {i} gives s = (1)
// with kappa = 2 / (1 + r_i).
EmbeddedWeights embed_weights(const Weights& w, const SubsetSpec& spec);

// The kappa of embed_weights alone.
Rat reparam_factor(const Weights& w, const SubsetSpec& spec);

// An avoidance strategy on the coordinates of I, run on the rescaled clock,
// padded with centered moves on the remaining coordinates.  core is the
// underlying avoidance strategy (for its derived constants and
// certificates); verify_weights is its weight vector zero-extended to all n
// coordinates.
struct SubBad {
  std::shared_ptr<Strategy> strategy;
  std::shared_ptr<BadStrategy> core;
  std::vector<Rat> verify_weights;
  Rat kappa;
};

SubBad sub_bad_strategy(const Weights& w, const SubsetSpec& spec, const Rat& a,
                        const Rat& margin);

// One interleaved component and the data needed to check its outcome.
struct ComponentInfo {
  std::string label;
  std::vector<std::size_t> indices;
  std::vector<Rat> verify_weights;
  Rat kappa;
  std::shared_ptr<BadStrategy> core;
};

struct IntersectionPlan {
  std::shared_ptr<InterleaveStrategy> strategy;
  std::vector<ComponentInfo> components;
};

// Interleaves one avoidance component per subset, in the given order.  The
// full set plays the plain strategy for w; proper subsets play
// sub_bad_strategy.  A single outcome box then certifies membership for
// every component's badness set at once.
IntersectionPlan intersection_strategy(const Weights& w, const std::vector<SubsetSpec>& specs,
                                       const Rat& a, const Rat& margin);

// Number of moves the scheduler hands component i (1-based) of m within the
// first `rounds` outer rounds.
int component_moves(int i, int m, int rounds);

// Largest denominator certified by an avoidance strategy after it has made
// `moves` moves: 2^((moves - waited - 1) * (a + b)) on its own clock, or 0
// when no scanning round has happened yet.
Int coverage_qmax(const BadStrategy& core, int moves);

}  // namespace msgame

#endif  // MSGAME_INTERSECT_HPP
