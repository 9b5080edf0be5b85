// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_TERNARY_HPP
#define MSGAME_TERNARY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "msgame/rational.hpp"

namespace msgame {

// Schmidt's game on the space of absorbing ternary sequences: infinite words
// over {0,1,2} in which a 0 can only be followed by 0s, with the metric
// d(x, y) = 3^{-k} where k is the first index at which x and y disagree.
// Alice wins into the countable set of sequences containing a 0 even though
// that set has lower box-counting dimension than the whole space.

// A word is stored as an explicit finite prefix.  If the prefix contains a 0
// the absorbing rule pins every later digit to 0, so the word denotes a
// single point; otherwise the continuation is unspecified and the word only
// names a cylinder.  Constructors canonicalise by dropping digits after the
// first 0.
class TernaryWord {
 public:
  TernaryWord() = default;
  explicit TernaryWord(std::string prefix);

  static TernaryWord parse(const std::string& text) { return TernaryWord(text); }

  const std::string& prefix() const { return prefix_; }
  std::size_t length() const { return prefix_.size(); }

  // True when the explicit prefix contains a 0 (tail forced to zeros).
  bool pinned() const;
  // 1-based position of the first 0 digit; 0 when the prefix has none.
  std::size_t first_zero() const;

  // 1-based digit access.  Digits beyond the prefix are 0 for pinned words
  // and a ConfigError for unpinned ones.
  int digit(std::size_t i) const;
  // True when digits 1..upto are all available (pinned or within the prefix).
  bool known_through(std::size_t upto) const;

  // The word formed by digits 1..len (requires them to be known).
  TernaryWord truncated(std::size_t len) const;

  // Equality as points/sequences (requires both sides pinned, or a
  // disagreement inside the explicit prefixes).
  bool same_point(const TernaryWord& other) const;
  // 1-based index of the first disagreement; 0 when the sequences are equal.
  std::size_t first_disagreement(const TernaryWord& other) const;

 private:
  std::string prefix_;
};

// Exact metric value: 3^{-k} at the first disagreement, 0 for equal points.
Rat sym_distance(const TernaryWord& x, const TernaryWord& y);

// Closed ball in the sequence space.  Radii live in (0, 1] and every ball
// carries a level l, the unique integer with 3^{-(l+1)} < r <= 3^{-l};
// membership means agreement with the centre on the first l digits.
struct SymBall {
  TernaryWord center;
  Rat radius;
};

long sym_level(const Rat& radius);
bool sym_member(const SymBall& ball, const TernaryWord& w);

// Containment of one ball in another in the Schmidt sense:
// d(centres) + r_inner <= r_outer, evaluated exactly.
bool sym_contains(const SymBall& outer, const SymBall& inner);

// True when the ball's members form a single point: some digit among the
// centre's first `level` digits is 0.
bool sym_singleton(const SymBall& ball);

// Alice's reply to a ball (x, r) at level l: centre z = digits 1..l+1 of x
// continued by zeros, radius r/27.  The reply is contained in the input and
// its member set is the single point z.  A full-space ball (r = 1) gets a
// concentric shrink instead, to make the first real move well-defined.
SymBall sym_alice(const SymBall& ball);

// All absorbing words of length exactly k, lexicographic order.
std::vector<TernaryWord> sym_cover_enumerate(int k);
// Number of length-k cylinders meeting the space: 2^{k+1} - 1 exactly.
Int sym_cover_count(int k);

struct SymRound {
  SymBall alice;
  SymBall bob;
  bool singleton = false;  // Alice's ball this round pins a single point
};

struct SymReport {
  SymBall opening;
  std::vector<SymRound> rounds;
  TernaryWord outcome;      // the point every ball eventually pins
  bool outcome_has_zero = false;  // a 0 occurs within the final certified level
};

// Bob adversary: maps Alice's ball and the round number to Bob's next ball.
using SymBob = std::function<SymBall(const SymBall& alice, int round)>;

// Referee loop: validates every Bob ball against the Schmidt containment
// rule (IllegalMove otherwise), lets Alice reply, and records per-round
// singleton checks.  `rounds` counts Alice moves.
SymReport sym_play_with(const SymBall& opening, const SymBob& bob, int rounds);

// Seeded game: random absorbing opening of radius 1/3, Bob re-centres on the
// forced point and shrinks by 3^{-beta} each round (beta >= 0).
SymReport sym_play(std::uint64_t seed, int rounds, int beta = 2);

}  // namespace msgame

#endif  // MSGAME_TERNARY_HPP
