// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_STRATEGIES_HPP
#define MSGAME_STRATEGIES_HPP

#include <memory>
#include <string>
#include <vector>

#include "msgame/game.hpp"
#include "msgame/weights.hpp"

namespace msgame {

// Component index (1-based) scheduled at round k when m strategies are
// interleaved: i such that k = 2^(i-1) mod 2^i, or 0 when k is divisible by
// 2^m (those rounds are centered filler moves).
int interleave_component(long k, int m);

// Round-robin composition by dyadic residue classes.  Component i sees a
// virtual game with Alice step a, Bob step 2^i*(a+b) - a, and first time
// t1 + (2^(i-1) - 1)*(a+b); its j-th move happens at outer round
// 2^(i-1) + (j-1)*2^i, so absolute clocks agree with the outer game.
class InterleaveStrategy : public Strategy {
 public:
  explicit InterleaveStrategy(std::vector<std::shared_ptr<Strategy>> components);

  std::string name() const override { return "interleave"; }
  void start(const Session& session, const GameBox& opening) override;
  Reply reply(const GameBox& opponent, int round) override;

  int count() const { return static_cast<int>(comps_.size()); }
  const std::shared_ptr<Strategy>& component(int i) const;  // 1-based
  // Virtual-game parameters and session of component i (session valid after
  // its first scheduled round).
  GameParams virtual_params(int i) const;
  const Session& virtual_session(int i) const;
  // Outer rounds delegated to component i so far.
  const std::vector<int>& rounds_of(int i) const;

 private:
  std::vector<std::shared_ptr<Strategy>> comps_;
  const Session* session_ = nullptr;
  std::vector<Session> vsessions_;
  std::vector<bool> started_;
  std::vector<std::vector<int>> rounds_;
};

std::shared_ptr<InterleaveStrategy> interleave_strategies(
    std::vector<std::shared_ptr<Strategy>> components);

// One block of a coordinate partition: the strategy plays the restricted
// game on the listed coordinates (strictly increasing indices).
struct PartitionBlock {
  std::vector<std::size_t> indices;
  std::shared_ptr<Strategy> strategy;
};

// Product of strategies across a partition of the coordinates.  Opponent
// boxes are sliced per block, each block strategy answers in its restricted
// session, and the reply centers are concatenated.
class PartitionStrategy : public Strategy {
 public:
  explicit PartitionStrategy(std::vector<PartitionBlock> blocks);

  std::string name() const override { return "partition"; }
  void start(const Session& session, const GameBox& opening) override;
  Reply reply(const GameBox& opponent, int round) override;

  const std::vector<PartitionBlock>& blocks() const { return blocks_; }
  const Session& block_session(std::size_t b) const;

 private:
  std::vector<PartitionBlock> blocks_;
  const Session* session_ = nullptr;
  std::vector<Session> bsessions_;
};

// Two-factor product on dim coordinates: s1 plays the first split
// coordinates, s2 the remaining dim - split.
std::shared_ptr<PartitionStrategy> product_strategy(std::shared_ptr<Strategy> s1,
                                                    std::shared_ptr<Strategy> s2,
                                                    std::size_t split, std::size_t dim);

// Clock rescaling t -> t / kappa.  The inner strategy plays weights s whose
// exponents satisfy 1 + s_i = kappa * e_i for the outer profile e; boxes of
// the two games are then geometrically identical and only the clock differs.
// Raises LatticeClash at start when the rescaled steps or times leave the
// inner grid.
class ScaledClockStrategy : public Strategy {
 public:
  ScaledClockStrategy(std::shared_ptr<Strategy> inner, Weights inner_weights, Rat kappa);

  std::string name() const override { return "scaled-clock"; }
  void start(const Session& session, const GameBox& opening) override;
  Reply reply(const GameBox& opponent, int round) override;

  const std::shared_ptr<Strategy>& inner() const { return inner_; }
  const Session& inner_session() const;
  const Rat& kappa() const { return kappa_; }

 private:
  std::shared_ptr<Strategy> inner_;
  Weights inner_w_;
  Rat kappa_;
  const Session* session_ = nullptr;
  std::vector<Session> isession_;  // 0 or 1 elements
};

// A strategy wrapper together with the parameters of the game it plays.
struct TransportResult {
  std::shared_ptr<Strategy> strategy;
  GameParams outer_params;
  Rat shift;
};

// Port a unit-cube strategy with parameters (a, b, t1) to the axis box of
// the given sidelengths: the wrapper plays an (a + 2s, b - 2s)-game there,
// where s is the least lattice time such that concentric rescaling by s maps
// each domain into the other.  Raises StepExhausted when b - 2s would not
// exceed the lattice floor.
TransportResult transport_domain(std::shared_ptr<Strategy> inner, const Weights& w,
                                 const GameParams& inner_params,
                                 const std::vector<Rat>& outer_domain);

// Port a unit-cube strategy through an affine diagonal map: Bob boxes are
// pulled back through f, answered inside, and the answers pushed forward.
// s is the least lattice time with 2^(-e_i s) <= min(|d_i|, 1/|d_i|).
TransportResult transport_affine(std::shared_ptr<Strategy> inner, const Weights& w,
                                 const GameParams& inner_params,
                                 const AffineDiagonalMap& f);

// Step widths of the classical alpha-beta game as a lattice game for
// r = (1/n, ..., 1/n): (a, b) = (-log2 alpha, -log2 beta), t1 = n.
// Raises OffLattice when either is not a positive multiple of n.
GameParams classic_adapter(const Rat& alpha, const Rat& beta, std::size_t n = 1);

}  // namespace msgame

#endif  // MSGAME_STRATEGIES_HPP
