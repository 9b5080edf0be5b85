// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_BAD_HPP
#define MSGAME_BAD_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "msgame/game.hpp"
#include "msgame/linalg.hpp"
#include "msgame/weights.hpp"

namespace msgame {

// Derived constants of the rational-avoidance strategy for the weighted game
// with target map f (diagonal affine, dyadic diagonal).
struct BadParams {
  Weights w;
  AffineDiagonalMap f;
  Rat a;
  Rat b;
  Rat t1;
  Rat margin;
  Rat t0;       // least safe starting time
  Rat c_prime;  // certified avoidance coefficient
};

// Computes t0 and c_prime.
//  - BadAliceStep: a off-grid or a*(1+r_i) <= 1 for some i;
//  - BadInitialTime: t1 < t0;
//  - NonDyadic: f's diagonal is not dyadic;
//  - OffLattice: b or t1 off-grid.
BadParams derive_params(const Weights& w, const AffineDiagonalMap& f, const Rat& a,
                        const Rat& b, const Rat& t1, const Rat& margin);

// Lowest-terms rational vector p/q.
struct DangerousRational {
  std::vector<Int> p;
  Int q;

  Vec point() const;  // (p_1/q, ..., p_n/q)
  bool operator==(const DangerousRational& other) const = default;
};

// All lowest-terms p/q with q_lo <= q <= q_hi whose image f(p/q) comes within
// coordinatewise reach c'/q^(1+r_i) of the closed box (strict inequality in
// every coordinate, distances measured to the box's intervals).  Ascending in
// q, then lexicographic in p.
std::vector<DangerousRational> dangerous_rationals(const AxisBox& box, const Int& q_lo,
                                                   const Int& q_hi, const Weights& w,
                                                   const AffineDiagonalMap& f,
                                                   const Rat& c_prime);

// Hyperplane through the images f(p/q); nullopt for an empty list.  Raises
// FullDimensional if the images span the whole space, which cannot happen
// when the small-volume precondition held for the searched box.
std::optional<Hyperplane> avoidance_hyperplane(const std::vector<DangerousRational>& dangers,
                                               const AffineDiagonalMap& f);

// Everything the strategy asserted about one responder move.
struct RoundCertificate {
  int round = 0;
  Int q_lo = 1;  // inclusive; empty range iff q_lo > q_hi
  Int q_hi = 0;
  std::vector<DangerousRational> dangers;
  std::optional<Hyperplane> hyperplane;
  GameBox reply;
  bool verified = false;
};

// One fully checked responder move: danger search in this round's q-range,
// avoidance via the farthest allowed corner from the danger hyperplane, and
// an exact re-verification of the reply.  `k` counts rounds on the clock for
// which sp was derived.  Raises CertificateFailure when an invariant that the
// derivation guarantees fails to hold.
RoundCertificate alice_bad_move(const GameBox& box, int k, const BadParams& sp,
                                const Session& session);

// The responder strategy.  If the session starts earlier than t0 it plays
// centered moves until the boxes are deep enough, then re-derives constants
// for the effective starting time and plays the avoidance strategy.
class BadStrategy : public Strategy {
 public:
  BadStrategy(Weights w, AffineDiagonalMap f, Rat a, Rat margin);

  std::string name() const override { return "bad"; }
  void start(const Session& session, const GameBox& opening) override;
  Reply reply(const GameBox& opponent, int round) override;

  const std::optional<BadParams>& params() const { return params_; }
  const std::vector<RoundCertificate>& certificates() const { return certs_; }
  // First round that plays the avoidance strategy (1 unless waiting).
  int active_from() const { return active_from_; }

 private:
  Weights w_;
  AffineDiagonalMap f_;
  Rat a_;
  Rat margin_;
  const Session* session_ = nullptr;
  std::optional<BadParams> params_;
  std::vector<RoundCertificate> certs_;
  int active_from_ = 1;
};

std::shared_ptr<BadStrategy> make_bad_strategy(const Weights& w, const AffineDiagonalMap& f,
                                               const Rat& a, const Rat& margin);

struct Violation {
  std::vector<Int> p;
  Int q;
};

// Exact check of the box against every rational with 1 <= q <= q_max, using
// the coordinates with positive weight: a violation is a p/q whose image is
// strictly within c'/q^(1+r_i) of the box in every such coordinate.  Returns
// the least violating q (lexicographically least p) or nullopt.  weights may
// contain zeros but must sum to 1; zero-weight coordinates are unconstrained
// (their reported p entry is the nearest integer to q * center).
std::optional<Violation> verify_box(const AxisBox& box, const std::vector<Rat>& weights,
                                    const Rat& c_prime, const Int& q_max,
                                    const AffineDiagonalMap& f);

struct BadnessScore {
  double estimate;   // min over q <= q_max of q * max_i |q x_i - p_i|^(1/r_i)
  Rat certified;     // dyadic c with verify_box(point, c, q_max) passing
};

// Weights may contain zeros (those coordinates are ignored); they must sum to 1.
BadnessScore badness_score(const Vec& x, const Int& q_max,
                           const std::vector<Rat>& weights, int bisect_steps = 40);

struct DirichletWitness {
  Int q;
  std::vector<Int> p;
  Vec dist;  // |q x_i - p_i|
};

// Least q in [q_min, n_bound) with |q x_i - p_i|^(1/r_i) < 1/q for all i at
// the nearest integers p_i; nullopt if none exists below the bound.
std::optional<DirichletWitness> dirichlet_witness(const Vec& x, const Int& q_min,
                                                  const Int& n_bound, const Weights& w);

}  // namespace msgame

#endif  // MSGAME_BAD_HPP
