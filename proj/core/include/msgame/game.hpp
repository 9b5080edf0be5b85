// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_GAME_HPP
#define MSGAME_GAME_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "msgame/boxes.hpp"
#include "msgame/linalg.hpp"
#include "msgame/rational.hpp"
#include "msgame/weights.hpp"

namespace msgame {

// Box of the weighted family at time t: sidelengths domain_i * 2^(-e_i * t).
// Sides are stored explicitly so a box is self-describing and exact.
struct GameBox {
  Vec center;
  Rat t;
  Vec sides;

  std::size_t dim() const { return center.size(); }
  Rat halfside(std::size_t i) const { return sides[i] / 2; }
  AxisBox axis() const { return AxisBox::from_center(center, sides); }
  bool contains(const GameBox& inner) const { return axis().contains_box(inner.axis()); }
  bool operator==(const GameBox& other) const = default;
};

// Step widths of the alternating game: the responder deepens time by a, the
// chooser by b.  a_star is a floor below which b may never be squeezed.
struct GameParams {
  Rat a;
  Rat b;
  Rat t1;
  Rat a_star = Rat(0);
};

enum class Player { kInit, kAlice, kBob };
const char* player_name(Player p);
Player player_from_name(const std::string& name);

// Optional per-move annotations recorded into transcripts.
struct MoveNote {
  std::optional<long> danger_count;
  std::optional<Hyperplane> hyperplane;
  std::optional<Int> q_lo;
  std::optional<Int> q_hi;
  std::optional<bool> verified;

  bool empty() const {
    return !danger_count && !hyperplane && !q_lo && !q_hi && !verified;
  }
};

struct Move {
  int round = 0;
  Player player = Player::kInit;
  GameBox box;
  MoveNote note;
};

// Run description kept in transcript headers so a run can be re-validated
// (and re-played for deterministic strategies) from the file alone.
struct TranscriptMeta {
  std::vector<Rat> weights;
  GameParams params;
  Vec domain;
  int rounds = 0;
  std::uint64_t seed = 0;
  std::string alice;
  std::string bob;
  Vec f_diag;
  Vec f_shift;
  std::optional<Rat> margin;
};

struct Transcript {
  TranscriptMeta meta;
  std::vector<Move> moves;

  // The deepest box chosen by the responder; the game's outcome.
  const GameBox& outcome() const;
};

// A playing context: box family profile, parameters, and domain shape.
// Strict sessions (plain weighted games) demand times on the weight lattice;
// derived sessions (rescaled clocks, restrictions, transports) only demand
// exact dyadic sidelengths, i.e. grid-valid times.
class Session {
 public:
  static Session weighted(const Weights& w, const GameParams& params);
  static Session derived(Profile prof, std::optional<Weights> w, const GameParams& params,
                         Vec domain);

  const Profile& profile() const { return prof_; }
  const std::optional<Weights>& weights() const { return w_; }
  const GameParams& params() const { return params_; }
  const Vec& domain() const { return domain_; }
  bool strict() const { return strict_; }
  std::size_t dim() const { return prof_.dim(); }

  // Time of the chooser's k-th box (k >= 1) and the responder's k-th reply.
  Rat bob_time(int k) const;
  Rat alice_time(int k) const;

  // Box of this session's family at time t; raises OffLattice for times that
  // do not give exact dyadic sides.
  GameBox box_at(const Vec& center, const Rat& t) const;

  // True iff the box's sides match this session's family at its time.
  bool shape_ok(const GameBox& box) const;

 private:
  Session() = default;
  Profile prof_;
  std::optional<Weights> w_;
  GameParams params_;
  Vec domain_;
  bool strict_ = false;
};

// Standalone box constructor for plain weighted games on the unit cube:
// sides 2^(-(1+r_i) t).  t must be 0 or a positive multiple of the weight
// lattice; anything else raises OffLattice.
GameBox box_of(const Vec& center, const Rat& t, const Weights& w);

// Exact legality of one move: child.t = parent.t + step and child inside
// parent (closed boxes).
bool legal_move(const GameBox& parent, const GameBox& child, const Rat& step);

// Centers c for which the family box at time parent.t + step centered at c
// stays inside parent; a closed box around parent's center.
AxisBox allowed_centers(const GameBox& parent, const Session& session, const Rat& step);

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;

  // Chooser side: the opening box at time t1.  Default: centered at origin.
  virtual GameBox open(const Session& session);

  // Called once per run before any reply.
  virtual void start(const Session& session, const GameBox& opening);

  struct Reply {
    GameBox box;
    MoveNote note;
  };

  // Produce the next box from the opponent's last box.  round is 1-based.
  virtual Reply reply(const GameBox& opponent, int round) = 0;
};

// Referee loop: alternate alice/bob for `rounds` responder moves, validating
// every move exactly.  Raises IllegalMoveError naming the offender and round.
Transcript play(Strategy& alice, Strategy& bob, const Session& session, int rounds,
                TranscriptMeta meta = {});

// Re-validates a transcript's move chain against its header: step widths,
// nesting, and box shapes.  Returns the first offending move index, or
// nullopt if the transcript is a legal game.
std::optional<std::size_t> validate_moves(const Transcript& t);

// Session reconstruction from a transcript header (weighted games).
Session session_from_meta(const TranscriptMeta& meta);

}  // namespace msgame

#endif  // MSGAME_GAME_HPP
