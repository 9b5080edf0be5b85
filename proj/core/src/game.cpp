// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/game.hpp"

#include "msgame/errors.hpp"

namespace msgame {

const char* player_name(Player p) {
  switch (p) {
    case Player::kInit: return "init";
    case Player::kAlice: return "alice";
    case Player::kBob: return "bob";
  }
  return "unknown";
}

Player player_from_name(const std::string& name) {
  if (name == "init") return Player::kInit;
  if (name == "alice") return Player::kAlice;
  if (name == "bob") return Player::kBob;
  throw Error(ErrorKind::kParseError, "unknown player: '" + name + "'");
}

const GameBox& Transcript::outcome() const {
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    if (it->player == Player::kAlice) return it->box;
  }
  throw Error(ErrorKind::kConfigError, "transcript has no responder move; no outcome");
}

namespace {

void check_params(const GameParams& p) {
  if (p.a <= 0) throw Error(ErrorKind::kConfigError, "step a must be positive");
  if (p.a_star < 0) throw Error(ErrorKind::kConfigError, "a_star must be non-negative");
  if (p.b <= p.a_star) {
    throw Error(ErrorKind::kStepExhausted,
                "step b = " + rat_str(p.b) + " must exceed the floor " + rat_str(p.a_star));
  }
  if (p.t1 <= 0) throw Error(ErrorKind::kConfigError, "initial time t1 must be positive");
}

bool lattice_multiple(const Rat& t, const Int& lam) {
  return is_integer(t) && t.get_num() % lam == 0;
}

}  // namespace

Session Session::weighted(const Weights& w, const GameParams& params) {
  check_params(params);
  Int lam = w.lattice();
  for (const Rat* t : {&params.a, &params.b, &params.t1}) {
    if (!lattice_multiple(*t, lam)) {
      throw Error(ErrorKind::kOffLattice,
                  rat_str(*t) + " is not a positive multiple of the weight lattice " +
                      int_str(lam));
    }
  }
  Session s;
  s.prof_ = w.profile();
  s.w_ = w;
  s.params_ = params;
  s.domain_ = Vec(w.dim(), Rat(1));
  s.strict_ = true;
  return s;
}

Session Session::derived(Profile prof, std::optional<Weights> w, const GameParams& params,
                         Vec domain) {
  check_params(params);
  if (domain.empty()) domain = Vec(prof.dim(), Rat(1));
  if (domain.size() != prof.dim()) {
    throw Error(ErrorKind::kConfigError, "domain/profile dimension mismatch");
  }
  for (const Rat& s : domain) {
    if (s <= 0) throw Error(ErrorKind::kConfigError, "domain sides must be positive");
  }
  for (const Rat* t : {&params.a, &params.b, &params.t1}) {
    if (!prof.grid_valid(*t)) {
      throw Error(ErrorKind::kOffLattice,
                  rat_str(*t) + " is not grid-valid for the box family");
    }
  }
  if (w && w->profile().exps.size() != prof.dim()) {
    throw Error(ErrorKind::kConfigError, "weights/profile dimension mismatch");
  }
  Session s;
  s.prof_ = std::move(prof);
  s.w_ = std::move(w);
  s.params_ = params;
  s.domain_ = std::move(domain);
  s.strict_ = false;
  return s;
}

Rat Session::bob_time(int k) const {
  return params_.t1 + (params_.a + params_.b) * (k - 1);
}

Rat Session::alice_time(int k) const {
  return bob_time(k) + params_.a;
}

GameBox Session::box_at(const Vec& center, const Rat& t) const {
  if (center.size() != dim()) {
    throw Error(ErrorKind::kConfigError, "box center has wrong dimension");
  }
  if (!prof_.grid_valid(t)) {
    throw Error(ErrorKind::kOffLattice, "time " + rat_str(t) + " is not grid-valid");
  }
  GameBox b;
  b.center = center;
  b.t = t;
  b.sides.resize(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Rat e = prof_.exps[i] * t;
    b.sides[i] = domain_[i] * pow2(Int(-e.get_num()));
  }
  return b;
}

bool Session::shape_ok(const GameBox& box) const {
  if (box.dim() != dim() || box.sides.size() != dim()) return false;
  if (!prof_.grid_valid(box.t)) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    Rat e = prof_.exps[i] * box.t;
    if (box.sides[i] != domain_[i] * pow2(Int(-e.get_num()))) return false;
  }
  return true;
}

GameBox box_of(const Vec& center, const Rat& t, const Weights& w) {
  if (center.size() != w.dim()) {
    throw Error(ErrorKind::kConfigError, "box center has wrong dimension");
  }
  if (t < 0) throw Error(ErrorKind::kOffLattice, "negative time " + rat_str(t));
  Int lam = w.lattice();
  if (t != 0 && !(is_integer(t) && t.get_num() % lam == 0)) {
    throw Error(ErrorKind::kOffLattice,
                "time " + rat_str(t) + " is not a multiple of the weight lattice " +
                    int_str(lam));
  }
  GameBox b;
  b.center = center;
  b.t = t;
  b.sides.resize(w.dim());
  Profile prof = w.profile();
  for (std::size_t i = 0; i < w.dim(); ++i) {
    Rat e = prof.exps[i] * t;
    b.sides[i] = pow2(Int(-e.get_num()));
  }
  return b;
}

bool legal_move(const GameBox& parent, const GameBox& child, const Rat& step) {
  if (child.t != parent.t + step) return false;
  return parent.contains(child);
}

AxisBox allowed_centers(const GameBox& parent, const Session& session, const Rat& step) {
  GameBox probe = session.box_at(parent.center, parent.t + step);
  AxisBox out;
  out.lo.resize(parent.dim());
  out.hi.resize(parent.dim());
  for (std::size_t i = 0; i < parent.dim(); ++i) {
    Rat slack = parent.halfside(i) - probe.halfside(i);
    if (slack < 0) {
      throw Error(ErrorKind::kConfigError, "child box wider than parent; bad step");
    }
    out.lo[i] = parent.center[i] - slack;
    out.hi[i] = parent.center[i] + slack;
  }
  return out;
}

GameBox Strategy::open(const Session& session) {
  return session.box_at(Vec(session.dim(), Rat(0)), session.params().t1);
}

void Strategy::start(const Session&, const GameBox&) {}

Transcript play(Strategy& alice, Strategy& bob, const Session& session, int rounds,
                TranscriptMeta meta) {
  if (rounds < 0) throw Error(ErrorKind::kConfigError, "negative round count");
  Transcript tr;
  tr.meta = std::move(meta);
  tr.meta.rounds = rounds;
  tr.meta.params = session.params();
  tr.meta.domain = session.domain();
  if (tr.meta.weights.empty() && session.weights()) tr.meta.weights = session.weights()->r;
  if (tr.meta.alice.empty()) tr.meta.alice = alice.name();
  if (tr.meta.bob.empty()) tr.meta.bob = bob.name();

  GameBox opening = bob.open(session);
  if (opening.t != session.params().t1 || !session.shape_ok(opening)) {
    throw IllegalMoveError("bob", 0, "invalid opening box");
  }
  tr.moves.push_back(Move{0, Player::kInit, opening, {}});
  alice.start(session, opening);
  bob.start(session, opening);

  GameBox cur = opening;
  for (int k = 1; k <= rounds; ++k) {
    Strategy::Reply ar = alice.reply(cur, k);
    if (!session.shape_ok(ar.box)) {
      throw IllegalMoveError("alice", k, "box shape does not match the family");
    }
    if (!legal_move(cur, ar.box, session.params().a)) {
      throw IllegalMoveError("alice", k, "reply is not a legal nested step");
    }
    tr.moves.push_back(Move{k, Player::kAlice, ar.box, std::move(ar.note)});
    cur = tr.moves.back().box;

    if (k == rounds) break;
    Strategy::Reply br = bob.reply(cur, k);
    if (!session.shape_ok(br.box)) {
      throw IllegalMoveError("bob", k, "box shape does not match the family");
    }
    if (!legal_move(cur, br.box, session.params().b)) {
      throw IllegalMoveError("bob", k, "reply is not a legal nested step");
    }
    tr.moves.push_back(Move{k, Player::kBob, br.box, std::move(br.note)});
    cur = tr.moves.back().box;
  }
  return tr;
}

Session session_from_meta(const TranscriptMeta& meta) {
  if (meta.weights.empty()) {
    throw Error(ErrorKind::kConfigError, "transcript header lacks weights");
  }
  Weights w{std::vector<Rat>(meta.weights)};
  bool unit = true;
  for (const Rat& s : meta.domain) {
    if (s != 1) unit = false;
  }
  if (meta.domain.empty() || unit) {
    return Session::weighted(w, meta.params);
  }
  return Session::derived(w.profile(), w, meta.params, meta.domain);
}

std::optional<std::size_t> validate_moves(const Transcript& t) {
  Session session = session_from_meta(t.meta);
  if (t.moves.empty()) return 0;
  const Move& first = t.moves[0];
  if (first.round != 0 || first.player != Player::kInit ||
      first.box.t != session.params().t1 || !session.shape_ok(first.box)) {
    return 0;
  }
  int alice_round = 0;
  for (std::size_t i = 1; i < t.moves.size(); ++i) {
    const Move& prev = t.moves[i - 1];
    const Move& cur = t.moves[i];
    if (!session.shape_ok(cur.box)) return i;
    if (cur.player == Player::kAlice) {
      if (prev.player == Player::kAlice) return i;
      if (cur.round != alice_round + 1) return i;
      if (!legal_move(prev.box, cur.box, session.params().a)) return i;
      ++alice_round;
    } else if (cur.player == Player::kBob) {
      if (prev.player != Player::kAlice) return i;
      if (cur.round != alice_round) return i;
      if (!legal_move(prev.box, cur.box, session.params().b)) return i;
    } else {
      return i;
    }
  }
  return std::nullopt;
}

}  // namespace msgame
