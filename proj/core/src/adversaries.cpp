// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/adversaries.hpp"

#include "msgame/errors.hpp"
#include "msgame/prng.hpp"

namespace msgame {

namespace {

constexpr std::uint64_t kBobStream = 0xb0bULL;
constexpr std::uint64_t kAliceStream = 0xa11ceULL;
constexpr std::uint64_t kOpeningRound = 0;

// Exact dyadic fraction (u32 - 2^31)/2^31 in [-1, 1).
Rat signed_unit(std::uint32_t u32) {
  Rat f(Int(static_cast<long>(u32)) - Int(2147483648L), Int(2147483648L));
  f.canonicalize();
  return f;
}

Vec seeded_opening_center(const Session& session, std::uint64_t seed, std::uint64_t stream) {
  Vec c(session.dim());
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint32_t u = static_cast<std::uint32_t>(mix64(seed ^ stream, kOpeningRound, i) >> 32);
    c[i] = signed_unit(u) / 2;  // inside [-1/2, 1/2)
  }
  return c;
}

Vec seeded_center_in(const AxisBox& allowed, std::uint64_t seed, std::uint64_t stream,
                     int round) {
  Vec c(allowed.dim());
  Vec mid = allowed.center();
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint32_t u = static_cast<std::uint32_t>(
        mix64(seed ^ stream, static_cast<std::uint64_t>(round), i) >> 32);
    Rat half = allowed.side(i) / 2;
    c[i] = mid[i] + half * signed_unit(u);
  }
  return c;
}

class CenterBob : public Strategy {
 public:
  std::string name() const override { return "center"; }

  void start(const Session& session, const GameBox&) override { session_ = &session; }

  Reply reply(const GameBox& opponent, int) override {
    return {session_->box_at(opponent.center, opponent.t + session_->params().b), {}};
  }

 private:
  const Session* session_ = nullptr;
};

class SeededBob : public Strategy {
 public:
  explicit SeededBob(std::uint64_t seed) : seed_(seed) {}

  std::string name() const override { return "seeded-random"; }

  GameBox open(const Session& session) override {
    return session.box_at(seeded_opening_center(session, seed_, kBobStream),
                          session.params().t1);
  }

  void start(const Session& session, const GameBox&) override { session_ = &session; }

  Reply reply(const GameBox& opponent, int round) override {
    AxisBox allowed = allowed_centers(opponent, *session_, session_->params().b);
    Vec c = seeded_center_in(allowed, seed_, kBobStream, round);
    return {session_->box_at(c, opponent.t + session_->params().b), {}};
  }

 private:
  std::uint64_t seed_;
  const Session* session_ = nullptr;
};

class SeekerBob : public Strategy {
 public:
  SeekerBob(std::uint64_t seed, AffineDiagonalMap f) : seed_(seed), f_(std::move(f)) {}

  std::string name() const override { return "rational-seeker"; }

  GameBox open(const Session& session) override {
    return session.box_at(seeded_opening_center(session, seed_, kBobStream),
                          session.params().t1);
  }

  void start(const Session& session, const GameBox&) override {
    session_ = &session;
    if (f_.dim() != session.dim()) {
      throw Error(ErrorKind::kConfigError, "target map has wrong dimension");
    }
  }

  Reply reply(const GameBox& opponent, int) override {
    AxisBox allowed = allowed_centers(opponent, *session_, session_->params().b);
    // Preimage of the allowed coordinate-1 range under f.
    Rat plo = (allowed.lo[0] - f_.shift[0]) / f_.diag[0];
    Rat phi = (allowed.hi[0] - f_.shift[0]) / f_.diag[0];
    if (plo > phi) std::swap(plo, phi);
    Rat target1 = simplest_in_interval(plo, phi);
    Int q = target1.get_den();

    Vec pre(allowed.dim());
    pre[0] = target1;
    Vec mid = allowed.center();
    for (std::size_t i = 1; i < allowed.dim(); ++i) {
      Rat xi = (mid[i] - f_.shift[i]) / f_.diag[i];
      pre[i] = Rat(round_half_up(Rat(xi * q)), q);
      pre[i].canonicalize();
    }
    Vec c = allowed.clamp(f_.apply(pre));
    return {session_->box_at(c, opponent.t + session_->params().b), {}};
  }

 private:
  std::uint64_t seed_;
  AffineDiagonalMap f_;
  const Session* session_ = nullptr;
};

class CenteredAlice : public Strategy {
 public:
  std::string name() const override { return "centered"; }

  void start(const Session& session, const GameBox&) override { session_ = &session; }

  Reply reply(const GameBox& opponent, int) override {
    return {session_->box_at(opponent.center, opponent.t + session_->params().a), {}};
  }

 private:
  const Session* session_ = nullptr;
};

class SeededAlice : public Strategy {
 public:
  explicit SeededAlice(std::uint64_t seed) : seed_(seed) {}

  std::string name() const override { return "seeded"; }

  void start(const Session& session, const GameBox&) override { session_ = &session; }

  Reply reply(const GameBox& opponent, int round) override {
    AxisBox allowed = allowed_centers(opponent, *session_, session_->params().a);
    Vec c = seeded_center_in(allowed, seed_, kAliceStream, round);
    return {session_->box_at(c, opponent.t + session_->params().a), {}};
  }

 private:
  std::uint64_t seed_;
  const Session* session_ = nullptr;
};

}  // namespace

std::unique_ptr<Strategy> make_center_bob() {
  return std::make_unique<CenterBob>();
}

std::unique_ptr<Strategy> make_seeded_bob(std::uint64_t seed) {
  return std::make_unique<SeededBob>(seed);
}

std::unique_ptr<Strategy> make_seeker_bob(std::uint64_t seed, AffineDiagonalMap f) {
  return std::make_unique<SeekerBob>(seed, std::move(f));
}

std::unique_ptr<Strategy> make_bob(const std::string& name, std::uint64_t seed,
                                   const AffineDiagonalMap& f) {
  if (name == "center") return make_center_bob();
  if (name == "seeded-random") return make_seeded_bob(seed);
  if (name == "rational-seeker") return make_seeker_bob(seed, f);
  throw Error(ErrorKind::kConfigError, "unknown chooser strategy: '" + name + "'");
}

std::unique_ptr<Strategy> make_centered_alice() {
  return std::make_unique<CenteredAlice>();
}

std::unique_ptr<Strategy> make_seeded_alice(std::uint64_t seed) {
  return std::make_unique<SeededAlice>(seed);
}

}  // namespace msgame
