// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/ternary.hpp"

#include <algorithm>

#include "msgame/errors.hpp"
#include "msgame/prng.hpp"

namespace msgame {

namespace {

constexpr std::uint64_t kSymStream = 0x5e9;

Rat third_pow(unsigned long e) { return rat_pow(Rat(1, 3), e); }

}  // namespace

TernaryWord::TernaryWord(std::string prefix) {
  std::size_t zero = std::string::npos;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = prefix[i];
    if (c != '0' && c != '1' && c != '2') {
      throw Error(ErrorKind::kParseError, "ternary word digit must be 0, 1 or 2");
    }
    if (zero != std::string::npos && c != '0') {
      throw Error(ErrorKind::kParseError, "a 0 digit can only be followed by 0s");
    }
    if (c == '0' && zero == std::string::npos) zero = i;
  }
  if (zero != std::string::npos) prefix.resize(zero + 1);
  prefix_ = std::move(prefix);
}

bool TernaryWord::pinned() const {
  return !prefix_.empty() && prefix_.back() == '0';
}

std::size_t TernaryWord::first_zero() const {
  return pinned() ? prefix_.size() : 0;
}

int TernaryWord::digit(std::size_t i) const {
  if (i == 0) throw Error(ErrorKind::kConfigError, "digit positions are 1-based");
  if (i <= prefix_.size()) return prefix_[i - 1] - '0';
  if (pinned()) return 0;
  throw Error(ErrorKind::kConfigError, "digit " + std::to_string(i) +
                                           " of an unpinned word is unspecified");
}

bool TernaryWord::known_through(std::size_t upto) const {
  return pinned() || upto <= prefix_.size();
}

TernaryWord TernaryWord::truncated(std::size_t len) const {
  if (!known_through(len)) {
    throw Error(ErrorKind::kConfigError, "truncation reaches unspecified digits");
  }
  std::string out;
  out.reserve(len);
  for (std::size_t i = 1; i <= len; ++i) out.push_back(static_cast<char>('0' + digit(i)));
  return TernaryWord(std::move(out));
}

std::size_t TernaryWord::first_disagreement(const TernaryWord& other) const {
  std::size_t scan = std::max(prefix_.size(), other.prefix_.size());
  for (std::size_t i = 1; i <= scan; ++i) {
    if (!known_through(i) || !other.known_through(i)) {
      throw Error(ErrorKind::kConfigError, "comparing unspecified digits");
    }
    if (digit(i) != other.digit(i)) return i;
  }
  if (!pinned() || !other.pinned()) {
    throw Error(ErrorKind::kConfigError, "comparing unspecified tails");
  }
  return 0;  // both all-zero beyond the scanned prefixes
}

bool TernaryWord::same_point(const TernaryWord& other) const {
  return first_disagreement(other) == 0;
}

Rat sym_distance(const TernaryWord& x, const TernaryWord& y) {
  std::size_t k = x.first_disagreement(y);
  if (k == 0) return Rat(0);
  return third_pow(k);
}

long sym_level(const Rat& radius) {
  if (radius <= 0 || radius > 1) {
    throw Error(ErrorKind::kConfigError, "ball radius must lie in (0, 1]");
  }
  long level = 0;
  Rat p(1, 3);
  while (radius <= p) {
    ++level;
    p /= 3;
    if (level > (1L << 20)) {
      throw Error(ErrorKind::kConfigError, "ball radius is too small");
    }
  }
  return level;
}

bool sym_member(const SymBall& ball, const TernaryWord& w) {
  long level = sym_level(ball.radius);
  for (long i = 1; i <= level; ++i) {
    if (ball.center.digit(static_cast<std::size_t>(i)) !=
        w.digit(static_cast<std::size_t>(i))) {
      return false;
    }
  }
  return true;
}

bool sym_contains(const SymBall& outer, const SymBall& inner) {
  Rat d = sym_distance(outer.center, inner.center);
  return d + inner.radius <= outer.radius;
}

bool sym_singleton(const SymBall& ball) {
  long level = sym_level(ball.radius);
  std::size_t ulevel = static_cast<std::size_t>(level);
  if (!ball.center.known_through(ulevel)) {
    throw Error(ErrorKind::kConfigError, "ball centre has unspecified digits");
  }
  return ball.center.pinned() && ball.center.first_zero() <= ulevel &&
         ball.center.first_zero() >= 1;
}

SymBall sym_alice(const SymBall& ball) {
  long level = sym_level(ball.radius);
  Rat reply_radius = ball.radius / 27;
  if (ball.radius == 1) {
    // Full-space ball: any shrink is fine; stay concentric so later rounds
    // see a radius < 1 and can run the real construction.
    return SymBall{ball.center, reply_radius};
  }
  std::size_t keep = static_cast<std::size_t>(level) + 1;
  if (!ball.center.known_through(keep)) {
    throw Error(ErrorKind::kConfigError,
                "ball centre must specify digits up to level + 1");
  }
  std::string head;
  head.reserve(keep + 1);
  bool saw_zero = false;
  for (std::size_t i = 1; i <= keep; ++i) {
    int d = ball.center.digit(i);
    head.push_back(static_cast<char>('0' + d));
    saw_zero = saw_zero || d == 0;
  }
  if (!saw_zero) head.push_back('0');
  SymBall reply{TernaryWord(std::move(head)), reply_radius};
  // The reply centre agrees with the input centre on digits 1..keep, so the
  // distance is at most 3^{-(keep+1)} whatever the unspecified tail does.
  Rat worst = third_pow(keep + 1);
  if (worst + reply_radius > ball.radius || !sym_singleton(reply)) {
    throw Error(ErrorKind::kCertificateFailure,
                "constructed reply violates containment or pinning");
  }
  return reply;
}

std::vector<TernaryWord> sym_cover_enumerate(int k) {
  if (k < 0 || k > 22) {
    throw Error(ErrorKind::kConfigError, "cover enumeration supports 0 <= k <= 22");
  }
  std::vector<TernaryWord> out;
  std::string word;
  word.reserve(static_cast<std::size_t>(k));
  // Depth-first in digit order, honouring the absorbing rule.
  std::function<void()> walk = [&]() {
    if (word.size() == static_cast<std::size_t>(k)) {
      out.emplace_back(word);
      return;
    }
    bool absorbed = !word.empty() && word.back() == '0';
    for (char c = '0'; c <= '2'; ++c) {
      if (absorbed && c != '0') continue;
      word.push_back(c);
      walk();
      word.pop_back();
    }
  };
  walk();
  return out;
}

Int sym_cover_count(int k) {
  if (k < 0 || k > 40) {
    throw Error(ErrorKind::kConfigError, "cover count supports 0 <= k <= 40");
  }
  Int c = Int(1) << static_cast<unsigned long>(k + 1);
  return c - 1;
}

namespace {

// Exhaustive cross-check of the pinning predicate while the level is small
// enough to enumerate: the ball must contain exactly one cylinder two digits
// deeper than its level, and that cylinder must be pinned.
void brute_check_singleton(const SymBall& ball, bool claimed) {
  long level = sym_level(ball.radius);
  if (level + 2 > 14) return;
  if (!ball.center.known_through(static_cast<std::size_t>(level))) return;
  auto words = sym_cover_enumerate(static_cast<int>(level) + 2);
  std::size_t members = 0;
  bool member_pinned = false;
  for (const auto& w : words) {
    if (!sym_member(ball, w)) continue;
    ++members;
    member_pinned = w.pinned();
  }
  bool brute = members == 1 && member_pinned;
  if (brute != claimed) {
    throw Error(ErrorKind::kCertificateFailure,
                "pinning predicate disagrees with enumeration");
  }
}

}  // namespace

SymReport sym_play_with(const SymBall& opening, const SymBob& bob, int rounds) {
  if (rounds < 1) throw Error(ErrorKind::kConfigError, "need at least one round");
  if (!bob) throw Error(ErrorKind::kConfigError, "missing adversary");
  sym_level(opening.radius);  // validates the radius range
  SymReport report;
  report.opening = opening;
  SymBall current = opening;
  for (int round = 1; round <= rounds; ++round) {
    SymRound rec;
    rec.alice = sym_alice(current);
    long alice_level = sym_level(rec.alice.radius);
    rec.singleton =
        rec.alice.center.known_through(static_cast<std::size_t>(alice_level)) &&
        sym_singleton(rec.alice);
    brute_check_singleton(rec.alice, rec.singleton);
    rec.bob = bob(rec.alice, round);
    sym_level(rec.bob.radius);  // validates the radius range
    if (!sym_contains(rec.alice, rec.bob)) {
      throw IllegalMoveError("bob", round, "ball is not contained in Alice's ball");
    }
    current = rec.bob;
    report.rounds.push_back(std::move(rec));
  }
  const SymBall& last = report.rounds.back().alice;
  report.outcome = last.center;
  report.outcome_has_zero =
      report.rounds.back().singleton &&
      last.center.first_zero() <= static_cast<std::size_t>(sym_level(last.radius));
  return report;
}

SymReport sym_play(std::uint64_t seed, int rounds, int beta) {
  if (beta < 0) throw Error(ErrorKind::kConfigError, "beta must be >= 0");
  std::string prefix;
  for (std::uint64_t i = 0; i < 4; ++i) {
    int d = static_cast<int>(bounded_u64(mix64(seed, kSymStream, i), 3));
    prefix.push_back(static_cast<char>('0' + d));
    if (d == 0) break;
  }
  SymBall opening{TernaryWord(std::move(prefix)), Rat(1, 3)};
  Rat shrink = third_pow(static_cast<unsigned long>(beta));
  SymBob bob = [&shrink](const SymBall& alice, int) {
    return SymBall{alice.center, alice.radius * shrink};
  };
  return sym_play_with(opening, bob, rounds);
}

}  // namespace msgame
