// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include <benchmark/benchmark.h>

#include "msgame/adversaries.hpp"
#include "msgame/bad.hpp"
#include "msgame/boxes.hpp"
#include "msgame/game.hpp"
#include "msgame/linalg.hpp"
#include "msgame/rational.hpp"
#include "msgame/weights.hpp"

namespace {

using namespace msgame;

// Power comparison on mixed-size operands, the hot kernel of the danger scan.
void BM_cmp_power(benchmark::State& state) {
  Rat lhs(7, 4096);
  Rat rhs(3, 65536);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cmp_power(lhs, 3, rhs, 2));
  }
}
BENCHMARK(BM_cmp_power);

// Full exact scan of a small box against all denominators up to q_max.
void BM_verify_box(benchmark::State& state) {
  Weights w = Weights::parse("1/3,2/3");
  AffineDiagonalMap f = AffineDiagonalMap::identity(2);
  Vec center{Rat(5, 64), Rat(-3, 128)};
  Vec sides{Rat(1, 256), Rat(1, 1024)};
  AxisBox box = AxisBox::from_center(center, sides);
  Rat cprime(15, 2097152);
  Int qmax(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_box(box, w.r, cprime, qmax, f));
  }
}
BENCHMARK(BM_verify_box)->Arg(1 << 8)->Arg(1 << 12)->Arg(1 << 16);

// One certified responder move: danger search, hyperplane, corner choice.
void BM_danger_round(benchmark::State& state) {
  Weights w = Weights::parse("1/2,1/2");
  AffineDiagonalMap f = AffineDiagonalMap::identity(2);
  Session session = Session::weighted(w, GameParams{Rat(2), Rat(2), Rat(2)});
  auto alice = make_bad_strategy(w, f, Rat(2), Rat(1, 2));
  auto bob = make_bob("seeded-random", 7, f);
  Transcript t = play(*alice, *bob, session, 3, {});
  const GameBox& deep = t.moves[t.moves.size() - 2].box;  // chooser's last box
  int k = static_cast<int>(state.range(0));
  const BadParams& bp = *alice->params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(alice_bad_move(deep, k, bp, session));
  }
}
BENCHMARK(BM_danger_round)->Arg(3);

// A short complete game including referee validation of every move.
void BM_play_short(benchmark::State& state) {
  Weights w = Weights::parse("1/2,1/2");
  AffineDiagonalMap f = AffineDiagonalMap::identity(2);
  Session session = Session::weighted(w, GameParams{Rat(2), Rat(2), Rat(2)});
  for (auto _ : state) {
    auto alice = make_bad_strategy(w, f, Rat(2), Rat(1, 2));
    auto bob = make_bob("seeded-random", 11, f);
    benchmark::DoNotOptimize(play(*alice, *bob, session, 4, {}));
  }
}
BENCHMARK(BM_play_short);

}  // namespace

BENCHMARK_MAIN();
