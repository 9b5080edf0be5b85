// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "msgame/adversaries.hpp"
#include "msgame/bad.hpp"
#include "msgame/dimension.hpp"
#include "msgame/errors.hpp"
#include "msgame/game.hpp"
#include "msgame/prng.hpp"

using namespace msgame;

TEST_SUITE("dimension") {

TEST_CASE("tiling counts and exact union volume") {
  Weights w = Weights::parse("1/3,2/3");
  Session s = Session::weighted(w, GameParams{Rat(3), Rat(3), Rat(3)});
  GameBox parent = s.box_at(Vec{Rat(0), Rat(0)}, Rat(3));
  auto kids = pack_children(parent, Rat(3), w.profile());
  REQUIRE(kids.size() == 512);
  Rat vol(0);
  for (const auto& c : kids) {
    Rat v(1);
    for (const Rat& side : c.sides) v *= side;
    vol += v;
    CHECK(parent.contains(c));
  }
  Rat pv(1);
  for (const Rat& side : parent.sides) pv *= side;
  CHECK(vol == pv);

  Weights one = Weights::parse("1");
  Session s1 = Session::weighted(one, GameParams{Rat(1), Rat(1), Rat(1)});
  GameBox p1 = s1.box_at(Vec{Rat(0)}, Rat(1));
  CHECK(pack_children(p1, Rat(1), one.profile()).size() == 4);
}

TEST_CASE("line strategy tree has constant exact densities") {
  Weights w = Weights::parse("1");
  Session s = Session::weighted(w, GameParams{Rat(1), Rat(1), Rat(1)});
  auto alice = make_bad_strategy(w, AffineDiagonalMap::identity(1), Rat(1), Rat(1, 2));
  TreeLevels tree = build_strategy_tree(*alice, s, 4);
  REQUIRE(tree.levels.size() == 5);
  std::size_t expect = 1;
  for (const auto& lv : tree.levels) {
    CHECK(lv.size() == expect);
    expect *= 4;
  }
  MeasureModel model = measure_model(w);
  CHECK(model.delta == 2);
  CHECK(model.sigma == 2);
  CHECK(model.C == 1);
  TreeCheck rep = check_treelike(tree, model);
  CHECK(rep.ok());
  CHECK(delta_root(tree) == Rat(1, 4));
  for (int k = 0; k < 4; ++k) CHECK(delta_k(tree, k) == Rat(1, 4));
  for (std::size_t k = 0; k < rep.diameters.size(); ++k) {
    CHECK(rep.diameters[k] == pow2(Int(-2 * (1 + 2 * static_cast<long>(k) + 1))));
  }
}

TEST_CASE("finite-depth estimates meet the limit bound") {
  Weights w = Weights::parse("1");
  Session s = Session::weighted(w, GameParams{Rat(1), Rat(1), Rat(1)});
  auto alice = make_bad_strategy(w, AffineDiagonalMap::identity(1), Rat(1), Rat(1, 2));
  TreeLevels tree = build_strategy_tree(*alice, s, 4);
  double est = urbanski_estimate(tree, 1.0);
  double extrap = urbanski_extrapolated(Rat(1, 4), Rat(2), Rat(1), Rat(1), Rat(1), 1.0, 4);
  CHECK(std::abs(est - extrap) < 1e-12);
  // Opening time equal to the responder step makes the finite evaluation
  // land exactly on the limit at every depth.
  double bound = wd_bound(Rat(1), Rat(1), Rat(1, 4), Rat(2), 1.0);
  CHECK(bound == 0.5);
  CHECK(urbanski_extrapolated(Rat(1, 4), Rat(2), Rat(1), Rat(1), Rat(1), 1.0, 50) == bound);
  CHECK(wd_bound(Rat(1), Rat(3), Rat(1, 4), Rat(2), 1.0) == 0.75);
  double prev = -1;
  for (long m : {1L, 2L, 4L, 8L}) {
    double v = wd_bound(Rat(1), Rat(m), Rat(1, 4), Rat(2), 1.0);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(wd_bound(Rat(1), Rat(1), Rat(1), Rat(2), 1.0) == 1.0);
}

TEST_CASE("planted structural violations are caught with witnesses") {
  Weights w = Weights::parse("1");
  Session s = Session::weighted(w, GameParams{Rat(1), Rat(1), Rat(1)});
  auto alice = make_bad_strategy(w, AffineDiagonalMap::identity(1), Rat(1), Rat(1, 2));
  TreeLevels tree = build_strategy_tree(*alice, s, 2);
  MeasureModel model = measure_model(w);
  REQUIRE(check_treelike(tree, model).ok());

  TreeLevels dup = tree;
  dup.levels[1].push_back(dup.levels[1][0]);
  TreeCheck r1 = check_treelike(dup, model);
  CHECK(!r1.tl1);
  CHECK(r1.tl1_witness.has_value());

  TreeLevels orphan = tree;
  orphan.levels[2][0].center[0] += 10;
  TreeCheck r2 = check_treelike(orphan, model);
  CHECK(!r2.tl2);
  CHECK(r2.tl2_witness.has_value());

  TreeLevels childless = tree;
  const GameBox parent = childless.levels[1].back();
  auto& lv2 = childless.levels[2];
  for (auto it = lv2.begin(); it != lv2.end();) {
    if (parent.contains(*it)) {
      it = lv2.erase(it);
    } else {
      ++it;
    }
  }
  TreeCheck r3 = check_treelike(childless, model);
  CHECK(!r3.tl3);
  CHECK(r3.tl3_witness.has_value());
}

TEST_CASE("plane tree is wide but stays exact") {
  Weights w = Weights::parse("1/2,1/2");
  Session s = Session::weighted(w, GameParams{Rat(2), Rat(2), Rat(2)});
  auto alice = make_bad_strategy(w, AffineDiagonalMap::identity(2), Rat(2), Rat(1, 2));
  TreeLevels tree = build_strategy_tree(*alice, s, 2);
  REQUIRE(tree.levels.size() == 3);
  CHECK(tree.levels[0].size() == 1);
  CHECK(tree.levels[1].size() == 64);
  CHECK(tree.levels[2].size() == 4096);
  TreeCheck rep = check_treelike(tree, measure_model(w));
  CHECK(rep.ok());
  CHECK(delta_root(tree) == pow2(Int(-6)));
  CHECK(delta_k(tree, 0) == pow2(Int(-6)));
  CHECK(delta_k(tree, 1) == pow2(Int(-6)));
}

TEST_CASE("doubling constants: frozen triples") {
  FedererConstants f = federer_constants(Rat(3), Rat(1, 3));
  CHECK(f.m == 2);
  CHECK(f.c_small == Rat(1, 9));
  CHECK(f.c == Rat(1, 81));
  FedererConstants g = federer_constants(Rat(5), Rat(1, 2));
  CHECK(g.m == 2);
  FedererConstants h = federer_constants(Rat(1), Rat(1, 7));
  CHECK(h.c == 1);
}

TEST_CASE("doubling constants: sandwich property on random inputs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rat alpha(1 + static_cast<long>(bounded_u64(mix64(seed, 2, 0), 40)),
              41 + static_cast<long>(bounded_u64(mix64(seed, 2, 1), 200)));
    alpha.canonicalize();
    Rat k_num(1 + static_cast<long>(bounded_u64(mix64(seed, 2, 2), 30)));
    Rat big_k = Rat(1) + k_num / Rat(7);
    FedererConstants f = federer_constants(big_k, alpha);
    REQUIRE(f.m >= 1);
    auto m = static_cast<unsigned long>(f.m);
    Rat third = rat_pow(Rat(1, 3), m);
    CHECK(alpha / 6 < third);
    CHECK(third <= alpha / 2);
    CHECK(f.c_small == rat_pow(Rat(1) / big_k, m));
    CHECK(f.c == f.c_small / (big_k * big_k));
  }
}

}  // TEST_SUITE
