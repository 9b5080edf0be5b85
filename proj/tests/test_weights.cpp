// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "doctest.h"
#include "msgame/errors.hpp"
#include "msgame/weights.hpp"

using namespace msgame;

TEST_SUITE("weights") {

TEST_CASE("parsing and validation") {
  Weights w = Weights::parse("1/3,2/3");
  CHECK(w.dim() == 2);
  CHECK(w.r == std::vector<Rat>{Rat(1, 3), Rat(2, 3)});
  CHECK(Weights::parse("1").r == std::vector<Rat>{Rat(1)});

  CHECK_THROWS_AS(Weights::parse("1/2,1/3"), Error);     // sum != 1
  CHECK_THROWS_AS(Weights::parse("0,1"), Error);         // zero weight
  CHECK_THROWS_AS(Weights::parse("3/2,-1/2"), Error);    // negative
}

TEST_CASE("lattice and exponents") {
  Weights w = Weights::parse("1/3,2/3");
  CHECK(w.lattice() == 3);
  CHECK(w.min_r() == Rat(1, 3));
  CHECK(w.max_r() == Rat(2, 3));
  CHECK(w.diameter_exponent() == Rat(4, 3));
  CHECK(Weights::parse("1/2,1/2").lattice() == 2);
  CHECK(Weights::parse("1").lattice() == 1);
  CHECK(Weights::parse("1/2,1/3,1/6").lattice() == 6);
}

TEST_CASE("profile shape") {
  Weights w = Weights::parse("1/3,2/3");
  Profile p = w.profile();
  CHECK(p.exps == std::vector<Rat>{Rat(4, 3), Rat(5, 3)});
  CHECK(p.min_exp() == Rat(4, 3));
  CHECK(p.sum_exp() == 3);
  CHECK(p.grid_valid(Rat(3)));
  CHECK(p.grid_valid(Rat(0)));
  CHECK(!p.grid_valid(Rat(1)));
  CHECK(!p.grid_valid(Rat(1, 2)));
  CHECK(p.grid_step() == 3);

  Profile one = Weights::parse("1").profile();
  CHECK(one.exps == std::vector<Rat>{Rat(2)});
  CHECK(one.grid_step() == Rat(1, 2));
  CHECK(one.grid_valid(Rat(1, 2)));

  Profile half = Weights::parse("1/2,1/2").profile();
  CHECK(half.grid_step() == Rat(2, 3));
}

TEST_CASE("profile restrict and scale") {
  Profile p = Weights::parse("1/2,1/3,1/6").profile();
  Profile sub = p.restrict({0, 2});
  CHECK(sub.exps == std::vector<Rat>{Rat(3, 2), Rat(7, 6)});
  Profile scaled = p.scale(Rat(2));
  CHECK(scaled.exps == std::vector<Rat>{Rat(3), Rat(8, 3), Rat(7, 3)});
}

}  // TEST_SUITE
