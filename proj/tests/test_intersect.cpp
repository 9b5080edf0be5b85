// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include <utility>
#include <vector>

#include "doctest.h"
#include "msgame/adversaries.hpp"
#include "msgame/bad.hpp"
#include "msgame/errors.hpp"
#include "msgame/game.hpp"
#include "msgame/intersect.hpp"
#include "msgame/prng.hpp"

using namespace msgame;

namespace {

// Random positive weight vector summing to 1, with denominators <= 12.
Weights random_weights(std::uint64_t seed, std::size_t n) {
  std::vector<Rat> parts(n);
  Rat total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t num = 1 + bounded_u64(mix64(seed, 0xabc, 2 * i), 9);
    std::uint64_t den = 1 + bounded_u64(mix64(seed, 0xabc, 2 * i + 1), 11);
    parts[i] = Rat(static_cast<long>(num), static_cast<long>(den));
    parts[i].canonicalize();
    total += parts[i];
  }
  for (Rat& p : parts) p /= total;
  return Weights(std::move(parts));
}

}  // namespace

TEST_SUITE("intersect") {

TEST_CASE("embedded weights match the closed forms") {
  Weights w = Weights::parse("1/2,1/3,1/6");
  EmbeddedWeights e12 = embed_weights(w, SubsetSpec{{0, 1}});
  CHECK(e12.s.r == std::vector<Rat>{Rat(10, 17), Rat(7, 17)});
  CHECK(e12.kappa == Rat(18, 17));
  EmbeddedWeights e13 = embed_weights(w, SubsetSpec{{0, 2}});
  CHECK(e13.s.r == std::vector<Rat>{Rat(11, 16), Rat(5, 16)});
  CHECK(e13.kappa == Rat(9, 8));
  EmbeddedWeights single = embed_weights(w, SubsetSpec{{1}});
  CHECK(single.s.r == std::vector<Rat>{Rat(1)});
  CHECK(single.kappa == Rat(2) / (Rat(1) + Rat(1, 3)));
  EmbeddedWeights full = embed_weights(w, SubsetSpec{{0, 1, 2}});
  CHECK(full.s.r == w.r);
  CHECK(full.kappa == 1);
  CHECK(reparam_factor(w, SubsetSpec{{0, 2}}) == Rat(9, 8));
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(Rat(1) + e12.s.r[j] == e12.kappa * (Rat(1) + w.r[j]));
  }
}

TEST_CASE("embedding invariants on random weights") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    std::size_t n = 2 + static_cast<std::size_t>(bounded_u64(mix64(seed, 1, 1), 3));
    Weights w = random_weights(seed, n);
    // Every nonempty subset of a small index set.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      SubsetSpec spec;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) spec.indices.push_back(i);
      }
      EmbeddedWeights e = embed_weights(w, spec);
      Rat sum = 0;
      for (std::size_t j = 0; j < spec.indices.size(); ++j) {
        const Rat& s = e.s.r[j];
        CHECK(s > 0);
        CHECK(Rat(1) + s == e.kappa * (Rat(1) + w.r[spec.indices[j]]));
        sum += s;
      }
      CHECK(sum == 1);
      CHECK(e.kappa >= 1);
    }
  }
}

TEST_CASE("scheduler move counts") {
  CHECK(component_moves(1, 3, 5) == 3);
  CHECK(component_moves(2, 3, 5) == 1);
  CHECK(component_moves(3, 3, 5) == 1);
  CHECK(component_moves(3, 3, 3) == 0);
  CHECK(component_moves(1, 3, 64) == 32);
  CHECK(component_moves(2, 3, 64) == 16);
  CHECK(component_moves(3, 3, 64) == 8);
}

TEST_CASE("three-way plan on the plane, five rounds") {
  Weights w = Weights::parse("1/2,1/2");
  std::vector<SubsetSpec> specs = {{{0, 1}}, {{0}}, {{1}}};
  IntersectionPlan plan = intersection_strategy(w, specs, Rat(2), Rat(1, 2));
  REQUIRE(plan.components.size() == 3);
  CHECK(plan.components[0].label == "full");
  CHECK(plan.components[1].label == "{1}");
  CHECK(plan.components[2].label == "{2}");
  CHECK(plan.components[1].kappa == Rat(4, 3));
  CHECK(plan.components[1].verify_weights == std::vector<Rat>{Rat(1), Rat(0)});
  CHECK(plan.components[2].verify_weights == std::vector<Rat>{Rat(0), Rat(1)});

  Session s = Session::weighted(w, GameParams{Rat(2), Rat(2), Rat(2)});
  auto bob = make_bob("seeded-random", 42, AffineDiagonalMap::identity(2));
  Transcript t = play(*plan.strategy, *bob, s, 5);
  CHECK(validate_moves(t) == std::nullopt);
  const GameBox& out = t.outcome();

  for (std::size_t ci = 0; ci < plan.components.size(); ++ci) {
    const ComponentInfo& info = plan.components[ci];
    const BadParams& bp = *info.core->params();
    int moves = component_moves(static_cast<int>(ci) + 1, 3, 5);
    Int qmax = coverage_qmax(*info.core, moves);
    if (ci == 0) {
      // Three moves on the full component; its dilated clock has a = 2,
      // b = 6, so its scan coverage reaches denominator 2^16.
      CHECK(moves == 3);
      CHECK((bp.a == 2 && bp.b == 6));
      CHECK(qmax == pow2(Int(16)).get_num());
    } else {
      CHECK(qmax == 0);
    }
    if (qmax > 0) {
      auto v = verify_box(out.axis(), info.verify_weights, bp.c_prime, qmax,
                          AffineDiagonalMap::identity(2));
      CHECK(!v.has_value());
    }
    // A small unconditional bound gives the sub-components a real check.
    auto v16 = verify_box(out.axis(), info.verify_weights, bp.c_prime, Int(16),
                          AffineDiagonalMap::identity(2));
    CHECK(!v16.has_value());
  }

  const BadParams& b2 = *plan.components[1].core->params();
  CHECK(b2.a == Rat(3, 2));
  CHECK(b2.b == Rat(21, 2));
  CHECK(b2.t1 == Rat(9, 2));
  CHECK(b2.c_prime == Rat(3) / pow2(Int(37)));
}

TEST_CASE("seven rounds deepen the scan coverage") {
  Weights w = Weights::parse("1/2,1/2");
  std::vector<SubsetSpec> specs = {{{0, 1}}, {{0}}, {{1}}};
  IntersectionPlan plan = intersection_strategy(w, specs, Rat(2), Rat(1, 2));
  Session s = Session::weighted(w, GameParams{Rat(2), Rat(2), Rat(2)});
  auto bob = make_bob("rational-seeker", 7, AffineDiagonalMap::identity(2));
  Transcript t = play(*plan.strategy, *bob, s, 7);
  CHECK(validate_moves(t) == std::nullopt);
  const GameBox& out = t.outcome();
  Int expected[3] = {pow2(Int(24)).get_num(), pow2(Int(12)).get_num(), Int(0)};
  for (std::size_t ci = 0; ci < plan.components.size(); ++ci) {
    const ComponentInfo& info = plan.components[ci];
    const BadParams& bp = *info.core->params();
    int moves = component_moves(static_cast<int>(ci) + 1, 3, 7);
    Int qmax = coverage_qmax(*info.core, moves);
    CHECK(qmax == expected[ci]);
    if (qmax > 0) {
      auto v = verify_box(out.axis(), info.verify_weights, bp.c_prime, qmax,
                          AffineDiagonalMap::identity(2));
      CHECK(!v.has_value());
    }
    Int best = 0;
    for (const auto& c : info.core->certificates()) {
      if (c.verified && c.q_hi > best) best = c.q_hi;
    }
    CHECK(best == qmax);
  }
}

TEST_CASE("subset validation") {
  Weights w = Weights::parse("1/2,1/2");
  CHECK_THROWS_AS(embed_weights(w, SubsetSpec{{}}), Error);
  CHECK_THROWS_AS(embed_weights(w, SubsetSpec{{0, 2}}), Error);
  CHECK_THROWS_AS(embed_weights(w, SubsetSpec{{1, 0}}), Error);
}

}  // TEST_SUITE
