// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "doctest.h"
#include "msgame/adversaries.hpp"
#include "msgame/bad.hpp"
#include "msgame/errors.hpp"
#include "msgame/game.hpp"
#include "msgame/strategies.hpp"

using namespace msgame;

TEST_SUITE("strategies") {

TEST_CASE("scheduler residue rule") {
  CHECK(interleave_component(1, 3) == 1);
  CHECK(interleave_component(2, 3) == 2);
  CHECK(interleave_component(3, 3) == 1);
  CHECK(interleave_component(4, 3) == 3);
  CHECK(interleave_component(6, 3) == 2);
  CHECK(interleave_component(8, 3) == 0);   // deeper than m: filler
  CHECK(interleave_component(8, 2) == 0);
  int cnt[4] = {0, 0, 0, 0};
  for (long k = 1; k <= 64; ++k) ++cnt[interleave_component(k, 3)];
  CHECK(cnt[1] == 32);
  CHECK(cnt[2] == 16);
  CHECK(cnt[3] == 8);
  CHECK(cnt[0] == 8);
}

TEST_CASE("interleaving dilates each component's clock") {
  Weights w = Weights::parse("1/2,1/2");
  Session s = Session::weighted(w, GameParams{Rat(2), Rat(2), Rat(2)});
  std::vector<std::shared_ptr<Strategy>> comps = {
      make_centered_alice(), make_centered_alice(), make_centered_alice()};
  auto inter = interleave_strategies(comps);
  auto bob = make_bob("seeded-random", 7, AffineDiagonalMap::identity(2));
  Transcript t = play(*inter, *bob, s, 12);
  CHECK(validate_moves(t) == std::nullopt);

  GameParams v1 = inter->virtual_params(1);
  GameParams v2 = inter->virtual_params(2);
  GameParams v3 = inter->virtual_params(3);
  CHECK((v1.a == 2 && v1.b == 6 && v1.t1 == 2));
  CHECK((v2.a == 2 && v2.b == 14 && v2.t1 == 6));
  CHECK((v3.a == 2 && v3.b == 30 && v3.t1 == 14));
  CHECK(inter->rounds_of(1) == std::vector<int>{1, 3, 5, 7, 9, 11});
  CHECK(inter->rounds_of(2) == std::vector<int>{2, 6, 10});
  CHECK(inter->rounds_of(3) == std::vector<int>{4, 12});

  // Each component's virtual game, reconstructed move by move, is legal.
  for (int i = 1; i <= 3; ++i) {
    const Session& vs = inter->virtual_session(i);
    CHECK(vs.params().b == inter->virtual_params(i).b);
    Rat period = vs.params().a + vs.params().b;
    CHECK(period == Rat(4) * (1L << i));  // 2^i times the outer period a + b = 4
  }
}

TEST_CASE("domain transport shifts into a wide box") {
  Weights w = Weights::parse("1");
  auto inner = make_bad_strategy(w, AffineDiagonalMap::identity(1), Rat(1), Rat(1, 2));
  GameParams ip{Rat(1), Rat(5), Rat(1)};
  std::vector<Rat> dom = {Rat(2)};
  TransportResult tr = transport_domain(inner, w, ip, dom);
  CHECK(tr.shift == 1);
  CHECK(tr.outer_params.a == 3);
  CHECK(tr.outer_params.b == 3);
  CHECK(tr.outer_params.t1 == 1);

  Session outer = Session::derived(w.profile(), w, tr.outer_params, dom);
  auto bob = make_bob("seeded-random", 11, AffineDiagonalMap::identity(1));
  Transcript t = play(*tr.strategy, *bob, outer, 5);
  CHECK(validate_moves(t) == std::nullopt);

  // The outer outcome inherits the inner certificates' quality.
  const BadParams& bp = *inner->params();
  Int qmax = 1;
  for (const auto& c : inner->certificates()) {
    if (c.verified && c.q_hi > qmax) qmax = c.q_hi;
  }
  CHECK(!verify_box(t.outcome().axis(), {Rat(1)}, bp.c_prime, qmax,
                    AffineDiagonalMap::identity(1))
             .has_value());

  // No room for the shift: the step budget is exhausted.
  auto inner2 = make_bad_strategy(w, AffineDiagonalMap::identity(1), Rat(1), Rat(1, 2));
  CHECK_THROWS_AS(transport_domain(inner2, w, GameParams{Rat(1), Rat(3), Rat(1)}, dom),
                  Error);
  try {
    transport_domain(inner2, w, GameParams{Rat(1), Rat(3), Rat(1)}, dom);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kStepExhausted);
  }
}

TEST_CASE("affine transport against a doubling map") {
  Weights w = Weights::parse("1/2,1/2");
  auto inner = make_bad_strategy(w, AffineDiagonalMap::identity(2), Rat(2), Rat(1, 2));
  AffineDiagonalMap dbl{Vec{Rat(2), Rat(2)}, Vec{Rat(0), Rat(0)}};
  TransportResult tr = transport_affine(inner, w, GameParams{Rat(2), Rat(8), Rat(2)}, dbl);
  CHECK(tr.shift == 2);
  CHECK(tr.outer_params.a == 6);
  CHECK(tr.outer_params.b == 4);

  Session outer = Session::derived(w.profile(), w, tr.outer_params, {});
  auto bob = make_bob("seeded-random", 3, AffineDiagonalMap::identity(2));
  Transcript t = play(*tr.strategy, *bob, outer, 4);
  CHECK(validate_moves(t) == std::nullopt);
}

TEST_CASE("identity transport is a byte-exact passthrough") {
  Weights w = Weights::parse("1/2,1/2");
  auto inner = make_bad_strategy(w, AffineDiagonalMap::identity(2), Rat(2), Rat(1, 2));
  TransportResult id = transport_affine(inner, w, GameParams{Rat(2), Rat(4), Rat(2)},
                                        AffineDiagonalMap::identity(2));
  CHECK(id.shift == 0);
  CHECK(id.outer_params.a == 2);
  CHECK(id.outer_params.b == 4);

  Session plain = Session::weighted(w, GameParams{Rat(2), Rat(4), Rat(2)});
  auto bob1 = make_bob("seeded-random", 5, AffineDiagonalMap::identity(2));
  auto bob2 = make_bob("seeded-random", 5, AffineDiagonalMap::identity(2));
  Transcript t1 = play(*id.strategy, *bob1, plain, 4);
  auto direct = make_bad_strategy(w, AffineDiagonalMap::identity(2), Rat(2), Rat(1, 2));
  Transcript t2 = play(*direct, *bob2, plain, 4);
  REQUIRE(t1.moves.size() == t2.moves.size());
  for (std::size_t i = 0; i < t1.moves.size(); ++i) {
    CHECK(t1.moves[i].box == t2.moves[i].box);
  }
}

TEST_CASE("classical parameter adapter") {
  GameParams p = classic_adapter(Rat(1, 4), Rat(1, 2));
  CHECK(p.a == 2);
  CHECK(p.b == 1);
  CHECK(p.t1 == 1);
  GameParams q = classic_adapter(Rat(1, 2), Rat(1, 2));
  CHECK(q.a == 1);
  CHECK(q.b == 1);
  CHECK_THROWS_AS(classic_adapter(Rat(1, 3), Rat(1, 2)), Error);
  try {
    classic_adapter(Rat(1, 3), Rat(1, 2));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kOffLattice);
  }
}

TEST_CASE("product splits coordinates between two strategies") {
  Weights w = Weights::parse("1/2,1/2");
  Session s = Session::weighted(w, GameParams{Rat(2), Rat(2), Rat(2)});
  auto prod = product_strategy(make_centered_alice(), make_centered_alice(), 1, 2);
  auto bob = make_bob("seeded-random", 9, AffineDiagonalMap::identity(2));
  Transcript t = play(*prod, *bob, s, 4);
  CHECK(validate_moves(t) == std::nullopt);
  for (const Move& m : t.moves) {
    if (m.player == Player::kAlice) CHECK(m.box.t >= 2);
  }
}

}  // TEST_SUITE
