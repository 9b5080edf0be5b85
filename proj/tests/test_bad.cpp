// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include <cmath>

#include "doctest.h"
#include "msgame/adversaries.hpp"
#include "msgame/bad.hpp"
#include "msgame/boxes.hpp"
#include "msgame/errors.hpp"

using namespace msgame;

namespace {

// Plays one full game and verifies the outcome box at the coverage bound.
void run_and_verify(const std::string& wtxt, const Rat& a, const Rat& b, const Rat& t1,
                    int rounds, std::uint64_t seed, const std::string& bob_kind,
                    const AffineDiagonalMap& f) {
  Weights w = Weights::parse(wtxt);
  Session session = Session::weighted(w, {a, b, t1});
  auto alice = make_bad_strategy(w, f, a, Rat(1, 2));
  auto bob = make_bob(bob_kind, seed, f);
  Transcript t = play(*alice, *bob, session, rounds);
  CHECK(validate_moves(t) == std::nullopt);

  const BadParams& sp = *alice->params();
  int eff = rounds - (alice->active_from() - 1);
  REQUIRE(eff >= 2);
  Int qmax = ceil_pow2(Rat(eff - 1) * (a + b));
  auto v = verify_box(t.outcome().axis(), w.r, sp.c_prime, qmax, f);
  CHECK(!v.has_value());
  for (const auto& c : alice->certificates()) CHECK(c.verified);
}

}  // namespace

TEST_SUITE("bad") {

TEST_CASE("derived constants") {
  {
    auto sp = derive_params(Weights::parse("1"), AffineDiagonalMap::identity(1), 1, 1, 1,
                            Rat(1, 2));
    CHECK(sp.t0 == 1);
  }
  {
    auto sp = derive_params(Weights::parse("1/2,1/2"), AffineDiagonalMap::identity(2), 2, 2,
                            2, Rat(1, 2));
    CHECK(sp.t0 == 2);
  }
  {
    auto sp = derive_params(Weights::parse("1/3,2/3"), AffineDiagonalMap::identity(2), 3, 3,
                            3, Rat(1, 2));
    CHECK(sp.t0 == 3);
    CHECK(sp.c_prime == Rat(15) / pow2(21L));
  }
  // Step too small for the slowest axis: a(1+r_i) <= 1.
  CHECK_THROWS_AS(derive_params(Weights::parse("1/2,1/2"), AffineDiagonalMap::identity(2),
                                Rat(2, 3), 2, 2, Rat(1, 2)),
                  Error);
  // Non-dyadic diagonal is rejected.
  CHECK_THROWS_AS(derive_params(Weights::parse("1"), AffineDiagonalMap{{Rat(1, 3)}, {Rat(0)}},
                                1, 1, 1, Rat(1, 2)),
                  Error);
}

TEST_CASE("danger search") {
  Weights w = Weights::parse("1");
  AxisBox box{{Rat(5, 16)}, {Rat(7, 16)}};
  auto ds = dangerous_rationals(box, 1, 3, w, AffineDiagonalMap::identity(1), Rat(1, 64));
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].q == 3);
  CHECK(ds[0].p == std::vector<Int>{Int(1)});
  CHECK(ds[0].point() == Vec{Rat(1, 3)});

  // A rational inside the box is dangerous for any coefficient.
  auto tiny = dangerous_rationals(box, 3, 3, w, AffineDiagonalMap::identity(1),
                                  Rat(1, Int(1) << 60));
  CHECK(tiny.size() == 1);

  // Empty range produces no dangers.
  CHECK(dangerous_rationals(box, 1, 0, w, AffineDiagonalMap::identity(1), Rat(1, 64)).empty());
}

TEST_CASE("avoidance placement pipeline") {
  // Parent interval [5/16, 7/16]; the only danger with q <= 3 is 1/3.  The
  // farthest allowed center from the hyperplane x = 1/3 is 27/64, and the
  // placed child [13/32, 7/16] keeps distance 7/96 from the danger.
  Weights w = Weights::parse("1");
  AffineDiagonalMap id = AffineDiagonalMap::identity(1);
  AxisBox parent{{Rat(5, 16)}, {Rat(7, 16)}};
  auto ds = dangerous_rationals(parent, 1, 3, w, id, Rat(1, 64));
  auto h = avoidance_hyperplane(ds, id);
  REQUIRE(h.has_value());
  CHECK(h->normal == Vec{Rat(1)});
  CHECK(h->offset == Rat(1, 3));

  AxisBox centers{{Rat(5, 16) + Rat(1, 64)}, {Rat(7, 16) - Rat(1, 64)}};
  MaxAbsResult far = max_abs_affine_over_box(*h, centers);
  CHECK(far.argmax == Vec{Rat(27, 64)});
  CHECK(far.value == Rat(17, 192));

  AxisBox child = AxisBox::from_center(far.argmax, {Rat(1, 32)});
  CHECK(child.lo == Vec{Rat(13, 32)});
  CHECK(child.hi == Vec{Rat(7, 16)});
  CHECK(interval_dist(child.lo[0], child.hi[0], Rat(1, 3)) == Rat(7, 96));

  CHECK(!avoidance_hyperplane({}, id).has_value());
}

TEST_CASE("exact verification") {
  Weights w = Weights::parse("1");
  AxisBox good{{Rat(53, 128)}, {Rat(55, 128)}};
  CHECK(!verify_box(good, w.r, Rat(1, 1024), 3, AffineDiagonalMap::identity(1)).has_value());

  AxisBox hit{{Rat(1, 3)}, {Rat(1, 3)}};
  auto v = verify_box(hit, w.r, Rat(1, 1024), 5, AffineDiagonalMap::identity(1));
  REQUIRE(v.has_value());
  CHECK(v->q == 3);
  CHECK(v->p == std::vector<Int>{Int(1)});

  // Zero-weight coordinates are unconstrained.
  AxisBox plane{{Rat(1, 3), Rat(676, 1000)}, {Rat(1, 3), Rat(677, 1000)}};
  auto vz = verify_box(plane, {Rat(1), Rat(0)}, Rat(1, 1024), 5,
                       AffineDiagonalMap::identity(2));
  REQUIRE(vz.has_value());
  CHECK(vz->q == 3);
  // Away from every small-q rational in coordinate 1, the same box passes.
  AxisBox off{{Rat(53, 128), Rat(676, 1000)}, {Rat(55, 128), Rat(677, 1000)}};
  CHECK(!verify_box(off, {Rat(1), Rat(0)}, Rat(1, 1024), 5, AffineDiagonalMap::identity(2))
             .has_value());
}

TEST_CASE("verification is monotone in the coefficient") {
  Weights w = Weights::parse("1");
  AxisBox box{{Rat(53, 128)}, {Rat(55, 128)}};
  // Passing at c' implies passing at any smaller c'.
  for (long shift = 10; shift <= 20; ++shift) {
    if (!verify_box(box, w.r, pow2(-shift), 64, AffineDiagonalMap::identity(1)).has_value()) {
      CHECK(!verify_box(box, w.r, pow2(-shift - 1), 64, AffineDiagonalMap::identity(1))
                 .has_value());
    }
  }
}

TEST_CASE("badness scores") {
  Weights w = Weights::parse("1");
  auto s = badness_score({Rat(7, 5)}, 2, w.r);
  CHECK(std::abs(s.estimate - 0.4) < 1e-12);
  CHECK(s.certified <= Rat(2, 5));
  CHECK(s.certified > Rat(2, 5) - Rat(1, Int(1) << 30));

  auto h = badness_score({Rat(1, 2)}, 1, w.r);
  CHECK(std::abs(h.estimate - 0.5) < 1e-12);

  auto z = badness_score({Rat(1, 3)}, 3, w.r);
  CHECK(z.estimate == 0.0);
  CHECK(z.certified == 0);
}

TEST_CASE("dirichlet witnesses") {
  Weights w = Weights::parse("1");
  auto d = dirichlet_witness({Rat(41, 29)}, 2, 10, w);
  REQUIRE(d.has_value());
  CHECK(d->q == 2);
  CHECK(d->p == std::vector<Int>{Int(3)});
  CHECK(d->dist[0] == Rat(5, 29));

  auto e = dirichlet_witness({Rat(7)}, 3, 10, w);
  REQUIRE(e.has_value());
  CHECK(e->q == 3);
  CHECK(e->p == std::vector<Int>{Int(21)});
  CHECK(e->dist[0] == 0);
}

TEST_CASE("full games verify at the coverage bound") {
  AffineDiagonalMap id1 = AffineDiagonalMap::identity(1);
  AffineDiagonalMap id2 = AffineDiagonalMap::identity(2);
  run_and_verify("1", 1, 1, 1, 8, 7, "seeded-random", id1);
  run_and_verify("1", 1, 1, 1, 8, 99, "rational-seeker", id1);
  run_and_verify("1/2,1/2", 2, 2, 2, 6, 3, "seeded-random", id2);
  run_and_verify("1/3,2/3", 3, 3, 3, 4, 5, "rational-seeker", id2);
  // Affine target map with dyadic diagonal and rational shift.
  run_and_verify("1", 1, 1, 1, 8, 13, "rational-seeker",
                 AffineDiagonalMap{{Rat(2)}, {Rat(-1, 3)}});
}

TEST_CASE("final clock oracle") {
  Weights w = Weights::parse("1");
  Session session = Session::weighted(w, {1, 1, 1});
  auto alice = make_bad_strategy(w, AffineDiagonalMap::identity(1), 1, Rat(1, 2));
  auto bob = make_center_bob();
  Transcript t = play(*alice, *bob, session, 4);
  CHECK(t.outcome().t == 8);
  CHECK(t.outcome().sides[0] == Rat(1, Int(1) << 16));
  CHECK(t.moves.size() == 1 + 4 + 3);
}

TEST_CASE("early starts wait until the constants are safe") {
  Weights w = Weights::parse("1");
  AffineDiagonalMap f{{Rat(1, 8)}, {Rat(0)}};
  Session session = Session::weighted(w, {1, 1, 1});
  auto alice = make_bad_strategy(w, f, 1, Rat(1, 2));
  auto bob = make_seeded_bob(21);
  Transcript t = play(*alice, *bob, session, 10);
  CHECK(alice->active_from() > 1);
  const BadParams& sp = *alice->params();
  CHECK(sp.t1 >= sp.t0);
  int eff = 10 - (alice->active_from() - 1);
  Int qmax = ceil_pow2(Rat(eff - 1) * 2);
  CHECK(!verify_box(t.outcome().axis(), w.r, sp.c_prime, qmax, f).has_value());
}

TEST_CASE("certificate q ranges tile the coverage") {
  Weights w = Weights::parse("1/2,1/2");
  Session session = Session::weighted(w, {2, 2, 2});
  auto alice = make_bad_strategy(w, AffineDiagonalMap::identity(2), 2, Rat(1, 2));
  auto bob = make_seeded_bob(8);
  play(*alice, *bob, session, 6);
  const auto& certs = alice->certificates();
  REQUIRE(!certs.empty());
  // Round 1 scans nothing; from round 2 on the ranges abut: next lo = prev hi.
  CHECK(certs[0].q_lo > certs[0].q_hi);
  for (std::size_t i = 2; i < certs.size(); ++i) {
    CHECK(certs[i].q_lo == certs[i - 1].q_hi);
  }
  CHECK(certs.back().q_hi == ceil_pow2(Rat(5) * 4));
}

}  // TEST_SUITE
