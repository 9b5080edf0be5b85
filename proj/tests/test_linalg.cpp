// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "doctest.h"
#include "msgame/errors.hpp"
#include "msgame/linalg.hpp"
#include "msgame/prng.hpp"

using namespace msgame;

namespace {

Rat small_rat(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  long num = static_cast<long>(bounded_u64(mix64(seed, a, b), 41)) - 20;
  long den = 1 + static_cast<long>(bounded_u64(mix64(seed, a + 100, b), 8));
  Rat x(num, den);
  x.canonicalize();
  return x;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("hyperplane normalization and eval") {
  Hyperplane h = make_hyperplane({Rat(2), Rat(4)}, Rat(6));
  CHECK(h.normal == Vec{Rat(1), Rat(2)});
  CHECK(h.offset == 3);
  CHECK(h.eval({Rat(1), Rat(1)}) == 0);
  CHECK(h.eval({Rat(0), Rat(0)}) == -3);

  Hyperplane g = make_hyperplane({Rat(0), Rat(-1, 2)}, Rat(1));
  CHECK(g.normal == Vec{Rat(0), Rat(1)});
  CHECK(g.offset == -2);
}

TEST_CASE("affine diagonal map") {
  AffineDiagonalMap f{{Rat(3, 2), Rat(-2)}, {Rat(1, 4), Rat(-1, 3)}};
  CHECK(f.jacobian() == 3);
  CHECK(!f.is_identity());
  CHECK(AffineDiagonalMap::identity(3).is_identity());
  CHECK(f.has_dyadic_diag());  // 3/2 and -2 are both dyadic
  AffineDiagonalMap g{{Rat(1, 3), Rat(2)}, {Rat(1, 3), Rat(0)}};
  CHECK(!g.has_dyadic_diag());

  Vec x = {Rat(2), Rat(1, 2)};
  Vec y = f.apply(x);
  CHECK(y == Vec{Rat(13, 4), Rat(-4, 3)});
  CHECK(f.apply_inverse(y) == x);
  for (std::uint64_t i = 0; i < 100; ++i) {
    Vec p = {small_rat(7, 1, i), small_rat(7, 2, i)};
    CHECK(f.apply_inverse(f.apply(p)) == p);
  }
}

TEST_CASE("affine hull of collinear points") {
  std::vector<Vec> pts = {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  auto h = affine_hull(pts);
  REQUIRE(h.has_value());
  for (const Vec& p : pts) CHECK(h->eval(p) == 0);

  auto single = affine_hull({{Rat(2, 3)}});
  REQUIRE(single.has_value());
  CHECK(single->normal == Vec{Rat(1)});
  CHECK(single->offset == Rat(2, 3));
}

TEST_CASE("affine hull detects full-dimensional sets") {
  std::vector<Vec> simplex = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(!affine_hull(simplex).has_value());
  CHECK_THROWS_AS(affine_hull_or_throw(simplex), Error);
  try {
    affine_hull_or_throw(simplex);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kFullDimensional);
  }
}

TEST_CASE("affine hull contains random degenerate sets") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + bounded_u64(mix64(11, 1, trial), 3);
    // Random hyperplane x_j = const mixed with a random direction.
    Vec normal(n, Rat(0));
    std::size_t j = bounded_u64(mix64(11, 2, trial), n);
    normal[j] = 1;
    Rat offset = small_rat(11, 3, trial);
    std::size_t count = 1 + bounded_u64(mix64(11, 4, trial), 12);
    std::vector<Vec> pts;
    for (std::size_t k = 0; k < count; ++k) {
      Vec p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = small_rat(11, 10 + i, trial * 64 + k);
      p[j] = offset;  // force onto the plane
      pts.push_back(std::move(p));
    }
    auto h = affine_hull(pts);
    REQUIRE(h.has_value());
    for (const Vec& p : pts) CHECK(h->eval(p) == 0);
  }
}

TEST_CASE("affine hull is deterministic") {
  std::vector<Vec> pts = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(3), Rat(4)}};
  auto h1 = affine_hull(pts);
  auto h2 = affine_hull(pts);
  REQUIRE(h1.has_value());
  REQUIRE(h2.has_value());
  CHECK(h1->normal == h2->normal);
  CHECK(h1->offset == h2->offset);
}

TEST_CASE("dot product") {
  CHECK(dot({Rat(1, 2), Rat(3)}, {Rat(4), Rat(1, 3)}) == 3);
  CHECK(dot({}, {}) == 0);
}

}  // TEST_SUITE
