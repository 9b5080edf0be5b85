// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_WEIGHTS_HPP
#define MSGAME_WEIGHTS_HPP

#include <string>
#include <vector>

#include "msgame/rational.hpp"

namespace msgame {

// Shrinking-exponent profile of a box family: at time t the i-th sidelength
// is sigma_i * 2^(-exps[i] * t).  Weighted games use exps[i] = 1 + r_i; the
// profile form also covers coordinate restrictions and rescaled clocks.
struct Profile {
  std::vector<Rat> exps;

  std::size_t dim() const { return exps.size(); }
  // Times at which every 2^(-exps[i] * t) is an exact dyadic value.
  bool grid_valid(const Rat& t) const;
  // Smallest positive time step that is grid-valid (all multiples are too).
  Rat grid_step() const;
  Rat min_exp() const;
  Rat sum_exp() const;
  Profile restrict(const std::vector<std::size_t>& idx) const;
  Profile scale(const Rat& factor) const;
  bool operator==(const Profile& other) const = default;
};

// Weight vector r with r_i > 0 and sum r_i = 1.
struct Weights {
  std::vector<Rat> r;

  explicit Weights(std::vector<Rat> values);
  static Weights parse(const std::string& text);

  std::size_t dim() const { return r.size(); }
  // lcm of the weight denominators; times in lattice() * Z are the canonical
  // playing times of the weighted game.
  Int lattice() const;
  Profile profile() const;
  Rat min_r() const;
  Rat max_r() const;
  // Contraction exponent of diameters: 1 + min_i r_i.
  Rat diameter_exponent() const;
  bool operator==(const Weights& other) const = default;
};

}  // namespace msgame

#endif  // MSGAME_WEIGHTS_HPP
