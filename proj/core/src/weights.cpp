// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/weights.hpp"

#include <algorithm>

#include "msgame/errors.hpp"

namespace msgame {

bool Profile::grid_valid(const Rat& t) const {
  for (const Rat& e : exps) {
    if (!is_integer(Rat(t * e))) return false;
  }
  return true;
}

Rat Profile::grid_step() const {
  // Minimal positive t with t * e integral for all e: lcm of the 1/e steps.
  std::vector<Rat> steps;
  steps.reserve(exps.size());
  for (const Rat& e : exps) {
    if (e <= 0) throw Error(ErrorKind::kConfigError, "profile exponents must be positive");
    steps.push_back(Rat(1) / e);
  }
  return rat_lcm(steps);
}

Rat Profile::min_exp() const {
  return *std::min_element(exps.begin(), exps.end());
}

Rat Profile::sum_exp() const {
  Rat s(0);
  for (const Rat& e : exps) s += e;
  return s;
}

Profile Profile::restrict(const std::vector<std::size_t>& idx) const {
  Profile p;
  p.exps.reserve(idx.size());
  for (std::size_t i : idx) p.exps.push_back(exps.at(i));
  return p;
}

Profile Profile::scale(const Rat& factor) const {
  Profile p;
  p.exps.reserve(exps.size());
  for (const Rat& e : exps) p.exps.push_back(e * factor);
  return p;
}

Weights::Weights(std::vector<Rat> values) : r(std::move(values)) {
  if (r.empty()) throw Error(ErrorKind::kConfigError, "weights must be nonempty");
  Rat sum(0);
  for (const Rat& w : r) {
    if (w <= 0) throw Error(ErrorKind::kConfigError, "weights must be positive: " + rat_str(w));
    sum += w;
  }
  if (sum != 1) {
    throw Error(ErrorKind::kConfigError, "weights must sum to 1, got " + rat_str(sum));
  }
}

Weights Weights::parse(const std::string& text) {
  return Weights(parse_rat_list(text));
}

Int Weights::lattice() const {
  return lcm_denominators(r);
}

Profile Weights::profile() const {
  Profile p;
  p.exps.reserve(r.size());
  for (const Rat& w : r) p.exps.push_back(w + 1);
  return p;
}

Rat Weights::min_r() const {
  return *std::min_element(r.begin(), r.end());
}

Rat Weights::max_r() const {
  return *std::max_element(r.begin(), r.end());
}

Rat Weights::diameter_exponent() const {
  return min_r() + 1;
}

}  // namespace msgame
