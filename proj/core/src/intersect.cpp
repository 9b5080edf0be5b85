// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#include "msgame/intersect.hpp"

#include <algorithm>
#include <utility>

#include "msgame/adversaries.hpp"
#include "msgame/errors.hpp"

namespace msgame {

namespace {

void check_subset(const Weights& w, const SubsetSpec& spec) {
  if (spec.indices.empty()) throw Error(ErrorKind::kConfigError, "empty coordinate subset");
  if (!std::is_sorted(spec.indices.begin(), spec.indices.end()) ||
      std::adjacent_find(spec.indices.begin(), spec.indices.end()) != spec.indices.end()) {
    throw Error(ErrorKind::kConfigError, "subset indices must be strictly increasing");
  }
  if (spec.indices.back() >= w.dim()) {
    throw Error(ErrorKind::kConfigError, "subset index out of range");
  }
}

std::string subset_label(const SubsetSpec& spec, std::size_t n) {
  if (spec.indices.size() == n) return "full";
  std::string out = "{";
  for (std::size_t j = 0; j < spec.indices.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(spec.indices[j] + 1);
  }
  return out + "}";
}

}  // namespace

EmbeddedWeights embed_weights(const Weights& w, const SubsetSpec& spec) {
  check_subset(w, spec);
  const Rat k(static_cast<long>(spec.indices.size()));
  Rat sum(0);
  for (std::size_t i : spec.indices) sum += w.r[i];
  const Rat denom = k + sum;
  std::vector<Rat> s;
  s.reserve(spec.indices.size());
  for (std::size_t i : spec.indices) {
    s.push_back((1 + (k + 1) * w.r[i] - sum) / denom);
  }
  return EmbeddedWeights{Weights(std::move(s)), (k + 1) / denom};
}

Rat reparam_factor(const Weights& w, const SubsetSpec& spec) {
  return embed_weights(w, spec).kappa;
}

SubBad sub_bad_strategy(const Weights& w, const SubsetSpec& spec, const Rat& a,
                        const Rat& margin) {
  EmbeddedWeights e = embed_weights(w, spec);
  const std::size_t n = w.dim();
  const std::size_t k = spec.indices.size();
  auto core = make_bad_strategy(e.s, AffineDiagonalMap::identity(k), a / e.kappa, margin);

  std::vector<Rat> verify(n, Rat(0));
  for (std::size_t j = 0; j < k; ++j) verify[spec.indices[j]] = e.s.r[j];

  std::shared_ptr<Strategy> strat;
  if (k == n) {
    strat = std::make_shared<ScaledClockStrategy>(core, e.s, e.kappa);
  } else {
    std::vector<PartitionBlock> blocks(2);
    blocks[0].indices = spec.indices;
    blocks[0].strategy = std::make_shared<ScaledClockStrategy>(core, e.s, e.kappa);
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::binary_search(spec.indices.begin(), spec.indices.end(), i)) {
        blocks[1].indices.push_back(i);
      }
    }
    blocks[1].strategy = make_centered_alice();
    strat = std::make_shared<PartitionStrategy>(std::move(blocks));
  }
  return SubBad{std::move(strat), std::move(core), std::move(verify), e.kappa};
}

IntersectionPlan intersection_strategy(const Weights& w, const std::vector<SubsetSpec>& specs,
                                       const Rat& a, const Rat& margin) {
  if (specs.empty()) throw Error(ErrorKind::kConfigError, "no subsets given");
  const std::size_t n = w.dim();
  IntersectionPlan plan;
  std::vector<std::shared_ptr<Strategy>> comps;
  for (const SubsetSpec& spec : specs) {
    check_subset(w, spec);
    ComponentInfo info;
    info.label = subset_label(spec, n);
    info.indices = spec.indices;
    if (spec.indices.size() == n) {
      info.core = make_bad_strategy(w, AffineDiagonalMap::identity(n), a, margin);
      info.verify_weights = w.r;
      info.kappa = Rat(1);
      comps.push_back(info.core);
    } else {
      SubBad sb = sub_bad_strategy(w, spec, a, margin);
      info.core = sb.core;
      info.verify_weights = std::move(sb.verify_weights);
      info.kappa = sb.kappa;
      comps.push_back(std::move(sb.strategy));
    }
    plan.components.push_back(std::move(info));
  }
  plan.strategy = interleave_strategies(std::move(comps));
  return plan;
}

int component_moves(int i, int m, int rounds) {
  if (i < 1 || i > m) throw Error(ErrorKind::kConfigError, "component index out of range");
  if (rounds < 0) throw Error(ErrorKind::kConfigError, "rounds must be nonnegative");
  const long offset = 1L << (i - 1);
  const long stride = 1L << i;
  if (rounds < offset) return 0;
  return static_cast<int>((rounds - offset) / stride) + 1;
}

Int coverage_qmax(const BadStrategy& core, int moves) {
  if (!core.params()) throw Error(ErrorKind::kConfigError, "strategy has not started");
  const int eff = moves - (core.active_from() - 1);
  if (eff < 2) return Int(0);
  const BadParams& bp = *core.params();
  return ceil_pow2(Rat(eff - 1) * (bp.a + bp.b));
}

}  // namespace msgame
